// Serialization: triangle and tree JSON (exact, rationals as strings),
// SVG diagrams of base triangles, CSV sample dumps.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "atfkit/laglab.hpp"
#include "atfkit/markov.hpp"
#include "atfkit/triangle.hpp"

namespace atfkit {

using Json = nlohmann::ordered_json;

/// {"vertices": [["p/q","p/q"], x3], "label": "..."}; label omitted when unset.
Json triangle_to_json(const BaseTriangle& t);
/// Throws std::invalid_argument for malformed input, including triangles that
/// violate the base-triangle invariants.
BaseTriangle triangle_from_json(const Json& j);

std::string serialize_triangle(const BaseTriangle& t);
BaseTriangle parse_triangle(const std::string& text);

/// {"triple": ["a","b","c"], "path": [..], "children": [..]}
Json tree_to_json(const TreeNode& node);

std::string read_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

struct SvgOptions {
  std::optional<int> cut_vertex;  // draw the cut through this vertex, dashed
  double width = 480.0;
};

/// Triangle outline, origin dot, weight label at each vertex. Output bytes
/// depend only on the input.
std::string render_svg(const BaseTriangle& t, const SvgOptions& options = {});

/// s,t,x1,y1,x2,y2[,mu1,mu2] over a per_param x per_param grid of [0,1)^2.
std::string surface_csv(const lag::ParamSurface& surface, int per_param, bool with_moment);

}  // namespace atfkit
