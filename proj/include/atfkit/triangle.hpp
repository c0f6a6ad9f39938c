// Base triangles of almost-toric fibrations of CP^2 with the monotone point
// pinned at the origin, and the mutation calculus acting on them.
//
// Vertex indices at the public surface are 1-based (1, 2, 3) and cyclic:
// edge i runs from vertex i to vertex i+1.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "atfkit/lattice.hpp"

namespace atfkit {

/// An origin-anchored rational triangle, vertices counterclockwise, with the
/// origin strictly inside. The constructor validates and throws
/// std::invalid_argument on violation.
class BaseTriangle {
 public:
  BaseTriangle(Vec2Q v1, Vec2Q v2, Vec2Q v3, std::optional<std::string> label = std::nullopt);

  /// Vertex by 1-based cyclic index (any integer is reduced mod 3).
  const Vec2Q& vertex(int i) const;
  const std::array<Vec2Q, 3>& vertices() const { return v_; }
  const std::optional<std::string>& label() const { return label_; }
  void set_label(std::optional<std::string> label) { label_ = std::move(label); }

  /// Exact equality of the vertex lists (label ignored).
  friend bool operator==(const BaseTriangle& a, const BaseTriangle& b) { return a.v_ == b.v_; }

 private:
  std::array<Vec2Q, 3> v_;
  std::optional<std::string> label_;
};

struct EdgeData {
  Vec2Z direction;       // q_i, primitive, from v_i to v_{i+1}
  Rational length;       // integral length l_i, v_{i+1} - v_i = l_i q_i
  Vec2Z outward_normal;  // primitive, pointing away from the interior
};

struct WeightTriple {
  std::array<Integer, 3> w;  // w[0] belongs to vertex 1

  const Integer& operator[](int one_based) const { return w[static_cast<std::size_t>(one_based - 1)]; }
  /// Ascending copy for multiset comparison.
  std::array<Integer, 3> sorted() const;
  friend bool operator==(const WeightTriple& a, const WeightTriple& b) { return a.w == b.w; }
};

bool same_multiset(const WeightTriple& a, const WeightTriple& b);

struct MutationResult {
  BaseTriangle triangle;
  int new_vertex_index;            // 1-based index of the freshly created vertex
  Unimodular shear;                // shear_by(cut_direction)
  Vec2Z cut_direction;             // primitive direction of the mutated vertex
  std::array<int, 3> source_index; // source_index[j-1]: old vertex that new vertex j came from
};

/// The standard moment triangle of CP^2 translated so the monotone point is
/// the origin: (2,-1), (-1,2), (-1,-1).
BaseTriangle root_triangle();

std::array<EdgeData, 3> edge_data(const BaseTriangle& t);
WeightTriple weights(const BaseTriangle& t);
Vec2Z vertex_direction(const BaseTriangle& t, int i);
Rational twice_area(const BaseTriangle& t);

/// Geometric mutation at vertex i: cut along the ray through v_i and the
/// origin, shear the half containing v_{i+1} by shear_by(primitive(v_i)).
/// The new vertex takes slot i; the others follow counterclockwise.
/// Throws std::out_of_range for i outside 1..3 and std::domain_error when
/// the sheared pieces do not close up into a triangle.
MutationResult mutate(const BaseTriangle& t, int i);

/// Folds mutate over the path starting from the root triangle. The result is
/// labelled with the comma-joined path.
BaseTriangle mutate_path(const std::vector<int>& path);

/// Primitive outward normals of the three edges, in edge order.
std::array<Vec2Z, 3> dual_triangle(const BaseTriangle& t);

/// Image A*t with vertices re-ordered counterclockwise when det A = -1.
BaseTriangle transform(const Unimodular& a, const BaseTriangle& t);

/// A matrix A in GL(2,Z) with A*{vertices of a} = {vertices of b}, if any.
std::optional<Unimodular> gl2z_equivalent(const BaseTriangle& a, const BaseTriangle& b);

/// True iff m maps the vertex set of a onto the vertex set of b.
bool is_witness(const Unimodular& m, const BaseTriangle& a, const BaseTriangle& b);

enum class Distinction { kProvablyDistinct, kNotDistinguishedByWeights };

/// Weight multisets are GL(2,Z)-invariant, so differing multisets prove
/// inequivalence. Equal multisets prove nothing.
Distinction distinguish_by_weights(const BaseTriangle& a, const BaseTriangle& b);

struct InvariantReport {
  Rational twice_area;
  Rational perimeter;                      // l_1 + l_2 + l_3
  std::array<Rational, 3> length_products; // l_{i-1} l_i w_i
  Integer nine_w_product;                  // 9 w_1 w_2 w_3
  Integer weight_sum_squared;              // (w_1 + w_2 + w_3)^2
  std::array<std::optional<Integer>, 3> weight_roots;
};

InvariantReport invariant_report(const BaseTriangle& t);

/// Checks shear_by(vhat_i) q_i = q_{i-1} and n_i vhat_i = q_{i-1} - q_i with
/// n_i the integer square root of w_i. False when w_i is not a square.
bool verify_shear_lemma(const BaseTriangle& t, int i);

/// A node of the tree of triangles generated by mutation from the root.
struct GeometricNode {
  std::vector<int> path;
  BaseTriangle triangle;
  int new_vertex;  // 0 at the root
  int depth() const { return static_cast<int>(path.size()); }
};

enum class TreeMode {
  kAllPaths,      // every path without an immediate undo
  kDeduplicated,  // drop triangles GL(2,Z)-equivalent to one already at that depth
};

/// Breadth-first enumeration to the given depth (edges from the root).
/// Levels are expanded in parallel; output order is deterministic.
std::vector<GeometricNode> geometric_tree(int depth, TreeMode mode);

std::string path_to_string(const std::vector<int>& path);
std::vector<int> parse_path(const std::string& text);

}  // namespace atfkit
