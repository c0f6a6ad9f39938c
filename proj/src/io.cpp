#include "atfkit/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace atfkit {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.4f", v == 0.0 ? 0.0 : v); }

}  // namespace

Json triangle_to_json(const BaseTriangle& t) {
  Json verts = Json::array();
  for (const Vec2Q& v : t.vertices()) verts.push_back(Json::array({to_string(v.x), to_string(v.y)}));
  Json j;
  j["vertices"] = std::move(verts);
  if (t.label()) j["label"] = *t.label();
  return j;
}

BaseTriangle triangle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw std::invalid_argument("triangle JSON needs a \"vertices\" array");
  const Json& vs = j.at("vertices");
  if (!vs.is_array() || vs.size() != 3) throw std::invalid_argument("triangle JSON needs exactly 3 vertices");
  std::array<Vec2Q, 3> v;
  for (std::size_t i = 0; i < 3; ++i) {
    const Json& p = vs[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw std::invalid_argument("each vertex must be a pair of rational strings");
    v[i] = Vec2Q{parse_rational(p[0].get<std::string>()), parse_rational(p[1].get<std::string>())};
  }
  std::optional<std::string> label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw std::invalid_argument("label must be a string");
    label = j.at("label").get<std::string>();
  }
  return BaseTriangle(v[0], v[1], v[2], label);
}

std::string serialize_triangle(const BaseTriangle& t) { return triangle_to_json(t).dump(2) + "\n"; }

BaseTriangle parse_triangle(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return triangle_from_json(j);
}

Json tree_to_json(const TreeNode& node) {
  Json j;
  Json triple = Json::array();
  for (const Integer& e : node.triple.entries()) triple.push_back(to_string(e));
  j["triple"] = std::move(triple);
  j["path"] = node.path;
  Json kids = Json::array();
  for (const TreeNode& c : node.children) kids.push_back(tree_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string render_svg(const BaseTriangle& t, const SvgOptions& options) {
  std::array<double, 3> x{}, y{};
  for (int i = 0; i < 3; ++i) {
    x[static_cast<std::size_t>(i)] = t.vertex(i + 1).x.convert_to<double>();
    y[static_cast<std::size_t>(i)] = -t.vertex(i + 1).y.convert_to<double>();  // SVG y points down
  }
  const double xmin = std::min({x[0], x[1], x[2], 0.0}), xmax = std::max({x[0], x[1], x[2], 0.0});
  const double ymin = std::min({y[0], y[1], y[2], 0.0}), ymax = std::max({y[0], y[1], y[2], 0.0});
  const double extent = std::max(xmax - xmin, ymax - ymin);
  const double margin = 0.1 * extent;
  const double vw = xmax - xmin + 2 * margin, vh = ymax - ymin + 2 * margin;
  const double height = options.width * vh / vw;
  const double stroke = extent / 200;
  const double font = extent / 22;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width) << "\" height=\"" << num(height)
    << "\" viewBox=\"" << num(xmin - margin) << ' ' << num(ymin - margin) << ' ' << num(vw) << ' ' << num(vh)
    << "\">\n";
  if (t.label()) s << "  <title>" << (t.label()->empty() ? std::string("root") : *t.label()) << "</title>\n";
  s << "  <polygon points=\"";
  for (std::size_t i = 0; i < 3; ++i) s << (i ? " " : "") << num(x[i]) << ',' << num(y[i]);
  s << "\" fill=\"#eef3fb\" stroke=\"#1f3b73\" stroke-width=\"" << num(stroke) << "\"/>\n";

  if (options.cut_vertex) {
    const int i = *options.cut_vertex;
    if (i < 1 || i > 3) throw std::out_of_range("cut vertex must be 1, 2 or 3");
    const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i % 3),
               c = static_cast<std::size_t>((i + 1) % 3);
    // Ray from the origin along -v_a meets the opposite edge [v_b, v_c].
    const double dx = -x[a], dy = -y[a];
    const double ex = x[c] - x[b], ey = y[c] - y[b];
    const double den = dx * ey - dy * ex;
    const double s_ray = (x[b] * ey - y[b] * ex) / den;
    s << "  <line x1=\"" << num(x[a]) << "\" y1=\"" << num(y[a]) << "\" x2=\"" << num(s_ray * dx) << "\" y2=\""
      << num(s_ray * dy) << "\" stroke=\"#b0341f\" stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\""
      << num(4 * stroke) << ' ' << num(3 * stroke) << "\"/>\n";
  }

  s << "  <circle cx=\"0.0000\" cy=\"0.0000\" r=\"" << num(3 * stroke) << "\" fill=\"#1f3b73\"/>\n";
  const WeightTriple w = weights(t);
  const double cx = (x[0] + x[1] + x[2]) / 3, cy = (y[0] + y[1] + y[2]) / 3;
  for (std::size_t i = 0; i < 3; ++i) {
    const double ox = x[i] - cx, oy = y[i] - cy;
    const double len = std::hypot(ox, oy);
    const double lx = x[i] + 0.6 * font * ox / len, ly = y[i] + 0.6 * font * oy / len + 0.35 * font;
    s << "  <text x=\"" << num(lx) << "\" y=\"" << num(ly) << "\" font-size=\"" << num(font)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << to_string(w.w[i]) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string surface_csv(const lag::ParamSurface& surface, int per_param, bool with_moment) {
  if (per_param < 1) throw std::invalid_argument("samples must be positive");
  std::string out = with_moment ? "s,t,x1,y1,x2,y2,mu1,mu2\n" : "s,t,x1,y1,x2,y2\n";
  for (int i = 0; i < per_param; ++i) {
    for (int j = 0; j < per_param; ++j) {
      const double s = double(i) / per_param, t = double(j) / per_param;
      const lag::Point4 p = surface(s, t);
      const Eigen::Vector4d c = p.coordinates();
      out += fmt("%.17e", s) + ',' + fmt("%.17e", t);
      for (int k = 0; k < 4; ++k) out += ',' + fmt("%.17e", c(k));
      if (with_moment) {
        const Eigen::Vector2d mu = lag::moment_map(p);
        out += ',' + fmt("%.17e", mu(0)) + ',' + fmt("%.17e", mu(1));
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace atfkit
