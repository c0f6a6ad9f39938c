#include "atfkit/triangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "atfkit/parallel.hpp"

namespace atfkit {

namespace {

std::size_t slot(int i) { return static_cast<std::size_t>(((i - 1) % 3 + 3) % 3); }

void check_index(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("vertex index must be 1, 2 or 3, got " + std::to_string(i));
}

Integer abs_integer(const Integer& n) { return n < 0 ? Integer(-n) : n; }

}  // namespace

BaseTriangle::BaseTriangle(Vec2Q v1, Vec2Q v2, Vec2Q v3, std::optional<std::string> label)
    : v_{std::move(v1), std::move(v2), std::move(v3)}, label_(std::move(label)) {
  if (cross(Vec2Q(v_[1] - v_[0]), Vec2Q(v_[2] - v_[1])) <= 0)
    throw std::invalid_argument("triangle vertices must be counterclockwise and affinely independent");
  for (std::size_t k = 0; k < 3; ++k) {
    const Vec2Q& a = v_[k];
    const Vec2Q& b = v_[(k + 1) % 3];
    if (cross(Vec2Q(b - a), Vec2Q(-a)) <= 0)
      throw std::invalid_argument("origin must lie strictly inside the triangle");
  }
}

const Vec2Q& BaseTriangle::vertex(int i) const { return v_[slot(i)]; }

std::array<Integer, 3> WeightTriple::sorted() const {
  auto s = w;
  std::sort(s.begin(), s.end());
  return s;
}

bool same_multiset(const WeightTriple& a, const WeightTriple& b) { return a.sorted() == b.sorted(); }

BaseTriangle root_triangle() {
  return BaseTriangle({Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}, {Rational(-1), Rational(-1)},
                      std::string{});
}

std::array<EdgeData, 3> edge_data(const BaseTriangle& t) {
  std::array<EdgeData, 3> out;
  for (int i = 1; i <= 3; ++i) {
    const Vec2Q u = t.vertex(i + 1) - t.vertex(i);
    Vec2Z q = primitive(u);
    Rational len = q.x != 0 ? Rational(u.x / Rational(q.x)) : Rational(u.y / Rational(q.y));
    Vec2Z normal{q.y, Integer(-q.x)};
    out[slot(i)] = EdgeData{std::move(q), std::move(len), std::move(normal)};
  }
  return out;
}

WeightTriple weights(const BaseTriangle& t) {
  const auto edges = edge_data(t);
  WeightTriple out;
  for (int i = 1; i <= 3; ++i) {
    out.w[slot(i)] = abs_integer(cross(edges[slot(i - 1)].direction, edges[slot(i)].direction));
  }
  return out;
}

Vec2Z vertex_direction(const BaseTriangle& t, int i) {
  check_index(i);
  return primitive(t.vertex(i));
}

Rational twice_area(const BaseTriangle& t) {
  return cross(Vec2Q(t.vertex(2) - t.vertex(1)), Vec2Q(t.vertex(3) - t.vertex(1)));
}

MutationResult mutate(const BaseTriangle& t, int i) {
  check_index(i);
  const Vec2Q& vi = t.vertex(i);
  const Vec2Q& vn = t.vertex(i + 1);
  const Vec2Q& vp = t.vertex(i + 2);

  Vec2Z vhat = primitive(vi);
  // The ray from the origin opposite to v_i meets the opposite edge at v_new.
  const Vec2Q d = -to_rational(vhat);
  const Vec2Q e = vp - vn;
  const Rational s = -cross(d, vn) / cross(d, e);
  const Vec2Q v_new = vn + Vec2Q(s * e);

  Unimodular sigma = shear_by(vhat);
  const Vec2Q sheared = apply(sigma, vn);

  // v_i must sit strictly inside the segment [v_{i+2}, sigma(v_{i+1})] for
  // the union of the two pieces to be a triangle.
  const Vec2Q along = sheared - vp;
  const Vec2Q to_vi = vi - vp;
  if (cross(along, to_vi) != 0 || dot(along, to_vi) <= 0 || dot(along, to_vi) >= dot(along, along))
    throw std::domain_error("sheared pieces do not close up into a triangle at vertex " + std::to_string(i));

  std::array<Vec2Q, 3> out;
  std::array<int, 3> source{};
  out[slot(i)] = v_new;
  source[slot(i)] = i;
  out[slot(i + 1)] = vp;
  source[slot(i + 1)] = static_cast<int>(slot(i + 2)) + 1;
  out[slot(i + 2)] = sheared;
  source[slot(i + 2)] = static_cast<int>(slot(i + 1)) + 1;

  return MutationResult{BaseTriangle(out[0], out[1], out[2], t.label()), i, std::move(sigma), std::move(vhat),
                        source};
}

BaseTriangle mutate_path(const std::vector<int>& path) {
  BaseTriangle t = root_triangle();
  for (int i : path) t = mutate(t, i).triangle;
  t.set_label(path_to_string(path));
  return t;
}

std::array<Vec2Z, 3> dual_triangle(const BaseTriangle& t) {
  const auto edges = edge_data(t);
  return {edges[0].outward_normal, edges[1].outward_normal, edges[2].outward_normal};
}

BaseTriangle transform(const Unimodular& a, const BaseTriangle& t) {
  const Vec2Q w1 = apply(a, t.vertex(1));
  const Vec2Q w2 = apply(a, t.vertex(2));
  const Vec2Q w3 = apply(a, t.vertex(3));
  if (a.determinant() == 1) return BaseTriangle(w1, w2, w3, t.label());
  return BaseTriangle(w1, w3, w2, t.label());
}

bool is_witness(const Unimodular& m, const BaseTriangle& a, const BaseTriangle& b) {
  std::array<bool, 3> hit{};
  for (const auto& v : a.vertices()) {
    const Vec2Q img = apply(m, v);
    bool found = false;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!hit[k] && b.vertices()[k] == img) {
        hit[k] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<Unimodular> gl2z_equivalent(const BaseTriangle& a, const BaseTriangle& b) {
  const auto& src = a.vertices();
  const auto& dst = b.vertices();
  // M has columns src[0], src[1]; it is invertible because the origin is
  // interior, so src[0] and src[1] are not collinear with it.
  const Rational det = cross(src[0], src[1]);
  const Mat2Q m_inv(Rational(src[1].y / det), Rational(-src[1].x / det), Rational(-src[0].y / det),
                    Rational(src[0].x / det));
  std::array<int, 3> perm{0, 1, 2};
  do {
    const Vec2Q& t0 = dst[static_cast<std::size_t>(perm[0])];
    const Vec2Q& t1 = dst[static_cast<std::size_t>(perm[1])];
    const Mat2Q n(t0.x, t1.x, t0.y, t1.y);
    const Mat2Q cand = n * m_inv;
    const std::array<const Rational*, 4> entries{&cand.a11, &cand.a12, &cand.a21, &cand.a22};
    const bool integral = std::all_of(entries.begin(), entries.end(),
                                      [](const Rational* r) { return boost::multiprecision::denominator(*r) == 1; });
    if (!integral) continue;
    const Mat2Z mz(boost::multiprecision::numerator(cand.a11), boost::multiprecision::numerator(cand.a12),
                   boost::multiprecision::numerator(cand.a21), boost::multiprecision::numerator(cand.a22));
    if (!is_unimodular(mz)) continue;
    if (cand * src[2] != dst[static_cast<std::size_t>(perm[2])]) continue;
    return Unimodular(mz);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Distinction distinguish_by_weights(const BaseTriangle& a, const BaseTriangle& b) {
  return same_multiset(weights(a), weights(b)) ? Distinction::kNotDistinguishedByWeights
                                               : Distinction::kProvablyDistinct;
}

InvariantReport invariant_report(const BaseTriangle& t) {
  const auto edges = edge_data(t);
  const auto w = weights(t);
  InvariantReport r;
  r.twice_area = twice_area(t);
  r.perimeter = edges[0].length + edges[1].length + edges[2].length;
  for (int i = 1; i <= 3; ++i) {
    r.length_products[slot(i)] = edges[slot(i - 1)].length * edges[slot(i)].length * Rational(w[i]);
    r.weight_roots[slot(i)] = exact_sqrt(w[i]);
  }
  r.nine_w_product = 9 * w[1] * w[2] * w[3];
  const Integer sum = w[1] + w[2] + w[3];
  r.weight_sum_squared = sum * sum;
  return r;
}

bool verify_shear_lemma(const BaseTriangle& t, int i) {
  check_index(i);
  const auto edges = edge_data(t);
  const Vec2Z& q_in = edges[slot(i - 1)].direction;
  const Vec2Z& q_out = edges[slot(i)].direction;
  const Vec2Z vhat = vertex_direction(t, i);
  if (apply(shear_by(vhat), q_out) != q_in) return false;
  const auto n = exact_sqrt(weights(t)[i]);
  if (!n) return false;
  return Vec2Z(*n * vhat.x, *n * vhat.y) == q_in - q_out;
}

std::vector<GeometricNode> geometric_tree(int depth, TreeMode mode) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  std::vector<GeometricNode> all;
  std::vector<GeometricNode> level{GeometricNode{{}, mutate_path({}), 0}};
  all.insert(all.end(), level.begin(), level.end());
  for (int d = 0; d < depth; ++d) {
    auto expanded = parallel_map(level, [](const GeometricNode& node) {
      std::vector<GeometricNode> kids;
      for (int j = 1; j <= 3; ++j) {
        if (j == node.new_vertex) continue;  // would undo the previous mutation
        auto path = node.path;
        path.push_back(j);
        BaseTriangle tri = mutate(node.triangle, j).triangle;
        tri.set_label(path_to_string(path));
        kids.push_back(GeometricNode{std::move(path), std::move(tri), j});
      }
      return kids;
    });
    std::vector<GeometricNode> next;
    for (auto& kids : expanded) {
      for (auto& kid : kids) {
        if (mode == TreeMode::kDeduplicated) {
          const bool seen = std::any_of(next.begin(), next.end(), [&](const GeometricNode& other) {
            return distinguish_by_weights(kid.triangle, other.triangle) == Distinction::kNotDistinguishedByWeights &&
                   gl2z_equivalent(kid.triangle, other.triangle).has_value();
          });
          if (seen) continue;
        }
        next.push_back(std::move(kid));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

std::string path_to_string(const std::vector<int>& path) {
  std::ostringstream os;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k) os << ',';
    os << path[k];
  }
  return os.str();
}

std::vector<int> parse_path(const std::string& text) {
  std::vector<int> path;
  if (text.empty()) return path;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() != 1 || item[0] < '1' || item[0] > '3')
      throw std::invalid_argument("path entries must be 1, 2 or 3: '" + text + "'");
    path.push_back(item[0] - '0');
  }
  if (text.back() == ',') throw std::invalid_argument("trailing comma in path: '" + text + "'");
  return path;
}

}  // namespace atfkit
