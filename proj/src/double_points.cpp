#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "atfkit/laglab.hpp"
#include "atfkit/parallel.hpp"
#include "sphere_geometry.hpp"

namespace atfkit::lag {

namespace {

constexpr double kPi = std::numbers::pi;

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;
constexpr int kIndexDim = 6;
using IndexPoint = bg::model::point<double, kIndexDim, bg::cs::cartesian>;

// S^m, optionally times a circle stored as a trailing angle.
struct Domain {
  int m = 0;
  bool circle = false;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> eval;  // on domain coordinates

  int dim() const { return m + (circle ? 1 : 0); }

  Eigen::MatrixXd basis(const Eigen::VectorXd& p) const {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(p.size(), dim());
    b.topLeftCorner(m + 1, m) = detail::tangent_basis(p.head(m + 1));
    if (circle) b(m + 1, m) = 1.0;
    return b;
  }

  Eigen::VectorXd retract(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const {
    Eigen::VectorXd q = p + v;
    q.head(m + 1).normalize();
    if (circle) q(m + 1) = std::remainder(q(m + 1), 2 * kPi);
    return q;
  }

  double distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const {
    double d2 = (a.head(m + 1) - b.head(m + 1)).squaredNorm();
    if (circle) d2 += std::norm(std::polar(1.0, a(m + 1)) - std::polar(1.0, b(m + 1)));
    return std::sqrt(d2);
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& p) const {
    constexpr double eps = 1e-7;
    const Eigen::MatrixXd b = basis(p);
    Eigen::MatrixXd j;
    for (int a = 0; a < dim(); ++a) {
      const Eigen::VectorXd col = (eval(retract(p, eps * b.col(a))) - eval(retract(p, -eps * b.col(a)))) / (2 * eps);
      if (a == 0) j.resize(col.size(), dim());
      j.col(a) = col;
    }
    return j;
  }
};

struct Seed {
  std::uint32_t i;
  std::uint32_t j;
  double gap;
};

enum class Outcome { kConverged, kCollapsed, kStalled, kUnfinished };

struct Refined {
  Outcome outcome;
  Eigen::VectorXd p;
  Eigen::VectorXd q;
  double gap;
};

Refined refine(const Domain& dom, Eigen::VectorXd p, Eigen::VectorXd q, double tol) {
  const int d = dom.dim();
  Eigen::VectorXd r = dom.eval(p) - dom.eval(q);
  double mu = 1e-3;
  bool settled = false;
  for (int it = 0; it < 200 && !settled; ++it) {
    if (r.norm() < 1e-13) {
      settled = true;
      break;
    }
    const Eigen::MatrixXd bp = dom.basis(p);
    const Eigen::MatrixXd bq = dom.basis(q);
    Eigen::MatrixXd j(r.size(), 2 * d);
    j.leftCols(d) = dom.jacobian(p);
    j.rightCols(d) = -dom.jacobian(q);
    const Eigen::MatrixXd jtj = j.transpose() * j;
    const Eigen::VectorXd g = j.transpose() * r;
    settled = true;  // unless a step is accepted
    while (mu < 1e12) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += mu * (1.0 + jtj.diagonal().array());
      const Eigen::VectorXd delta = a.ldlt().solve(-g);
      const Eigen::VectorXd np = dom.retract(p, bp * delta.head(d));
      const Eigen::VectorXd nq = dom.retract(q, bq * delta.tail(d));
      const Eigen::VectorXd nr = dom.eval(np) - dom.eval(nq);
      if (nr.norm() < r.norm()) {
        settled = nr.norm() > (1.0 - 1e-10) * r.norm();
        p = np;
        q = nq;
        r = nr;
        mu = std::max(1e-12, mu / 3);
        break;
      }
      mu *= 4;
    }
  }
  const double gap = r.norm();
  if (dom.distance(p, q) <= 10 * tol) return {Outcome::kCollapsed, p, q, gap};
  if (gap < tol) return {Outcome::kConverged, p, q, gap};
  return {settled ? Outcome::kStalled : Outcome::kUnfinished, p, q, gap};
}

std::vector<DoublePoint> search(const Domain& dom, int resolution, double tol) {
  if (resolution < 8) throw std::invalid_argument("resolution must be at least 8");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

  // `resolution` samples per great circle on the sphere and per turn of the circle.
  const int face = std::max(2, resolution / 4);
  const auto sphere = detail::cube_sphere_samples(dom.m, face);
  const int turns = dom.circle ? resolution : 1;
  const int ambient = dom.m + 1 + (dom.circle ? 1 : 0);
  const std::size_t count = sphere.size() * static_cast<std::size_t>(turns);
  if (count >= (std::size_t{1} << 32)) throw std::invalid_argument("resolution too large");

  Eigen::MatrixXd domain(ambient, static_cast<Eigen::Index>(count));
  for (std::size_t s = 0; s < sphere.size(); ++s)
    for (int t = 0; t < turns; ++t) {
      const auto col = static_cast<Eigen::Index>(s * static_cast<std::size_t>(turns) + static_cast<std::size_t>(t));
      domain.col(col).head(dom.m + 1) = sphere[s];
      if (dom.circle) domain(dom.m + 1, col) = 2 * kPi * t / turns;
    }
  const Eigen::Index target = dom.eval(domain.col(0)).size();
  Eigen::MatrixXd image(target, static_cast<Eigen::Index>(count));
  parallel_chunks(count, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) image.col(static_cast<Eigen::Index>(i)) = dom.eval(domain.col(static_cast<Eigen::Index>(i)));
  });

  const double spacing = std::hypot(std::sqrt(double(dom.m)) * (kPi / 2) / face, dom.circle ? 2 * kPi / turns : 0.0);
  // Local stretch bound per sample: a true double point (x, y) lies within
  // spacing / 2 of samples a, b, so |f(a) - f(b)| <= (L_a + L_b) spacing / 2.
  std::vector<double> reach(count);
  std::vector<double> sigmas(worker_count(), std::numeric_limits<double>::infinity());
  parallel_chunks(count, [&](std::size_t b, std::size_t e, unsigned w) {
    for (std::size_t i = b; i < e; ++i) {
      const auto sv = dom.jacobian(domain.col(static_cast<Eigen::Index>(i))).jacobiSvd().singularValues();
      reach[i] = 1.1 * sv(0) * spacing;
      sigmas[w] = std::min(sigmas[w], sv(sv.size() - 1));
    }
  });
  const double sigma = *std::min_element(sigmas.begin(), sigmas.end());
  const double min_separation = std::max(10 * tol, 2 * spacing);

  // R-tree over the image, projected to kIndexDim coordinates when wider;
  // the projection is orthonormal, so it never separates true neighbours.
  Eigen::MatrixXd low;
  if (target <= kIndexDim) {
    low = Eigen::MatrixXd::Zero(kIndexDim, static_cast<Eigen::Index>(count));
    low.topRows(target) = image;
  } else {
    std::mt19937 rng(20240917u);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd proj(target, kIndexDim);
    for (Eigen::Index a = 0; a < proj.size(); ++a) proj.data()[a] = normal(rng);
    proj = Eigen::HouseholderQR<Eigen::MatrixXd>(proj).householderQ() * Eigen::MatrixXd::Identity(target, kIndexDim);
    low = proj.transpose() * image;
  }
  auto point_of = [&](Eigen::Index i, double shift) {
    IndexPoint pt;
    bg::set<0>(pt, low(0, i) + shift);
    bg::set<1>(pt, low(1, i) + shift);
    bg::set<2>(pt, low(2, i) + shift);
    bg::set<3>(pt, low(3, i) + shift);
    bg::set<4>(pt, low(4, i) + shift);
    bg::set<5>(pt, low(5, i) + shift);
    return pt;
  };
  std::vector<std::pair<IndexPoint, std::uint32_t>> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) entries.emplace_back(point_of(static_cast<Eigen::Index>(i), 0.0), static_cast<std::uint32_t>(i));
  const bgi::rtree<std::pair<IndexPoint, std::uint32_t>, bgi::rstar<16>> tree(entries.begin(), entries.end());

  // Each candidate pair is examined from the sample with the larger reach.
  std::vector<std::vector<Seed>> found(worker_count());
  parallel_chunks(count, [&](std::size_t b, std::size_t e, unsigned w) {
    std::vector<std::pair<IndexPoint, std::uint32_t>> hits;
    for (std::size_t ii = b; ii < e; ++ii) {
      const auto i = static_cast<Eigen::Index>(ii);
      hits.clear();
      const bg::model::box<IndexPoint> box(point_of(i, -reach[ii]), point_of(i, reach[ii]));
      tree.query(bgi::intersects(box), std::back_inserter(hits));
      for (const auto& hit : hits) {
        const std::uint32_t j = hit.second;
        if (reach[j] > reach[ii] || (reach[j] == reach[ii] && j <= ii)) continue;
        const double gap = (image.col(i) - image.col(j)).norm();
        if (gap >= 0.5 * (reach[ii] + reach[j])) continue;
        const double sep = dom.distance(domain.col(i), domain.col(j));
        if (sep <= min_separation || gap >= 0.5 * sigma * sep) continue;
        found[w].push_back({static_cast<std::uint32_t>(ii), j, gap});
      }
    }
  });
  std::vector<Seed> seeds;
  for (auto& f : found) seeds.insert(seeds.end(), f.begin(), f.end());
  constexpr std::size_t kSeedCap = 2'000'000;
  if (seeds.size() > kSeedCap) {
    std::nth_element(seeds.begin(), seeds.begin() + kSeedCap, seeds.end(),
                     [](const Seed& a, const Seed& b) { return a.gap < b.gap; });
    seeds.resize(kSeedCap);
  }
  std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.gap < b.gap; });

  // Greedy thinning: one seed per neighbourhood of an unordered pair.
  const double near = 4 * spacing;
  std::vector<Seed> kept;
  for (const Seed& s : seeds) {
    const auto a = domain.col(s.i);
    const auto b = domain.col(s.j);
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Seed& k) {
      const auto ka = domain.col(k.i);
      const auto kb = domain.col(k.j);
      return (dom.distance(a, ka) < near && dom.distance(b, kb) < near) ||
             (dom.distance(a, kb) < near && dom.distance(b, ka) < near);
    });
    if (!covered) kept.push_back(s);
  }

  const auto refined = parallel_map(kept, [&](const Seed& s) {
    return refine(dom, domain.col(s.i), domain.col(s.j), tol);
  });

  std::vector<DoublePoint> out;
  for (const Refined& r : refined) {
    if (r.outcome == Outcome::kUnfinished)
      throw std::runtime_error("double-point refinement did not settle at resolution " + std::to_string(resolution));
    if (r.outcome != Outcome::kConverged) continue;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const DoublePoint& d) {
      return (dom.distance(d.first, r.p) < 10 * tol && dom.distance(d.second, r.q) < 10 * tol) ||
             (dom.distance(d.first, r.q) < 10 * tol && dom.distance(d.second, r.p) < 10 * tol);
    });
    if (dup) continue;
    Eigen::VectorXd p = r.p, q = r.q;
    if (dom.circle) {
      for (Eigen::VectorXd* v : {&p, &q}) (*v)(dom.m + 1) = std::fmod((*v)(dom.m + 1) + 4 * kPi, 2 * kPi);
    }
    const Eigen::VectorXd fp = dom.eval(p);
    out.push_back({p, q, 0.5 * (fp + dom.eval(q)), r.gap});
  }
  return out;
}

}  // namespace

std::vector<DoublePoint> double_points(const SphereMap& map, int resolution, double tol) {
  Domain dom{map.sphere_dim, false, [&map](const Eigen::VectorXd& p) { return map.eval(p); }};
  return search(dom, resolution, tol);
}

std::vector<DoublePoint> double_points(const SphereCircleMap& map, int resolution, double tol) {
  const int k = map.k;
  Domain dom{k, true, [&map, k](const Eigen::VectorXd& p) { return map.eval(p.head(k + 1), p(k + 1)); }};
  return search(dom, resolution, tol);
}

}  // namespace atfkit::lag
