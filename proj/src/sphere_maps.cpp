#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "atfkit/laglab.hpp"
#include "atfkit/parallel.hpp"
#include "sphere_geometry.hpp"

namespace atfkit::lag {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit(const Eigen::VectorXd& x, Eigen::Index size) {
  if (x.size() != size) throw std::invalid_argument("wrong input dimension");
  if (std::abs(x.squaredNorm() - 1.0) > 1e-9) throw std::domain_error("point is not on the sphere");
}

// C-infinity step: 0 for s <= 0, 1 for s >= 1.
double smooth_step(double s) {
  auto f = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
  const double a = f(s);
  const double b = f(1.0 - s);
  return a / (a + b);
}

Eigen::VectorXd cap_map(int n, const Eigen::VectorXd& x) {
  std::complex<double> z(x(0), n >= 0 ? x(1) : -x(1));
  z = std::pow(z, std::abs(n));
  Eigen::VectorXd v = x;
  v(0) = z.real();
  v(1) = z.imag();
  return v.normalized();
}

double pair_defect(const std::vector<Eigen::VectorXd>& d) {
  double worst = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) worst = std::max(worst, std::abs(omega_qp(d[i], d[j])));
  return worst;
}

void check_cfg(const FDConfig& cfg) {
  if (cfg.grid < 1 || !(cfg.step > 0)) throw std::invalid_argument("grid and step must be positive");
}

}  // namespace

SphereMap whitney_immersion(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return {"whitney", k + 1, k + 1, [k](const Eigen::VectorXd& v) {
            require_unit(v, k + 2);
            Eigen::VectorXd out(2 * k + 2);
            out.head(k + 1) = v.head(k + 1);
            out.tail(k + 1) = v(k + 1) * v.head(k + 1);
            return out;
          }};
}

SphereMap round_sphere(int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  return {"round-sphere", m, m + 1, [m](const Eigen::VectorXd& x) {
            require_unit(x, m + 1);
            Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * m + 2);
            out.head(m + 1) = x;
            return out;
          }};
}

SphereCircleMap nemirovski_embedding(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SphereCircleMap m;
  m.name = "nemirovski";
  m.k = k;
  m.eval = [k](const Eigen::VectorXd& x, double t) {
    require_unit(x, k + 1);
    Eigen::VectorXd out(2 * k + 2);
    out.head(k + 1) = (1.0 + 0.5 * std::sin(t)) * x;
    out.tail(k + 1) = 0.5 * std::cos(t) * x;
    return out;
  };
  return m;
}

Eigen::VectorXd default_w0(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(k + 1);
  w(0) = std::sin(0.05);
  w(k) = -std::cos(0.05);
  return w;
}

Eigen::VectorXd degree_map(int k, int n, const Eigen::VectorXd& x) {
  if (k < 2) throw std::invalid_argument("degree map needs k >= 2");
  require_unit(x, k + 1);
  const Eigen::VectorXd w0 = default_w0(k);
  const double h = x(k);
  if (n == 0 || h <= 0.0) return w0;
  if (h >= 0.75) return cap_map(n, x);
  const double beta = smooth_step(h / 0.75);
  return ((1.0 - beta) * w0 + beta * cap_map(n, x)).normalized();
}

SphereCircleMap e_n_embedding(int k, int n, double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("c must lie in (0, 1)");
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  SphereCircleMap m;
  m.name = "e-n";
  m.k = k;
  m.params = {c, n, default_w0(k)};
  m.eval = [k, n, c](const Eigen::VectorXd& x, double t) {
    Eigen::VectorXd out(2 * k + 2);
    out.head(k + 1) = (1.0 + c * std::cos(t)) * x;
    out.tail(k + 1) = c * std::sin(t) * degree_map(k, n, x);
    return out;
  };
  return m;
}

double lagrangian_defect(const SphereMap& map, const FDConfig& cfg) {
  check_cfg(cfg);
  const int m = map.sphere_dim;
  const auto pts = detail::lat_long_samples(m, detail::per_parameter(cfg.grid, m));
  const double h = cfg.step;
  std::vector<double> worst(worker_count(), 0.0);
  parallel_chunks(pts.size(), [&](std::size_t b, std::size_t e, unsigned w) {
    for (std::size_t i = b; i < e; ++i) {
      const detail::StereoChart chart(pts[i]);
      std::vector<Eigen::VectorXd> d;
      for (int a = 0; a < m; ++a) d.push_back((map.eval(chart.shifted(a, h)) - map.eval(chart.shifted(a, -h))) / (2 * h));
      const double v = pair_defect(d);
      if (!std::isfinite(v)) throw std::domain_error("non-finite evaluation in " + map.name);
      worst[w] = std::max(worst[w], v);
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

double lagrangian_defect(const SphereCircleMap& map, const FDConfig& cfg) {
  check_cfg(cfg);
  const int k = map.k;
  const int per = detail::per_parameter(cfg.grid, k + 1);
  const auto pts = detail::lat_long_samples(k, per);
  const double h = cfg.step;
  std::vector<double> worst(worker_count(), 0.0);
  parallel_chunks(pts.size(), [&](std::size_t b, std::size_t e, unsigned w) {
    for (std::size_t i = b; i < e; ++i) {
      const detail::StereoChart chart(pts[i]);
      for (int j = 0; j < per; ++j) {
        const double t = 2 * kPi * j / per;
        std::vector<Eigen::VectorXd> d;
        for (int a = 0; a < k; ++a)
          d.push_back((map.eval(chart.shifted(a, h), t) - map.eval(chart.shifted(a, -h), t)) / (2 * h));
        d.push_back((map.eval(pts[i], t + h) - map.eval(pts[i], t - h)) / (2 * h));
        const double v = pair_defect(d);
        if (!std::isfinite(v)) throw std::domain_error("non-finite evaluation in " + map.name);
        worst[w] = std::max(worst[w], v);
      }
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

int count_antipodal_preimages(int k, int n, int resolution) {
  if (k != 2) throw std::invalid_argument("preimage count implemented for k = 2 only");
  if (resolution < 8) throw std::invalid_argument("resolution must be at least 8");
  const Eigen::VectorXd target = -default_w0(k);
  const auto residual = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return degree_map(k, n, x) - target; };
  const auto retract = [](const Eigen::VectorXd& x, const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return (x + v).normalized();
  };
  const auto jacobian = [&](const Eigen::VectorXd& x, const Eigen::MatrixXd& basis) {
    constexpr double eps = 1e-7;
    Eigen::MatrixXd j(k + 1, k);
    for (int a = 0; a < k; ++a)
      j.col(a) = (residual(retract(x, eps * basis.col(a))) - residual(retract(x, -eps * basis.col(a)))) / (2 * eps);
    return j;
  };

  const int face = std::max(2, resolution / 4);
  const auto pts = detail::cube_sphere_samples(k, face);
  const double spacing = std::sqrt(double(k)) * (kPi / 2) / face;
  const auto res = parallel_map(pts, [&](const Eigen::VectorXd& x) { return residual(x).norm(); });

  double lip = 0.0;
  for (std::size_t i = 0; i < pts.size(); i += 7) {
    const Eigen::MatrixXd j = jacobian(pts[i], detail::tangent_basis(pts[i]));
    lip = std::max(lip, j.jacobiSvd().singularValues()(0));
  }
  const double seed_radius = std::max(1e-9, lip * spacing);

  std::vector<std::size_t> seeds;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (res[i] < seed_radius) seeds.push_back(i);
  std::sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) { return res[a] < res[b]; });

  std::vector<Eigen::VectorXd> roots;
  bool unresolved = false;
  for (const std::size_t s : seeds) {
    Eigen::VectorXd x = pts[s];
    Eigen::VectorXd r = residual(x);
    for (int it = 0; it < 60 && r.norm() > 1e-13; ++it) {
      const Eigen::MatrixXd basis = detail::tangent_basis(x);
      const Eigen::VectorXd step = jacobian(x, basis).colPivHouseholderQr().solve(-r);
      Eigen::VectorXd next = retract(x, basis * step);
      Eigen::VectorXd rn = residual(next);
      double damp = 1.0;
      while (rn.norm() >= r.norm() && damp > 1e-6) {
        damp *= 0.5;
        next = retract(x, damp * (basis * step));
        rn = residual(next);
      }
      if (rn.norm() >= r.norm()) break;
      x = next;
      r = rn;
    }
    if (r.norm() > 1e-10) {
      if (r.norm() < 1e-4) unresolved = true;
      continue;
    }
    const bool known = std::any_of(roots.begin(), roots.end(), [&](const Eigen::VectorXd& y) { return (y - x).norm() < 1e-6; });
    if (!known) roots.push_back(x);
  }
  if (unresolved && roots.empty()) throw std::runtime_error("preimage refinement did not settle; raise the resolution");
  return static_cast<int>(roots.size());
}

WhitneyInvariant whitney_invariant_e_n(int k, int n) {
  if (k < 3) throw std::invalid_argument("invariant defined for k >= 3");
  if (k % 2 == 0) return {n, 0};
  return {((n % 2) + 2) % 2, 2};
}

}  // namespace atfkit::lag
