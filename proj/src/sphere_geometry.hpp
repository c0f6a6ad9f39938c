// Sampling and local frames on round spheres. Internal to the lab.
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace atfkit::lag::detail {

/// Hyperspherical-angle grid on S^m with `per_param` samples per angle;
/// polar angles at cell midpoints so no sample sits on a coordinate pole.
inline std::vector<Eigen::VectorXd> lat_long_samples(int m, int per_param) {
  const double pi = std::numbers::pi;
  std::vector<Eigen::VectorXd> out;
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  while (true) {
    Eigen::VectorXd x(m + 1);
    double prod = 1.0;
    for (int a = 0; a < m - 1; ++a) {
      const double psi = pi * (idx[static_cast<std::size_t>(a)] + 0.5) / per_param;
      x(a) = prod * std::cos(psi);
      prod *= std::sin(psi);
    }
    const double phi = 2 * pi * idx[static_cast<std::size_t>(m - 1)] / per_param;
    x(m - 1) = prod * std::cos(phi);
    x(m) = prod * std::sin(phi);
    out.push_back(x);
    int a = 0;
    while (a < m && ++idx[static_cast<std::size_t>(a)] == per_param) idx[static_cast<std::size_t>(a++)] = 0;
    if (a == m) break;
  }
  return out;
}

/// Equi-angular cube-sphere sampling of S^m: 2(m+1) faces with n^m cell
/// centres each. Neighbouring samples are about (pi/2)/n apart.
inline std::vector<Eigen::VectorXd> cube_sphere_samples(int m, int n) {
  const double pi = std::numbers::pi;
  std::vector<double> coord(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) coord[static_cast<std::size_t>(i)] = std::tan(pi / 4 * (2.0 * (i + 0.5) / n - 1.0));
  std::vector<Eigen::VectorXd> out;
  for (int axis = 0; axis <= m; ++axis) {
    for (int sign : {1, -1}) {
      std::vector<int> idx(static_cast<std::size_t>(m), 0);
      while (true) {
        Eigen::VectorXd x(m + 1);
        int c = 0;
        for (int a = 0; a <= m; ++a) {
          x(a) = a == axis ? double(sign) : coord[static_cast<std::size_t>(idx[static_cast<std::size_t>(c++)])];
        }
        out.push_back(x.normalized());
        int a = 0;
        while (a < m && ++idx[static_cast<std::size_t>(a)] == n) idx[static_cast<std::size_t>(a++)] = 0;
        if (a == m) break;
      }
    }
  }
  return out;
}

/// Orthonormal basis of the tangent space x^perp, as columns.
inline Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& x) {
  const Eigen::MatrixXd col = x;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(col);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(x.size() - 1);
}

/// Stereographic chart centred on x: projection from the pole on the far
/// side of x's hemisphere. Coordinate lines are circles through that pole,
/// and the coordinate vectors are orthogonal with common length lambda.
class StereoChart {
 public:
  explicit StereoChart(const Eigen::VectorXd& x) : m_(static_cast<int>(x.size()) - 1) {
    sign_ = x(m_) >= 0 ? -1.0 : 1.0;
    u_ = x.head(m_) / (1.0 - sign_ * x(m_));
    lambda_ = 2.0 / (1.0 + u_.squaredNorm());
  }

  /// Point reached by moving `arc` along chart direction i (unit frame vector
  /// to first order).
  Eigen::VectorXd shifted(int i, double arc) const {
    Eigen::VectorXd u = u_;
    u(i) += arc / lambda_;
    return from_chart(u);
  }

  int dim() const { return m_; }

 private:
  Eigen::VectorXd from_chart(const Eigen::VectorXd& u) const {
    const double rho = u.squaredNorm();
    Eigen::VectorXd x(m_ + 1);
    x.head(m_) = 2.0 * u / (1.0 + rho);
    x(m_) = sign_ * (rho - 1.0) / (1.0 + rho);
    return x;
  }

  int m_;
  double sign_;
  double lambda_;
  Eigen::VectorXd u_;
};

/// Samples per parameter so that a d-parameter grid holds about grid^2 points.
inline int per_parameter(int grid, int params) {
  if (params <= 2) return grid;
  return std::max(2, static_cast<int>(std::lround(std::pow(double(grid), 2.0 / params))));
}

}  // namespace atfkit::lag::detail
