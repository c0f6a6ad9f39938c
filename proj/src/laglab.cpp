#include "atfkit/laglab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "atfkit/parallel.hpp"

namespace atfkit::lag {

namespace {

constexpr double kPi = std::numbers::pi;

Complex phase(double turns) { return std::polar(1.0, 2.0 * kPi * turns); }

double wrap_unit(double t) { return t - std::floor(t); }

// Distance from the origin to the segment [a, b].
double origin_to_segment(Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(a);
  const double s = std::clamp(-(a.real() * d.real() + a.imag() * d.imag()) / len2, 0.0, 1.0);
  return std::abs(a + s * d);
}

}  // namespace

double hamiltonian_H(const Point4& p) { return kPi * (std::norm(p.z1) - std::norm(p.z2)); }

Complex map_F(const Point4& p) { return p.z1 * p.z2; }

Eigen::Vector2d moment_map(const Point4& p) { return {kPi * std::norm(p.z1), kPi * std::norm(p.z2)}; }

Point4 torus_action(const Point4& p, double theta1, double theta2) {
  return {phase(theta1) * p.z1, phase(theta2) * p.z2};
}

Point4 anti_diagonal_action(const Point4& p, double theta) { return torus_action(p, theta, -theta); }

double omega0(const Eigen::Vector4d& u, const Eigen::Vector4d& v) {
  return u(0) * v(1) - u(1) * v(0) + u(2) * v(3) - u(3) * v(2);
}

double omega_qp(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  const Eigen::Index n = u.size() / 2;
  return u.head(n).dot(v.tail(n)) - u.tail(n).dot(v.head(n));
}

Curve2D::Curve2D(Sampler sampler, int sample_count) : sampler_(std::move(sampler)), sample_count_(sample_count) {
  if (sample_count_ < 3) throw std::invalid_argument("a curve needs at least 3 samples");
}

Complex Curve2D::operator()(double t) const { return sampler_(wrap_unit(t)); }

std::vector<Complex> Curve2D::samples() const {
  std::vector<Complex> out(static_cast<std::size_t>(sample_count_));
  for (int j = 0; j < sample_count_; ++j) out[static_cast<std::size_t>(j)] = sampler_(double(j) / sample_count_);
  return out;
}

double Curve2D::closure_gap() const { return std::abs(sampler_(0.0) - sampler_(1.0 - 1e-9)); }

Curve2D gamma_circle(Complex center, double area, int sample_count) {
  if (!(area > 0)) throw std::invalid_argument("area must be positive");
  const double r = std::sqrt(area / kPi);
  return Curve2D([center, r](double t) { return center + r * phase(t); }, sample_count);
}

Curve2D gamma_ellipse(Complex center, double semi_x, double semi_y, int sample_count) {
  if (!(semi_x > 0 && semi_y > 0)) throw std::invalid_argument("semi-axes must be positive");
  return Curve2D(
      [center, semi_x, semi_y](double t) {
        return center + Complex(semi_x * std::cos(2 * kPi * t), semi_y * std::sin(2 * kPi * t));
      },
      sample_count);
}

Curve2D default_chekanov_curve() {
  // Half-disc radius R = sqrt(3/pi). Centre 0.49 R, real semi-axis 0.435 R,
  // imaginary semi-axis fixed by area 1; clears the disc boundary by ~0.03.
  const double r = std::sqrt(3.0 / kPi);
  const double semi_x = 0.435 * r;
  return gamma_ellipse({0.49 * r, 0.0}, semi_x, 1.0 / (kPi * semi_x));
}

double enclosed_area(const Curve2D& gamma) {
  if (!gamma.is_closed()) throw std::invalid_argument("curve is not closed");
  const auto pts = gamma.samples();
  double twice = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const Complex a = pts[j];
    const Complex b = pts[(j + 1) % pts.size()];
    twice += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * twice;
}

int winding_number(const std::vector<Complex>& polyline, Complex about) {
  double total = 0.0;
  for (std::size_t j = 0; j < polyline.size(); ++j) {
    const Complex a = polyline[j] - about;
    const Complex b = polyline[(j + 1) % polyline.size()] - about;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2 * kPi)));
}

bool in_open_half_plane(const Curve2D& gamma) {
  std::vector<double> args;
  for (const Complex z : gamma.samples()) {
    if (z == Complex(0.0, 0.0)) return false;
    args.push_back(std::arg(z));
  }
  std::sort(args.begin(), args.end());
  double gap = args.front() + 2 * kPi - args.back();
  for (std::size_t j = 1; j < args.size(); ++j) gap = std::max(gap, args[j] - args[j - 1]);
  return gap > kPi;
}

ParamSurface chekanov_torus(const Curve2D& gamma) {
  if (!gamma.is_closed()) throw std::invalid_argument("curve is not closed");
  if (!in_open_half_plane(gamma)) throw std::invalid_argument("not in a half-plane");
  return {"chekanov", [gamma](double s, double t) {
            const Complex g = gamma(t) / std::sqrt(2.0);
            return Point4{phase(s) * g, std::conj(phase(s)) * g};
          }};
}

ParamSurface product_torus(double a, double b) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("areas must be positive");
  const double ra = std::sqrt(a / kPi);
  const double rb = std::sqrt(b / kPi);
  return {"product", [ra, rb](double s, double t) { return Point4{ra * phase(s), rb * phase(t)}; }};
}

bool is_monotone_product(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(a, b); }

ParamSurface t_a_gamma(double a, const Curve2D& gamma) {
  if (!gamma.is_closed()) throw std::invalid_argument("curve is not closed");
  if (a == 0.0) {
    const auto pts = gamma.samples();
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (origin_to_segment(pts[j], pts[(j + 1) % pts.size()]) <= 1e-12)
        throw std::invalid_argument("pinched torus, not embedded");
    }
  }
  const double kappa = a / kPi;  // r1^2 - r2^2
  return {"ta-gamma", [kappa, gamma](double s, double t) {
            const Complex g = gamma(t);
            const double rho = std::abs(g);  // r1 r2
            const double disc = std::sqrt(kappa * kappa + 4 * rho * rho);
            if (kappa >= 0) {
              const Complex z1 = std::sqrt((kappa + disc) / 2) * phase(s);
              return Point4{z1, g / z1};
            }
            const Complex z2 = std::sqrt((-kappa + disc) / 2) * std::conj(phase(s));
            return Point4{g / z2, z2};
          }};
}

double lagrangian_defect(const ParamSurface& surface, const FDConfig& cfg) {
  const int g = cfg.grid;
  const double h = cfg.step;
  if (g < 1 || !(h > 0)) throw std::invalid_argument("grid and step must be positive");
  std::vector<double> worst(worker_count(), 0.0);
  parallel_chunks(static_cast<std::size_t>(g), [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) {
      const double s = double(i) / g;
      for (int j = 0; j < g; ++j) {
        const double t = double(j) / g;
        const Eigen::Vector4d ds =
            (surface(s + h, t).coordinates() - surface(s - h, t).coordinates()) / (2 * h);
        const Eigen::Vector4d dt =
            (surface(s, t + h).coordinates() - surface(s, t - h).coordinates()) / (2 * h);
        const double val = std::abs(omega0(ds, dt));
        if (!std::isfinite(val)) throw std::domain_error("non-finite evaluation in " + surface.name);
        worst[w] = std::max(worst[w], val);
      }
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

}  // namespace atfkit::lag
