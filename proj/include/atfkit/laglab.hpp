// Floating-point samplers for explicit Lagrangian tori in C^2 and for maps
// S^k x S^1 -> C^{k+1}, together with the numerical checks run on them:
// finite-difference Lagrangian defect, moment-map containment, grid-based
// double-point search and preimage counting.
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace atfkit::lag {

using Complex = std::complex<double>;

/// A point of C^2 = R^4, z_j = x_j + i y_j.
struct Point4 {
  Complex z1;
  Complex z2;

  /// (x1, y1, x2, y2)
  Eigen::Vector4d coordinates() const { return {z1.real(), z1.imag(), z2.real(), z2.imag()}; }
};

/// pi (|z1|^2 - |z2|^2)
double hamiltonian_H(const Point4& p);
/// z1 z2
Complex map_F(const Point4& p);
/// (pi |z1|^2, pi |z2|^2)
Eigen::Vector2d moment_map(const Point4& p);
/// (e^{2 pi i theta1} z1, e^{2 pi i theta2} z2)
Point4 torus_action(const Point4& p, double theta1, double theta2);
/// The circle action generated by H: (e^{2 pi i theta} z1, e^{-2 pi i theta} z2).
Point4 anti_diagonal_action(const Point4& p, double theta);

/// dx1^dy1 + dx2^dy2 on vectors in (x1, y1, x2, y2) coordinates.
double omega0(const Eigen::Vector4d& u, const Eigen::Vector4d& v);
/// sum_j dq_j ^ dp_j on R^{2n} laid out as (q_1..q_n, p_1..p_n).
double omega_qp(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// A closed curve t in [0,1) -> C. Arguments outside [0,1) are wrapped.
class Curve2D {
 public:
  using Sampler = std::function<Complex(double)>;

  Curve2D(Sampler sampler, int sample_count);

  Complex operator()(double t) const;
  int sample_count() const { return sample_count_; }
  std::vector<Complex> samples() const;
  /// |gamma(0) - lim_{t -> 1} gamma(t)|, estimated just below 1.
  double closure_gap() const;
  bool is_closed(double tol = 1e-6) const { return closure_gap() <= tol; }

 private:
  Sampler sampler_;
  int sample_count_;
};

/// Counterclockwise circle of the given enclosed area.
Curve2D gamma_circle(Complex center, double area, int sample_count = 4096);
Curve2D gamma_ellipse(Complex center, double semi_x, double semi_y, int sample_count = 4096);
/// Area-1 ellipse inside the half-disc {|z|^2 < 3/pi, Re z > 0}, the default
/// curve for the Chekanov torus.
Curve2D default_chekanov_curve();

/// Signed shoelace area of the sampled polygon. Throws std::invalid_argument
/// for an open curve.
double enclosed_area(const Curve2D& gamma);
/// Winding number of a closed polyline around a point.
int winding_number(const std::vector<Complex>& polyline, Complex about);
/// True if every sample lies in one open half-plane through the origin.
bool in_open_half_plane(const Curve2D& gamma);

/// A doubly periodic map [0,1)^2 -> C^2.
struct ParamSurface {
  std::string name;
  std::function<Point4(double, double)> eval;

  Point4 operator()(double s, double t) const { return eval(s, t); }
};

/// (theta, t) -> (e^{2 pi i theta} gamma(t), e^{-2 pi i theta} gamma(t)) / sqrt 2.
/// Throws std::invalid_argument("not in a half-plane") if gamma is not
/// contained in an open half-plane, and for an open curve.
ParamSurface chekanov_torus(const Curve2D& gamma);
/// Circles of areas a and b in the two factors.
ParamSurface product_torus(double a, double b);
bool is_monotone_product(double a, double b, double tol = 1e-12);
/// The fibre {H = a, F in gamma}, parametrised by (phi, t).
/// Throws std::invalid_argument for a = 0 with 0 on gamma (pinched torus).
ParamSurface t_a_gamma(double a, const Curve2D& gamma);

struct FDConfig {
  double step = 1e-4;
  double tolerance = 1e-6;
  int grid = 256;  // samples per parameter on surfaces; grid^2 total points on higher-dimensional domains
};

/// A map S^m -> R^{2n} = C^n, input a unit vector of R^{m+1}, output (q, p).
struct SphereMap {
  std::string name;
  int sphere_dim = 0;
  int target_dim = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> eval;
};

struct SphereCircleParams {
  double c = 0.0;
  int n = 0;
  Eigen::VectorXd w0;  // base point of the degree-n sphere map, when used
};

/// A map S^k x S^1 -> R^{2k+2} = C^{k+1}; t in [0, 2 pi).
struct SphereCircleMap {
  std::string name;
  int k = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> eval;
  SphereCircleParams params;
};

/// Max over the sample grid of |omega(d_1, d_2)| for central-difference
/// tangent vectors. Sphere directions come from an orthonormal frame
/// realised through stereographic coordinates. Throws std::domain_error on
/// non-finite evaluation.
double lagrangian_defect(const ParamSurface& surface, const FDConfig& cfg);
double lagrangian_defect(const SphereMap& map, const FDConfig& cfg);
double lagrangian_defect(const SphereCircleMap& map, const FDConfig& cfg);

/// w(x, y) = (1 + i y) x on S^{k+1} = {|x|^2 + y^2 = 1} in R^{k+1} x R.
SphereMap whitney_immersion(int k);
/// x -> (x, 0), an embedding S^m -> C^{m+1}.
SphereMap round_sphere(int m);
/// (x, t) -> (x + sin t x / 2, cos t x / 2).
SphereCircleMap nemirovski_embedding(int k);

/// The point at geodesic distance 0.05 from the south pole towards +x_1.
Eigen::VectorXd default_w0(int k);
/// Degree-n map S^k -> S^k: the southern hemisphere goes to w0, the cap
/// {x_{k+1} >= 3/4} goes through (x1 + i x2)^n with the remaining coordinates
/// kept (then normalised), with a smooth blend in between. n = 0 is the
/// constant map w0.
Eigen::VectorXd degree_map(int k, int n, const Eigen::VectorXd& x);
/// (x, t) -> (x + c cos t x, c sin t w_n(x)). Throws std::invalid_argument
/// for c outside (0, 1).
SphereCircleMap e_n_embedding(int k, int n, double c);

struct DoublePoint {
  Eigen::VectorXd first;   // domain point (sphere coordinates, then t for S^k x S^1)
  Eigen::VectorXd second;
  Eigen::VectorXd image;
  double image_distance = 0.0;
};

/// Pairs of distinct domain points with (nearly) equal images: grid scan,
/// seed pairs, Levenberg-Marquardt refinement, clustering at radius 10 tol.
/// Throws std::runtime_error if refinement fails to settle at this resolution.
std::vector<DoublePoint> double_points(const SphereMap& map, int resolution, double tol = 1e-6);
std::vector<DoublePoint> double_points(const SphereCircleMap& map, int resolution, double tol = 1e-6);

/// Number of solutions of w_n(xi) = -w0 on S^2 by grid scan and refinement.
/// Only k = 2 is supported.
int count_antipodal_preimages(int k, int n, int resolution = 64);

struct WhitneyInvariant {
  long value = 0;
  int modulus = 0;  // 0 for an integer invariant, 2 for a residue mod 2
};

/// W(e_n): n for even k >= 4, n mod 2 for odd k >= 3. Throws
/// std::invalid_argument("invariant defined for k >= 3") for k < 3.
WhitneyInvariant whitney_invariant_e_n(int k, int n);

}  // namespace atfkit::lag
