// Exact planar lattice arithmetic: big integers, rationals, 2-vectors and
// 2x2 matrices templated on the scalar, plus the unimodular group actions
// used by the base-triangle calculus.
#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

namespace atfkit {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// A dense 2-vector over an exact scalar (Integer or Rational).
template <typename Scalar>
struct Vec2 {
  Scalar x{0};
  Scalar y{0};

  Vec2() = default;
  Vec2(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {Scalar(a.x + b.x), Scalar(a.y + b.y)}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {Scalar(a.x - b.x), Scalar(a.y - b.y)}; }
  friend Vec2 operator-(const Vec2& a) { return {Scalar(-a.x), Scalar(-a.y)}; }
  friend Vec2 operator*(const Scalar& k, const Vec2& a) { return {Scalar(k * a.x), Scalar(k * a.y)}; }

  bool is_zero() const { return x == 0 && y == 0; }
};

using Vec2Z = Vec2<Integer>;
using Vec2Q = Vec2<Rational>;

/// Planar cross product a.x*b.y - a.y*b.x.
template <typename Scalar>
Scalar cross(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return Scalar(a.x * b.y - a.y * b.x);
}

template <typename Scalar>
Scalar dot(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return Scalar(a.x * b.x + a.y * b.y);
}

/// Row-major 2x2 matrix over an exact scalar.
template <typename Scalar>
struct Mat2 {
  Scalar a11{1}, a12{0}, a21{0}, a22{1};

  Mat2() = default;
  Mat2(Scalar m11, Scalar m12, Scalar m21, Scalar m22)
      : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {}

  static Mat2 identity() { return {}; }

  Scalar determinant() const { return Scalar(a11 * a22 - a12 * a21); }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }

  friend bool operator==(const Mat2& a, const Mat2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
  }
  friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

  friend Vec2<Scalar> operator*(const Mat2& m, const Vec2<Scalar>& v) {
    return {Scalar(m.a11 * v.x + m.a12 * v.y), Scalar(m.a21 * v.x + m.a22 * v.y)};
  }
  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {Scalar(m.a11 * n.a11 + m.a12 * n.a21), Scalar(m.a11 * n.a12 + m.a12 * n.a22),
            Scalar(m.a21 * n.a11 + m.a22 * n.a21), Scalar(m.a21 * n.a12 + m.a22 * n.a22)};
  }
};

using Mat2Z = Mat2<Integer>;
using Mat2Q = Mat2<Rational>;

Vec2Q to_rational(const Vec2Z& v);
Mat2Q to_rational(const Mat2Z& m);

/// An integer 2x2 matrix with determinant +1 or -1. Construction validates.
class Unimodular {
 public:
  Unimodular() = default;
  explicit Unimodular(Mat2Z m);
  Unimodular(Integer a11, Integer a12, Integer a21, Integer a22);

  const Mat2Z& matrix() const { return m_; }
  int determinant() const;
  Unimodular inverse() const;
  /// Inverse transpose, the action on normal (co)vectors.
  Unimodular inverse_transpose() const;

  friend Unimodular operator*(const Unimodular& a, const Unimodular& b) { return Unimodular(a.m_ * b.m_); }
  friend bool operator==(const Unimodular& a, const Unimodular& b) { return a.m_ == b.m_; }

 private:
  Mat2Z m_;
};

bool is_unimodular(const Mat2Z& m);

Vec2Q apply(const Unimodular& a, const Vec2Q& p);
Vec2Z apply(const Unimodular& a, const Vec2Z& p);

/// True if gcd(|x|,|y|) == 1.
bool is_primitive(const Vec2Z& v);

/// The integer vector with coprime entries positively proportional to v.
/// Throws std::domain_error("no primitive direction") for the zero vector.
Vec2Z primitive(const Vec2Q& v);
Vec2Z primitive(const Vec2Z& v);

/// Matrix of p -> p + (vhat x p) vhat. Requires vhat primitive.
Unimodular shear_by(const Vec2Z& vhat);

/// Exact integer square root when n is a perfect square, otherwise nullopt
/// (also for negative n).
std::optional<Integer> exact_sqrt(const Integer& n);

// Rationals travel as "p/q" strings ("p" when q == 1). Parsing accepts an
// ASCII '-' or U+2212 as the sign and canonicalises to lowest terms.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Vec2Z& v);
std::ostream& operator<<(std::ostream& os, const Vec2Q& v);
std::ostream& operator<<(std::ostream& os, const Unimodular& a);

}  // namespace atfkit
