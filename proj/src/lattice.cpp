#include "atfkit/lattice.hpp"

#include <cctype>

namespace atfkit {

namespace mp = boost::multiprecision;

Vec2Q to_rational(const Vec2Z& v) { return {Rational(v.x), Rational(v.y)}; }

Mat2Q to_rational(const Mat2Z& m) {
  return {Rational(m.a11), Rational(m.a12), Rational(m.a21), Rational(m.a22)};
}

bool is_unimodular(const Mat2Z& m) {
  const Integer d = m.determinant();
  return d == 1 || d == -1;
}

Unimodular::Unimodular(Mat2Z m) : m_(std::move(m)) {
  if (!is_unimodular(m_)) throw std::invalid_argument("matrix is not unimodular");
}

Unimodular::Unimodular(Integer a11, Integer a12, Integer a21, Integer a22)
    : Unimodular(Mat2Z(std::move(a11), std::move(a12), std::move(a21), std::move(a22))) {}

int Unimodular::determinant() const { return m_.determinant() == 1 ? 1 : -1; }

Unimodular Unimodular::inverse() const {
  // adj(A) / det(A) with det = +-1
  const Integer d = m_.determinant();
  return Unimodular(Integer(d * m_.a22), Integer(-d * m_.a12), Integer(-d * m_.a21), Integer(d * m_.a11));
}

Unimodular Unimodular::inverse_transpose() const { return Unimodular(inverse().m_.transpose()); }

Vec2Q apply(const Unimodular& a, const Vec2Q& p) { return to_rational(a.matrix()) * p; }
Vec2Z apply(const Unimodular& a, const Vec2Z& p) { return a.matrix() * p; }

bool is_primitive(const Vec2Z& v) { return mp::gcd(mp::abs(v.x), mp::abs(v.y)) == 1; }

Vec2Z primitive(const Vec2Z& v) {
  if (v.is_zero()) throw std::domain_error("no primitive direction");
  const Integer g = mp::gcd(mp::abs(v.x), mp::abs(v.y));
  return {Integer(v.x / g), Integer(v.y / g)};
}

Vec2Z primitive(const Vec2Q& v) {
  if (v.is_zero()) throw std::domain_error("no primitive direction");
  const Integer dx = mp::denominator(v.x);
  const Integer dy = mp::denominator(v.y);
  const Integer l = mp::lcm(dx, dy);
  const Vec2Z scaled{Integer(mp::numerator(v.x) * (l / dx)), Integer(mp::numerator(v.y) * (l / dy))};
  return primitive(scaled);
}

Unimodular shear_by(const Vec2Z& vhat) {
  if (!is_primitive(vhat)) throw std::invalid_argument("shear direction must be primitive");
  const Integer& a = vhat.x;
  const Integer& b = vhat.y;
  // p + (vhat x p) vhat, expanded: det = 1 - a^2 b^2 + a^2 b^2
  return Unimodular(Integer(1 - a * b), Integer(a * a), Integer(-b * b), Integer(1 + a * b));
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = mp::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const Integer num = mp::numerator(r);
  const Integer den = mp::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

// Strips a leading sign (ASCII or U+2212) and returns whether it was negative.
bool take_sign(std::string_view& s) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with(kUnicodeMinus)) {
    s.remove_prefix(kUnicodeMinus.size());
    return true;
  }
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    const bool neg = s.front() == '-';
    s.remove_prefix(1);
    return neg;
  }
  return false;
}

Integer parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  }
  return Integer(std::string(s));
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = text;
  const bool neg = take_sign(s);
  Integer n = parse_digits(s, text);
  return neg ? Integer(-n) : n;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  const bool neg = take_sign(s);
  const auto slash = s.find('/');
  Integer num = parse_digits(s.substr(0, slash), text);
  Integer den = 1;
  if (slash != std::string_view::npos) {
    den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

std::ostream& operator<<(std::ostream& os, const Vec2Z& v) { return os << '(' << v.x << ", " << v.y << ')'; }

std::ostream& operator<<(std::ostream& os, const Vec2Q& v) {
  return os << '(' << to_string(v.x) << ", " << to_string(v.y) << ')';
}

std::ostream& operator<<(std::ostream& os, const Unimodular& a) {
  const auto& m = a.matrix();
  return os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
}

}  // namespace atfkit
