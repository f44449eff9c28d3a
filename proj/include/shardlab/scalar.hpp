#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace shardlab {

using Rational = mpq_class;

inline int sign(const Rational& x) { return sgn(x); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Parses "p", "p/q" or "-p/q"; the result is canonical.
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

// a + b*sqrt(D) with D > 0 square-free.
template <long D>
class QuadraticExtension {
  static_assert(D > 1, "D must be a square-free integer > 1");

 public:
  QuadraticExtension() = default;
  QuadraticExtension(long a) : a_(a) {}  // NOLINT implicit from integers
  QuadraticExtension(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static QuadraticExtension sqrt_d() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }

  QuadraticExtension conjugate() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - b_ * b_ * D; }

  QuadraticExtension& operator+=(const QuadraticExtension& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadraticExtension& operator-=(const QuadraticExtension& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadraticExtension& operator*=(const QuadraticExtension& o) {
    Rational a = a_ * o.a_ + b_ * o.b_ * D;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadraticExtension& operator/=(const QuadraticExtension& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("division by zero in quadratic extension");
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend QuadraticExtension operator+(QuadraticExtension x, const QuadraticExtension& y) { return x += y; }
  friend QuadraticExtension operator-(QuadraticExtension x, const QuadraticExtension& y) { return x -= y; }
  friend QuadraticExtension operator*(QuadraticExtension x, const QuadraticExtension& y) { return x *= y; }
  friend QuadraticExtension operator/(QuadraticExtension x, const QuadraticExtension& y) { return x /= y; }
  friend QuadraticExtension operator-(const QuadraticExtension& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QuadraticExtension& x, const QuadraticExtension& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadraticExtension& x, const QuadraticExtension& y) {
    int s = sign(x - y);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend int sign(const QuadraticExtension& x) {
    int sa = sgn(x.a_), sb = sgn(x.b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 D
    int c = cmp(x.a_ * x.a_, x.b_ * x.b_ * D);
    return c > 0 ? sa : c < 0 ? sb : 0;
  }

  friend std::string to_string(const QuadraticExtension& x) {
    if (x.b_ == 0) return x.a_.get_str();
    std::ostringstream os;
    if (x.a_ != 0) os << x.a_.get_str() << (sgn(x.b_) > 0 ? "+" : "");
    os << x.b_.get_str() << "*sqrt" << D;
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const QuadraticExtension& x) { return os << to_string(x); }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

using QSqrt5 = QuadraticExtension<5>;

// Golden ratio (1 + sqrt5)/2 = 2cos(pi/5).
inline QSqrt5 golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

template <class F>
bool is_zero(const F& x) {
  return sign(x) == 0;
}

template <class F>
F abs_value(const F& x) {
  return sign(x) < 0 ? F(-x) : x;
}

}  // namespace shardlab
