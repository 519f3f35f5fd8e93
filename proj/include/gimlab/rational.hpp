#ifndef GIMLAB_RATIONAL_HPP
#define GIMLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace gimlab {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always stored in canonical form: positive denominator, coprime
/// numerator and denominator, zero as 0/1. The textual form is the GMP
/// one ("p/q", or "p" when q = 1) and round-trips through from_string.
class Rational {
public:
  Rational() = default;
  Rational(long value) : q_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p", with an optional leading sign. Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rational from_string(std::string_view text);

  std::string str() const { return q_.get_str(); }
  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Throws std::domain_error on zero.
  Rational inverse() const;

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  /// this += a * b without a heap temporary on the hot path.
  void add_mul(const Rational& a, const Rational& b);
  /// this -= a * b
  void sub_mul(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(Rational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class q_;
};

/// a^k for integer k (negative powers invert; 0^k with k < 0 throws).
Rational pow(const Rational& a, int k);

} // namespace gimlab

#endif // GIMLAB_RATIONAL_HPP
