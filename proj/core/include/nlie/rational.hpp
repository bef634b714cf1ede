#pragma once

/*
 * Exact rational scalar type used throughout the library.
 *
 * Every coefficient, coordinate and structure constant is a Rational, so all
 * computations (row reduction, cohomology dimensions, induced brackets, ...)
 * are exact and results can be compared bit-for-bit.
 */

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace nlie {

/// Arbitrary-precision rational number kept in canonical form: lowest terms,
/// denominator > 0, zero represented as 0/1.  Backed by GMP's mpq_class;
/// construction and parsing canonicalize eagerly so equality is structural.
class Rational {
public:
  /// Zero.
  Rational() : m_value(0) {}

  /// Integer value (implicit on purpose: coordinate literals read naturally).
  Rational(long n) : m_value(n) {}
  Rational(int n) : m_value(static_cast<long>(n)) {}

  /// The fraction n/d, canonicalized.  Throws std::invalid_argument if d == 0.
  Rational(long n, long d);

  /// Wraps an existing GMP rational; the value is canonicalized.
  explicit Rational(const mpq_class& v);

  /// Parses "p" or "p/q" (optional leading '-' on p; q positive digits).
  /// Throws std::invalid_argument on any other shape or if q == 0.
  static Rational parse(const std::string& text);

  /// Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return m_value.get_str(); }

  bool is_zero() const { return m_value.get_num() == 0; }
  /// -1, 0 or +1.
  int sign() const { return sgn(m_value); }

  /// Numerator (sign-carrying) and denominator (always positive).
  const mpz_class& num() const { return m_value.get_num(); }
  const mpz_class& den() const { return m_value.get_den(); }

  Rational operator-() const { return Rational(mpq_class(-m_value)); }

  Rational& operator+=(const Rational& o) { m_value += o.m_value; return *this; }
  Rational& operator-=(const Rational& o) { m_value -= o.m_value; return *this; }
  Rational& operator*=(const Rational& o) { m_value *= o.m_value; return *this; }
  /// Throws std::invalid_argument on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.m_value == b.m_value;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.m_value, b.m_value) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.m_value, b.m_value) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  /// Multiplicative inverse.  Throws std::invalid_argument on zero.
  Rational inverse() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class m_value;
};

}  // namespace nlie
