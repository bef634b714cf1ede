#include "nlie/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nlie {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  m_value = mpq_class(n, d);
  m_value.canonicalize();
}

Rational::Rational(const mpq_class& v) : m_value(v) {
  if (m_value.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator");
  m_value.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  // Accepted shape: -?digits(/digits)?  -- exactly what str() emits.
  auto malformed = [&] {
    return std::invalid_argument("Rational: malformed value '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw malformed();
  if (i < text.size()) {
    if (text[i] != '/') throw malformed();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw malformed();
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw malformed();
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  m_value /= o.m_value;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
  return Rational(mpq_class(1) / m_value);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace nlie
