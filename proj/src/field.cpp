#include "leibalg/field.hpp"

#include <limits>

namespace leibalg {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw Error(ErrorKind::field, "characteristic 2 is not supported: 1/2 must exist in the ground field");
  if (p > static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max()))
    throw Error(ErrorKind::field, "prime " + std::to_string(p) + " exceeds 2^31 - 1");
  if (!is_prime_number(p)) throw Error(ErrorKind::field, std::to_string(p) + " is not a prime");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
}

Fp Fp::inverse() const {
  if (!bound()) {
    if (value_ == 1 || value_ == -1) return *this;
    throw Error(ErrorKind::field, "cannot invert an unbound F_p literal");
  }
  std::int64_t a = reduce(value_, modulus_);
  if (a == 0) throw Error(ErrorKind::field, "division by zero in F_" + std::to_string(modulus_));
  // extended Euclid on (a, p)
  std::int64_t r0 = modulus_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Fp(s0, modulus_);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::field, "zero denominator");
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text), Integer(1));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::schema, "malformed rational '" + text + "'");
  }
}

std::string Rational::to_string() const {
  const Integer den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

}  // namespace leibalg
