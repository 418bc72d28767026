#ifndef LEIBALG_FIELD_HPP
#define LEIBALG_FIELD_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "leibalg/error.hpp"

namespace leibalg {

/// Ground field of an algebra: a prime field F_p with p odd, or the rationals.
/// Characteristic 2 is rejected at construction.
class Field {
 public:
  Field() = default;  // the rationals

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(); }

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rationals() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// Element of F_p. Each bound value carries its modulus; a value built from a
/// plain int (as Eigen does for Scalar(0) and Scalar(1)) is unbound and adopts
/// the modulus of the first bound operand it is combined with.
class Fp {
 public:
  constexpr Fp() = default;
  constexpr Fp(int k) : value_(k) {}  // NOLINT(google-explicit-constructor)
  Fp(long long k, std::uint32_t p) : value_(reduce(k, p)), modulus_(p) {}

  bool bound() const noexcept { return modulus_ != 0; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// Canonical residue in [0, p).
  std::uint32_t residue(std::uint32_t p) const {
    return static_cast<std::uint32_t>(reduce(value_, p));
  }

  Fp inverse() const;

  friend Fp operator+(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    return p ? Fp(a.value_ + b.value_, p) : Fp::raw(a.value_ + b.value_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    return p ? Fp(a.value_ - b.value_, p) : Fp::raw(a.value_ - b.value_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    if (!p) return Fp::raw(a.value_ * b.value_);
    return Fp(reduce(a.value_, p) * reduce(b.value_, p), p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    Fp num = a, den = b;
    if (p) {
      num = Fp(a.value_, p);
      den = Fp(b.value_, p);
    }
    return num * den.inverse();
  }
  friend Fp operator-(const Fp& a) { return Fp(0) - a; }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    const auto p = common(a, b);
    return p ? reduce(a.value_, p) == reduce(b.value_, p) : a.value_ == b.value_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static Fp raw(std::int64_t v) {
    Fp r;
    r.value_ = v;
    return r;
  }
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    const auto m = static_cast<std::int64_t>(p);
    v %= m;
    return v < 0 ? v + m : v;
  }
  static std::uint32_t common(const Fp& a, const Fp& b) {
    if (!a.modulus_) return b.modulus_;
    if (b.modulus_ && b.modulus_ != a.modulus_)
      throw Error(ErrorKind::field, "arithmetic between different prime fields");
    return a.modulus_;
  }

  std::int64_t value_ = 0;
  std::uint32_t modulus_ = 0;
};

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(int k) : value_(k) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  /// Parses "n" or "n/d".
  static Rational parse(const std::string& text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw Error(ErrorKind::field, "division by zero");
    return Rational(a.value_ / b.value_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }

  Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
  Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
  Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

 private:
  boost::multiprecision::cpp_rational value_;
};

/// Per-scalar glue between a runtime Field and the compile-time scalar type.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Fp> {
  static bool accepts(const Field& f) { return f.is_prime(); }
  static Fp from_integer(const Field& f, long long k) { return Fp(k, f.characteristic()); }
  static std::string to_string(const Fp& x, const Field& f) {
    return std::to_string(x.residue(f.characteristic()));
  }
};

template <>
struct ScalarTraits<Rational> {
  static bool accepts(const Field& f) { return f.is_rationals(); }
  static Rational from_integer(const Field&, long long k) {
    return Rational(Rational::Integer(k), Rational::Integer(1));
  }
  static std::string to_string(const Rational& x, const Field&) { return x.to_string(); }
};

template <class S>
bool is_zero(const S& x) {
  return x == S(0);
}

template <class S>
S make_scalar(const Field& f, long long k) {
  return ScalarTraits<S>::from_integer(f, k);
}

}  // namespace leibalg

namespace Eigen {

template <>
struct NumTraits<leibalg::Fp> : GenericNumTraits<leibalg::Fp> {
  using Real = leibalg::Fp;
  using NonInteger = leibalg::Fp;
  using Literal = leibalg::Fp;
  using Nested = leibalg::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<leibalg::Rational> : GenericNumTraits<leibalg::Rational> {
  using Real = leibalg::Rational;
  using NonInteger = leibalg::Rational;
  using Literal = leibalg::Rational;
  using Nested = leibalg::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LEIBALG_FIELD_HPP
