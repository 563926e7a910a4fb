#pragma once

#include <utility>

#include "quiverdt/coeff_fraction.hpp"

namespace quiverdt {

// CoeffFraction with an extra positive integer denominator. Used only as
// intermediate storage inside plethystic Exp/Log where 1/n terms appear;
// results are converted back with to_fraction(), which insists the integer
// denominator has cleared.
class RationalCoeff {
public:
  RationalCoeff() : den_(1) {}
  explicit RationalCoeff(CoeffFraction value) : value_(std::move(value)), den_(1) {}
  explicit RationalCoeff(long long c) : value_(BigInt(c)), den_(1) {}
  RationalCoeff(CoeffFraction value, BigInt den) : value_(std::move(value)), den_(std::move(den)) {
    if (den_ <= 0) throw std::invalid_argument("integer denominator must be positive");
    normalize();
  }

  static RationalCoeff one() { return RationalCoeff(CoeffFraction::one()); }
  static RationalCoeff zero() { return RationalCoeff(); }

  const CoeffFraction& value() const { return value_; }
  const BigInt& integer_denominator() const { return den_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integral() const { return den_ == 1; }

  // Conversion back to the localized ring; throws when a 1/n term survived.
  CoeffFraction to_fraction() const {
    if (den_ != 1)
      throw NonIntegralResult("plethystic intermediate kept integer denominator " + den_.str());
    return value_;
  }

  friend RationalCoeff operator+(const RationalCoeff& a, const RationalCoeff& b) {
    const BigInt g = big_gcd(a.den_, b.den_);
    const BigInt fa = b.den_ / g;
    const BigInt fb = a.den_ / g;
    return RationalCoeff(a.value_.scaled(fa) + b.value_.scaled(fb), a.den_ * fa);
  }
  friend RationalCoeff operator-(const RationalCoeff& a, const RationalCoeff& b) {
    return a + b.scaled_rational(BigInt(-1), BigInt(1));
  }
  friend RationalCoeff operator*(const RationalCoeff& a, const RationalCoeff& b) {
    return RationalCoeff(a.value_ * b.value_, a.den_ * b.den_);
  }
  RationalCoeff& operator+=(const RationalCoeff& b) { return *this = *this + b; }
  RationalCoeff& operator*=(const RationalCoeff& b) { return *this = *this * b; }

  // Multiply by the exact rational p/q, q > 0.
  RationalCoeff scaled_rational(const BigInt& p, const BigInt& q) const {
    return RationalCoeff(value_.scaled(p), den_ * q);
  }

  RationalCoeff adams(long long n) const {
    // Adams operations fix rational constants, so the denominator is kept.
    return RationalCoeff(value_.adams(n), den_);
  }

  friend bool operator==(const RationalCoeff& a, const RationalCoeff& b) {
    return a.value_.scaled(b.den_) == b.value_.scaled(a.den_);
  }
  friend bool operator!=(const RationalCoeff& a, const RationalCoeff& b) { return !(a == b); }

private:
  void normalize() {
    if (value_.is_zero()) {
      den_ = 1;
      return;
    }
    const BigInt g = big_gcd(value_.numerator().content(), den_);
    if (g > 1) {
      value_ = CoeffFraction(value_.numerator().divided_by_content(g), value_.denominator());
      den_ /= g;
    }
  }

  CoeffFraction value_;
  BigInt den_;
};

}  // namespace quiverdt
