#pragma once

#include <compare>
#include <string>

#include "stein/rational.hpp"

namespace stein {

// coefficient * sqrt(radicand), radicand a positive integer with the small
// square factors pulled into the coefficient.
class ScaledRoot {
 public:
  ScaledRoot() = default;
  ScaledRoot(Rational coefficient, BigInt radicand = 1);
  // sqrt of a nonnegative rational, written as (1/q) sqrt(p q).
  static ScaledRoot sqrt_of(const Rational& r);

  const Rational& coefficient() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }
  int sign() const { return coeff_.sign(); }
  Rational square() const { return coeff_ * coeff_ * Rational(radicand_); }
  double to_double() const;
  long double to_long_double() const;
  ScaledRoot abs() const { return ScaledRoot(coeff_.abs(), radicand_); }

  // "p/q*sqrt(k)", or "p/q" when k = 1.
  std::string str() const;

  friend bool operator==(const ScaledRoot& a, const ScaledRoot& b);
  friend std::strong_ordering operator<=>(const ScaledRoot& a, const ScaledRoot& b);

 private:
  Rational coeff_;
  BigInt radicand_ = 1;
};

// coefficient * radicand^(1/root) * pi^pi_power. Every Stein bound term has
// this shape.
struct RadicalTerm {
  Rational coefficient = 1;
  Rational radicand = 0;
  int root = 1;
  Rational pi_power = 0;

  double value() const;
  long double value_long() const;
  std::string str() const;
};

BigInt pull_square_factors(BigInt& k);  // returns s with old k = s^2 * new k

}  // namespace stein
