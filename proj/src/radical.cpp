#include "stein/radical.hpp"

#include <cmath>

#include "stein/error.hpp"

namespace stein {

namespace {
// pi to 30 significant digits; it enters only at float evaluation.
constexpr long double kPi = 3.14159265358979323846264338328L;
}  // namespace

BigInt pull_square_factors(BigInt& k) {
  BigInt s = 1;
  if (k <= 1) return s;
  if (mpz_perfect_square_p(k.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), k.get_mpz_t());
    k = 1;
    return s;
  }
  for (unsigned long p = 2; p < 100000; ++p) {
    BigInt pp = static_cast<unsigned long>(p * p);
    if (pp > k) break;
    while (mpz_divisible_ui_p(k.get_mpz_t(), p * p)) {
      k /= pp;
      s *= static_cast<unsigned long>(p);
    }
  }
  if (k > 1 && mpz_perfect_square_p(k.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), k.get_mpz_t());
    s *= r;
    k = 1;
  }
  return s;
}

ScaledRoot::ScaledRoot(Rational coefficient, BigInt radicand)
    : coeff_(std::move(coefficient)), radicand_(std::move(radicand)) {
  if (radicand_ <= 0) throw ValidationError("ScaledRoot radicand must be positive");
  BigInt s = pull_square_factors(radicand_);
  coeff_ *= Rational(s);
  if (coeff_.is_zero()) radicand_ = 1;
}

ScaledRoot ScaledRoot::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw ValidationError("square root of a negative rational");
  if (r.is_zero()) return ScaledRoot(0);
  return ScaledRoot(Rational(1, r.den()), r.num() * r.den());
}

double ScaledRoot::to_double() const { return static_cast<double>(to_long_double()); }

long double ScaledRoot::to_long_double() const {
  return coeff_.to_long_double() * std::sqrt(Rational(radicand_).to_long_double());
}

std::string ScaledRoot::str() const {
  if (radicand_ == 1) return coeff_.str();
  return coeff_.str() + "*sqrt(" + radicand_.get_str() + ")";
}

bool operator==(const ScaledRoot& a, const ScaledRoot& b) {
  return a.sign() == b.sign() && a.square() == b.square();
}

std::strong_ordering operator<=>(const ScaledRoot& a, const ScaledRoot& b) {
  if (a.sign() != b.sign()) return a.sign() <=> b.sign();
  auto c = a.square() <=> b.square();
  return a.sign() >= 0 ? c : 0 <=> c;
}

long double RadicalTerm::value_long() const {
  if (root <= 0) throw ValidationError("radical degree must be positive");
  long double r = radicand.to_long_double();
  long double base = root == 1 ? r : (root == 2 ? std::sqrt(r) : std::pow(r, 1.0L / root));
  return coefficient.to_long_double() * base * std::pow(kPi, pi_power.to_long_double());
}

double RadicalTerm::value() const { return static_cast<double>(value_long()); }

std::string RadicalTerm::str() const {
  std::string s = coefficient.str() + "*(" + radicand.str() + ")^(1/" + std::to_string(root) + ")";
  if (!pi_power.is_zero()) s += "*pi^(" + pi_power.str() + ")";
  return s;
}

}  // namespace stein
