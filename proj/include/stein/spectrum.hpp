#pragma once

#include <span>
#include <string>
#include <vector>

#include "stein/radical.hpp"

namespace stein {

// A real function on a finite state set of the form W(x) = c_x * sqrt(k),
// one radicand shared by all states. Squares and even moments stay rational.
struct Statistic {
  BigInt radicand = 1;
  std::vector<Rational> coefficients;

  ScaledRoot value(std::size_t x) const { return ScaledRoot(coefficients[x], radicand); }
  Rational square(std::size_t x) const { return coefficients[x] * coefficients[x] * Rational(radicand); }
};

struct Atom {
  ScaledRoot value;
  Rational probability;
};

// Law of W: values strictly increasing, probabilities positive, total mass 1.
class SpectrumAtomList {
 public:
  // Merges equal values, drops zero masses, sorts. Rejects negative masses or
  // total mass other than 1.
  static SpectrumAtomList from_statistic(const Statistic& w, std::span<const Rational> pi);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const BigInt& radicand() const { return radicand_; }

  // E(W) is (sum p c) sqrt(k); this returns the rational factor.
  Rational mean_coefficient() const;
  Rational second_moment() const;

  friend bool operator==(const SpectrumAtomList& a, const SpectrumAtomList& b);

 private:
  BigInt radicand_ = 1;
  std::vector<Rational> coeffs_;  // parallel to atoms_
  std::vector<Atom> atoms_;
};

bool operator==(const Atom& a, const Atom& b);

}  // namespace stein
