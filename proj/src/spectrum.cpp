#include "stein/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "stein/error.hpp"

namespace stein {

SpectrumAtomList SpectrumAtomList::from_statistic(const Statistic& w, std::span<const Rational> pi) {
  if (w.coefficients.size() != pi.size())
    throw ValidationError("statistic and measure have different state counts");
  if (pi.empty()) throw ValidationError("empty state space");
  std::map<Rational, Rational> merged;
  Rational total = 0;
  for (std::size_t x = 0; x < pi.size(); ++x) {
    if (pi[x].sign() < 0) throw ValidationError("negative probability in atom list");
    total += pi[x];
    if (!pi[x].is_zero()) merged[w.coefficients[x]] += pi[x];
  }
  if (total != Rational(1)) throw ValidationError("atom masses do not sum to 1");
  SpectrumAtomList out;
  out.radicand_ = w.radicand;
  for (auto& [c, p] : merged) {  // radicand > 0, so coefficient order is value order
    out.coeffs_.push_back(c);
    out.atoms_.push_back({ScaledRoot(c, w.radicand), p});
  }
  return out;
}

Rational SpectrumAtomList::mean_coefficient() const {
  Rational s = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) s += coeffs_[i] * atoms_[i].probability;
  return s;
}

Rational SpectrumAtomList::second_moment() const {
  Rational s = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    s += coeffs_[i] * coeffs_[i] * atoms_[i].probability;
  return s * Rational(radicand_);
}

bool operator==(const Atom& a, const Atom& b) {
  return a.value == b.value && a.probability == b.probability;
}

bool operator==(const SpectrumAtomList& a, const SpectrumAtomList& b) { return a.atoms_ == b.atoms_; }

}  // namespace stein
