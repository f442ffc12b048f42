#include "stein/normal.hpp"

#include <algorithm>
#include <cmath>

#include "stein/error.hpp"

namespace stein {

double normal_cdf(double x) {
  if (!std::isfinite(x)) throw ValidationError("normal_cdf needs a finite argument");
  // erfc keeps full relative accuracy in the lower tail, where 1 + erf would cancel.
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double kolmogorov_distance(const SpectrumAtomList& dist) {
  if (dist.size() == 0) throw ValidationError("kolmogorov_distance needs a non-empty atom list");
  Rational cum = 0;
  double best = 0;
  for (const auto& atom : dist.atoms()) {
    double phi = normal_cdf(atom.value.to_double());
    double left = cum.to_double();
    cum += atom.probability;
    double right = cum.to_double();
    best = std::max({best, std::abs(left - phi), std::abs(right - phi)});
  }
  return best;
}

}  // namespace stein
