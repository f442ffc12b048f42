#pragma once

#include "stein/spectrum.hpp"

namespace stein {

// Phi(x) = erfc(-x/sqrt 2)/2. Rejects non-finite x.
double normal_cdf(double x);

// sup_x |F(x) - Phi(x)|, attained at an atom or its left limit.
double kolmogorov_distance(const SpectrumAtomList& dist);

}  // namespace stein
