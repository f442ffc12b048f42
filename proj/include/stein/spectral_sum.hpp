#pragma once

#include <vector>

#include "stein/matrix.hpp"
#include "stein/rational.hpp"

namespace stein {

// The common shape of every walk-coefficient formula:
//   p_m(r) = norm[r] * sum_i weight[i] * eigen[i]^m * basis(i, r).
struct SpectralData {
  std::vector<Rational> weight;
  std::vector<Rational> eigen;
  Matrix<Rational> basis;     // rows: spectral index i, cols: class r
  std::vector<Rational> norm;
};

std::vector<Rational> spectral_sum(const SpectralData& data, int m);

}  // namespace stein
