#pragma once

#include <string>
#include <vector>

#include "stein/gelfand.hpp"
#include "stein/partition.hpp"
#include "stein/scheme.hpp"
#include "stein/spectrum.hpp"

namespace stein {

// A statistic W on a structure's spectral states, with the stationary law.
struct StatisticOnMeasure {
  std::vector<std::string> states;
  std::vector<Rational> pi;
  Statistic w;
};

// sqrt(square) * coeffs as a single-radicand statistic.
Statistic scaled_statistic(const Rational& square, const std::vector<Rational>& coeffs);

// sqrt|C| chi^lambda(C)/dim lambda under Plancherel.
StatisticOnMeasure kerov_statistic(int n, const Partition& c);
// sqrt(|K_u|/|K|) omega_i(g_u) under d_i|K|/|G|.
StatisticOnMeasure spherical_statistic(const GelfandPairData& pair, std::size_t u);
// sqrt(n!/(z_mu 2^{n-l(mu)})) X^lambda_mu/g_lambda under shifted Plancherel.
StatisticOnMeasure spin_statistic(int n, const Partition& mu);
// phi_s(i)/sqrt(v_s) under mu_i/|X|.
StatisticOnMeasure scheme_statistic(const AssociationScheme& scheme, int s);

// Atom list of W; rejects W unless E(W) = 0 and E(W^2) = 1 exactly.
SpectrumAtomList w_distribution(const StatisticOnMeasure& stat);

}  // namespace stein
