#pragma once

#include <string>
#include <vector>

#include "stein/gelfand.hpp"
#include "stein/partition.hpp"
#include "stein/scheme.hpp"
#include "stein/spectral_sum.hpp"
#include "stein/spin.hpp"

namespace stein {

struct WalkCoefficients {
  std::string structure;  // symmetric | gelfand | twisted | scheme
  std::string generator;
  int m = 0;
  std::vector<std::string> labels;
  std::vector<Rational> values;

  const Rational& at(const std::string& label) const;
};

// p_m(K) over classes of S_n (ordered as enumerate_partitions(n)).
WalkCoefficients group_walk(int n, const Partition& c, int m);
// m steps of the random walk on S_n by uniform elements of C, n <= 7.
WalkCoefficients group_walk_bruteforce(int n, const Partition& c, int m);

WalkCoefficients gelfand_walk(const GelfandPairData& pair, std::size_t u, int m);
// Walk on {0,1}^n flipping a uniform u-subset each step; class = Hamming weight.
WalkCoefficients hypercube_walk_bruteforce(int n, int u, int m);

WalkCoefficients twisted_walk(int n, const Partition& mu, int m);
WalkCoefficients scheme_walk(const AssociationScheme& scheme, int s, int m);

}  // namespace stein
