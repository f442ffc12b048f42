#pragma once

#include <map>
#include <string>
#include <vector>

#include "stein/matrix.hpp"
#include "stein/partition.hpp"

namespace stein {

// Spherical functions omega_i and double cosets K_r share one index set.
struct GelfandPairData {
  std::string name;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Partition> partitions;  // matchings only: label i <-> partitions[i]
  std::size_t identity_coset = 0;     // K_0 = K
  std::size_t trivial_spherical = 0;  // omega_0 = 1
  std::vector<BigInt> dims;           // d_i
  std::vector<Rational> coset_ratio;  // |K_r|/|K|
  BigInt index;                       // |G|/|K|
  Matrix<Rational> omega;             // omega(i, r) = omega_i(g_r)

  std::size_t size() const { return labels.size(); }
  Rational plancherel(std::size_t i) const { return Rational(dims[i], index); }
  std::size_t label_index(const std::string& label) const;
};

GelfandPairData hypercube_pair(int n);

constexpr int kMatchingsEnumerationBound = 6;
GelfandPairData matchings_pair(int n, int max_n = kMatchingsEnumerationBound);

// 2^n n! / (2^{l(mu)} prod_j m_j! j^{m_j}).
BigInt matchings_coset_ratio(const Partition& mu);

// p_2(K_mu) for the walk generated by K_{(i,1^{n-i})}, counting pairs of
// matchings. The work is N^2 with N = |K_u|/|K|.
constexpr long long kMatchingPairBound = 4'000'000;
std::map<Partition, Rational> matchings_p2_combinatorial(int n, int i,
                                                         long long max_pairs = kMatchingPairBound);

}  // namespace stein
