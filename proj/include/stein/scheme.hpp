#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stein/matrix.hpp"
#include "stein/rational.hpp"

namespace stein {

using RelationMatrix = Matrix<int>;

// Symmetric association scheme. Class and idempotent 0 are the identity
// relation and the trivial idempotent; phi(s, i) is the eigenvalue of D_s on J_i.
struct AssociationScheme {
  int n_classes = 0;
  BigInt x_size;
  std::vector<BigInt> valencies;
  std::vector<BigInt> multiplicities;
  Matrix<Rational> phi;

  // c_{ijk}: D_i D_j = sum_k c_{ijk} D_k.
  BigInt intersection_number(int i, int j, int k) const;

  std::vector<BigInt> intersection_table;  // empty for closed-form schemes
  std::optional<std::pair<int, int>> hamming;  // (d, q)

  Rational plancherel(int i) const { return Rational(multiplicities[static_cast<std::size_t>(i)], x_size); }
};

AssociationScheme scheme_from_relations(const std::vector<RelationMatrix>& relations);
AssociationScheme hamming_scheme(int d, int q);

// Explicit relations on {0..q-1}^d by Hamming distance; q^d points.
std::vector<RelationMatrix> hamming_relations(int d, int q);

// p_m(r) from the spectral sum over idempotents.
std::vector<Rational> scheme_walk_probabilities(const AssociationScheme& scheme, int s, int m);

// The same numbers by m steps of D_s / v_s from point 0.
std::vector<Rational> scheme_walk_bruteforce(const std::vector<RelationMatrix>& relations, int s, int m);

}  // namespace stein
