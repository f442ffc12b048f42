#pragma once

#include <functional>
#include <map>
#include <vector>

#include "stein/partition.hpp"

namespace stein {

using Permutation = std::vector<int>;  // 0-based images
using Matching = std::vector<int>;     // partner[x], an involution without fixed points on 2n points

Partition cycle_type(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);

// w_(k) = (1,2,...,2k) on a block of 2k points; w_nu concatenates the blocks.
Permutation coset_representative(const Partition& nu);

// Calls f on every element of B_n, the centralizer of (1,2)(3,4)...(2n-1,2n)
// in S_2n: permute the n blocks, optionally swap inside each block.
void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& f);

Matching base_matching(int n);  // {1,2},{3,4},...
Matching image(const Permutation& w, const Matching& m);

// Lambda(a, b): half the cycle lengths of the graph a union b.
Partition matching_distance(const Matching& a, const Matching& b);

std::vector<Matching> all_matchings(int n);

// Every delta with Lambda(base, delta) = (i, 1^{n-i}).
std::vector<Matching> hook_neighbours(const Matching& base, int i);

}  // namespace stein
