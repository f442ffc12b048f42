#include "stein/gelfand.hpp"

#include "stein/error.hpp"
#include "stein/matchings.hpp"
#include "stein/symmetric_group.hpp"

namespace stein {

std::size_t GelfandPairData::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  if (!partitions.empty()) {
    Partition p = Partition::parse(label);
    for (std::size_t i = 0; i < partitions.size(); ++i)
      if (partitions[i] == p) return i;
  }
  throw ValidationError("no label '" + label + "' in " + name + " pair");
}

GelfandPairData hypercube_pair(int n) {
  if (n < 1) throw ValidationError("hypercube needs n >= 1");
  GelfandPairData g;
  g.name = "hypercube";
  g.n = n;
  g.index = pow2(static_cast<unsigned long>(n));
  g.omega = Matrix<Rational>(n + 1, n + 1);
  for (int r = 0; r <= n; ++r) {
    g.labels.push_back(std::to_string(r));
    g.dims.push_back(binomial(n, r));
    g.coset_ratio.emplace_back(binomial(n, r));
  }
  for (int i = 0; i <= n; ++i)
    for (int r = 0; r <= n; ++r) {
      BigInt s = 0;
      for (int m = 0; m <= i; ++m) {
        BigInt t = binomial(r, m) * binomial(n - r, i - m);
        s += (m % 2 ? -t : t);
      }
      g.omega(i, r) = Rational(s, binomial(n, i));
    }
  return g;
}

BigInt matchings_coset_ratio(const Partition& mu) {
  int n = mu.size();
  BigInt denom = pow2(static_cast<unsigned long>(mu.length()));
  for (int j = 1; j <= n; ++j) {
    int m = mu.multiplicity(j);
    if (m) denom *= factorial(m) * ipow(BigInt(j), m);
  }
  return pow2(static_cast<unsigned long>(n)) * factorial(n) / denom;
}

GelfandPairData matchings_pair(int n, int max_n) {
  if (n < 1) throw ValidationError("matchings pair needs n >= 1");
  if (n > max_n)
    throw ResourceError("matchings pair enumerates B_n; n = " + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_n));
  GelfandPairData g;
  g.name = "matchings";
  g.n = n;
  g.partitions = enumerate_partitions(n);
  std::size_t s = g.partitions.size();
  for (auto& p : g.partitions) {
    g.labels.push_back(p.str());
    g.coset_ratio.emplace_back(matchings_coset_ratio(p));
  }
  g.trivial_spherical = 0;       // (n)
  g.identity_coset = s - 1;      // (1^n)
  BigInt k_order = pow2(static_cast<unsigned long>(n)) * factorial(n);
  g.index = factorial(2 * n) / k_order;

  const auto& table = character_table(2 * n);
  std::vector<std::size_t> doubled;
  for (auto& lam : g.partitions) {
    std::vector<int> parts;
    for (int p : lam.parts()) parts.push_back(2 * p);
    doubled.push_back(table.index_of(Partition(parts)));
  }

  g.omega = Matrix<Rational>(s, s);
  for (std::size_t r = 0; r < s; ++r) {
    Permutation winv = inverse(coset_representative(g.partitions[r]));
    std::map<Partition, long long> buckets;
    for_each_hyperoctahedral(n, [&](const Permutation& k) { ++buckets[cycle_type(compose(winv, k))]; });
    for (std::size_t i = 0; i < s; ++i) {
      BigInt sum = 0;
      for (auto& [type, count] : buckets)
        sum += BigInt(static_cast<long>(count)) * BigInt(static_cast<long>(table.value(doubled[i], table.index_of(type))));
      g.omega(i, r) = Rational(sum, k_order);
    }
  }

  // d_i from (d_i/|G|) sum_r |K_r| omega_i(g_r)^2 = 1.
  for (std::size_t i = 0; i < s; ++i) {
    Rational norm = 0;
    for (std::size_t r = 0; r < s; ++r) norm += g.coset_ratio[r] * g.omega(i, r) * g.omega(i, r);
    Rational d = Rational(g.index) / norm;
    if (!d.is_integer()) throw std::logic_error("matchings: non-integral spherical dimension");
    g.dims.push_back(d.num());
  }
  return g;
}

std::map<Partition, Rational> matchings_p2_combinatorial(int n, int i, long long max_pairs) {
  if (i < 1 || i > n) throw ValidationError("matchings walk needs 1 <= i <= n");
  BigInt nu = matchings_coset_ratio(Partition::hook_class(n, i));
  if (BigInt(nu * nu) > big(max_pairs))
    throw ResourceError("matchings pair count " + BigInt(nu * nu).get_str() + " exceeds bound " +
                        std::to_string(max_pairs));
  Matching eps = base_matching(n);
  auto first = hook_neighbours(eps, i);
  std::map<Partition, long long> counts;
  for (auto& delta : first)
    for (auto& gamma : hook_neighbours(delta, i)) ++counts[matching_distance(eps, gamma)];
  std::map<Partition, Rational> out;
  for (auto& p : enumerate_partitions(n)) out[p] = 0;
  BigInt total = BigInt(static_cast<long>(first.size())) * BigInt(static_cast<long>(first.size()));
  for (auto& [p, c] : counts) out[p] = Rational(BigInt(static_cast<long>(c)), total);
  return out;
}

}  // namespace stein
