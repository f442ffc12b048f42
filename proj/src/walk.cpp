#include "stein/walk.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "stein/error.hpp"
#include "stein/matchings.hpp"
#include "stein/symmetric_group.hpp"

namespace stein {

std::vector<Rational> spectral_sum(const SpectralData& d, int m) {
  if (m < 0) throw ValidationError("step count must be nonnegative");
  std::size_t s = d.weight.size(), c = d.norm.size();
  std::vector<Rational> w(s);
  for (std::size_t i = 0; i < s; ++i) w[i] = d.weight[i] * d.eigen[i].pow(m);
  std::vector<Rational> out(c);
  for (std::size_t r = 0; r < c; ++r) {
    Rational acc = 0;
    for (std::size_t i = 0; i < s; ++i)
      if (!w[i].is_zero()) acc += w[i] * d.basis(i, r);
    out[r] = d.norm[r] * acc;
  }
  return out;
}

const Rational& WalkCoefficients::at(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return values[i];
  throw ValidationError("no class '" + label + "' in walk coefficients");
}

namespace {

std::vector<std::string> partition_labels(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

WalkCoefficients group_walk(int n, const Partition& c, int m) {
  const auto& t = character_table(n);
  std::size_t ci = t.index_of(c);
  SpectralData d;
  d.basis = Matrix<Rational>(t.size(), t.size());
  for (std::size_t a = 0; a < t.size(); ++a) {
    BigInt dim = big(t.dimension(a));
    d.weight.emplace_back(dim * dim, t.group_order());
    d.eigen.push_back(t.ratio(a, ci));
    for (std::size_t k = 0; k < t.size(); ++k) d.basis(a, k) = t.ratio(a, k);
  }
  for (std::size_t k = 0; k < t.size(); ++k) d.norm.emplace_back(t.class_size(k));
  return {"symmetric", c.str(), m, partition_labels(t.partitions()), spectral_sum(d, m)};
}

WalkCoefficients group_walk_bruteforce(int n, const Partition& c, int m) {
  if (n > 7) throw ResourceError("brute-force group walk limited to n <= 7");
  if (c.size() != n) throw ValidationError("class size mismatch");
  std::vector<Permutation> elems;
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Permutation, std::size_t> index;
  for (std::size_t e = 0; e < elems.size(); ++e) index[elems[e]] = e;
  std::vector<Permutation> gens;
  for (auto& e : elems)
    if (cycle_type(e) == c) gens.push_back(e);

  std::vector<Rational> dist(elems.size(), Rational(0));
  dist[0] = 1;  // identity is the first permutation in lexicographic order
  Rational share(1, static_cast<long>(gens.size()));
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> next(elems.size(), Rational(0));
    for (std::size_t e = 0; e < elems.size(); ++e) {
      if (dist[e].is_zero()) continue;
      Rational mass = dist[e] * share;
      for (auto& g : gens) next[index[compose(elems[e], g)]] += mass;
    }
    dist = std::move(next);
  }
  auto classes = enumerate_partitions(n);
  auto cidx = index_partitions(classes);
  std::vector<Rational> values(classes.size(), Rational(0));
  for (std::size_t e = 0; e < elems.size(); ++e) values[cidx.at(cycle_type(elems[e]))] += dist[e];
  return {"symmetric", c.str(), m, partition_labels(classes), values};
}

WalkCoefficients gelfand_walk(const GelfandPairData& g, std::size_t u, int m) {
  if (u >= g.size()) throw ValidationError("generator label out of range");
  SpectralData d;
  d.basis = Matrix<Rational>(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    d.weight.push_back(g.plancherel(i));
    d.eigen.push_back(g.omega(i, u));
    for (std::size_t r = 0; r < g.size(); ++r) d.basis(i, r) = g.omega(i, r);
  }
  d.norm = g.coset_ratio;
  return {"gelfand", g.labels[u], m, g.labels, spectral_sum(d, m)};
}

WalkCoefficients hypercube_walk_bruteforce(int n, int u, int m) {
  if (n > 16) throw ResourceError("brute-force hypercube walk limited to n <= 16");
  if (u < 0 || u > n) throw ValidationError("generator weight out of range");
  std::vector<unsigned> flips;
  for (unsigned s = 0; s < (1U << n); ++s)
    if (std::popcount(s) == u) flips.push_back(s);
  std::vector<Rational> dist(1U << n, Rational(0));
  dist[0] = 1;
  Rational share(1, static_cast<long>(flips.size()));
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> next(dist.size(), Rational(0));
    for (unsigned x = 0; x < dist.size(); ++x) {
      if (dist[x].is_zero()) continue;
      Rational mass = dist[x] * share;
      for (unsigned f : flips) next[x ^ f] += mass;
    }
    dist = std::move(next);
  }
  WalkCoefficients w{"gelfand", std::to_string(u), m, {}, std::vector<Rational>(static_cast<std::size_t>(n + 1), Rational(0))};
  for (int r = 0; r <= n; ++r) w.labels.push_back(std::to_string(r));
  for (unsigned x = 0; x < dist.size(); ++x) w.values[static_cast<std::size_t>(std::popcount(x))] += dist[x];
  return w;
}

WalkCoefficients twisted_walk(int n, const Partition& mu, int m) {
  const auto& t = spin_character_table(n);
  return {"twisted", mu.str(), m, partition_labels(t.odd()), twisted_walk_coefficients(t, mu, m)};
}

WalkCoefficients scheme_walk(const AssociationScheme& sc, int s, int m) {
  WalkCoefficients w{"scheme", std::to_string(s), m, {}, scheme_walk_probabilities(sc, s, m)};
  for (int r = 0; r <= sc.n_classes; ++r) w.labels.push_back(std::to_string(r));
  return w;
}

}  // namespace stein
