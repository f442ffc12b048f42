#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/chain.hpp"
#include "stein/gelfand.hpp"
#include "stein/partition.hpp"
#include "stein/radical.hpp"
#include "stein/scheme.hpp"

namespace stein {

struct ExchangeableStats {
  Rational a;
  Rational second_moment;  // E(W'-W)^2
  Rational cond_var;       // Var(E[(W'-W)^2 | x])
  Rational fourth_moment;  // E(W'-W)^4
  std::optional<ScaledRoot> max_step;          // A; nullopt when not tracked
  std::optional<ScaledRoot> third_abs_moment;  // direct path only, diagnostic

  bool same_moments(const ExchangeableStats& o) const {
    return a == o.a && second_moment == o.second_moment && cond_var == o.cond_var &&
           fourth_moment == o.fourth_moment;
  }
};

// Exact sums over (x, x') weighted pi(x) K(x, x'). Throws StructureError
// unless the audit finds E(W'|W) = (1-a)W with a != 0.
ExchangeableStats stats_direct(const ChainKernel& kernel, const Statistic& w);
// E(W'-W)^k for even k, directly.
Rational direct_moment(const ChainKernel& kernel, const Statistic& w, int k);

// The four closed-form families share one shape. With scale S, class
// weights h_r, ratios rho_r = (eigenvalue of the chain on class r) and p_m
// the walk coefficients of the generator u:
//   Var  = S^2 sum_{r != id} h_r p_2(r)^2 (rho_r + 1 - 2 rho_u)^2
//   E4   = S^2 sum_r (8a - 6(1 - rho_r)) h_r p_2(r)^2
//   E^k  = S^{k/2} sum_m (-1)^{k-m} C(k,m) sum_r rho_r h_r p_m(r) p_{k-m}(r)
struct ClassSumFamily {
  Rational scale;
  std::vector<Rational> weight;
  std::vector<Rational> ratio;
  std::size_t generator = 0;
  std::size_t identity = 0;
  std::vector<std::vector<Rational>> walk;  // walk[m] = p_m, m = 0..kMaxMoment

  static constexpr int kMaxMoment = 6;

  Rational a() const { return Rational(1) - ratio[generator]; }
  Rational full_variance_sum() const;  // includes r = id
  Rational identity_term() const;      // the r = id summand, equal to 4a^2
  Rational cond_var() const { return full_variance_sum() - identity_term(); }
  Rational fourth_moment() const;
  Rational moment(int k) const;        // k <= kMaxMoment
  ExchangeableStats stats() const;
};

ClassSumFamily group_family(int n, const Partition& c, const Partition& tau);
ClassSumFamily gelfand_family(const GelfandPairData& pair, std::size_t u, std::size_t t);
ClassSumFamily twisted_family(int n, const Partition& mu, const Partition& tau);  // the J_tau pair
ClassSumFamily scheme_family(const AssociationScheme& scheme, int s, int t);

// (W, W') from the down-up chain, from the J_{(n-1,1)} statistics.
ExchangeableStats project_twisted(const ExchangeableStats& j_stats, int n, const Partition& mu);

enum class BoundVariant { steinbound, rinrot, main1, main2, asmains, limgroup, hypbound1, hypbound2, CLTgel, projerror, hamming };

std::string to_string(BoundVariant v);
BoundVariant parse_variant(const std::string& s);
bool is_rinrot_form(BoundVariant v);

struct BoundReport {
  BoundVariant variant = BoundVariant::steinbound;
  ExchangeableStats stats;
  std::vector<RadicalTerm> terms;
  double total = 0;
  // A displayed closed form for the same bound, when the variant has one.
  std::vector<RadicalTerm> closed_form;
  std::optional<double> closed_form_total;

  static constexpr double kTolerance = 1e-12;
};

// Term-by-term assembly; rejects a <= 0 or a > 1, and rinrot forms without A.
BoundReport assemble_bound(BoundVariant variant, const ExchangeableStats& stats);
void attach_closed_form(BoundReport& report, std::vector<RadicalTerm> terms);

}  // namespace stein
