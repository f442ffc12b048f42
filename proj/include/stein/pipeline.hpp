#pragma once

#include <vector>

#include "stein/distributions.hpp"
#include "stein/stein.hpp"

namespace stein {

// A bound together with the exact law of W it should dominate.
struct PipelineResult {
  BoundReport bound;
  SpectrumAtomList distribution;
  double kolmogorov = 0;
  bool dominated = false;  // kolmogorov <= total + kTolerance
};

// Kerov statistic for C=(i,1^{n-i}) against L_{(n-1,1)}.
PipelineResult limgroup_pipeline(int n, int i);
// main1 with closed-form stats; steinbound/rinrot with direct stats on L_tau.
PipelineResult symmetric_pipeline(int n, const Partition& c, const Partition& tau, BoundVariant v);
// u = t = 1. hypbound1 | hypbound2 | main2 | steinbound | rinrot.
PipelineResult hypercube_pipeline(int n, BoundVariant v);
PipelineResult gelfand_pipeline(const GelfandPairData& pair, std::size_t u, std::size_t t, BoundVariant v);
// Matchings, u = (i,1^{n-i}), t = (n-1,1).
PipelineResult cltgel_pipeline(int n, int i);
// mu = (2i+1, 1^{n-2i-1}) on the down-up chain. projerror uses the J-stats
// scaled by (n-2)/n; steinbound/rinrot use direct sums on the chain.
PipelineResult spin_pipeline(int n, const Partition& mu, BoundVariant v);
PipelineResult projerror_pipeline(int n, int i);
// s = t = 1. hamming | asmains | steinbound | rinrot.
PipelineResult hamming_pipeline(int d, int q, BoundVariant v);
PipelineResult scheme_pipeline(const AssociationScheme& scheme, int s, int t, BoundVariant v);

struct SweepRow {
  int n = 0;
  double term1 = 0, term2 = 0, total = 0;
  double total_scaled = 0;  // total * n^{1/4}
  double term1_scaled = 0;  // term1 * n^{1/2}
  double kolmogorov = 0;
  bool dominated = false;
};

// Variants with a size parameter: limgroup (param i), CLTgel (i),
// projerror (i), hypbound1, hypbound2, hamming (param q, size d).
std::vector<SweepRow> scaling_sweep(BoundVariant v, int param, int lo, int hi);

}  // namespace stein
