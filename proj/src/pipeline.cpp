#include "stein/pipeline.hpp"

#include <cmath>
#include <algorithm>
#include <future>
#include <thread>

#include "stein/error.hpp"
#include "stein/normal.hpp"
#include "stein/spin.hpp"

namespace stein {

namespace {

PipelineResult finish(BoundReport bound, const StatisticOnMeasure& stat) {
  PipelineResult r{std::move(bound), w_distribution(stat), 0, false};
  r.kolmogorov = kolmogorov_distance(r.distribution);
  r.dominated = r.kolmogorov <= r.bound.total + BoundReport::kTolerance;
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

PipelineResult symmetric_pipeline(int n, const Partition& c, const Partition& tau, BoundVariant v) {
  auto stat = kerov_statistic(n, c);
  ExchangeableStats st;
  if (v == BoundVariant::main1 || v == BoundVariant::limgroup) {
    st = group_family(n, c, tau).stats();
  } else {
    require(v == BoundVariant::steinbound || v == BoundVariant::rinrot, "variant " + to_string(v) + " does not apply to symmetric");
    st = stats_direct(group_chain(n, tau), stat.w);
  }
  return finish(assemble_bound(v, st), stat);
}

PipelineResult limgroup_pipeline(int n, int i) {
  require(n >= 2 && i >= 2 && i <= n, "limgroup needs 2 <= i <= n");
  return symmetric_pipeline(n, Partition::hook_class(n, i), Partition({n - 1, 1}), BoundVariant::limgroup);
}

PipelineResult gelfand_pipeline(const GelfandPairData& g, std::size_t u, std::size_t t, BoundVariant v) {
  auto stat = spherical_statistic(g, u);
  ExchangeableStats st;
  switch (v) {
    case BoundVariant::main2:
    case BoundVariant::hypbound1:
    case BoundVariant::CLTgel:
      st = gelfand_family(g, u, t).stats();
      break;
    case BoundVariant::steinbound:
    case BoundVariant::rinrot:
    case BoundVariant::hypbound2:
      st = stats_direct(gelfand_chain(g, t), stat.w);
      break;
    default:
      throw ValidationError("variant " + to_string(v) + " does not apply to a Gelfand pair");
  }
  return finish(assemble_bound(v, st), stat);
}

PipelineResult hypercube_pipeline(int n, BoundVariant v) {
  require(n >= 2, "hypercube bounds need n >= 2 (a = 1 - omega_1(g_1) must be positive)");
  auto g = hypercube_pair(n);
  auto r = gelfand_pipeline(g, 1, 1, v);
  if (v == BoundVariant::hypbound1) attach_closed_form(r.bound, {{1, Rational(8, n), 4, Rational(-1, 4)}});
  if (v == BoundVariant::hypbound2) attach_closed_form(r.bound, {{5, Rational(1, n), 2, 0}});
  return r;
}

PipelineResult cltgel_pipeline(int n, int i) {
  require(n >= 2 && i >= 2 && i <= n, "CLTgel needs 2 <= i <= n");
  auto g = matchings_pair(n);
  return gelfand_pipeline(g, g.label_index(Partition::hook_class(n, i).str()), g.label_index(Partition({n - 1, 1}).str()),
                          BoundVariant::CLTgel);
}

PipelineResult spin_pipeline(int n, const Partition& mu, BoundVariant v) {
  require(n >= 3, "spin pipeline needs n >= 3");
  auto stat = spin_statistic(n, mu);
  ExchangeableStats st;
  if (v == BoundVariant::projerror) {
    st = project_twisted(twisted_family(n, mu, Partition({n - 1, 1})).stats(), n, mu);
  } else {
    require(v == BoundVariant::steinbound || v == BoundVariant::rinrot, "variant " + to_string(v) + " does not apply to spin");
    st = stats_direct(schur_down_up_chain(n), stat.w);
  }
  return finish(assemble_bound(v, st), stat);
}

PipelineResult projerror_pipeline(int n, int i) {
  require(i >= 1 && 2 * i + 1 <= n, "projerror needs 2i+1 <= n");
  return spin_pipeline(n, Partition::hook_class(n, 2 * i + 1), BoundVariant::projerror);
}

PipelineResult scheme_pipeline(const AssociationScheme& sc, int s, int t, BoundVariant v) {
  auto stat = scheme_statistic(sc, s);
  ExchangeableStats st;
  if (v == BoundVariant::asmains || v == BoundVariant::hamming) {
    st = scheme_family(sc, s, t).stats();
  } else {
    require(v == BoundVariant::steinbound || v == BoundVariant::rinrot, "variant " + to_string(v) + " does not apply to a scheme");
    st = stats_direct(scheme_chain(sc, t), stat.w);
  }
  return finish(assemble_bound(v, st), stat);
}

PipelineResult hamming_pipeline(int d, int q, BoundVariant v) {
  auto sc = hamming_scheme(d, q);
  auto r = scheme_pipeline(sc, 1, 1, v);
  Rational qd((q - 1) * d);
  if (v == BoundVariant::hamming) {
    attach_closed_form(r.bound, {{1, Rational((q - 2) * (q - 2)) / qd, 2, 0},
                                 {1, Rational(2 * q * q) / qd, 4, Rational(-1, 4)}});
  } else if (v == BoundVariant::rinrot) {
    attach_closed_form(r.bound, {{1, Rational(q, d), 2, 0},
                                 {Rational(41 * q * q, 100) + Rational(3 * q, 2), Rational(1) / qd, 2, 0}});
  }
  return r;
}

std::vector<SweepRow> scaling_sweep(BoundVariant v, int param, int lo, int hi) {
  if (lo > hi) throw ValidationError("empty n range");
  switch (v) {
    case BoundVariant::limgroup:
    case BoundVariant::CLTgel:
    case BoundVariant::projerror:
    case BoundVariant::hypbound1:
    case BoundVariant::hypbound2:
    case BoundVariant::hamming: break;
    default: throw ValidationError("variant " + to_string(v) + " has no size parameter to sweep");
  }
  auto one = [v, param](int n) {
    PipelineResult r = [&] {
      switch (v) {
        case BoundVariant::limgroup: return limgroup_pipeline(n, param);
        case BoundVariant::CLTgel: return cltgel_pipeline(n, param);
        case BoundVariant::projerror: return projerror_pipeline(n, param);
        case BoundVariant::hamming: return hamming_pipeline(n, param, v);
        default: return hypercube_pipeline(n, v);
      }
    }();
    SweepRow row;
    row.n = n;
    row.term1 = r.bound.terms[0].value();
    for (std::size_t k = 1; k < r.bound.terms.size(); ++k) row.term2 += r.bound.terms[k].value();
    row.total = r.bound.total;
    row.total_scaled = r.bound.total * std::pow(static_cast<double>(n), 0.25);
    row.term1_scaled = row.term1 * std::sqrt(static_cast<double>(n));
    row.kolmogorov = r.kolmogorov;
    row.dominated = r.dominated;
    return row;
  };
  // one task per n, at most `width` in flight; rows collected in order here
  const int width = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<SweepRow> rows;
  for (int start = lo; start <= hi; start += width) {
    std::vector<std::future<SweepRow>> jobs;
    for (int n = start; n <= std::min(hi, start + width - 1); ++n) jobs.push_back(std::async(std::launch::async, one, n));
    for (auto& j : jobs) rows.push_back(j.get());
  }
  return rows;
}

}  // namespace stein
