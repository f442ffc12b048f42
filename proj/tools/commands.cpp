#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "stein/chain.hpp"
#include "stein/distributions.hpp"
#include "stein/error.hpp"
#include "stein/gelfand.hpp"
#include "stein/pipeline.hpp"
#include "stein/serialize.hpp"
#include "stein/spin.hpp"
#include "stein/verify.hpp"
#include "stein/walk.hpp"

namespace steinchar {

using namespace stein;

namespace {

const char* kStructures[] = {"symmetric", "hypercube", "matchings", "spin", "hamming", "scheme-file"};

void fail(const std::string& msg) { throw ValidationError(msg); }

int need(const std::optional<int>& v, const char* flag, const RunConfig& cfg) {
  if (!v) fail("missing required parameter " + std::string(flag) + " for structure " + cfg.structure);
  return *v;
}

void check_structure(const RunConfig& cfg) {
  if (cfg.structure.empty()) fail("missing required parameter --structure");
  for (auto* s : kStructures)
    if (cfg.structure == s) return;
  fail("unknown structure '" + cfg.structure + "'");
}

void check_format(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv") fail("--format must be json or csv");
}

Partition partition_of(const std::string& text, int n, const char* flag) {
  Partition p = Partition::parse(text);
  if (p.size() != n) fail(std::string(flag) + " " + p.str() + " is not a partition of n = " + std::to_string(n));
  return p;
}

// Everything a command needs about the chosen structure, resolved and
// validated before any heavy computation.
struct Resolved {
  int n = 0;
  Partition cls;         // symmetric class C, matchings coset u, spin mu
  Partition tau;         // chain parameter on S_n / matchings / spin J
  bool tau_given = false;
  int u = 1, t = 1, s = 1;
  std::optional<GelfandPairData> pair;
  std::optional<AssociationScheme> scheme;
};

AssociationScheme load_scheme(const RunConfig& cfg) {
  if (!cfg.file) fail("missing required parameter --file for structure scheme-file");
  std::ifstream in(*cfg.file);
  if (!in) fail("cannot read scheme file '" + *cfg.file + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(std::string("scheme file is not valid JSON: ") + e.what());
  }
  return scheme_from_relations(parse_relations(j));
}

Resolved resolve(const RunConfig& cfg, bool needs_generator) {
  check_structure(cfg);
  check_format(cfg);
  Resolved r;
  const std::string& st = cfg.structure;
  if (st == "hamming" || st == "scheme-file") {
    if (st == "hamming") {
      int d = need(cfg.d, "--d", cfg), q = need(cfg.q, "--q", cfg);
      if (d < 1 || q < 2) fail("hamming needs d >= 1 and q >= 2");
      r.scheme = hamming_scheme(d, q);
    } else {
      r.scheme = load_scheme(cfg);
    }
    r.s = cfg.s.value_or(1);
    r.t = cfg.t.value_or(1);
    int nc = r.scheme->n_classes;
    if (r.s < 0 || r.s > nc) fail("--s must lie in 0.." + std::to_string(nc));
    if (r.t < 1 || r.t > nc) fail("--t must lie in 1.." + std::to_string(nc));
    return r;
  }
  r.n = need(cfg.n, "--n", cfg);
  if (r.n < 1) fail("--n must be positive");
  int n = r.n;
  if (st == "hypercube") {
    r.u = cfg.u.value_or(1);
    r.t = cfg.t.value_or(1);
    if (r.u < 0 || r.u > n) fail("--u must lie in 0..n");
    if (r.t < 0 || r.t > n) fail("--t must lie in 0..n");
    r.pair = hypercube_pair(n);
    return r;
  }
  if (cfg.tau) {
    r.tau = partition_of(*cfg.tau, n, "--tau");
    r.tau_given = true;
  } else if (n >= 2) {
    r.tau = Partition({n - 1, 1});
  }
  if (st == "spin") {
    if (cfg.mu) {
      r.cls = partition_of(*cfg.mu, n, "--mu");
    } else if (cfg.i) {
      if (*cfg.i < 1 || 2 * *cfg.i + 1 > n) fail("--i for spin needs 1 <= i and 2i+1 <= n");
      r.cls = Partition::hook_class(n, 2 * *cfg.i + 1);
    } else if (needs_generator) {
      fail("missing required parameter --mu (or --i) for structure spin");
    }
    if (needs_generator && !r.cls.is_odd()) fail("--mu must have odd parts");
    if (r.tau_given && !r.tau.is_strict()) fail("--tau must be strict for spin");
    return r;
  }
  // symmetric and matchings take a class / coset type
  if (cfg.mu) {
    r.cls = partition_of(*cfg.mu, n, "--mu");
  } else if (cfg.i) {
    if (*cfg.i < 1 || *cfg.i > n) fail("--i must lie in 1..n");
    r.cls = Partition::hook_class(n, *cfg.i);
  } else if (needs_generator) {
    fail("missing required parameter --i (or --mu) for structure " + st);
  }
  if (st == "matchings") r.pair = matchings_pair(n);
  return r;
}

StatisticOnMeasure statistic(const RunConfig& cfg, const Resolved& r) {
  const std::string& st = cfg.structure;
  if (st == "symmetric") return kerov_statistic(r.n, r.cls);
  if (st == "hypercube") return spherical_statistic(*r.pair, static_cast<std::size_t>(r.u));
  if (st == "matchings") return spherical_statistic(*r.pair, r.pair->label_index(r.cls.str()));
  if (st == "spin") return spin_statistic(r.n, r.cls);
  return scheme_statistic(*r.scheme, r.s);
}

template <class T>
void emit(const RunConfig& cfg, std::ostream& os, const T& value) {
  os << (cfg.format == "csv" ? to_csv(value) : dump(to_json(value)));
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  Resolved r = resolve(cfg, true);
  emit(cfg, os, w_distribution(statistic(cfg, r)));
  return 0;
}

int cmd_walk(const RunConfig& cfg, std::ostream& os) {
  Resolved r = resolve(cfg, true);
  if (!cfg.m) fail("missing required parameter --m");
  int m = *cfg.m;
  if (m < 0) fail("--m must be nonnegative");
  const std::string& st = cfg.structure;
  WalkCoefficients w;
  if (cfg.bruteforce) {
    // the enumeration oracles, for auditing the spectral sums
    if (st == "symmetric") w = group_walk_bruteforce(r.n, r.cls, m);
    else if (st == "hypercube") w = hypercube_walk_bruteforce(r.n, r.u, m);
    else if (st == "hamming") {
      w = scheme_walk(*r.scheme, r.s, m);
      w.values = scheme_walk_bruteforce(hamming_relations(*cfg.d, *cfg.q), r.s, m);
    } else {
      fail("--bruteforce is available for symmetric, hypercube and hamming");
    }
    emit(cfg, os, w);
    return 0;
  }
  if (st == "symmetric") w = group_walk(r.n, r.cls, m);
  else if (st == "hypercube") w = gelfand_walk(*r.pair, static_cast<std::size_t>(r.u), m);
  else if (st == "matchings") w = gelfand_walk(*r.pair, r.pair->label_index(r.cls.str()), m);
  else if (st == "spin") w = twisted_walk(r.n, r.cls, m);
  else w = scheme_walk(*r.scheme, r.s, m);
  emit(cfg, os, w);
  return 0;
}

int cmd_audit(const RunConfig& cfg, std::ostream& os) {
  Resolved r = resolve(cfg, true);
  const std::string& st = cfg.structure;
  if ((st == "symmetric" || st == "matchings") && r.n < 2) fail("chains need n >= 2");
  ChainKernel k;
  if (st == "symmetric") k = group_chain(r.n, r.tau);
  else if (st == "hypercube") k = gelfand_chain(*r.pair, static_cast<std::size_t>(r.t));
  else if (st == "matchings") k = gelfand_chain(*r.pair, r.pair->label_index(r.tau.str()));
  else if (st == "spin") k = r.tau_given ? twisted_signed_kernel(r.n, r.tau) : schur_down_up_chain(r.n);
  else k = scheme_chain(*r.scheme, r.t);
  AuditReport a = audit(k, statistic(cfg, r).w);
  if (cfg.format == "csv") os << to_csv(a, k);
  else os << dump(to_json(a, k));
  return a.passed() ? 0 : 1;
}

int cmd_bound(const RunConfig& cfg, std::ostream& os) {
  Resolved r = resolve(cfg, true);
  const std::string& st = cfg.structure;
  BoundVariant v;
  if (cfg.variant) v = parse_variant(*cfg.variant);
  else if (st == "symmetric") v = BoundVariant::main1;
  else if (st == "hypercube") v = BoundVariant::hypbound1;
  else if (st == "matchings") v = BoundVariant::CLTgel;
  else if (st == "spin") v = BoundVariant::projerror;
  else if (st == "hamming") v = BoundVariant::hamming;
  else v = BoundVariant::asmains;

  PipelineResult res = [&] {
    if (st == "symmetric") return symmetric_pipeline(r.n, r.cls, r.tau, v);
    if (st == "hypercube") {
      if (r.u == 1 && r.t == 1) return hypercube_pipeline(r.n, v);
      return gelfand_pipeline(*r.pair, static_cast<std::size_t>(r.u), static_cast<std::size_t>(r.t), v);
    }
    if (st == "matchings")
      return gelfand_pipeline(*r.pair, r.pair->label_index(r.cls.str()), r.pair->label_index(r.tau.str()), v);
    if (st == "spin") return spin_pipeline(r.n, r.cls, v);
    if (st == "hamming" && r.s == 1 && r.t == 1) return hamming_pipeline(*cfg.d, *cfg.q, v);
    return scheme_pipeline(*r.scheme, r.s, r.t, v);
  }();
  emit(cfg, os, res);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& os) {
  check_format(cfg);
  if (!cfg.variant) fail("missing required parameter --variant");
  if (!cfg.n_range) fail("missing required parameter --n-range (lo:hi)");
  BoundVariant v = parse_variant(*cfg.variant);
  int lo = 0, hi = 0;
  {
    std::istringstream in(*cfg.n_range);
    char colon = 0;
    if (!(in >> lo >> colon >> hi) || colon != ':' || !in.eof()) fail("--n-range must look like lo:hi");
  }
  std::string expected;
  int param = 0;
  switch (v) {
    case BoundVariant::limgroup: expected = "symmetric"; break;
    case BoundVariant::CLTgel: expected = "matchings"; break;
    case BoundVariant::projerror: expected = "spin"; break;
    case BoundVariant::hypbound1:
    case BoundVariant::hypbound2: expected = "hypercube"; break;
    case BoundVariant::hamming: expected = "hamming"; break;
    default: fail("variant " + to_string(v) + " has no size parameter to sweep");
  }
  if (!cfg.structure.empty() && cfg.structure != expected)
    fail("variant " + to_string(v) + " sweeps structure " + expected + ", not " + cfg.structure);
  RunConfig named = cfg;
  named.structure = expected;
  if (expected == "hamming") param = need(cfg.q, "--q", named);
  else if (expected != "hypercube") param = need(cfg.i, "--i", named);
  emit(cfg, os, scaling_sweep(v, param, lo, hi));
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  check_format(cfg);
  bool known = cfg.suite == "all";
  for (auto& s : suite_names()) known = known || s == cfg.suite;
  if (!known) fail("unknown suite '" + cfg.suite + "'");
  VerifyOptions opts;
  if (!cfg.structure.empty()) {
    check_structure(cfg);
    opts.structure = cfg.structure;
    opts.n = cfg.n;
    opts.d = cfg.d;
    opts.q = cfg.q;
    if (cfg.structure == "scheme-file") opts.scheme = load_scheme(cfg);
  }
  auto checks = run_suite(cfg.suite, opts);
  emit(cfg, os, checks);
  for (auto& c : checks)
    if (!c.passed) return 1;
  return 0;
}

}  // namespace steinchar
