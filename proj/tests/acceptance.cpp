// Acceptance run: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "stein/chain.hpp"
#include "stein/pipeline.hpp"
#include "stein/spin.hpp"
#include "stein/verify.hpp"
#include "stein/walk.hpp"

using namespace stein;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

// exact: c * sqrt(r)  ==  target_c * sqrt(target_r), both sides nonnegative
bool same_sqrt(const RadicalTerm& t, const Rational& target_c, const Rational& target_r) {
  return t.root == 2 && t.pi_power.is_zero() && t.coefficient.sign() >= 0 &&
         t.coefficient * t.coefficient * t.radicand == target_c * target_c * target_r;
}

Outcome exact_values(double limit, double& worst, std::string& slowest) {
  Outcome o;
  auto timed = [&](const char* what, const std::function<bool()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      o.note += std::string(what) + " threw " + e.what() + "; ";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > worst) {
      worst = s;
      slowest = what;
    }
    if (!ok) o.note += std::string(what) + " wrong; ";
    if (s >= limit) o.note += std::string(what) + " slow; ";
    o.ok = o.ok && ok && s < limit;
  };

  timed("J21", [] {
    auto j = twisted_signed_kernel(3, Partition({2, 1}));
    std::size_t s = spin_character_table(3).strict_index(Partition({2, 1}));
    return j.k(s, s) == Rational(-1);
  });
  for (int n = 2; n <= 100; ++n) {
    std::string tag = "hypbound1 n=" + std::to_string(n);
    timed(tag.c_str(), [n] {
      auto r = hypercube_pipeline(n, BoundVariant::hypbound1);
      const auto& t = r.bound.terms;
      if (t.size() != 2 || !t[0].radicand.is_zero()) return false;
      return t[1].coefficient == Rational(1) && t[1].radicand == Rational(8, n) && t[1].root == 4 && t[1].pi_power == Rational(-1, 4);
    });
    tag = "hypbound2 n=" + std::to_string(n);
    timed(tag.c_str(), [n] {
      auto r = hypercube_pipeline(n, BoundVariant::hypbound2);
      const auto& s = r.bound.stats;
      if (s.a != Rational(2, n) || !s.cond_var.is_zero() || !s.max_step || s.max_step->square() != Rational(4, n) || s.max_step->sign() <= 0)
        return false;
      return r.bound.total <= 5.0 / std::sqrt(static_cast<double>(n)) + BoundReport::kTolerance;
    });
  }
  for (int q = 2; q <= 5; ++q)
    for (int d = 2; d <= 40; ++d) {
      std::string tag = "hamming d=" + std::to_string(d) + " q=" + std::to_string(q);
      timed(tag.c_str(), [d, q] {
        Rational qd((q - 1) * d);
        auto sc = hamming_scheme(d, q);
        auto p2 = scheme_walk(sc, 1, 2);
        if (p2.values[0] != Rational(1) / qd || p2.values[1] != Rational(q - 2) / qd || p2.values[2] != Rational(1) - Rational(1, d))
          return false;
        auto h = hamming_pipeline(d, q, BoundVariant::hamming);
        if (h.bound.stats.a != Rational(q) / qd) return false;
        const auto& t = h.bound.terms;
        // sqrt((q-2)^2/((q-1)d)) + (2q^2/((q-1)d) / pi)^{1/4}
        if (!same_sqrt(t[0], Rational(1), Rational((q - 2) * (q - 2)) / qd)) return false;
        if (t[1].coefficient != Rational(1) || t[1].radicand != Rational(2 * q * q) / qd || t[1].root != 4 || t[1].pi_power != Rational(-1, 4))
          return false;
        // rinrot: A = q/sqrt((q-1)d); the A terms are exactly (.41q^2+1.5q)/sqrt((q-1)d)
        // and the variance term sits below sqrt(q/d)
        auto r = hamming_pipeline(d, q, BoundVariant::rinrot);
        const auto& u = r.bound.terms;
        if (!r.bound.stats.max_step || r.bound.stats.max_step->square() != Rational(q * q) / qd) return false;
        if (!same_sqrt(u[1], Rational(41 * q * q, 100), Rational(1) / qd)) return false;
        if (!same_sqrt(u[2], Rational(3 * q, 2), Rational(1) / qd)) return false;
        return u[0].coefficient * u[0].coefficient * u[0].radicand <= Rational(q, d);
      });
    }
  return o;
}

Outcome suite_outcome(const std::vector<CheckResult>& checks, const std::set<std::string>& tags, std::size_t& count) {
  Outcome o;
  std::set<std::string> seen;
  count = 0;
  for (auto& c : checks) {
    if (!tags.empty() && !tags.count(c.tag)) continue;
    ++count;
    seen.insert(c.tag);
    if (!c.passed) {
      o.ok = false;
      if (o.note.size() < 400) o.note += c.tag + " " + c.structure + " " + c.params + "; ";
    }
  }
  for (auto& t : tags)
    if (!seen.count(t)) {
      o.ok = false;
      o.note += "no checks for " + t + "; ";
    }
  if (count == 0) o.ok = false;
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, double seconds, double limit, Outcome o, const std::string& extra) {
    bool ok = o.ok && seconds < limit;
    if (seconds >= limit) o.note += "over time limit; ";
    std::printf("%s %d %s (%.2fs, limit %.0fs) %s%s\n", ok ? "PASS" : "FAIL", id, name, seconds, limit, extra.c_str(),
                o.note.empty() ? "" : (" :: " + o.note).c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  };
  auto clock = [] { return std::chrono::steady_clock::now(); };
  auto since = [](auto t0) { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };

  {
    double worst = 0;
    std::string slowest;
    auto t0 = clock();
    Outcome o = exact_values(1.0, worst, slowest);
    char buf[96];
    std::snprintf(buf, sizeof buf, "slowest item %.3fs (%s)", worst, slowest.c_str());
    report(1, "exact-value reproduction", since(t0), 120, o, buf);
  }
  {
    auto t0 = clock();
    std::size_t n = 0;
    auto o = suite_outcome(run_suite("orthogonality"),
                           {"orth0", "orth1", "orthog1", "orthog2", "torthog1", "torthog2", "asorthog1", "asorthog2"}, n);
    report(2, "orthogonality identities", since(t0), 120, o, std::to_string(n) + " checks");
  }
  std::vector<CheckResult> chains;
  {
    auto t0 = clock();
    chains = run_suite("chains");
    std::size_t n = 0;
    auto o = suite_outcome(chains, {}, n);
    std::size_t k = 0;
    auto tagged = suite_outcome(chains, {"gchain", "steinsat", "steinsat2", "tsteinsat2", "assteinsat", "var", "record", "record2",
                                         "diago", "eiglast", "ischain", "birth", "bdeath", "J21"}, k);
    if (!tagged.ok) {
      o.ok = false;
      o.note += tagged.note;
    }
    report(3, "chain audits", since(t0), 180, o, std::to_string(n) + " checks");
  }
  {
    auto t0 = clock();
    auto checks = run_suite("moments");
    auto walks = run_suite("walks");
    checks.insert(checks.end(), walks.begin(), walks.end());
    for (auto& c : chains)
      if (c.tag == "2chains") checks.push_back(c);
    std::size_t n = 0;
    auto o = suite_outcome(checks, {}, n);
    std::size_t k = 0;
    auto tagged = suite_outcome(checks, {"big1", "big1GP", "tbig1GP", "asbig1", "mom1", "mom1GP", "tmom1GP", "asmom1", "projerror-scaling",
                                         "countsol", "fourier", "ascountsol", "con", "2chains"}, k);
    if (!tagged.ok) {
      o.ok = false;
      o.note += tagged.note;
    }
    report(4, "cross-oracle equalities", since(t0), 600, o, std::to_string(n) + " checks");
  }
  {
    auto t0 = clock();
    std::size_t n = 0;
    auto o = suite_outcome(run_suite("bounds"), {"limgroup", "CLTgel", "projerror", "hypbound1", "asmains"}, n);
    report(5, "Kolmogorov domination", since(t0), 300, o, std::to_string(n) + " pipelines");
  }
  {
    auto t0 = clock();
    Outcome o;
    std::string extra;
    struct Sweep {
      BoundVariant v;
      int param, lo, hi;
    };
    for (auto s : {Sweep{BoundVariant::limgroup, 2, 6, 12}, Sweep{BoundVariant::limgroup, 3, 6, 12}, Sweep{BoundVariant::CLTgel, 2, 4, 5},
                   Sweep{BoundVariant::projerror, 1, 6, 10}}) {
      try {
        auto rows = scaling_sweep(s.v, s.param, s.lo, s.hi);
        if (rows.size() != static_cast<std::size_t>(s.hi - s.lo + 1)) o.ok = false;
        for (auto& r : rows)
          if (!std::isfinite(r.total_scaled) || !std::isfinite(r.term1_scaled)) {
            o.ok = false;
            o.note += to_string(s.v) + " n=" + std::to_string(r.n) + " not finite; ";
          }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s(%d) n=%d total*n^1/4=%.4f term1*n^1/2=%.4f; ", to_string(s.v).c_str(), s.param, rows.back().n,
                      rows.back().total_scaled, rows.back().term1_scaled);
        extra += buf;
      } catch (const std::exception& e) {
        o.ok = false;
        o.note += to_string(s.v) + " threw " + e.what() + "; ";
      }
    }
    report(6, "scaling reports", since(t0), 300, o, extra);
  }
  return failures == 0 ? 0 : 1;
}
