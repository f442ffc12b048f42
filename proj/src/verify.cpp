#include "stein/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "stein/chain.hpp"
#include "stein/distributions.hpp"
#include "stein/error.hpp"
#include "stein/gelfand.hpp"
#include "stein/matchings.hpp"
#include "stein/pipeline.hpp"
#include "stein/spin.hpp"
#include "stein/stein.hpp"
#include "stein/symmetric_group.hpp"
#include "stein/walk.hpp"

namespace stein {

namespace {

class Reporter {
 public:
  Reporter(std::string suite, const VerifyOptions& o) : suite_(std::move(suite)), opts_(o) {}

  void check(const std::string& tag, const std::string& structure, const std::string& params, bool ok,
             const std::string& detail = "") {
    out_.push_back({suite_, tag, structure, params, ok, detail});
  }

  // Runs f, turning an exception into a failed check.
  void guarded(const std::string& tag, const std::string& structure, const std::string& params,
               const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(tag, structure, params, false, std::string("exception: ") + e.what());
    }
  }

  bool wants(const std::string& structure) const { return !opts_.structure || *opts_.structure == structure; }

  std::vector<int> sizes(const std::string& structure, int lo, int hi) const {
    if (!wants(structure)) return {};
    if (opts_.structure && opts_.n) return {*opts_.n};
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) v.push_back(n);
    return v;
  }

  std::vector<std::pair<int, int>> hamming_sizes(int dlo, int dhi, int qlo, int qhi) const {
    if (!wants("hamming")) return {};
    std::vector<std::pair<int, int>> v;
    for (int d = dlo; d <= dhi; ++d)
      for (int q = qlo; q <= qhi; ++q)
        if ((!opts_.structure || !opts_.d || *opts_.d == d) && (!opts_.structure || !opts_.q || *opts_.q == q))
          v.emplace_back(d, q);
    if (opts_.structure && (opts_.d || opts_.q) && v.empty()) v.emplace_back(opts_.d.value_or(dlo), opts_.q.value_or(qlo));
    return v;
  }

  const VerifyOptions& opts() const { return opts_; }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  const VerifyOptions& opts_;
  std::vector<CheckResult> out_;
};

std::string par(const std::string& k, long v) { return k + "=" + std::to_string(v); }
std::string npar(int n) { return par("n", n); }
std::string dq(int d, int q) { return par("d", d) + " " + par("q", q); }

// ---------------------------------------------------------------- orthogonality

void symmetric_orthogonality(Reporter& rep) {
  for (int n : rep.sizes("symmetric", 1, 8)) {
    rep.guarded("orth0", "symmetric", npar(n), [&] {
      const auto& t = character_table(n);
      bool ok0 = true, ok1 = true, dims = true, std_char = true;
      for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b) {
          BigInt s = 0;
          for (std::size_t c = 0; c < t.size(); ++c) s += t.class_size(c) * big(t.value(a, c)) * big(t.value(b, c));
          if (s != (a == b ? t.group_order() : BigInt(0))) ok0 = false;
          BigInt s1 = 0;
          for (std::size_t c = 0; c < t.size(); ++c) s1 += big(t.value(c, a)) * big(t.value(c, b));
          if (!(a == b ? s1 * t.class_size(a) == t.group_order() : s1 == 0)) ok1 = false;
        }
      for (std::size_t a = 0; a < t.size(); ++a) {
        if (big(t.dimension(a)) != hook_length_dimension(t.partitions()[a])) dims = false;
        if (n >= 2) {
          std::size_t sd = t.index_of(Partition({n - 1, 1}));
          if (t.value(sd, a) != t.partitions()[a].multiplicity(1) - 1) std_char = false;
        }
      }
      rep.check("orth0", "symmetric", npar(n), ok0);
      rep.check("orth1", "symmetric", npar(n), ok1);
      rep.check("hook-dimension", "symmetric", npar(n), dims);
      rep.check("standard-character", "symmetric", npar(n), std_char);
      Rational mass = 0;
      for (auto& p : plancherel(n).probabilities) mass += p;
      rep.check("plancherel", "symmetric", npar(n), mass == Rational(1));
    });
  }
}

void gelfand_orthogonality(Reporter& rep, const GelfandPairData& g) {
  std::string p = npar(g.n);
  std::size_t s = g.size();
  bool o1 = true, o2 = true, w0 = true;
  for (std::size_t i = 0; i < s; ++i) {
    if (g.omega(i, g.identity_coset) != Rational(1)) w0 = false;
    for (std::size_t j = i; j < s; ++j) {
      Rational acc = 0;
      for (std::size_t r = 0; r < s; ++r) acc += g.coset_ratio[r] * g.omega(i, r) * g.omega(j, r);
      if (g.plancherel(i) * acc != Rational(i == j ? 1 : 0)) o1 = false;
    }
  }
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t t = r; t < s; ++t) {
      Rational acc = 0;
      for (std::size_t i = 0; i < s; ++i) acc += Rational(g.dims[i]) * g.omega(i, r) * g.omega(i, t);
      Rational want = r == t ? Rational(g.index) / g.coset_ratio[r] : Rational(0);
      if (acc != want) o2 = false;
    }
  Rational mass = 0;
  for (std::size_t i = 0; i < s; ++i) mass += g.plancherel(i);
  rep.check("orthog1", g.name, p, o1);
  rep.check("orthog2", g.name, p, o2);
  rep.check("omega-identity", g.name, p, w0);
  rep.check("plancherel", g.name, p, mass == Rational(1));
}

void pair_orthogonality(Reporter& rep) {
  for (int n : rep.sizes("hypercube", 1, 60)) {
    rep.guarded("orthog1", "hypercube", npar(n), [&] {
      auto g = hypercube_pair(n);
      gelfand_orthogonality(rep, g);
      bool kraw = true;
      for (int r = 0; r <= n; ++r)
        if (g.omega(1, static_cast<std::size_t>(r)) != Rational(n - 2 * r, n)) kraw = false;
      rep.check("krawtchouk-omega1", "hypercube", npar(n), kraw);
    });
  }
  for (int n : rep.sizes("matchings", 1, 6)) {
    rep.guarded("orthog1", "matchings", npar(n), [&] {
      auto g = matchings_pair(n);
      gelfand_orthogonality(rep, g);
      bool jack = true, val = n < 2;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g.plancherel(i) != jack_measure(g.partitions[i], 2)) jack = false;
      if (n >= 2) {
        val = true;
        std::size_t t = g.label_index(Partition({n - 1, 1}).str());
        for (std::size_t r = 0; r < g.size(); ++r)
          if (g.omega(t, r) != Rational((2 * n - 1) * g.partitions[r].multiplicity(1) - n, 2 * n * (n - 1))) val = false;
      }
      bool ratio = true;
      Rational cover = 0;
      for (std::size_t r = 0; r < g.size(); ++r) cover += g.coset_ratio[r];
      if (cover != Rational(g.index)) ratio = false;
      rep.check("jack2-plancherel", "matchings", npar(n), jack);
      rep.check("valspher", "matchings", npar(n), val);
      rep.check("coset-count", "matchings", npar(n), ratio);
    });
  }
}

void spin_orthogonality(Reporter& rep) {
  for (int n : rep.sizes("spin", 1, 10)) {
    rep.guarded("torthog1", "spin", npar(n), [&] {
      const auto& t = spin_character_table(n);
      std::size_t ns = t.strict().size(), no = t.odd().size();
      bool o1 = true, o2 = true, gprod = true;
      for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b) {
          Rational acc = 0;
          for (std::size_t m = 0; m < no; ++m)
            acc += Rational(pow2(static_cast<unsigned long>(t.odd()[m].length())), z_of(t.odd()[m])) *
                   Rational(t.value(a, m)) * Rational(t.value(b, m));
          if (acc != (a == b ? Rational(pow2(static_cast<unsigned long>(t.strict()[a].length()))) : Rational(0))) o1 = false;
        }
      for (std::size_t m = 0; m < no; ++m)
        for (std::size_t s = 0; s < no; ++s) {
          Rational acc = 0;
          for (std::size_t a = 0; a < ns; ++a)
            acc += Rational(t.value(a, m)) * Rational(t.value(a, s)) /
                   Rational(pow2(static_cast<unsigned long>(t.strict()[a].length())));
          Rational want = m == s ? Rational(z_of(t.odd()[m]), pow2(static_cast<unsigned long>(t.odd()[m].length()))) : Rational(0);
          if (acc != want) o2 = false;
        }
      Rational mass = 0;
      for (std::size_t a = 0; a < ns; ++a) {
        mass += t.plancherel(a);
        if (big(t.g(a)) != shifted_tableaux_count(t.strict()[a])) gprod = false;
      }
      bool valtwist = true, trivial = true;
      for (std::size_t m = 0; m < no; ++m) {
        if (t.value(0, m) != 1) trivial = false;
        if (n >= 3 && t.value(t.strict_index(Partition({n - 1, 1})), m) != t.odd()[m].multiplicity(1) - 2) valtwist = false;
      }
      rep.check("torthog1", "spin", npar(n), o1);
      rep.check("torthog2", "spin", npar(n), o2);
      rep.check("shifted-plancherel", "spin", npar(n), mass == Rational(1));
      rep.check("g-product-formula", "spin", npar(n), gprod);
      rep.check("valtwist", "spin", npar(n), valtwist);
      rep.check("sumneq1-trivial-row", "spin", npar(n), trivial);
      bool qn = true;
      auto q = q_generator(n);
      for (auto& mu : t.odd())
        if (q.coefficient(mu) != Rational(pow2(static_cast<unsigned long>(mu.length())), z_of(mu))) qn = false;
      rep.check("q-coefficients", "spin", npar(n), qn);
      if (n >= 3) {
        auto lhs = schur_Q(Partition({n - 1, 1}));
        auto rhs = OddPowerSumPolynomial::power_sum(Partition({1}), 2) * q_generator(n - 1) - q_generator(n) * Rational(2);
        rep.check("Q-two-row", "spin", npar(n), lhs == rhs);
      }
    });
  }
}

void scheme_orthogonality_one(Reporter& rep, const AssociationScheme& s, const std::string& st, const std::string& p) {
  auto w = static_cast<std::size_t>(s.n_classes + 1);
  bool o1 = true, o2 = true, basic = true;
  for (std::size_t k = 0; k < w; ++k)
    for (std::size_t l = 0; l < w; ++l) {
      Rational acc = 0;
      for (std::size_t r = 0; r < w; ++r) acc += s.phi(r, k) * s.phi(r, l) / Rational(s.valencies[r]);
      if (acc != (k == l ? Rational(s.x_size, s.multiplicities[k]) : Rational(0))) o1 = false;
      Rational acc2 = 0;
      for (std::size_t i = 0; i < w; ++i) acc2 += Rational(s.multiplicities[i]) * s.phi(k, i) * s.phi(l, i);
      if (acc2 != (k == l ? Rational(s.x_size * s.valencies[k]) : Rational(0))) o2 = false;
    }
  BigInt vs = 0;
  for (std::size_t i = 0; i < w; ++i) {
    vs += s.valencies[i];
    if (s.phi(0, i) != Rational(1) || s.phi(i, 0) != Rational(s.valencies[i])) basic = false;
  }
  rep.check("asorthog1", st, p, o1);
  rep.check("asorthog2", st, p, o2);
  rep.check("scheme-basics", st, p, basic && vs == s.x_size);
}

void scheme_orthogonality(Reporter& rep) {
  for (auto [d, q] : rep.hamming_sizes(1, 12, 2, 5))
    rep.guarded("asorthog1", "hamming", dq(d, q), [&] { scheme_orthogonality_one(rep, hamming_scheme(d, q), "hamming", dq(d, q)); });
  for (auto [d, q] : rep.hamming_sizes(1, 4, 2, 3)) {
    rep.guarded("hamming-relations", "hamming", dq(d, q), [&] {
      if (static_cast<long>(std::pow(q, d)) > 81) return;
      auto rel = hamming_relations(d, q);
      auto a = scheme_from_relations(rel);
      auto b = hamming_scheme(d, q);
      bool same = a.valencies == b.valencies && a.multiplicities == b.multiplicities && a.x_size == b.x_size;
      for (int i = 0; i <= d && same; ++i)
        for (int j = 0; j <= d && same; ++j) {
          if (a.phi(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != b.phi(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) same = false;
          for (int k = 0; k <= d; ++k)
            if (a.intersection_number(i, j, k) != b.intersection_number(i, j, k)) same = false;
        }
      rep.check("hamming-relations", "hamming", dq(d, q), same);
    });
  }
  if (rep.opts().scheme && rep.wants("scheme-file")) scheme_orthogonality_one(rep, *rep.opts().scheme, "scheme-file", "");
}

// ---------------------------------------------------------------- chains

void check_audit(Reporter& rep, const std::string& tag, const std::string& st, const std::string& p,
                 const ChainKernel& ch, const Statistic& w, const Rational& expected_a) {
  AuditReport a = audit(ch, w);
  std::ostringstream d;
  d << "row_dev=" << a.max_row_deviation.str() << " balance=" << a.balance_residual.str()
    << " a=" << (a.a ? a.a->str() : std::string("none"));
  bool ok = a.passed() && a.a && *a.a == expected_a;
  rep.check(tag, st, p, ok, d.str());
  if (ok && a.second_moment_w == Rational(1)) {
    // E(W'-W)^2 = 2a.
    rep.check("var", st, p, direct_moment(ch, w, 2) == Rational(2) * expected_a);
  }
}

void symmetric_chains(Reporter& rep) {
  for (int n : rep.sizes("symmetric", 2, 7)) {
    rep.guarded("gchain", "symmetric", npar(n), [&] {
      const auto& t = character_table(n);
      for (std::size_t ti = 1; ti < t.size(); ++ti) {
        const auto& tau = t.partitions()[ti];
        auto ch = group_chain(n, tau);
        std::string p = npar(n) + " tau=" + tau.str();
        Partition c = Partition::hook_class(n, 2);
        auto w = kerov_statistic(n, c);
        Rational a = Rational(1) - t.ratio(ti, t.index_of(c));
        if (a.is_zero()) continue;
        check_audit(rep, "gchain", "symmetric", p, ch, w.w, a);
        bool eig = true;
        for (std::size_t ci = 0; ci < t.size(); ++ci) {
          auto psi = kerov_statistic(n, t.partitions()[ci]).w.coefficients;
          auto lam = eigen_scalar(ch, psi);
          if (!lam || *lam != t.ratio(ti, ci)) eig = false;
        }
        rep.check("record", "symmetric", p, eig);
        // entries are dim(rho)/(dim lambda dim tau) times a nonnegative integer multiplicity
        bool mult = true;
        for (std::size_t a1 = 0; a1 < t.size(); ++a1)
          for (std::size_t b = 0; b < t.size(); ++b) {
            Rational m = ch.k(a1, b) * Rational(t.dimension(a1)) * Rational(t.dimension(ti)) / Rational(t.dimension(b));
            if (!m.is_integer() || m.sign() < 0) mult = false;
          }
        rep.check("tensor-multiplicity", "symmetric", p, mult);
      }
      auto ch = group_chain(n, Partition({n - 1, 1}));
      for (int i = 2; i <= n; ++i) {
        auto w = kerov_statistic(n, Partition::hook_class(n, i));
        check_audit(rep, "steinsat", "symmetric", npar(n) + par(" i", i), ch, w.w, Rational(i, n - 1));
      }
    });
  }
}

void gelfand_chains(Reporter& rep) {
  for (int n : rep.sizes("hypercube", 2, 60)) {
    rep.guarded("niceprop", "hypercube", npar(n), [&] {
      auto g = hypercube_pair(n);
      auto ch = gelfand_chain(g, 1);
      check_audit(rep, "steinsat2", "hypercube", npar(n), ch, spherical_statistic(g, 1).w, Rational(2, n));
      bool birth = true;
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          Rational want = j == i - 1 ? Rational(i, n) : (j == i + 1 ? Rational(n - i, n) : Rational(0));
          if (ch.k(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != want) birth = false;
        }
      rep.check("birth", "hypercube", npar(n), birth);
      bool eig = true;
      for (std::size_t u = 0; u < g.size(); ++u) {
        auto lam = eigen_scalar(ch, spherical_statistic(g, u).w.coefficients);
        if (!lam || *lam != g.omega(1, u)) eig = false;
      }
      rep.check("record2", "hypercube", npar(n), eig);
    });
  }
  for (int n : rep.sizes("matchings", 2, 5)) {
    rep.guarded("niceprop", "matchings", npar(n), [&] {
      auto g = matchings_pair(n);
      std::size_t t = g.label_index(Partition({n - 1, 1}).str());
      auto ch = gelfand_chain(g, t);
      for (int i = 2; i <= n; ++i) {
        std::size_t u = g.label_index(Partition::hook_class(n, i).str());
        check_audit(rep, "steinsat2", "matchings", npar(n) + par(" i", i), ch, spherical_statistic(g, u).w,
                    Rational(i * (2 * n - 1), 2 * n * (n - 1)));
      }
      bool eig = true;
      for (std::size_t u = 0; u < g.size(); ++u) {
        auto lam = eigen_scalar(ch, spherical_statistic(g, u).w.coefficients);
        if (!lam || *lam != g.omega(t, u)) eig = false;
      }
      rep.check("record2", "matchings", npar(n), eig);
    });
  }
}

void spin_chains(Reporter& rep) {
  if (rep.wants("spin")) {
    rep.guarded("J21", "spin", npar(3), [&] {
      auto j = twisted_signed_kernel(3, Partition({2, 1}));
      std::size_t s = spin_character_table(3).strict_index(Partition({2, 1}));
      rep.check("J21", "spin", npar(3), j.k(s, s) == Rational(-1), "J=" + j.k(s, s).str());
    });
  }
  for (int n : rep.sizes("spin", 2, 10)) {
    rep.guarded("ischain", "spin", npar(n), [&] {
      const auto& t = spin_character_table(n);
      auto l = schur_down_up_chain(n);
      AuditReport base = audit(l, Statistic{1, std::vector<Rational>(l.size(), Rational(0))});
      rep.check("ischain", "spin", npar(n), base.max_row_deviation.is_zero() && base.balance_residual.is_zero() && base.nonnegative);
      for (std::size_t ti = 1; ti < t.strict().size(); ++ti) {
        auto j = twisted_signed_kernel(n, t.strict()[ti]);
        AuditReport aj = audit(j, Statistic{1, std::vector<Rational>(j.size(), Rational(0))});
        std::string p = npar(n) + " tau=" + t.strict()[ti].str();
        rep.check("J-rows", "spin", p, aj.max_row_deviation.is_zero() && aj.balance_residual.is_zero());
        bool eig = true;
        for (std::size_t m = 0; m < t.odd().size(); ++m) {
          auto lam = eigen_scalar(j, spin_statistic(n, t.odd()[m]).w.coefficients);
          if (!lam || *lam != t.ratio(ti, m)) eig = false;
        }
        rep.check("diago", "spin", p, eig);
      }
      if (n >= 3) {
        for (std::size_t m = 0; m + 1 < t.odd().size(); ++m) {
          const auto& mu = t.odd()[m];
          check_audit(rep, "tsteinsat2", "spin", npar(n) + " mu=" + mu.str(), l, spin_statistic(n, mu).w,
                      Rational(1) - Rational(mu.multiplicity(1), n));
        }
      }
      if (n >= 4) {
        auto j = twisted_signed_kernel(n, Partition({n - 1, 1}));
        bool eq = true, offdiag = true;
        for (std::size_t a = 0; a < l.size(); ++a)
          for (std::size_t b = 0; b < l.size(); ++b) {
            if (a == b) continue;
            if (l.k(a, b) != Rational(n - 2, n) * j.k(a, b)) eq = false;
            if (j.k(a, b).sign() < 0) offdiag = false;
          }
        rep.check("2chains", "spin", npar(n), eq);
        rep.check("J-offdiagonal", "spin", npar(n), offdiag);
      }
      if (n <= 8) {
        // p_1^perp P_lambda = sum_{eta -> lambda} 2^{l(eta)-l(lambda)} P_eta
        bool ok = true;
        for (auto& lam : t.strict()) {
          OddPowerSumPolynomial rhs;
          for (auto& eta : enumerate_partitions(n - 1, PartitionFilter::strict)) {
            bool below = false;
            for (int r = 0; r < lam.length(); ++r) {
              auto parts = lam.parts();
              --parts[static_cast<std::size_t>(r)];
              if (Partition::from_unsorted(parts) == eta && (r + 1 >= lam.length() || lam.part(r + 1) != lam.part(r) - 1)) below = true;
            }
            if (below) rhs += schur_P(eta) * Rational(pow2(static_cast<unsigned long>(eta.length())), pow2(static_cast<unsigned long>(lam.length())));
          }
          if (schur_P(lam).p1_perp() != rhs) ok = false;
        }
        rep.check("symlem", "spin", npar(n), ok);
      }
    });
  }
}

void scheme_chains_one(Reporter& rep, const AssociationScheme& sc, const std::string& st, const std::string& p, bool hamming) {
  int n = sc.n_classes;
  for (int t = 1; t <= n; ++t) {
    auto ch = scheme_chain(sc, t);
    std::string pt = p + par(" t", t);
    for (int s = 1; s <= n; ++s) {
      Rational a = Rational(1) - sc.phi(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) / Rational(sc.valencies[static_cast<std::size_t>(s)]);
      if (a.is_zero()) continue;
      if (hamming && !(s == 1 || t == 1)) continue;
      check_audit(rep, "assteinsat", st, pt + par(" s", s), ch, scheme_statistic(sc, s).w, a);
    }
    bool eig = true;
    for (int s = 0; s <= n; ++s) {
      auto lam = eigen_scalar(ch, scheme_statistic(sc, s).w.coefficients);
      if (!lam || *lam != sc.phi(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) / Rational(sc.valencies[static_cast<std::size_t>(s)])) eig = false;
    }
    rep.check("eiglast", st, pt, eig);
    if (hamming) break;  // t = 1 only for the large Hamming range
  }
}

void scheme_chains(Reporter& rep) {
  for (auto [d, q] : rep.hamming_sizes(1, 12, 2, 5)) {
    rep.guarded("asniceprop", "hamming", dq(d, q), [&] {
      auto sc = hamming_scheme(d, q);
      scheme_chains_one(rep, sc, "hamming", dq(d, q), true);
      auto ch = scheme_chain(sc, 1);
      bool bd = true;
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          Rational want = 0;
          if (j == i - 1) want = Rational(i, d * (q - 1));
          else if (j == i) want = Rational(i, d) * (Rational(1) - Rational(1, q - 1));
          else if (j == i + 1) want = Rational(1) - Rational(i, d);
          if (ch.k(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != want) bd = false;
        }
      rep.check("bdeath", "hamming", dq(d, q), bd);
      check_audit(rep, "assteinsat", "hamming", dq(d, q) + " s=1 t=1", ch, scheme_statistic(sc, 1).w, Rational(q, (q - 1) * d));
    });
  }
  if (rep.opts().scheme && rep.wants("scheme-file"))
    rep.guarded("asniceprop", "scheme-file", "", [&] { scheme_chains_one(rep, *rep.opts().scheme, "scheme-file", "", false); });
}

// ---------------------------------------------------------------- moments

void compare_family(Reporter& rep, const std::string& big, const std::string& mom, const std::string& st,
                    const std::string& p, const ClassSumFamily& f, const ChainKernel& ch, const Statistic& w) {
  auto direct = stats_direct(ch, w);
  auto closed = f.stats();
  std::ostringstream d;
  d << "direct cv=" << direct.cond_var.str() << " closed cv=" << closed.cond_var.str();
  rep.check(big, st, p, direct.a == closed.a && direct.cond_var == closed.cond_var, d.str());
  rep.check(mom, st, p, direct.fourth_moment == closed.fourth_moment);
  rep.check("immcor", st, p, direct.second_moment == Rational(2) * closed.a);
  rep.check("identity-term", st, p, f.identity_term() == Rational(4) * f.a() * f.a());
  bool part1 = true;
  for (int k = 2; k <= 6; k += 2)
    if (f.moment(k) != direct_moment(ch, w, k)) part1 = false;
  rep.check(mom + "-part1", st, p, part1);
}

void symmetric_moments(Reporter& rep) {
  for (int n : rep.sizes("symmetric", 3, 6)) {
    rep.guarded("big1", "symmetric", npar(n), [&] {
      Partition tau({n - 1, 1});
      auto ch = group_chain(n, tau);
      for (auto& c : enumerate_partitions(n)) {
        if (c.multiplicity(1) == n) continue;
        compare_family(rep, "big1", "mom1", "symmetric", npar(n) + " C=" + c.str(), group_family(n, c, tau), ch, kerov_statistic(n, c).w);
      }
    });
  }
}

void gelfand_moments(Reporter& rep) {
  for (int n : rep.sizes("hypercube", 2, 20)) {
    rep.guarded("big1GP", "hypercube", npar(n), [&] {
      auto g = hypercube_pair(n);
      for (std::size_t t = 1; t <= static_cast<std::size_t>(std::min(n, 2)); ++t) {
        auto ch = gelfand_chain(g, t);
        for (std::size_t u = 1; u <= static_cast<std::size_t>(n); ++u) {
          if (g.omega(t, u) == Rational(1)) continue;
          compare_family(rep, "big1GP", "mom1GP", "hypercube", npar(n) + par(" u", static_cast<long>(u)) + par(" t", static_cast<long>(t)),
                         gelfand_family(g, u, t), ch, spherical_statistic(g, u).w);
        }
      }
      auto closed = gelfand_family(g, 1, 1).stats();
      rep.check("hypbound1-variance", "hypercube", npar(n), closed.cond_var.is_zero());
    });
  }
  for (int n : rep.sizes("matchings", 2, 5)) {
    rep.guarded("big1GP", "matchings", npar(n), [&] {
      auto g = matchings_pair(n);
      std::size_t t = g.label_index(Partition({n - 1, 1}).str());
      auto ch = gelfand_chain(g, t);
      for (std::size_t u = 0; u < g.size(); ++u) {
        if (u == g.identity_coset) continue;
        compare_family(rep, "big1GP", "mom1GP", "matchings", npar(n) + " u=" + g.labels[u], gelfand_family(g, u, t), ch,
                       spherical_statistic(g, u).w);
      }
    });
  }
}

void spin_moments(Reporter& rep) {
  for (int n : rep.sizes("spin", 4, 8)) {
    rep.guarded("tbig1GP", "spin", npar(n), [&] {
      Partition tau({n - 1, 1});
      const auto& t = spin_character_table(n);
      auto j = twisted_signed_kernel(n, tau);
      auto l = schur_down_up_chain(n);
      for (std::size_t m = 0; m + 1 < t.odd().size(); ++m) {
        const auto& mu = t.odd()[m];
        std::string p = npar(n) + " mu=" + mu.str();
        auto f = twisted_family(n, mu, tau);
        auto w = spin_statistic(n, mu).w;
        compare_family(rep, "tbig1GP", "tmom1GP", "spin", p, f, j, w);
        auto projected = project_twisted(f.stats(), n, mu);
        auto direct_l = stats_direct(l, w);
        rep.check("projerror-scaling", "spin", p, projected.same_moments(direct_l));
        rep.check("timmcor2", "spin", p, direct_moment(j, w, 2) == Rational(2) * f.a());
      }
    });
  }
}

void scheme_moments(Reporter& rep) {
  for (auto [d, q] : rep.hamming_sizes(1, 6, 2, 4)) {
    rep.guarded("asbig1", "hamming", dq(d, q), [&] {
      auto sc = hamming_scheme(d, q);
      for (int t = 1; t <= d; ++t) {
        auto ch = scheme_chain(sc, t);
        for (int s = 1; s <= d; ++s) {
          Rational a = Rational(1) - sc.phi(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) / Rational(sc.valencies[static_cast<std::size_t>(s)]);
          if (a.is_zero()) continue;
          compare_family(rep, "asbig1", "asmom1", "hamming", dq(d, q) + par(" s", s) + par(" t", t), scheme_family(sc, s, t), ch,
                         scheme_statistic(sc, s).w);
        }
      }
    });
  }
  if (rep.opts().scheme && rep.wants("scheme-file")) {
    rep.guarded("asbig1", "scheme-file", "", [&] {
      const auto& sc = *rep.opts().scheme;
      for (int t = 1; t <= sc.n_classes; ++t)
        for (int s = 1; s <= sc.n_classes; ++s) {
          Rational a = Rational(1) - sc.phi(static_cast<std::size_t>(s), static_cast<std::size_t>(t)) / Rational(sc.valencies[static_cast<std::size_t>(s)]);
          if (a.is_zero()) continue;
          compare_family(rep, "asbig1", "asmom1", "scheme-file", par("s", s) + par(" t", t), scheme_family(sc, s, t), scheme_chain(sc, t),
                         scheme_statistic(sc, s).w);
        }
    });
  }
}

// ---------------------------------------------------------------- walks

bool sums_to_one(const std::vector<Rational>& v) {
  Rational s = 0;
  for (auto& x : v) {
    if (x.sign() < 0) return false;
    s += x;
  }
  return s == Rational(1);
}

void symmetric_walks(Reporter& rep) {
  for (int n : rep.sizes("symmetric", 4, 5)) {
    rep.guarded("countsol", "symmetric", npar(n), [&] {
      for (auto& c : enumerate_partitions(n)) {
        bool ok = true;
        for (int m = 0; m <= 4; ++m) {
          auto s = group_walk(n, c, m), b = group_walk_bruteforce(n, c, m);
          if (s.values != b.values || !sums_to_one(s.values)) ok = false;
        }
        rep.check("countsol", "symmetric", npar(n) + " C=" + c.str(), ok);
      }
    });
  }
  for (int n : rep.sizes("symmetric", 4, 10)) {
    rep.guarded("countsol-identities", "symmetric", npar(n), [&] {
      const auto& t = character_table(n);
      for (int i = 2; i <= n; ++i) {
        Partition c = Partition::hook_class(n, i);
        auto p2 = group_walk(n, c, 2).values, p3 = group_walk(n, c, 3).values, p4 = group_walk(n, c, 4).values;
        std::size_t ci = t.index_of(c), id = t.identity_class();
        Rational s = 0;
        for (std::size_t k = 0; k < t.size(); ++k) s += p2[k] * p2[k] / Rational(t.class_size(k));
        std::string p = npar(n) + par(" i", i);
        rep.check("p2-identity", "symmetric", p, p2[id] == Rational(BigInt(1), t.class_size(ci)));
        rep.check("p4-identity", "symmetric", p, p4[id] == s);
        rep.check("p3-generator", "symmetric", p, p3[ci] == Rational(t.class_size(ci)) * s);
      }
    });
  }
  if (rep.wants("symmetric") && !rep.opts().n) {
    rep.guarded("term1", "symmetric", "i=2", [&] {
      // p_2(K)^2/|K| n^{2i} -> i^2 (identity) and 2 i^2 (two i-cycles); the
      // gap times n is reported as the empirical O(n^{-2i-1}) constant.
      const int i = 2;
      double worst = 0, worst_cancel = 0;
      bool finite = true;
      for (int n = 8; n <= 14; ++n) {
        const auto& t = character_table(n);
        Partition c = Partition::hook_class(n, i);
        auto p2 = group_walk(n, c, 2).values;
        std::vector<int> two{i, i};
        two.insert(two.end(), static_cast<std::size_t>(n - 2 * i), 1);
        std::size_t kk = t.index_of(Partition(two)), id = t.identity_class();
        double scale = std::pow(static_cast<double>(n), 2 * i);
        double vid = (p2[id] * p2[id] / Rational(t.class_size(id))).to_double() * scale;
        double vkk = (p2[kk] * p2[kk] / Rational(t.class_size(kk))).to_double() * scale;
        worst = std::max({worst, std::abs(vid - i * i) * n, std::abs(vkk - 2 * i * i) * n});
        // fourth-moment cancellation: sum_K (8 - (6/a)(1 - ratio_K)) p_2^2/|K| = O(n^{-2i-1})
        Rational a(i, n - 1);
        std::size_t tau = t.index_of(Partition({n - 1, 1}));
        Rational sum = 0;
        for (std::size_t k = 0; k < t.size(); ++k)
          sum += (Rational(8) - Rational(6) / a * (Rational(1) - t.ratio(tau, k))) * p2[k] * p2[k] / Rational(t.class_size(k));
        double resc = std::abs(sum.to_double()) * std::pow(static_cast<double>(n), 2 * i + 1);
        worst_cancel = std::max(worst_cancel, resc);
        if (!std::isfinite(vid) || !std::isfinite(vkk) || !std::isfinite(resc)) finite = false;
      }
      std::ostringstream d;
      d << "max n*|rescaled - leading| = " << worst << ", max |cancelled sum| n^{2i+1} = " << worst_cancel;
      rep.check("term1", "symmetric", "i=2 n=8..14", finite, d.str());
    });
  }
}

void gelfand_walks(Reporter& rep) {
  for (int n : rep.sizes("hypercube", 1, 10)) {
    rep.guarded("fourier", "hypercube", npar(n), [&] {
      auto g = hypercube_pair(n);
      bool ok = true;
      for (int u = 0; u <= n; ++u)
        for (int m = 0; m <= 4; ++m) {
          auto s = gelfand_walk(g, static_cast<std::size_t>(u), m), b = hypercube_walk_bruteforce(n, u, m);
          if (s.values != b.values || !sums_to_one(s.values)) ok = false;
        }
      rep.check("fourier", "hypercube", npar(n), ok);
      if (n >= 2) {
        auto p2 = gelfand_walk(g, 1, 2).values;
        bool exact = p2[0] == Rational(1, n) && p2[2] == Rational(1) - Rational(1, n);
        for (int r = 0; r <= n; ++r)
          if (r != 0 && r != 2 && !p2[static_cast<std::size_t>(r)].is_zero()) exact = false;
        rep.check("hypercube-p2", "hypercube", npar(n), exact);
      }
    });
  }
  for (int n : rep.sizes("matchings", 2, 5)) {
    rep.guarded("con", "matchings", npar(n), [&] {
      auto g = matchings_pair(n);
      for (int i = 2; i <= std::min(3, n); ++i) {
        auto comb = matchings_p2_combinatorial(n, i);
        auto spec = gelfand_walk(g, g.label_index(Partition::hook_class(n, i).str()), 2);
        bool ok = sums_to_one(spec.values);
        for (std::size_t r = 0; r < g.size(); ++r)
          if (comb.at(g.partitions[r]) != spec.values[r]) ok = false;
        Rational pid = Rational(BigInt(1), pow2(static_cast<unsigned long>(i - 1)) * binomial(n, i) * factorial(i - 1));
        rep.check("con", "matchings", npar(n) + par(" i", i), ok);
        rep.check("term1GP-identity", "matchings", npar(n) + par(" i", i), spec.values[g.identity_coset] == pid);
      }
    });
  }
  for (int n : rep.sizes("matchings", 2, 5)) {
    rep.guarded("coset-count", "matchings", npar(n), [&] {
      std::map<Partition, long> counts;
      Matching eps = base_matching(n);
      for (auto& m : all_matchings(n)) ++counts[matching_distance(eps, m)];
      bool ok = true;
      for (auto& mu : enumerate_partitions(n))
        if (BigInt(counts[mu]) != matchings_coset_ratio(mu)) ok = false;
      bool reps = true;
      for (auto& mu : enumerate_partitions(n))
        if (matching_distance(eps, image(coset_representative(mu), eps)) != mu) reps = false;
      rep.check("matching-distance-count", "matchings", npar(n), ok);
      rep.check("coset-representatives", "matchings", npar(n), reps);
    });
  }
  if (rep.wants("matchings") && !rep.opts().n) {
    rep.guarded("term1GP", "matchings", "i=2", [&] {
      const int i = 2;
      double worst = 0;
      bool finite = true;
      for (int n = 8; n <= 12; ++n) {
        auto p2 = matchings_p2_combinatorial(n, i);
        Partition id = Partition::hook_class(n, 1);
        std::vector<int> two{i, i};
        two.insert(two.end(), static_cast<std::size_t>(n - 2 * i), 1);
        Partition kk(two);
        double lead = static_cast<double>(i * i) / std::pow(4.0, i - 1);
        double scale = std::pow(static_cast<double>(n), 2 * i);
        double vid = (p2[id] * p2[id] / Rational(matchings_coset_ratio(id))).to_double() * scale;
        double vkk = (p2[kk] * p2[kk] / Rational(matchings_coset_ratio(kk))).to_double() * scale;
        worst = std::max({worst, std::abs(vid - lead) * n, std::abs(vkk - 2 * lead) * n});
        if (!std::isfinite(vid) || !std::isfinite(vkk)) finite = false;
      }
      std::ostringstream d;
      d << "max n*|rescaled - leading| = " << worst;
      rep.check("term1GP", "matchings", "i=2 n=8..12", finite, d.str());
    });
  }
}

void spin_walks(Reporter& rep) {
  for (int n : rep.sizes("spin", 3, 8)) {
    rep.guarded("tcountsol", "spin", npar(n), [&] {
      const auto& t = spin_character_table(n);
      auto p0 = twisted_walk_coefficients(t, t.odd()[0], 0);
      bool ind = true;
      for (std::size_t v = 0; v < p0.size(); ++v)
        if (p0[v] != Rational(v == t.identity_class() ? 1 : 0)) ind = false;
      rep.check("tcountsol-p0", "spin", npar(n), ind);
      for (auto& mu : t.odd()) {
        std::string p = npar(n) + " mu=" + mu.str();
        auto p2 = twisted_walk_coefficients(t, mu, 2), p3 = twisted_walk_coefficients(t, mu, 3);
        Rational lhs = 0, s3 = 0, e4 = 0;
        for (std::size_t v = 0; v < t.odd().size(); ++v) {
          const auto& nu = t.odd()[v];
          Rational f(pow2(static_cast<unsigned long>(nu.length())), pow2(static_cast<unsigned long>(n)));
          lhs += p2[v] * f;
          s3 += p2[v] * p2[v] * f * Rational(z_of(nu));
          e4 += p2[v] * p2[v] * Rational(pow2(static_cast<unsigned long>(nu.length())) * z_of(nu), pow2(static_cast<unsigned long>(n)) * factorial(n));
        }
        Rational sh(pow2(static_cast<unsigned long>(n - mu.length())));
        rep.check("sumneq1", "spin", p, lhs == (Rational(1) / sh).pow(2));
        rep.check("3step", "spin", p, p3[t.odd_index(mu)] == sh / Rational(z_of(mu)) * s3);
        Rational fourth = 0;
        std::size_t mi = t.odd_index(mu);
        for (std::size_t a = 0; a < t.strict().size(); ++a) fourth += t.plancherel(a) * t.ratio(a, mi).pow(4);
        rep.check("4step", "spin", p, fourth == sh.pow(4) * e4);
      }
    });
  }
  for (int n : rep.sizes("spin", 3, 5)) {
    rep.guarded("reduce", "spin", npar(n), [&] {
      const auto& t = spin_character_table(n);
      Partition mu = Partition::hook_class(n, 3);
      auto tw = twisted_walk_coefficients(t, mu, 2);
      auto comb = matchings_p2_combinatorial(n, 3);
      bool ok = true;
      for (std::size_t v = 0; v < t.odd().size(); ++v)
        if (tw[v] > comb.at(t.odd()[v])) ok = false;
      rep.check("reduce", "spin", npar(n) + " mu=" + mu.str(), ok);
    });
  }
}

void scheme_walks_one(Reporter& rep, const AssociationScheme& sc, const std::string& st, const std::string& p) {
  int n = sc.n_classes;
  bool rel = true, mass = true;
  for (int s = 0; s <= n; ++s) {
    auto p2 = scheme_walk_probabilities(sc, s, 2), p3 = scheme_walk_probabilities(sc, s, 3), p4 = scheme_walk_probabilities(sc, s, 4);
    Rational sum = 0;
    for (int r = 0; r <= n; ++r) sum += p2[static_cast<std::size_t>(r)] * p2[static_cast<std::size_t>(r)] / Rational(sc.valencies[static_cast<std::size_t>(r)]);
    if (p4[0] != sum || p3[static_cast<std::size_t>(s)] != Rational(sc.valencies[static_cast<std::size_t>(s)]) * sum) rel = false;
    for (int m = 0; m <= 4; ++m)
      if (!sums_to_one(scheme_walk_probabilities(sc, s, m))) mass = false;
  }
  rep.check("asrel", st, p, rel);
  rep.check("ascountsol-mass", st, p, mass);
}

void scheme_walks(Reporter& rep) {
  for (auto [d, q] : rep.hamming_sizes(1, 12, 2, 5))
    rep.guarded("asrel", "hamming", dq(d, q), [&] {
      auto sc = hamming_scheme(d, q);
      scheme_walks_one(rep, sc, "hamming", dq(d, q));
      if (d >= 2) {
        auto p2 = scheme_walk_probabilities(sc, 1, 2);
        Rational qd((q - 1) * d);
        rep.check("hamming-p2", "hamming", dq(d, q),
                  p2[0] == Rational(1) / qd && p2[1] == Rational(q - 2) / qd && p2[2] == Rational(1) - Rational(1, d));
      }
    });
  for (auto [d, q] : rep.hamming_sizes(1, 4, 2, 3))
    rep.guarded("ascountsol", "hamming", dq(d, q), [&] {
      auto sc = hamming_scheme(d, q);
      auto rel = hamming_relations(d, q);
      bool ok = true;
      for (int s = 0; s <= d; ++s)
        for (int m = 0; m <= 4; ++m)
          if (scheme_walk_probabilities(sc, s, m) != scheme_walk_bruteforce(rel, s, m)) ok = false;
      rep.check("ascountsol", "hamming", dq(d, q), ok);
    });
  if (rep.opts().scheme && rep.wants("scheme-file")) scheme_walks_one(rep, *rep.opts().scheme, "scheme-file", "");
}

// ---------------------------------------------------------------- bounds

void dominated(Reporter& rep, const std::string& tag, const std::string& st, const std::string& p, const PipelineResult& r) {
  std::ostringstream d;
  d.precision(12);
  d << "kolmogorov=" << r.kolmogorov << " bound=" << r.bound.total;
  rep.check(tag, st, p, r.dominated, d.str());
}

void bounds_suite(Reporter& rep) {
  for (int i = 2; i <= 3; ++i)
    for (int n : rep.sizes("symmetric", 6, 12))
      rep.guarded("limgroup", "symmetric", npar(n) + par(" i", i), [&] { dominated(rep, "limgroup", "symmetric", npar(n) + par(" i", i), limgroup_pipeline(n, i)); });
  for (int n : rep.sizes("matchings", 4, 5))
    rep.guarded("CLTgel", "matchings", npar(n), [&] { dominated(rep, "CLTgel", "matchings", npar(n) + " i=2", cltgel_pipeline(n, 2)); });
  for (int n : rep.sizes("spin", 6, 10))
    rep.guarded("projerror", "spin", npar(n), [&] { dominated(rep, "projerror", "spin", npar(n) + " i=1", projerror_pipeline(n, 1)); });
  for (int n : rep.sizes("hypercube", 2, 60))
    rep.guarded("hypbound1", "hypercube", npar(n), [&] {
      auto r1 = hypercube_pipeline(n, BoundVariant::hypbound1);
      dominated(rep, "hypbound1", "hypercube", npar(n), r1);
      rep.check("hypbound1-closed-form", "hypercube", npar(n),
                r1.bound.terms[0].radicand.is_zero() && r1.bound.terms[1].radicand == r1.bound.closed_form[0].radicand);
      auto r2 = hypercube_pipeline(n, BoundVariant::hypbound2);
      dominated(rep, "hypbound2", "hypercube", npar(n), r2);
      const auto& st = r2.bound.stats;
      bool inputs = st.a == Rational(2, n) && st.max_step && st.max_step->square() == Rational(4, n) && st.cond_var.is_zero();
      rep.check("hypbound2-inputs", "hypercube", npar(n), inputs && r2.bound.total <= *r2.bound.closed_form_total + BoundReport::kTolerance);
    });
  for (auto [d, q] : rep.hamming_sizes(4, 40, 2, 4))
    rep.guarded("hamming", "hamming", dq(d, q), [&] {
      auto r = hamming_pipeline(d, q, BoundVariant::hamming);
      dominated(rep, "asmains", "hamming", dq(d, q), r);
      bool exact = r.bound.terms[0].radicand == r.bound.closed_form[0].radicand && r.bound.terms[1].radicand == r.bound.closed_form[1].radicand;
      rep.check("hamming-closed-form", "hamming", dq(d, q), exact);
      auto rr = hamming_pipeline(d, q, BoundVariant::rinrot);
      dominated(rep, "hamming-rinrot", "hamming", dq(d, q), rr);
      ScaledRoot a_step = *rr.bound.stats.max_step;
      bool rin = a_step.square() == Rational(q * q, (q - 1) * d) && rr.bound.terms[2].radicand == Rational(q * q, (q - 1) * d) &&
                 rr.bound.total <= *rr.bound.closed_form_total + BoundReport::kTolerance;
      rep.check("hamming-rinrot-closed-form", "hamming", dq(d, q), rin);
    });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"orthogonality", "chains", "moments", "walks", "bounds"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (auto& s : suite_names()) {
      auto part = run_suite(s, opts);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  Reporter rep(suite, opts);
  if (suite == "orthogonality") {
    symmetric_orthogonality(rep);
    pair_orthogonality(rep);
    spin_orthogonality(rep);
    scheme_orthogonality(rep);
  } else if (suite == "chains") {
    symmetric_chains(rep);
    gelfand_chains(rep);
    spin_chains(rep);
    scheme_chains(rep);
  } else if (suite == "moments") {
    symmetric_moments(rep);
    gelfand_moments(rep);
    spin_moments(rep);
    scheme_moments(rep);
  } else if (suite == "walks") {
    symmetric_walks(rep);
    gelfand_walks(rep);
    spin_walks(rep);
    scheme_walks(rep);
  } else if (suite == "bounds") {
    bounds_suite(rep);
  } else {
    throw ValidationError("unknown suite '" + suite + "'");
  }
  return rep.take();
}

}  // namespace stein
