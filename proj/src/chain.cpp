#include "stein/chain.hpp"

#include <algorithm>

#include "stein/error.hpp"
#include "stein/spin.hpp"
#include "stein/symmetric_group.hpp"

namespace stein {

namespace {

std::vector<std::string> labels_of(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (auto& p : ps) out.push_back(p.str());
  return out;
}

// lambda -> eta by lowering one part by one, keeping the parts distinct.
std::vector<Partition> strict_down(const Partition& lambda) {
  std::vector<Partition> out;
  for (int r = 0; r < lambda.length(); ++r) {
    if (r + 1 < lambda.length() && lambda.part(r + 1) == lambda.part(r) - 1) continue;
    std::vector<int> parts = lambda.parts();
    --parts[static_cast<std::size_t>(r)];
    if (parts[static_cast<std::size_t>(r)] == 0) parts.pop_back();
    out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace

ChainKernel group_chain(int n, const Partition& tau) {
  const auto& t = character_table(n);
  std::size_t ti = t.index_of(tau);
  if (ti == 0) throw ValidationError("group chain needs a nontrivial tau");
  std::size_t s = t.size();
  ChainKernel ch;
  ch.name = "L_tau symmetric n=" + std::to_string(n) + " tau=" + tau.str();
  ch.states = labels_of(t.partitions());
  ch.pi = plancherel(n).probabilities;
  ch.k = Matrix<Rational>(s, s);
  std::vector<BigInt> wk(s);
  for (std::size_t c = 0; c < s; ++c) wk[c] = t.class_size(c) * BigInt(static_cast<long>(t.value(ti, c)));
  BigInt dtau = big(t.dimension(ti));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      BigInt sum = 0;
      for (std::size_t c = 0; c < s; ++c) {
        long long x = t.value(a, c), y = t.value(b, c);
        if (x == 0 || y == 0) continue;
        sum += wk[c] * BigInt(static_cast<long>(x)) * BigInt(static_cast<long>(y));
      }
      ch.k(a, b) = Rational(sum * BigInt(static_cast<long>(t.dimension(b))),
                            t.group_order() * BigInt(static_cast<long>(t.dimension(a))) * dtau);
    }
  return ch;
}

ChainKernel gelfand_chain(const GelfandPairData& g, std::size_t t) {
  if (t >= g.size()) throw ValidationError("spherical label out of range");
  if (t == g.trivial_spherical) throw ValidationError("gelfand chain needs a nontrivial spherical function");
  std::size_t s = g.size();
  ChainKernel ch;
  ch.name = "L_t " + g.name + " n=" + std::to_string(g.n) + " t=" + g.labels[t];
  ch.states = g.labels;
  for (std::size_t i = 0; i < s; ++i) ch.pi.push_back(g.plancherel(i));
  ch.k = Matrix<Rational>(s, s);
  // Integer dot products: omega_i(r) = A_i(r)/D_i and w_r = e_r/E, so
  // sum_r w_r omega_i omega_j = (sum_r e_r A_i(r) A_j(r)) / (E D_i D_j).
  BigInt e_den = 1;
  std::vector<Rational> wr(s);
  for (std::size_t r = 0; r < s; ++r) {
    wr[r] = g.coset_ratio[r] * g.omega(t, r);
    mpz_lcm(e_den.get_mpz_t(), e_den.get_mpz_t(), wr[r].den().get_mpz_t());
  }
  std::vector<BigInt> e(s), d(s, 1);
  for (std::size_t r = 0; r < s; ++r) e[r] = wr[r].num() * (e_den / wr[r].den());
  Matrix<BigInt> a(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t r = 0; r < s; ++r) mpz_lcm(d[i].get_mpz_t(), d[i].get_mpz_t(), g.omega(i, r).den().get_mpz_t());
    for (std::size_t r = 0; r < s; ++r) a(i, r) = g.omega(i, r).num() * (d[i] / g.omega(i, r).den());
  }
  std::vector<BigInt> ea(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t r = 0; r < s; ++r) ea[r] = e[r] * a(i, r);
    for (std::size_t j = i; j < s; ++j) {
      BigInt acc = 0;
      for (std::size_t r = 0; r < s; ++r) acc += ea[r] * a(j, r);
      Rational sum(acc, e_den * d[i] * d[j]);
      ch.k(i, j) = ch.pi[j] * sum;
      if (j != i) ch.k(j, i) = ch.pi[i] * sum;
    }
  }
  return ch;
}

ChainKernel twisted_signed_kernel(int n, const Partition& tau) {
  const auto& t = spin_character_table(n);
  std::size_t ti = t.strict_index(tau);
  std::size_t s = t.strict().size(), c = t.odd().size();
  ChainKernel ch;
  ch.name = "J_tau n=" + std::to_string(n) + " tau=" + tau.str();
  ch.is_signed = true;
  ch.states = labels_of(t.strict());
  for (std::size_t a = 0; a < s; ++a) ch.pi.push_back(t.plancherel(a));
  ch.k = Matrix<Rational>(s, s);
  std::vector<Rational> wv(c);
  for (std::size_t v = 0; v < c; ++v)
    wv[v] = Rational(pow2(static_cast<unsigned long>(t.odd()[v].length())) * BigInt(static_cast<long>(t.value(ti, v))),
                     z_of(t.odd()[v]));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      Rational sum = 0;
      for (std::size_t v = 0; v < c; ++v)
        sum += wv[v] * Rational(t.value(a, v)) * Rational(t.value(b, v));
      ch.k(a, b) = sum * Rational(t.g(b)) /
                   (Rational(pow2(static_cast<unsigned long>(t.strict()[b].length()))) * Rational(t.g(a)) * Rational(t.g(ti)));
    }
  return ch;
}

ChainKernel schur_down_up_chain(int n) {
  if (n < 2) throw ValidationError("down-up chain needs n >= 2");
  const auto& t = spin_character_table(n);
  std::size_t s = t.strict().size();
  ChainKernel ch;
  ch.name = "down-up n=" + std::to_string(n);
  ch.states = labels_of(t.strict());
  for (std::size_t a = 0; a < s; ++a) ch.pi.push_back(t.plancherel(a));
  ch.k = Matrix<Rational>(s, s);
  std::vector<std::vector<Partition>> down(s);
  for (std::size_t a = 0; a < s; ++a) down[a] = strict_down(t.strict()[a]);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      Rational sum = 0;
      for (auto& eta : down[a])
        if (std::find(down[b].begin(), down[b].end(), eta) != down[b].end())
          sum += Rational(pow2(static_cast<unsigned long>(eta.length())),
                          pow2(static_cast<unsigned long>(t.strict()[b].length())));
      ch.k(a, b) = sum * Rational(2 * t.g(b)) / Rational(n * t.g(a));
    }
  return ch;
}

ChainKernel scheme_chain(const AssociationScheme& sc, int t) {
  if (t < 1 || t > sc.n_classes) throw ValidationError("scheme chain needs 1 <= t <= n_classes");
  auto w = static_cast<std::size_t>(sc.n_classes + 1);
  auto tt = static_cast<std::size_t>(t);
  ChainKernel ch;
  ch.name = "L_t scheme t=" + std::to_string(t);
  for (std::size_t i = 0; i < w; ++i) {
    ch.states.push_back(std::to_string(i));
    ch.pi.push_back(sc.plancherel(static_cast<int>(i)));
  }
  ch.k = Matrix<Rational>(w, w);
  std::vector<Rational> wr(w);
  for (std::size_t r = 0; r < w; ++r) {
    Rational v = Rational(sc.valencies[r]);
    wr[r] = sc.phi(r, tt) / (v * v);
  }
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < w; ++j) {
      Rational sum = 0;
      for (std::size_t r = 0; r < w; ++r) sum += wr[r] * sc.phi(r, i) * sc.phi(r, j);
      ch.k(i, j) = ch.pi[j] * sum;
    }
  return ch;
}

AuditReport audit(const ChainKernel& ch, const Statistic& w) {
  std::size_t s = ch.size();
  if (w.coefficients.size() != s) throw ValidationError("statistic not defined on every state");
  AuditReport rep;
  rep.signed_kernel = ch.is_signed;
  for (std::size_t x = 0; x < s; ++x) {
    Rational row = 0;
    for (std::size_t y = 0; y < s; ++y) {
      row += ch.k(x, y);
      if (ch.k(x, y).sign() < 0 && (!ch.is_signed || x != y)) rep.nonnegative = false;
      Rational bal = (ch.pi[x] * ch.k(x, y) - ch.pi[y] * ch.k(y, x)).abs();
      if (bal > rep.balance_residual) rep.balance_residual = bal;
    }
    Rational dev = (row - 1).abs();
    if (dev > rep.max_row_deviation) rep.max_row_deviation = dev;
  }

  bool any_nonzero = false;
  for (std::size_t x = 0; x < s; ++x) {
    rep.second_moment_w += ch.pi[x] * w.square(x);
    rep.mean_coefficient_w += ch.pi[x] * w.coefficients[x];
    if (!w.coefficients[x].is_zero()) any_nonzero = true;
  }
  Rational k = Rational(w.radicand);
  for (std::size_t x = 0; x < s; ++x)
    for (std::size_t y = 0; y < s; ++y) {
      if (ch.k(x, y).is_zero()) continue;
      Rational d = w.coefficients[y] - w.coefficients[x];
      Rational d2 = d * d * k;
      if (d2 > rep.max_step_squared) {
        rep.max_step_squared = d2;
        rep.max_step = ScaledRoot(d.abs(), w.radicand);
      }
    }
  if (!any_nonzero) {
    rep.linearity = Linearity::degenerate;
    return rep;
  }

  std::optional<Rational> lam;
  rep.linearity = Linearity::linear;
  for (std::size_t x = 0; x < s; ++x) {
    Rational e = 0;
    for (std::size_t y = 0; y < s; ++y) e += ch.k(x, y) * w.coefficients[y];
    const Rational& c = w.coefficients[x];
    bool ok;
    if (c.is_zero()) {
      ok = e.is_zero();
    } else {
      Rational r = e / c;
      if (!lam) lam = r;
      ok = (r == *lam);
    }
    if (!ok) {
      rep.linearity = Linearity::nonlinear;
      rep.witness = x;
      return rep;
    }
  }
  rep.a = Rational(1) - *lam;
  if (rep.a->is_zero()) rep.linearity = Linearity::degenerate;
  return rep;
}

std::optional<Rational> eigen_scalar(const ChainKernel& ch, const std::vector<Rational>& psi) {
  std::optional<Rational> lam;
  bool any = false;
  for (std::size_t x = 0; x < ch.size(); ++x) {
    Rational e = 0;
    for (std::size_t y = 0; y < ch.size(); ++y) e += ch.k(x, y) * psi[y];
    if (psi[x].is_zero()) {
      if (!e.is_zero()) return std::nullopt;
      continue;
    }
    any = true;
    Rational r = e / psi[x];
    if (!lam) lam = r;
    else if (r != *lam) return std::nullopt;
  }
  if (!any) return std::nullopt;
  return lam;
}

}  // namespace stein
