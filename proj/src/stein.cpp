#include "stein/stein.hpp"

#include <functional>
#include <stdexcept>

#include "stein/error.hpp"
#include "stein/spin.hpp"
#include "stein/symmetric_group.hpp"
#include "stein/walk.hpp"

namespace stein {

ExchangeableStats stats_direct(const ChainKernel& ch, const Statistic& w) {
  AuditReport rep = audit(ch, w);
  if (!rep.max_row_deviation.is_zero() || !rep.balance_residual.is_zero())
    throw StructureError(ch.name + ": kernel is not stochastic and reversible");
  if (rep.linearity == Linearity::nonlinear)
    throw StructureError(ch.name + ": E(W'|W) is not linear in W (first failure at state " +
                         ch.states[rep.witness] + ")");
  if (rep.linearity == Linearity::degenerate) throw StructureError(ch.name + ": degenerate statistic, a undefined");

  ExchangeableStats st;
  st.a = *rep.a;
  Rational k = Rational(w.radicand);
  Rational third = 0;
  std::vector<Rational> cond(ch.size());
  for (std::size_t x = 0; x < ch.size(); ++x) {
    Rational e2 = 0, e4 = 0, e3 = 0;
    for (std::size_t y = 0; y < ch.size(); ++y) {
      const Rational& p = ch.k(x, y);
      if (p.is_zero()) continue;
      Rational d = w.coefficients[y] - w.coefficients[x];
      Rational d2 = d * d;
      e2 += p * d2;
      e4 += p * d2 * d2;
      e3 += p * d2 * d.abs();
    }
    cond[x] = e2 * k;
    st.second_moment += ch.pi[x] * cond[x];
    st.fourth_moment += ch.pi[x] * e4 * k * k;
    third += ch.pi[x] * e3;
  }
  for (std::size_t x = 0; x < ch.size(); ++x) {
    Rational dev = cond[x] - st.second_moment;
    st.cond_var += ch.pi[x] * dev * dev;
  }
  st.max_step = rep.max_step;
  st.third_abs_moment = ScaledRoot(third * k, w.radicand);
  return st;
}

Rational direct_moment(const ChainKernel& ch, const Statistic& w, int k) {
  if (k < 0 || k % 2) throw ValidationError("direct_moment needs an even order");
  Rational total = 0;
  for (std::size_t x = 0; x < ch.size(); ++x) {
    Rational row = 0;
    for (std::size_t y = 0; y < ch.size(); ++y)
      if (!ch.k(x, y).is_zero()) row += ch.k(x, y) * (w.coefficients[y] - w.coefficients[x]).pow(k);
    total += ch.pi[x] * row;
  }
  return total * Rational(w.radicand).pow(k / 2);
}

Rational ClassSumFamily::full_variance_sum() const {
  const auto& p2 = walk.at(2);
  Rational shift = Rational(1) - Rational(2) * ratio[generator];
  Rational s = 0;
  for (std::size_t r = 0; r < ratio.size(); ++r) {
    Rational f = ratio[r] + shift;
    s += weight[r] * p2[r] * p2[r] * f * f;
  }
  return scale * scale * s;
}

Rational ClassSumFamily::identity_term() const {
  const auto& p2 = walk.at(2);
  Rational f = ratio[identity] + 1 - Rational(2) * ratio[generator];
  return scale * scale * weight[identity] * p2[identity] * p2[identity] * f * f;
}

Rational ClassSumFamily::fourth_moment() const {
  const auto& p2 = walk.at(2);
  Rational a8 = Rational(8) * a();
  Rational s = 0;
  for (std::size_t r = 0; r < ratio.size(); ++r)
    s += (a8 - Rational(6) * (Rational(1) - ratio[r])) * weight[r] * p2[r] * p2[r];
  return scale * scale * s;
}

Rational ClassSumFamily::moment(int k) const {
  if (k < 0 || k > kMaxMoment) throw ValidationError("closed-form moment order out of range");
  if (k % 2) return 0;  // exchangeability; the class sum carries sqrt(S) for odd k
  Rational s = 0;
  for (int m = 0; m <= k; ++m) {
    Rational inner = 0;
    for (std::size_t r = 0; r < ratio.size(); ++r)
      inner += ratio[r] * weight[r] * walk[static_cast<std::size_t>(m)][r] * walk[static_cast<std::size_t>(k - m)][r];
    Rational c = Rational(binomial(k, m));
    s += ((k - m) % 2 ? -c : c) * inner;
  }
  return scale.pow(k / 2) * s;
}

ExchangeableStats ClassSumFamily::stats() const {
  ExchangeableStats st;
  st.a = a();
  st.second_moment = Rational(2) * st.a;
  st.cond_var = cond_var();
  st.fourth_moment = fourth_moment();
  return st;
}

namespace {

void fill_walk(ClassSumFamily& f, const std::function<std::vector<Rational>(int)>& p) {
  for (int m = 0; m <= ClassSumFamily::kMaxMoment; ++m) f.walk.push_back(p(m));
}

}  // namespace

ClassSumFamily group_family(int n, const Partition& c, const Partition& tau) {
  const auto& t = character_table(n);
  std::size_t ci = t.index_of(c), ti = t.index_of(tau);
  if (ti == 0) throw ValidationError("trivial tau gives a = 0");
  ClassSumFamily f;
  f.scale = Rational(t.class_size(ci));
  f.generator = ci;
  f.identity = t.identity_class();
  for (std::size_t k = 0; k < t.size(); ++k) {
    f.weight.emplace_back(BigInt(1), t.class_size(k));
    f.ratio.push_back(t.ratio(ti, k));
  }
  fill_walk(f, [&](int m) { return group_walk(n, c, m).values; });
  return f;
}

ClassSumFamily gelfand_family(const GelfandPairData& g, std::size_t u, std::size_t t) {
  if (u >= g.size() || t >= g.size()) throw ValidationError("label out of range");
  if (t == g.trivial_spherical) throw ValidationError("trivial spherical function gives a = 0");
  ClassSumFamily f;
  f.scale = g.coset_ratio[u];
  f.generator = u;
  f.identity = g.identity_coset;
  for (std::size_t r = 0; r < g.size(); ++r) {
    f.weight.push_back(Rational(1) / g.coset_ratio[r]);
    f.ratio.push_back(g.omega(t, r));
  }
  fill_walk(f, [&](int m) { return gelfand_walk(g, u, m).values; });
  return f;
}

ClassSumFamily twisted_family(int n, const Partition& mu, const Partition& tau) {
  const auto& t = spin_character_table(n);
  std::size_t mi = t.odd_index(mu), ti = t.strict_index(tau);
  if (ti == 0) throw ValidationError("tau = (n) gives a = 0");
  ClassSumFamily f;
  BigInt nf = factorial(n);
  f.scale = Rational(nf * pow2(static_cast<unsigned long>(n - mu.length())), z_of(mu));
  f.generator = mi;
  f.identity = t.identity_class();
  for (std::size_t v = 0; v < t.odd().size(); ++v) {
    const auto& nu = t.odd()[v];
    f.weight.emplace_back(z_of(nu), nf * pow2(static_cast<unsigned long>(n - nu.length())));
    f.ratio.push_back(t.ratio(ti, v));
  }
  fill_walk(f, [&](int m) { return twisted_walk_coefficients(t, mu, m); });
  return f;
}

ClassSumFamily scheme_family(const AssociationScheme& sc, int s, int t) {
  if (s < 0 || s > sc.n_classes || t < 1 || t > sc.n_classes) throw ValidationError("class index out of range");
  ClassSumFamily f;
  f.scale = Rational(sc.valencies[static_cast<std::size_t>(s)]);
  f.generator = static_cast<std::size_t>(s);
  f.identity = 0;
  for (int r = 0; r <= sc.n_classes; ++r) {
    Rational v = Rational(sc.valencies[static_cast<std::size_t>(r)]);
    f.weight.push_back(Rational(1) / v);
    f.ratio.push_back(sc.phi(static_cast<std::size_t>(r), static_cast<std::size_t>(t)) / v);
  }
  fill_walk(f, [&](int m) { return scheme_walk_probabilities(sc, s, m); });
  return f;
}

ExchangeableStats project_twisted(const ExchangeableStats& j, int n, const Partition& mu) {
  if (n < 3) throw ValidationError("projection needs n >= 3");
  Rational f(n - 2, n);
  ExchangeableStats st;
  st.a = Rational(1) - Rational(mu.multiplicity(1), n);
  if (st.a != f * j.a) throw StructureError("projection applies only to tau = (n-1,1)");
  st.second_moment = f * j.second_moment;
  st.cond_var = f * f * j.cond_var;
  st.fourth_moment = f * j.fourth_moment;
  return st;
}

namespace {

const std::pair<BoundVariant, const char*> kVariantNames[] = {
    {BoundVariant::steinbound, "steinbound"}, {BoundVariant::rinrot, "rinrot"},
    {BoundVariant::main1, "main1"},           {BoundVariant::main2, "main2"},
    {BoundVariant::asmains, "asmains"},       {BoundVariant::limgroup, "limgroup"},
    {BoundVariant::hypbound1, "hypbound1"},   {BoundVariant::hypbound2, "hypbound2"},
    {BoundVariant::CLTgel, "CLTgel"},         {BoundVariant::projerror, "projerror"},
    {BoundVariant::hamming, "hamming"},
};

}  // namespace

std::string to_string(BoundVariant v) {
  for (auto& [k, name] : kVariantNames)
    if (k == v) return name;
  throw std::logic_error("unknown variant");
}

BoundVariant parse_variant(const std::string& s) {
  for (auto& [k, name] : kVariantNames)
    if (s == name) return k;
  throw ValidationError("unknown bound variant '" + s + "'");
}

bool is_rinrot_form(BoundVariant v) { return v == BoundVariant::rinrot || v == BoundVariant::hypbound2; }

BoundReport assemble_bound(BoundVariant variant, const ExchangeableStats& st) {
  if (st.a.sign() <= 0) throw ValidationError("bound needs a > 0");
  if (st.a > Rational(1)) throw ValidationError("bound needs a <= 1");
  if (st.cond_var.sign() < 0 || st.fourth_moment.sign() < 0) throw StructureError("negative variance or fourth moment");
  BoundReport rep;
  rep.variant = variant;
  rep.stats = st;
  const Rational& a = st.a;
  rep.terms.push_back({1, st.cond_var / (a * a), 2, 0});
  if (is_rinrot_form(variant)) {
    if (!st.max_step) throw ValidationError("rinrot needs a finite max step A");
    Rational a2 = st.max_step->square();
    rep.terms.push_back({Rational(41, 100) / a, a2 * a2 * a2, 2, 0});
    rep.terms.push_back({Rational(3, 2), a2, 2, 0});
  } else if (variant == BoundVariant::steinbound) {
    // (2 pi)^{-1/4} sqrt(E|W'-W|^3 / a), E|W'-W|^3 <= sqrt(E2 E4).
    rep.terms.push_back({1, st.second_moment * st.fourth_moment / (Rational(2) * a * a), 4, Rational(-1, 4)});
  } else {
    // Closed-form variants assume E2 = 2a: pi^{-1/4} (E4/a)^{1/4}.
    if (st.second_moment != Rational(2) * a) throw StructureError("E(W'-W)^2 != 2a for a closed-form bound");
    rep.terms.push_back({1, st.fourth_moment / a, 4, Rational(-1, 4)});
  }
  long double total = 0;
  for (auto& t : rep.terms) total += t.value_long();
  rep.total = static_cast<double>(total);
  return rep;
}

void attach_closed_form(BoundReport& rep, std::vector<RadicalTerm> terms) {
  long double total = 0;
  for (auto& t : terms) total += t.value_long();
  rep.closed_form = std::move(terms);
  rep.closed_form_total = static_cast<double>(total);
}

}  // namespace stein
