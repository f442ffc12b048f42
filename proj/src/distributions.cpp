#include "stein/distributions.hpp"

#include "stein/error.hpp"
#include "stein/spin.hpp"
#include "stein/symmetric_group.hpp"

namespace stein {

Statistic scaled_statistic(const Rational& square, const std::vector<Rational>& coeffs) {
  if (square.sign() <= 0) throw ValidationError("statistic scale must be positive");
  ScaledRoot root = ScaledRoot::sqrt_of(square);
  Statistic w{root.radicand(), {}};
  for (auto& c : coeffs) w.coefficients.push_back(c * root.coefficient());
  return w;
}

StatisticOnMeasure kerov_statistic(int n, const Partition& c) {
  if (c.size() != n) throw ValidationError("class " + c.str() + " is not a class of S_" + std::to_string(n));
  const auto& t = character_table(n);
  std::size_t ci = t.index_of(c);
  StatisticOnMeasure s;
  auto pm = plancherel(n);
  std::vector<Rational> coeffs;
  for (std::size_t a = 0; a < t.size(); ++a) {
    s.states.push_back(t.partitions()[a].str());
    coeffs.push_back(t.ratio(a, ci));
  }
  s.pi = pm.probabilities;
  s.w = scaled_statistic(Rational(t.class_size(ci)), coeffs);
  return s;
}

StatisticOnMeasure spherical_statistic(const GelfandPairData& g, std::size_t u) {
  if (u >= g.size()) throw ValidationError("coset label out of range");
  StatisticOnMeasure s;
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    s.states.push_back(g.labels[i]);
    s.pi.push_back(g.plancherel(i));
    coeffs.push_back(g.omega(i, u));
  }
  s.w = scaled_statistic(g.coset_ratio[u], coeffs);
  return s;
}

StatisticOnMeasure spin_statistic(int n, const Partition& mu) {
  const auto& t = spin_character_table(n);
  std::size_t mi = t.odd_index(mu);
  StatisticOnMeasure s;
  std::vector<Rational> coeffs;
  for (std::size_t a = 0; a < t.strict().size(); ++a) {
    s.states.push_back(t.strict()[a].str());
    s.pi.push_back(t.plancherel(a));
    coeffs.push_back(t.ratio(a, mi));
  }
  Rational square(factorial(n), z_of(mu) * pow2(static_cast<unsigned long>(n - mu.length())));
  s.w = scaled_statistic(square, coeffs);
  return s;
}

StatisticOnMeasure scheme_statistic(const AssociationScheme& sc, int sidx) {
  if (sidx < 0 || sidx > sc.n_classes) throw ValidationError("class index s out of range");
  auto su = static_cast<std::size_t>(sidx);
  Rational vs = Rational(sc.valencies[su]);
  StatisticOnMeasure s;
  std::vector<Rational> coeffs;
  for (int i = 0; i <= sc.n_classes; ++i) {
    s.states.push_back(std::to_string(i));
    s.pi.push_back(sc.plancherel(i));
    coeffs.push_back(sc.phi(su, static_cast<std::size_t>(i)) / vs);
  }
  s.w = scaled_statistic(vs, coeffs);
  return s;
}

SpectrumAtomList w_distribution(const StatisticOnMeasure& stat) {
  auto list = SpectrumAtomList::from_statistic(stat.w, stat.pi);
  if (!list.mean_coefficient().is_zero()) throw StructureError("degenerate statistic: E(W) != 0");
  if (list.second_moment() != Rational(1)) throw StructureError("degenerate statistic: E(W^2) != 1");
  return list;
}

}  // namespace stein
