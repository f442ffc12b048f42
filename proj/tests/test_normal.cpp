#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stein/distributions.hpp"
#include "stein/normal.hpp"
#include "stein/spectrum.hpp"

using namespace stein;

namespace {

// Phi(x) = 1/2 + int_0^x phi, composite Simpson with 20000 panels.
double simpson_cdf(double x) {
  const int n = 20000;
  double h = x / n, s = 0;
  auto f = [](double t) { return std::exp(-t * t / 2) / std::sqrt(2 * M_PI); };
  for (int k = 0; k <= n; ++k) {
    double w = (k == 0 || k == n) ? 1 : (k % 2 ? 4 : 2);
    s += w * f(k * h);
  }
  return 0.5 + s * h / 3;
}

}  // namespace

TEST_CASE("normal cdf against quadrature") {
  for (double x : {-6.0, -3.2, -1.0, -0.25, 0.0, 0.5, 1.96, 4.0})
    CHECK(std::abs(normal_cdf(x) - simpson_cdf(x)) < 1e-12);
  CHECK(normal_cdf(-40) >= 0.0);
  CHECK(normal_cdf(-40) < 1e-300);
}

TEST_CASE("kolmogorov distance of a symmetric coin") {
  std::vector<Rational> pi{Rational(1, 2), Rational(1, 2)};
  auto d = SpectrumAtomList::from_statistic(Statistic{1, {Rational(-1), Rational(1)}}, pi);
  CHECK(std::abs(kolmogorov_distance(d) - (normal_cdf(1) - 0.5)) < 1e-15);
}

TEST_CASE("atom merging keeps mass") {
  std::vector<Rational> pi{Rational(1, 6), Rational(1, 3), Rational(1, 4), Rational(1, 4)};
  Statistic w{2, {Rational(1), Rational(-1), Rational(1), Rational(0)}};
  auto d = SpectrumAtomList::from_statistic(w, pi);
  REQUIRE(d.size() == 3);
  CHECK(d.atoms()[0].probability == Rational(1, 3));
  CHECK(d.atoms()[1].probability == Rational(1, 4));
  CHECK(d.atoms()[2].probability == Rational(5, 12));
  CHECK(d.atoms()[2].value == ScaledRoot(Rational(1), 2));
  std::vector<Rational> bad{Rational(1, 2), Rational(1, 3), Rational(0), Rational(0)};
  CHECK_THROWS(SpectrumAtomList::from_statistic(w, bad));
}

TEST_CASE("standardized statistics") {
  for (int n = 2; n <= 9; ++n)
    for (int i = 2; i <= n; ++i) {
      auto d = w_distribution(kerov_statistic(n, Partition::hook_class(n, i)));
      CHECK(d.mean_coefficient().is_zero());
      CHECK(d.second_moment() == Rational(1));
    }
  for (int n = 1; n <= 30; ++n) {
    auto d = w_distribution(spherical_statistic(hypercube_pair(n), 1));
    CHECK(d.size() == static_cast<std::size_t>(n + 1));
    CHECK(d.atoms()[0].probability == Rational(BigInt(1), pow2(static_cast<unsigned long>(n))));
  }
  for (int d = 1; d <= 5; ++d)
    for (int q = 2; q <= 4; ++q)
      for (int s = 1; s <= d; ++s) CHECK(w_distribution(scheme_statistic(hamming_scheme(d, q), s)).second_moment() == Rational(1));
  for (int n = 3; n <= 9; ++n)
    for (auto& mu : enumerate_partitions(n, PartitionFilter::odd)) {
      if (mu.multiplicity(1) == n) continue;
      CHECK(w_distribution(spin_statistic(n, mu)).second_moment() == Rational(1));
    }
}
