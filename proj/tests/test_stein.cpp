#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "stein/distributions.hpp"
#include "stein/error.hpp"
#include "stein/pipeline.hpp"
#include "stein/stein.hpp"

using namespace stein;

namespace {

const long double kPi = 3.14159265358979323846264338328L;

}  // namespace

TEST_CASE("direct statistics on the two-state chain") {
  ChainKernel k{"flip", {"-", "+"}, {Rational(1, 2), Rational(1, 2)}, Matrix<Rational>(2, 2), false};
  k.k(0, 0) = k.k(1, 1) = Rational(3, 4);
  k.k(0, 1) = k.k(1, 0) = Rational(1, 4);
  auto s = stats_direct(k, Statistic{1, {Rational(-1), Rational(1)}});
  CHECK(s.a == Rational(1, 2));
  CHECK(s.second_moment == Rational(1));
  CHECK(s.cond_var == Rational(0));
  CHECK(s.fourth_moment == Rational(4));
  CHECK(direct_moment(k, Statistic{1, {Rational(-1), Rational(1)}}, 6) == Rational(16));
  CHECK_THROWS_AS(stats_direct(k, Statistic{1, {Rational(1), Rational(1)}}), StructureError);
}

TEST_CASE("bound assembly by hand") {
  ExchangeableStats s;
  s.a = Rational(1, 2);
  s.second_moment = Rational(1);
  s.cond_var = Rational(1, 16);
  s.fourth_moment = Rational(3);
  auto b = assemble_bound(BoundVariant::steinbound, s);
  REQUIRE(b.terms.size() == 2);
  // sqrt(Var)/a and (E2 E4 /(2 a^2 pi))^{1/4}... as displayed
  double t1 = std::sqrt(1.0 / 16) / 0.5;
  double t2 = std::pow(1.0 * 3.0 / (2.0 * 0.25), 0.25) * std::pow(static_cast<double>(kPi), -0.25);
  CHECK(b.terms[0].value() == doctest::Approx(t1).epsilon(1e-14));
  CHECK(b.terms[1].value() == doctest::Approx(t2).epsilon(1e-14));
  CHECK(b.total == doctest::Approx(t1 + t2).epsilon(1e-14));

  s.max_step = ScaledRoot(Rational(1, 2));
  auto r = assemble_bound(BoundVariant::rinrot, s);
  REQUIRE(r.terms.size() == 3);
  double A = 0.5;
  CHECK(r.total == doctest::Approx(t1 + 0.41 * A * A * A / 0.5 + 1.5 * A).epsilon(1e-14));

  s.a = Rational(0);
  CHECK_THROWS_AS(assemble_bound(BoundVariant::steinbound, s), ValidationError);
  s.a = Rational(3, 2);
  CHECK_THROWS_AS(assemble_bound(BoundVariant::steinbound, s), ValidationError);
  s.a = Rational(1, 2);
  s.max_step.reset();
  CHECK_THROWS_AS(assemble_bound(BoundVariant::rinrot, s), ValidationError);
  CHECK_THROWS_AS(parse_variant("nope"), ValidationError);
  for (auto v : {BoundVariant::steinbound, BoundVariant::rinrot, BoundVariant::main1, BoundVariant::main2, BoundVariant::asmains,
                 BoundVariant::limgroup, BoundVariant::hypbound1, BoundVariant::hypbound2, BoundVariant::CLTgel, BoundVariant::projerror,
                 BoundVariant::hamming})
    CHECK(parse_variant(to_string(v)) == v);
}

TEST_CASE("hypercube bounds match the displayed closed forms") {
  for (int n : {2, 3, 10, 60, 100}) {
    auto r1 = hypercube_pipeline(n, BoundVariant::hypbound1);
    CHECK(r1.bound.terms[0].value() == 0.0);
    double closed = std::pow(8.0 / (static_cast<double>(kPi) * n), 0.25);
    CHECK(std::abs(r1.bound.total - closed) < 1e-12);
    CHECK(r1.dominated);
    auto r2 = hypercube_pipeline(n, BoundVariant::hypbound2);
    CHECK(r2.bound.stats.a == Rational(2, n));
    CHECK(r2.bound.stats.max_step->square() == Rational(4, n));
    CHECK(r2.bound.total <= 5.0 / std::sqrt(n) + 1e-12);
    CHECK(r2.dominated);
  }
}

TEST_CASE("Hamming bound formulas") {
  for (int d : {4, 9, 20})
    for (int q : {2, 3, 4}) {
      auto r = hamming_pipeline(d, q, BoundVariant::hamming);
      double qd = (q - 1.0) * d;
      double want = std::sqrt((q - 2.0) * (q - 2.0) / qd) + std::pow(2.0 * q * q / qd, 0.25) / std::pow(static_cast<double>(kPi), 0.25);
      CHECK(std::abs(r.bound.total - want) < 1e-12);
      auto rr = hamming_pipeline(d, q, BoundVariant::rinrot);
      double major = std::sqrt(static_cast<double>(q) / d) + (0.41 * q * q + 1.5 * q) / std::sqrt(qd);
      CHECK(std::abs(*rr.bound.closed_form_total - major) < 1e-12);
      CHECK(rr.bound.total <= major + 1e-12);
    }
}

TEST_CASE("closed forms agree with direct sums") {
  for (int n = 3; n <= 6; ++n) {
    Partition tau({n - 1, 1});
    auto k = group_chain(n, tau);
    for (int i = 2; i <= n; ++i) {
      Partition c = Partition::hook_class(n, i);
      auto f = group_family(n, c, tau);
      CHECK(f.stats().same_moments(stats_direct(k, kerov_statistic(n, c).w)));
    }
  }
  for (int n = 4; n <= 7; ++n) {
    Partition mu = Partition::hook_class(n, 3);
    auto j = twisted_family(n, mu, Partition({n - 1, 1})).stats();
    auto direct = stats_direct(schur_down_up_chain(n), spin_statistic(n, mu).w);
    CHECK(project_twisted(j, n, mu).same_moments(direct));
  }
}

TEST_CASE("pipelines dominate") {
  for (int n = 6; n <= 9; ++n) CHECK(limgroup_pipeline(n, 2).dominated);
  CHECK(cltgel_pipeline(4, 2).dominated);
  CHECK(projerror_pipeline(7, 1).dominated);
  CHECK_THROWS_AS(projerror_pipeline(4, 2), ValidationError);
  auto rows = scaling_sweep(BoundVariant::hypbound1, 0, 2, 12);
  REQUIRE(rows.size() == 11);
  for (auto& r : rows) {
    CHECK(r.dominated);
    CHECK(std::isfinite(r.total_scaled));
  }
  CHECK_THROWS_AS(scaling_sweep(BoundVariant::main1, 2, 3, 5), ValidationError);
}
