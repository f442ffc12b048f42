#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "stein/error.hpp"
#include "stein/partition.hpp"
#include "stein/radical.hpp"
#include "stein/rational.hpp"

using namespace stein;

TEST_CASE("rational stays in lowest terms with positive denominator") {
  Rational a(BigInt(6), BigInt(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(-2, 6).str() == "-1/3");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("big integer helpers") {
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 5) == 0);
  CHECK(pow2(70) == BigInt("1180591620717411303424"));
  CHECK(ipow(BigInt(3), 4) == 81);
}

TEST_CASE("partition accessors") {
  Partition p({4, 2, 2, 1});
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(2) == 2);
  CHECK(p.multiplicity(3) == 0);
  CHECK(p.conjugate() == Partition({4, 3, 1, 1}));
  CHECK(p.arm({1, 1}) == 3);
  CHECK(p.leg({1, 1}) == 3);
  CHECK(p.str() == "(4,2,2,1)");
  CHECK(Partition::parse("(4,2,2,1)") == p);
  CHECK(Partition::hook_class(5, 3) == Partition({3, 1, 1}));
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
  CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
  CHECK(!Partition({2, 2}).is_strict());
  CHECK(Partition({5, 3, 1}).is_odd());
}

TEST_CASE("empty partition conventions") {
  Partition e;
  CHECK(e.length() == 0);
  CHECK(z_of(e) == 1);
  CHECK(jack_measure(e, Rational(2)) == Rational(1));
}

TEST_CASE("enumeration is reverse lexicographic and duplicate free") {
  // p(n) for n = 0..15
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (int n = 0; n <= 15; ++n) {
    auto all = enumerate_partitions(n);
    CHECK(static_cast<int>(all.size()) == counts[n]);
    std::set<std::vector<int>> seen;
    for (std::size_t k = 0; k < all.size(); ++k) {
      CHECK(all[k].size() == n);
      CHECK(seen.insert(all[k].parts()).second);
      if (k > 0) CHECK(all[k - 1].parts() > all[k].parts());
    }
  }
  CHECK(enumerate_partitions(4).front() == Partition({4}));
  CHECK(enumerate_partitions(4).back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("strict and odd partitions are equinumerous") {
  for (int n = 0; n <= 30; ++n)
    CHECK(enumerate_partitions(n, PartitionFilter::strict).size() == enumerate_partitions(n, PartitionFilter::odd).size());
}

TEST_CASE("class sizes partition the group") {
  for (int n = 0; n <= 12; ++n) {
    BigInt s = 0;
    for (auto& mu : enumerate_partitions(n)) s += class_size(mu);
    CHECK(s == factorial(n));
  }
  CHECK(z_of(Partition({2, 2, 1})) == 8);
  CHECK(class_size(Partition({3, 1, 1})) == 20);
}

TEST_CASE("jack measure sums to one") {
  for (int n = 0; n <= 10; ++n) {
    for (Rational alpha : {Rational(1), Rational(2), Rational(1, 3), Rational(7, 2)}) {
      Rational s = 0;
      for (auto& l : enumerate_partitions(n)) s += jack_measure(l, alpha);
      CHECK(s == Rational(1));
    }
  }
  // alpha = 1 is Plancherel: dim^2/n!
  for (auto& l : enumerate_partitions(7)) {
    BigInt d = hook_length_dimension(l);
    CHECK(jack_measure(l, Rational(1)) == Rational(d * d, factorial(7)));
  }
  CHECK_THROWS_AS(jack_measure(Partition({2}), Rational(0)), ValidationError);
}

TEST_CASE("hook length dimensions") {
  CHECK(hook_length_dimension(Partition({3, 2})) == 5);
  CHECK(hook_length_dimension(Partition({4, 2, 1})) == 35);
  CHECK(hook_length_dimension(Partition({3, 3, 2, 1})) == 168);
}

TEST_CASE("scaled roots are exact") {
  ScaledRoot r(Rational(1), 12);
  CHECK(r.coefficient() == Rational(2));
  CHECK(r.radicand() == 3);
  CHECK(r.str() == "2/1*sqrt(3)");
  CHECK(ScaledRoot::sqrt_of(Rational(9, 4)).str() == "3/2");
  CHECK(ScaledRoot::sqrt_of(Rational(1, 8)) == ScaledRoot(Rational(1, 4), 2));
  CHECK(ScaledRoot(Rational(-1), 2) < ScaledRoot(Rational(1, 10), 3));
  CHECK(ScaledRoot(Rational(3), 2) > ScaledRoot(Rational(4), 1));
  CHECK(r.to_double() == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  RadicalTerm t{Rational(1), Rational(16), 4, Rational(0)};
  CHECK(t.value() == doctest::Approx(2.0).epsilon(1e-15));
}
