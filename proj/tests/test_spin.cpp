#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "stein/error.hpp"
#include "stein/spin.hpp"

using namespace stein;

namespace {

using P = OddPowerSumPolynomial;

// Standard shifted tableaux counted by removing corners one at a time.
long count_shifted(std::vector<int> parts) {
  int total = 0;
  for (int p : parts) total += p;
  if (total == 0) return 1;
  long c = 0;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    bool corner = r + 1 == parts.size() ? true : parts[r + 1] < parts[r] - 1;
    if (!corner) continue;
    auto next = parts;
    if (--next[r] == 0) next.pop_back();
    c += count_shifted(next);
  }
  return c;
}

}  // namespace

TEST_CASE("q generators by hand") {
  Partition one({1}), three({3}), ones3({1, 1, 1});
  CHECK(q_generator(0) == P::constant(1));
  CHECK(q_generator(1) == P::power_sum(one, 2));
  CHECK(q_generator(2) == P::power_sum(Partition({1, 1}), 2));
  CHECK(q_generator(3) == P::power_sum(ones3, Rational(4, 3)) + P::power_sum(three, Rational(2, 3)));
  CHECK(schur_Q(Partition({2, 1})) == q_generator(2) * q_generator(1) - q_generator(3) * Rational(2));
}

TEST_CASE("polynomial algebra") {
  P a = P::power_sum(Partition({3}), 2) + P::constant(1);
  P b = P::power_sum(Partition({1}), -1);
  CHECK((a * b).coefficient(Partition({3, 1})) == Rational(-2));
  CHECK((a - a).is_zero());
  // (1/2) d/dp1 of p1^3 is (3/2) p1^2
  CHECK(P::power_sum(Partition({1, 1, 1})).p1_perp() == P::power_sum(Partition({1, 1}), Rational(3, 2)));
  CHECK(P::power_sum(Partition({3})).p1_perp().is_zero());
}

TEST_CASE("g from characters, the product formula and tableaux") {
  CHECK(shifted_tableaux_count(Partition({3, 2})) == 2);
  CHECK(shifted_tableaux_count(Partition({4, 2, 1})) == 7);
  for (int n = 1; n <= 12; ++n) {
    const auto& t = spin_character_table(n);
    Rational mass = 0;
    for (std::size_t a = 0; a < t.strict().size(); ++a) {
      CHECK(big(t.g(a)) == shifted_tableaux_count(t.strict()[a]));
      if (n <= 9) CHECK(t.g(a) == count_shifted(t.strict()[a].parts()));
      mass += t.plancherel(a);
    }
    CHECK(mass == Rational(1));
    CHECK(t.strict().size() == t.odd().size());
    CHECK(t.odd()[t.identity_class()] == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
}

TEST_CASE("small tables") {
  // n = 3: rows (3), (2,1); columns (3), (1,1,1)
  const auto& t = spin_character_table(3);
  std::size_t r3 = t.strict_index(Partition({3})), r21 = t.strict_index(Partition({2, 1}));
  std::size_t c3 = t.odd_index(Partition({3})), c111 = t.odd_index(Partition({1, 1, 1}));
  CHECK(t.value(r3, c3) == 1);
  CHECK(t.value(r3, c111) == 1);
  CHECK(t.value(r21, c111) == 1);
  CHECK(t.value(r21, c3) == -2);
}

TEST_CASE("twisted walk coefficients") {
  const auto& t = spin_character_table(5);
  Partition mu({3, 1, 1});
  auto p0 = twisted_walk_coefficients(t, mu, 0);
  for (std::size_t v = 0; v < p0.size(); ++v) CHECK(p0[v] == Rational(v == t.identity_class() ? 1 : 0));
  auto p1 = twisted_walk_coefficients(t, mu, 1);
  for (std::size_t v = 0; v < p1.size(); ++v) CHECK(p1[v] == Rational(t.odd()[v] == mu ? 1 : 0));
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(spin_character_table(kMaxSpinDegree + 1), ResourceError);
  CHECK_THROWS_AS(schur_Q(Partition({2, 2})), ValidationError);
}
