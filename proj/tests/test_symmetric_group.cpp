#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "stein/error.hpp"
#include "stein/symmetric_group.hpp"

using namespace stein;

namespace {

// Kostka number K_{lambda,mu} by filling the diagram row by row with a
// semistandard tableau of content mu.
long kostka(const Partition& lambda, const Partition& mu) {
  int rows = lambda.length();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
  std::vector<int> left(mu.parts());
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < lambda.part(r); ++c) cells.emplace_back(r, c);
  for (int r = 0; r < rows; ++r) t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.part(r)), 0);
  long count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= mu.length(); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --left[static_cast<std::size_t>(v - 1)];
      go(k + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    t[r][c] = 0;
  };
  go(0);
  return count;
}

// Fixed tabloids of shape mu under a permutation of cycle type rho: ways to
// drop whole cycles into rows so each row j receives mu_j points.
long fixed_tabloids(const Partition& rho, const Partition& mu) {
  std::vector<int> room(mu.parts());
  long count = 0;
  std::function<void(int)> go = [&](int k) {
    if (k == rho.length()) {
      ++count;
      return;
    }
    for (auto& r : room)
      if (r >= rho.part(k)) {
        r -= rho.part(k);
        go(k + 1);
        r += rho.part(k);
      }
  };
  go(0);
  return count;
}

}  // namespace

TEST_CASE("hand values") {
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(character(Partition({3, 1}), Partition({2, 2})) == -1);
  CHECK(character(Partition({2, 2}), Partition({3, 1})) == -1);
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})) == 5);
  CHECK(character(Partition({1, 1, 1, 1}), Partition({2, 1, 1})) == -1);
  CHECK(character(Partition({3, 3}), Partition({3, 3})) == 2);
}

TEST_CASE("Young permutation characters from Kostka numbers") {
  // 1_{S_mu}^{S_n}(rho) = sum_lambda K_{lambda mu} chi^lambda(rho)
  for (int n = 1; n <= 6; ++n) {
    auto parts = enumerate_partitions(n);
    for (auto& mu : parts)
      for (auto& rho : parts) {
        long s = 0;
        for (auto& lam : parts) s += kostka(lam, mu) * character(lam, rho);
        CHECK(s == fixed_tabloids(rho, mu));
      }
  }
}

TEST_CASE("table invariants") {
  for (int n = 1; n <= 10; ++n) {
    const auto& t = character_table(n);
    BigInt sq = 0;
    for (std::size_t a = 0; a < t.size(); ++a) {
      CHECK(big(t.dimension(a)) == hook_length_dimension(t.partitions()[a]));
      sq += big(t.dimension(a)) * big(t.dimension(a));
      // sign character times chi^lambda is chi^{lambda'}
      std::size_t conj = t.index_of(t.partitions()[a].conjugate());
      std::size_t sgn = t.index_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
      for (std::size_t c = 0; c < t.size(); ++c) CHECK(t.value(conj, c) == t.value(sgn, c) * t.value(a, c));
    }
    CHECK(sq == t.group_order());
    if (n >= 2) {
      std::size_t sd = t.index_of(Partition({n - 1, 1}));
      for (std::size_t c = 0; c < t.size(); ++c) CHECK(t.value(sd, c) == t.partitions()[c].multiplicity(1) - 1);
    }
    CHECK(t.partitions()[t.identity_class()] == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
}

TEST_CASE("plancherel measure and the ratio spectrum") {
  auto p = plancherel(6);
  Rational s = 0;
  for (auto& x : p.probabilities) s += x;
  CHECK(s == Rational(1));
  // transposition ratio on S_5 takes 7 distinct values, none merged
  auto spec = character_ratio_spectrum(5, Partition({2, 1, 1, 1}));
  CHECK(spec.size() == 7);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(character_table(kMaxCharacterDegree + 1), ResourceError);
  CHECK_THROWS_AS(character(Partition({2}), Partition({1})), ValidationError);
}
