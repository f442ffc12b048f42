#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stein/error.hpp"
#include "stein/gelfand.hpp"
#include "stein/spectral_sum.hpp"
#include "stein/symmetric_group.hpp"
#include "stein/walk.hpp"

using namespace stein;

TEST_CASE("transposition walk on S_3 by hand") {
  // two transpositions: identity with 1/3, a 3-cycle with 2/3
  auto w = group_walk(3, Partition({2, 1}), 2);
  CHECK(w.at("(1,1,1)") == Rational(1, 3));
  CHECK(w.at("(3)") == Rational(2, 3));
  CHECK(w.at("(2,1)") == Rational(0));
  auto w3 = group_walk(3, Partition({2, 1}), 3);
  CHECK(w3.at("(2,1)") == Rational(1));
}

TEST_CASE("spectral sums match enumeration") {
  for (int n = 2; n <= 5; ++n)
    for (auto& c : enumerate_partitions(n))
      for (int m = 0; m <= 4; ++m) CHECK(group_walk(n, c, m).values == group_walk_bruteforce(n, c, m).values);
  for (int n = 1; n <= 10; ++n) {
    auto g = hypercube_pair(n);
    for (int u = 0; u <= n; ++u)
      for (int m = 0; m <= 4; ++m) CHECK(gelfand_walk(g, static_cast<std::size_t>(u), m).values == hypercube_walk_bruteforce(n, u, m).values);
  }
  for (int d = 1; d <= 4; ++d)
    for (int q = 2; q <= 3; ++q) {
      auto rel = hamming_relations(d, q);
      auto s = hamming_scheme(d, q);
      for (int t = 0; t <= d; ++t)
        for (int m = 0; m <= 4; ++m) CHECK(scheme_walk(s, t, m).values == scheme_walk_bruteforce(rel, t, m));
    }
}

TEST_CASE("matchings p2 both ways") {
  for (int n = 2; n <= 5; ++n) {
    auto g = matchings_pair(n);
    for (int i = 2; i <= std::min(n, 3); ++i) {
      auto comb = matchings_p2_combinatorial(n, i);
      auto spec = gelfand_walk(g, g.label_index(Partition::hook_class(n, i).str()), 2);
      for (std::size_t r = 0; r < g.size(); ++r) CHECK(spec.values[r] == comb.at(g.partitions[r]));
    }
  }
}

TEST_CASE("group analog of the scheme identities") {
  for (int n = 4; n <= 9; ++n) {
    const auto& t = character_table(n);
    for (int i = 2; i <= n; ++i) {
      Partition c = Partition::hook_class(n, i);
      auto p2 = group_walk(n, c, 2).values;
      Rational s = 0;
      for (std::size_t k = 0; k < t.size(); ++k) s += p2[k] * p2[k] / Rational(t.class_size(k));
      CHECK(group_walk(n, c, 4).values[t.identity_class()] == s);
      CHECK(group_walk(n, c, 3).values[t.index_of(c)] == Rational(t.class_size(t.index_of(c))) * s);
    }
  }
}

TEST_CASE("shared spectral routine") {
  // p_m(r) = norm[r] sum_i weight_i eigen_i^m basis(i, r), evaluated by hand
  SpectralData d;
  d.weight = {Rational(1, 4), Rational(3, 4)};
  d.eigen = {Rational(1), Rational(-1, 3)};
  d.basis = Matrix<Rational>(2, 2);
  d.basis(0, 0) = d.basis(0, 1) = Rational(1);
  d.basis(1, 0) = Rational(1);
  d.basis(1, 1) = Rational(-1, 3);
  d.norm = {Rational(1), Rational(3)};
  CHECK(spectral_sum(d, 0) == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(spectral_sum(d, 1) == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(spectral_sum(d, 2) == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK_THROWS_AS(spectral_sum(d, -1), ValidationError);
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(group_walk_bruteforce(8, Partition::hook_class(8, 2), 2), ResourceError);
  CHECK_THROWS_AS(hypercube_walk_bruteforce(17, 1, 2), ResourceError);
}
