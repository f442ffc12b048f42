#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stein/chain.hpp"
#include "stein/distributions.hpp"
#include "stein/error.hpp"
#include "stein/spin.hpp"
#include "stein/symmetric_group.hpp"

using namespace stein;

namespace {

ChainKernel two_state(const Rational& p) {
  ChainKernel k{"flip", {"-", "+"}, {Rational(1, 2), Rational(1, 2)}, Matrix<Rational>(2, 2), false};
  k.k(0, 0) = k.k(1, 1) = Rational(1) - p;
  k.k(0, 1) = k.k(1, 0) = p;
  return k;
}

}  // namespace

TEST_CASE("two-state chain by hand") {
  auto k = two_state(Rational(1, 4));
  Statistic w{1, {Rational(-1), Rational(1)}};
  auto a = audit(k, w);
  CHECK(a.passed());
  CHECK(*a.a == Rational(1, 2));
  CHECK(a.second_moment_w == Rational(1));
  CHECK(a.max_step == ScaledRoot(Rational(2)));
  CHECK(eigen_scalar(k, {Rational(-1), Rational(1)}) == Rational(1, 2));
  CHECK(eigen_scalar(k, {Rational(1), Rational(1)}) == Rational(1));
  CHECK(!eigen_scalar(k, {Rational(0), Rational(1)}));
}

TEST_CASE("audit finds broken rows, balance and linearity") {
  auto k = two_state(Rational(1, 4));
  k.k(0, 0) = Rational(1, 2);
  auto a = audit(k, Statistic{1, {Rational(-1), Rational(1)}});
  CHECK(a.max_row_deviation == Rational(1, 4));
  CHECK(!a.passed());

  ChainKernel three{"lazy", {"a", "b", "c"}, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}, Matrix<Rational>(3, 3, Rational(1, 3)), false};
  auto nl = audit(three, Statistic{1, {Rational(-1), Rational(0), Rational(1)}});
  CHECK(nl.passed());
  CHECK(*nl.a == Rational(1));
  three.k(0, 0) = Rational(1, 2);
  three.k(0, 1) = Rational(1, 6);
  auto bal = audit(three, Statistic{1, {Rational(-1), Rational(0), Rational(1)}});
  CHECK(bal.max_row_deviation.is_zero());
  CHECK(!bal.balance_residual.is_zero());
  CHECK(!bal.passed());

  // W = indicator-ish statistic on the uniform 3-state chain is not linear under a path walk
  ChainKernel path{"path", {"a", "b", "c"}, {Rational(1, 4), Rational(1, 2), Rational(1, 4)}, Matrix<Rational>(3, 3), false};
  path.k(0, 1) = path.k(2, 1) = Rational(1);
  path.k(1, 0) = path.k(1, 2) = Rational(1, 2);
  auto lin = audit(path, Statistic{1, {Rational(1), Rational(-1, 2), Rational(1)}});
  CHECK(lin.linearity == Linearity::nonlinear);
}

TEST_CASE("group chain entries for S_3 by hand") {
  // L_{(2,1)}: lambda -> rho with probability dim rho / (dim lambda dim tau) * mult
  auto k = group_chain(3, Partition({2, 1}));
  const auto& t = character_table(3);
  std::size_t s3 = t.index_of(Partition({3})), s21 = t.index_of(Partition({2, 1})), s111 = t.index_of(Partition({1, 1, 1}));
  CHECK(k.k(s3, s21) == Rational(1));
  CHECK(k.k(s21, s3) == Rational(1, 4));
  CHECK(k.k(s21, s21) == Rational(1, 2));
  CHECK(k.k(s21, s111) == Rational(1, 4));
  CHECK(k.k(s111, s21) == Rational(1));
}

TEST_CASE("every desk-scale chain passes the audit") {
  for (int n = 2; n <= 7; ++n)
    for (auto& tau : enumerate_partitions(n)) {
      if (tau.length() == 1) {
        CHECK_THROWS_AS(group_chain(n, tau), ValidationError);
        continue;
      }
      auto k = group_chain(n, tau);
      auto a = audit(k, Statistic{1, std::vector<Rational>(k.size(), Rational(0))});
      CHECK(a.max_row_deviation.is_zero());
      CHECK(a.balance_residual.is_zero());
      CHECK(a.nonnegative);
    }
  for (int n = 2; n <= 10; ++n) {
    auto l = schur_down_up_chain(n);
    auto a = audit(l, Statistic{1, std::vector<Rational>(l.size(), Rational(0))});
    CHECK(a.max_row_deviation.is_zero());
    CHECK(a.balance_residual.is_zero());
    CHECK(a.nonnegative);
  }
}

TEST_CASE("signed kernel") {
  auto j = twisted_signed_kernel(3, Partition({2, 1}));
  CHECK(j.is_signed);
  const auto& t = spin_character_table(3);
  std::size_t s21 = t.strict_index(Partition({2, 1}));
  CHECK(j.k(s21, s21) == Rational(-1));
  auto a = audit(j, spin_statistic(3, Partition({1, 1, 1})).w);
  CHECK(a.signed_kernel);
}

TEST_CASE("linearity constants") {
  for (int n = 3; n <= 7; ++n) {
    auto k = group_chain(n, Partition({n - 1, 1}));
    for (int i = 2; i <= n; ++i) {
      auto a = audit(k, kerov_statistic(n, Partition::hook_class(n, i)).w);
      REQUIRE(a.passed());
      CHECK(*a.a == Rational(i, n - 1));
    }
  }
  for (int d = 1; d <= 6; ++d)
    for (int q = 2; q <= 5; ++q) {
      auto s = hamming_scheme(d, q);
      auto a = audit(scheme_chain(s, 1), scheme_statistic(s, 1).w);
      REQUIRE(a.passed());
      CHECK(*a.a == Rational(q, (q - 1) * d));
    }
}
