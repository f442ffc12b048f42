#pragma once

#include <map>
#include <vector>

#include "stein/matrix.hpp"
#include "stein/partition.hpp"

namespace stein {

// Element of Gamma in the odd power-sum basis: sum_mu c_mu p_mu, mu odd.
class OddPowerSumPolynomial {
 public:
  using Terms = std::map<Partition, Rational>;

  OddPowerSumPolynomial() = default;
  static OddPowerSumPolynomial constant(const Rational& c);
  static OddPowerSumPolynomial power_sum(const Partition& odd, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  Rational coefficient(const Partition& mu) const;
  bool is_zero() const { return terms_.empty(); }

  OddPowerSumPolynomial& operator+=(const OddPowerSumPolynomial& o);
  OddPowerSumPolynomial& operator-=(const OddPowerSumPolynomial& o);
  OddPowerSumPolynomial operator*(const OddPowerSumPolynomial& o) const;
  OddPowerSumPolynomial operator*(const Rational& c) const;
  friend OddPowerSumPolynomial operator+(OddPowerSumPolynomial a, const OddPowerSumPolynomial& b) { return a += b; }
  friend OddPowerSumPolynomial operator-(OddPowerSumPolynomial a, const OddPowerSumPolynomial& b) { return a -= b; }
  friend bool operator==(const OddPowerSumPolynomial& a, const OddPowerSumPolynomial& b) { return a.terms_ == b.terms_; }

  // (1/2) d/dp_1.
  OddPowerSumPolynomial p1_perp() const;

 private:
  void add(const Partition& mu, const Rational& c);
  Terms terms_;
};

// Q_r, the coefficient of t^r in exp(2 sum_{k odd} p_k t^k / k).
OddPowerSumPolynomial q_generator(int r);
OddPowerSumPolynomial schur_Q(const Partition& strict);
inline OddPowerSumPolynomial schur_P(const Partition& strict) {
  return schur_Q(strict) * Rational(1, pow2(static_cast<unsigned long>(strict.length())));
}

// n!/prod lambda_i! * prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j).
BigInt shifted_tableaux_count(const Partition& strict);

constexpr int kMaxSpinDegree = 20;

// X(lambda, mu) for lambda in DP(n), mu in OP(n).
class SpinCharacterTable {
 public:
  explicit SpinCharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& strict() const { return strict_; }
  const std::vector<Partition>& odd() const { return odd_; }
  std::size_t strict_index(const Partition& p) const;
  std::size_t odd_index(const Partition& p) const;
  std::size_t identity_class() const { return odd_.size() - 1; }  // (1^n)

  long long value(std::size_t lambda, std::size_t mu) const { return x_(lambda, mu); }
  long long g(std::size_t lambda) const { return x_(lambda, identity_class()); }
  Rational ratio(std::size_t lambda, std::size_t mu) const { return Rational(value(lambda, mu)) / Rational(g(lambda)); }
  // 2^{n-l} g^2 / n!
  Rational plancherel(std::size_t lambda) const;

 private:
  int n_;
  std::vector<Partition> strict_, odd_;
  PartitionIndex strict_idx_, odd_idx_;
  Matrix<long long> x_;
};

const SpinCharacterTable& spin_character_table(int n);

// p_m(K~_nu) for every nu in OP(n), aligned with table.odd(). Coefficients,
// not probabilities.
std::vector<Rational> twisted_walk_coefficients(const SpinCharacterTable& table, const Partition& mu, int m);

}  // namespace stein
