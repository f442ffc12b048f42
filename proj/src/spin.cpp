#include "stein/spin.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "stein/error.hpp"
#include "stein/spectral_sum.hpp"

namespace stein {

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

OddPowerSumPolynomial OddPowerSumPolynomial::constant(const Rational& c) {
  return power_sum(Partition(), c);
}

OddPowerSumPolynomial OddPowerSumPolynomial::power_sum(const Partition& odd, const Rational& c) {
  if (!odd.is_odd()) throw ValidationError("p_mu with an even part is outside the odd basis");
  OddPowerSumPolynomial p;
  p.add(odd, c);
  return p;
}

void OddPowerSumPolynomial::add(const Partition& mu, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational OddPowerSumPolynomial::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

OddPowerSumPolynomial& OddPowerSumPolynomial::operator+=(const OddPowerSumPolynomial& o) {
  for (auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

OddPowerSumPolynomial& OddPowerSumPolynomial::operator-=(const OddPowerSumPolynomial& o) {
  for (auto& [mu, c] : o.terms_) add(mu, -c);
  return *this;
}

OddPowerSumPolynomial OddPowerSumPolynomial::operator*(const OddPowerSumPolynomial& o) const {
  OddPowerSumPolynomial r;
  for (auto& [a, ca] : terms_)
    for (auto& [b, cb] : o.terms_) r.add(merge(a, b), ca * cb);
  return r;
}

OddPowerSumPolynomial OddPowerSumPolynomial::operator*(const Rational& c) const {
  OddPowerSumPolynomial r;
  for (auto& [a, ca] : terms_) r.add(a, ca * c);
  return r;
}

OddPowerSumPolynomial OddPowerSumPolynomial::p1_perp() const {
  OddPowerSumPolynomial r;
  for (auto& [mu, c] : terms_) {
    int m1 = mu.multiplicity(1);
    if (m1 == 0) continue;
    std::vector<int> parts = mu.parts();
    parts.pop_back();  // a 1 is always last
    r.add(Partition(std::move(parts)), c * Rational(m1, 2));
  }
  return r;
}

namespace {

// r q_r = sum_{k odd} 2 p_k q_{r-k}: the derivative of the exponential.
const OddPowerSumPolynomial& q_cached(int r) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<OddPowerSumPolynomial>> cache;
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= r) {
    int s = static_cast<int>(cache.size());
    OddPowerSumPolynomial q;
    if (s == 0) {
      q = OddPowerSumPolynomial::constant(1);
    } else {
      for (int k = 1; k <= s; k += 2)
        q += OddPowerSumPolynomial::power_sum(Partition({k}), 2) * *cache[static_cast<std::size_t>(s - k)];
      q = q * Rational(1, s);
    }
    cache.push_back(std::make_unique<OddPowerSumPolynomial>(std::move(q)));
  }
  return *cache[static_cast<std::size_t>(r)];
}

OddPowerSumPolynomial two_row(int a, int b) {
  OddPowerSumPolynomial r = q_cached(a) * q_cached(b);
  for (int i = 1; i <= b; ++i) {
    auto t = q_cached(a + i) * q_cached(b - i) * Rational(2);
    if (i % 2) r -= t;
    else r += t;
  }
  return r;
}

}  // namespace

OddPowerSumPolynomial q_generator(int r) {
  if (r < 0) throw ValidationError("q_r needs r >= 0");
  return q_cached(r);
}

OddPowerSumPolynomial schur_Q(const Partition& lambda) {
  if (!lambda.is_strict()) throw ValidationError("schur_Q needs a strict partition, got " + lambda.str());
  std::vector<int> parts = lambda.parts();
  if (parts.empty()) return OddPowerSumPolynomial::constant(1);
  if (parts.size() == 1) return q_cached(parts[0]);
  if (parts.size() % 2) parts.push_back(0);

  // Pf(M) = sum_{j>1} (-1)^j M_{1j} Pf(M minus rows/cols 1, j), 1-based j.
  std::map<std::vector<int>, OddPowerSumPolynomial> memo;
  std::function<OddPowerSumPolynomial(const std::vector<int>&)> pf = [&](const std::vector<int>& idx) {
    if (idx.empty()) return OddPowerSumPolynomial::constant(1);
    if (auto it = memo.find(idx); it != memo.end()) return it->second;
    OddPowerSumPolynomial total;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      std::vector<int> rest;
      for (std::size_t k = 1; k < idx.size(); ++k)
        if (k != j) rest.push_back(idx[k]);
      auto term = two_row(parts[static_cast<std::size_t>(idx[0])], parts[static_cast<std::size_t>(idx[j])]) * pf(rest);
      if (j % 2 == 1) total += term;  // 1-based position j+1 even
      else total -= term;
    }
    memo.emplace(idx, total);
    return total;
  };
  std::vector<int> all(parts.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
  return pf(all);
}

BigInt shifted_tableaux_count(const Partition& lambda) {
  if (!lambda.is_strict()) throw ValidationError("shifted tableaux need a strict partition");
  Rational r = factorial(lambda.size());
  for (int p : lambda.parts()) r /= Rational(factorial(p));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = i + 1; j < lambda.length(); ++j)
      r *= Rational(lambda.part(i) - lambda.part(j), lambda.part(i) + lambda.part(j));
  return r.num();
}

SpinCharacterTable::SpinCharacterTable(int n) : n_(n) {
  if (n < 1) throw ValidationError("spin table needs n >= 1");
  if (n > kMaxSpinDegree) throw ResourceError("spin tables supported for n <= " + std::to_string(kMaxSpinDegree));
  strict_ = enumerate_partitions(n, PartitionFilter::strict);
  odd_ = enumerate_partitions(n, PartitionFilter::odd);
  strict_idx_ = index_partitions(strict_);
  odd_idx_ = index_partitions(odd_);
  x_ = Matrix<long long>(strict_.size(), odd_.size());
  for (std::size_t a = 0; a < strict_.size(); ++a) {
    auto q = schur_Q(strict_[a]);
    for (std::size_t b = 0; b < odd_.size(); ++b) {
      Rational x = q.coefficient(odd_[b]) * Rational(z_of(odd_[b])) /
                   Rational(pow2(static_cast<unsigned long>(odd_[b].length())));
      if (!x.is_integer()) throw std::logic_error("non-integral spin coefficient at " + strict_[a].str());
      x_(a, b) = x.num().get_si();
    }
  }
}

std::size_t SpinCharacterTable::strict_index(const Partition& p) const {
  auto it = strict_idx_.find(p);
  if (it == strict_idx_.end()) throw ValidationError(p.str() + " is not a strict partition of " + std::to_string(n_));
  return it->second;
}

std::size_t SpinCharacterTable::odd_index(const Partition& p) const {
  auto it = odd_idx_.find(p);
  if (it == odd_idx_.end()) throw ValidationError(p.str() + " is not an odd partition of " + std::to_string(n_));
  return it->second;
}

Rational SpinCharacterTable::plancherel(std::size_t lambda) const {
  BigInt g2 = BigInt(static_cast<long>(g(lambda)));
  g2 *= g2;
  return Rational(pow2(static_cast<unsigned long>(n_ - strict_[lambda].length())) * g2, factorial(n_));
}

const SpinCharacterTable& spin_character_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const SpinCharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<const SpinCharacterTable>(n);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

std::vector<Rational> twisted_walk_coefficients(const SpinCharacterTable& t, const Partition& mu, int m) {
  if (mu.size() != t.n() || !mu.is_odd())
    throw ValidationError("twisted walk generator must be an odd partition of " + std::to_string(t.n()));
  if (m < 0) throw ValidationError("step count must be nonnegative");
  std::size_t mi = t.odd_index(mu);
  std::size_t s = t.strict().size(), c = t.odd().size();
  Rational scale = Rational(pow2(static_cast<unsigned long>(mu.length())), pow2(static_cast<unsigned long>(t.n())));
  SpectralData d;
  d.basis = Matrix<Rational>(s, c);
  for (std::size_t a = 0; a < s; ++a) {
    d.weight.push_back(t.plancherel(a));
    d.eigen.push_back(scale * t.ratio(a, mi));
    for (std::size_t b = 0; b < c; ++b) d.basis(a, b) = t.ratio(a, b);
  }
  for (std::size_t b = 0; b < c; ++b) d.norm.emplace_back(factorial(t.n()), z_of(t.odd()[b]));
  return spectral_sum(d, m);
}

}  // namespace stein
