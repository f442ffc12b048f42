#include "stein/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "stein/error.hpp"

namespace stein {

namespace {

// Murnaghan-Nakayama on beta sets. With l parts, beta_i = lambda_i + l - i;
// a border strip of length k is a bead moved from b to b-k into a gap, with
// sign (-1)^(beads jumped over).
class MnEvaluator {
 public:
  long long eval(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from) {
    if (from == mu.size()) return 1;
    std::vector<int> key_mu(mu.begin() + static_cast<long>(from), mu.end());
    auto key = std::make_pair(lambda, key_mu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int k = mu[from];
    int l = static_cast<int>(lambda.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);  // decreasing

    long long total = 0;
    for (int i = 0; i < l; ++i) {
      int target = beta[i] - k;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int j = 0; j < l; ++j)
        if (beta[j] > target && beta[j] < beta[i]) ++jumped;
      std::vector<int> nb = beta;
      nb[i] = target;
      std::sort(nb.begin(), nb.end(), std::greater<>());
      std::vector<int> next;
      for (int j = 0; j < l; ++j) {
        int part = nb[j] - (l - 1 - j);
        if (part > 0) next.push_back(part);
      }
      long long sub = eval(next, mu, from + 1);
      total += (jumped % 2 ? -sub : sub);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo_;
};

void check_degree(int n) {
  if (n > kMaxCharacterDegree)
    throw ResourceError("character tables supported for n <= " + std::to_string(kMaxCharacterDegree));
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ValidationError("character: |lambda| != |mu|");
  check_degree(lambda.size());
  MnEvaluator mn;
  return mn.eval(lambda.parts(), mu.parts(), 0);
}

CharacterTable::CharacterTable(int n) : n_(n) {
  if (n < 0) throw ValidationError("character table needs n >= 0");
  check_degree(n);
  parts_ = enumerate_partitions(n);
  index_ = index_partitions(parts_);
  identity_ = parts_.size() - 1;
  chi_ = Matrix<long long>(parts_.size(), parts_.size());
  MnEvaluator mn;
  for (std::size_t a = 0; a < parts_.size(); ++a)
    for (std::size_t b = 0; b < parts_.size(); ++b)
      chi_(a, b) = mn.eval(parts_[a].parts(), parts_[b].parts(), 0);
  order_ = factorial(n);
  for (auto& p : parts_) class_sizes_.push_back(stein::class_size(p));
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw ValidationError("partition " + p.str() + " is not of size " + std::to_string(n_));
  return it->second;
}

const CharacterTable& character_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<const CharacterTable>(n);  // built outside the lock
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

PlancherelMeasure plancherel(int n) {
  if (n < 1) throw ValidationError("plancherel needs n >= 1");
  const auto& t = character_table(n);
  PlancherelMeasure m;
  m.labels = t.partitions();
  for (std::size_t a = 0; a < t.size(); ++a) {
    BigInt d = big(t.dimension(a));
    m.probabilities.emplace_back(d * d, t.group_order());
  }
  return m;
}

SpectrumAtomList character_ratio_spectrum(int n, const Partition& c) {
  if (c.size() != n) throw ValidationError("class " + c.str() + " is not a class of S_" + std::to_string(n));
  const auto& t = character_table(n);
  std::size_t ci = t.index_of(c);
  Statistic w{t.class_size(ci), {}};
  for (std::size_t a = 0; a < t.size(); ++a) w.coefficients.push_back(t.ratio(a, ci));
  auto pm = plancherel(n);
  return SpectrumAtomList::from_statistic(w, pm.probabilities);
}

}  // namespace stein
