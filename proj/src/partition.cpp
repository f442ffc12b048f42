#include "stein/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "stein/error.hpp"

namespace stein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
  mult_.assign(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (int p : parts_) ++mult_[p];
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::hook_class(int n, int i) {
  if (i < 1 || i > n) throw ValidationError("class (i,1^{n-i}) needs 1 <= i <= n");
  std::vector<int> p{i};
  p.insert(p.end(), n - i, 1);
  return Partition(std::move(p));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  int cur = -1;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (c == ',' || c == ' ' || c == '(' || c == ')') {
      if (cur >= 0) parts.push_back(cur);
      cur = -1;
    } else {
      throw ValidationError("bad partition literal: '" + std::string(text) + "'");
    }
  }
  if (cur >= 0) parts.push_back(cur);
  return Partition(std::move(parts));
}

int Partition::multiplicity(int j) const {
  return (j > 0 && j < static_cast<int>(mult_.size())) ? mult_[j] : 0;
}

bool Partition::is_strict() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::contains(BoxCoordinates s) const {
  return s.row >= 1 && s.row <= length() && s.column >= 1 && s.column <= parts_[s.row - 1];
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

int Partition::arm(BoxCoordinates s) const {
  if (!contains(s)) throw ValidationError("box outside diagram");
  return parts_[s.row - 1] - s.column;
}

int Partition::leg(BoxCoordinates s) const {
  if (!contains(s)) throw ValidationError("box outside diagram");
  int below = 0;
  for (int r = s.row; r < length() && parts_[r] >= s.column; ++r) ++below;
  return below;
}

std::vector<BoxCoordinates> Partition::boxes() const {
  std::vector<BoxCoordinates> out;
  for (int r = 0; r < length(); ++r)
    for (int c = 1; c <= parts_[r]; ++c) out.push_back({r + 1, c});
  return out;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& cur, PartitionFilter filter,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (filter == PartitionFilter::odd && p % 2 == 0) continue;
    cur.push_back(p);
    int next_max = filter == PartitionFilter::strict ? p - 1 : p;
    extend(remaining - p, next_max, cur, filter, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, PartitionFilter filter) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  extend(n, n, cur, filter, out);
  return out;
}

PartitionIndex index_partitions(const std::vector<Partition>& list) {
  PartitionIndex idx;
  for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(list[i], i);
  return idx;
}

BigInt z_of(const Partition& mu) {
  BigInt z = 1;
  for (int j = 1; j <= (mu.length() ? mu.parts().front() : 0); ++j) {
    int m = mu.multiplicity(j);
    if (m) z *= ipow(BigInt(j), m) * factorial(m);
  }
  return z;
}

BigInt class_size(const Partition& mu) { return factorial(mu.size()) / z_of(mu); }

Rational jack_measure(const Partition& lambda, const Rational& alpha) {
  if (alpha.sign() <= 0) throw ValidationError("jack_measure needs alpha > 0");
  Rational denom = 1;
  for (auto s : lambda.boxes()) {
    Rational a = lambda.arm(s), l = lambda.leg(s);
    denom *= (alpha * a + l + 1) * (alpha * a + l + alpha);
  }
  return alpha.pow(lambda.size()) * Rational(factorial(lambda.size())) / denom;
}

BigInt hook_length_dimension(const Partition& lambda) {
  BigInt hooks = 1;
  for (auto s : lambda.boxes()) hooks *= lambda.arm(s) + lambda.leg(s) + 1;
  return factorial(lambda.size()) / hooks;
}

}  // namespace stein
