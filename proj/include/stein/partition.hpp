#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stein/rational.hpp"

namespace stein {

struct BoxCoordinates {
  int row;     // 1-based
  int column;  // 1-based
};

class Partition {
 public:
  Partition() = default;
  // Parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts, drops zeros.
  static Partition from_unsorted(std::vector<int> parts);
  // (i, 1^{n-i}); i = 1 gives the identity class (1^n).
  static Partition hook_class(int n, int i);
  // "3,1,1", "(3,1,1)", "3 1 1" or "" / "()" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based
  int multiplicity(int j) const;
  bool is_strict() const;
  bool is_odd() const;
  bool contains(BoxCoordinates s) const;

  Partition conjugate() const;
  int arm(BoxCoordinates s) const;
  int leg(BoxCoordinates s) const;
  std::vector<BoxCoordinates> boxes() const;

  std::string str() const;  // "(3,1,1)"

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> mult_;  // mult_[j] = m_j
  int size_ = 0;
};

enum class PartitionFilter { all, strict, odd };

// Reverse lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n, PartitionFilter filter = PartitionFilter::all);

using PartitionIndex = std::map<Partition, std::size_t>;
PartitionIndex index_partitions(const std::vector<Partition>& list);

BigInt z_of(const Partition& mu);
BigInt class_size(const Partition& mu);  // n!/z_mu
Rational jack_measure(const Partition& lambda, const Rational& alpha);
BigInt hook_length_dimension(const Partition& lambda);

}  // namespace stein
