#pragma once

#include <vector>

#include "stein/matrix.hpp"
#include "stein/partition.hpp"
#include "stein/spectrum.hpp"

namespace stein {

constexpr int kMaxCharacterDegree = 30;  // dims stay below 2^63

// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long character(const Partition& lambda, const Partition& mu);

// Irreducibles and classes are both indexed by enumerate_partitions(n).
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t index_of(const Partition& p) const;

  long long value(std::size_t irrep, std::size_t cls) const { return chi_(irrep, cls); }
  long long dimension(std::size_t irrep) const { return chi_(irrep, identity_); }
  const BigInt& class_size(std::size_t cls) const { return class_sizes_[cls]; }
  const BigInt& group_order() const { return order_; }
  std::size_t identity_class() const { return identity_; }
  Rational ratio(std::size_t irrep, std::size_t cls) const {
    return Rational(value(irrep, cls)) / Rational(dimension(irrep));
  }

 private:
  int n_;
  std::vector<Partition> parts_;
  PartitionIndex index_;
  Matrix<long long> chi_;
  std::vector<BigInt> class_sizes_;
  BigInt order_;
  std::size_t identity_ = 0;
};

// Shared immutable tables, built once per n.
const CharacterTable& character_table(int n);

struct PlancherelMeasure {
  std::vector<Partition> labels;
  std::vector<Rational> probabilities;  // dim^2 / n!
};

PlancherelMeasure plancherel(int n);

// Atoms (sqrt|C| chi^lambda(C)/dim lambda, dim^2/n!).
SpectrumAtomList character_ratio_spectrum(int n, const Partition& c);

}  // namespace stein
