#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/gelfand.hpp"
#include "stein/matrix.hpp"
#include "stein/partition.hpp"
#include "stein/scheme.hpp"
#include "stein/spectrum.hpp"

namespace stein {

// Transition matrix with its stationary measure. A signed kernel (J_tau) may
// have negative entries; rows still sum to 1.
struct ChainKernel {
  std::string name;
  std::vector<std::string> states;
  std::vector<Rational> pi;
  Matrix<Rational> k;
  bool is_signed = false;

  std::size_t size() const { return states.size(); }
};

// L_tau(lambda -> rho) on partitions of n, stationary for Plancherel.
ChainKernel group_chain(int n, const Partition& tau);
ChainKernel gelfand_chain(const GelfandPairData& pair, std::size_t t);
ChainKernel twisted_signed_kernel(int n, const Partition& tau);
ChainKernel schur_down_up_chain(int n);
ChainKernel scheme_chain(const AssociationScheme& scheme, int t);

enum class Linearity { linear, nonlinear, degenerate };

struct AuditReport {
  Rational max_row_deviation;
  Rational balance_residual;
  bool signed_kernel = false;
  bool nonnegative = true;           // all entries; off-diagonal only for signed kernels
  Linearity linearity = Linearity::degenerate;
  std::optional<Rational> a;         // E(W'|x) = (1-a) W(x)
  std::size_t witness = 0;           // first state breaking linearity
  Rational second_moment_w;          // E(W^2) under pi
  Rational mean_coefficient_w;       // E(W) / sqrt(k)
  Rational max_step_squared;         // A^2
  ScaledRoot max_step;               // A

  bool passed() const {
    return max_row_deviation.is_zero() && balance_residual.is_zero() &&
           (nonnegative || signed_kernel) && linearity == Linearity::linear;
  }
};

AuditReport audit(const ChainKernel& kernel, const Statistic& w);

// lambda with K psi = lambda psi, or nullopt when psi is not an eigenvector.
std::optional<Rational> eigen_scalar(const ChainKernel& kernel, const std::vector<Rational>& psi);

}  // namespace stein
