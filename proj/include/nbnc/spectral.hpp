#pragma once

#include <cstddef>
#include <vector>

#include "nbnc/graph.hpp"

namespace nbnc {

/// Dense n x n symmetric matrix; set() writes both mirrored entries.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  std::size_t order() const noexcept { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }

  double trace() const;
  double max_abs() const;

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues in nondecreasing order.
struct Spectrum {
  std::vector<double> values;
};

inline constexpr double kZeroEigenvalueTolerance = 1e-9;
inline constexpr double kOffDiagonalTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 200;

/// L = D - A.
SymmetricMatrix laplacian(const Graph& g);

/// Full spectrum by cyclic Jacobi rotations in fixed row-major (p, q) order.
/// Iterates until the off-diagonal Frobenius norm drops below
/// kOffDiagonalTolerance * max(1, max|a_ij|). Throws NumericError with the
/// remaining off-diagonal norm after kMaxJacobiSweeps sweeps.
Spectrum eigenvalues(const SymmetricMatrix& m);

/// Second-smallest Laplacian eigenvalue. Zero whenever g is disconnected
/// (decided by traversal, not by the eigensolver); values within
/// kZeroEigenvalueTolerance of zero are clamped. Requires node_count >= 2.
double algebraic_connectivity(const Graph& g);

/// Algebraic connectivity divided by node_count; 0 for a disconnected graph.
double algebraic_connectivity_ratio(const Graph& g);

}  // namespace nbnc
