// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file entanglement.hpp
 * @brief Fock-space reduced density matrices and von Neumann entropy.
 *
 * For a subset A of modes, every basis vector splits into a subset pattern p
 * and an environment pattern e. The reduced density matrix is
 *
 *   rho_A(p', p) = sum_e psi(p' + e) conj(psi(p + e)).
 *
 * Amplitudes are taken as stored (ascending-order convention) with no
 * reordering signs. Moving |p + e> to |p>|e> costs a parity sigma(p, e);
 * on the diagonal it enters squared, so populations are convention-free.
 * Coherences between patterns are defined relative to the registry order.
 */

#pragma once

#include <fockent/fock_core.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace fockent {

/// Sorted, duplicate-free list of registry indices.
class ModeSubset {
 public:
  ModeSubset() = default;
  ModeSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {  // NOLINT
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
      throw InvalidArgument("mode subset contains a repeated index");
  }
  ModeSubset(std::initializer_list<std::size_t> indices)
      : ModeSubset(std::vector<std::size_t>(indices)) {}

  [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
  [[nodiscard]] bool contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
  }

  void check_bounds(const ModeRegistry& reg) const {
    for (std::size_t i : indices_) reg.check_mode(i);
  }

  /// All registry modes not in this subset.
  [[nodiscard]] ModeSubset complement(const ModeRegistry& reg) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < reg.size(); ++i)
      if (!contains(i)) out.push_back(i);
    return ModeSubset(std::move(out));
  }

  friend bool operator==(const ModeSubset&, const ModeSubset&) = default;

 private:
  std::vector<std::size_t> indices_;
};

struct ReducedDensityMatrix {
  ModeSubset subset;
  /// Joint occupation patterns on `subset`, lexicographic (first mode most significant).
  std::vector<OccupationVector> patterns;
  Eigen::MatrixXcd matrix;

  [[nodiscard]] std::size_t dimension() const { return patterns.size(); }

  [[nodiscard]] std::size_t pattern_index(const OccupationVector& p) const {
    auto it = std::lower_bound(patterns.begin(), patterns.end(), p);
    if (it == patterns.end() || *it != p) throw InvalidArgument("pattern not in RDM basis");
    return static_cast<std::size_t>(it - patterns.begin());
  }

  [[nodiscard]] Complex element(const OccupationVector& row, const OccupationVector& col) const {
    return matrix(static_cast<Eigen::Index>(pattern_index(row)), static_cast<Eigen::Index>(pattern_index(col)));
  }

  [[nodiscard]] std::vector<double> diagonal() const {
    std::vector<double> d(dimension());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    return d;
  }

  [[nodiscard]] double trace_error() const { return std::abs(matrix.trace() - Complex{1.0}); }
  [[nodiscard]] double hermiticity_error() const {
    return matrix.size() == 0 ? 0.0 : (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  }

  /// Ascending eigenvalues of the Hermitian part.
  [[nodiscard]] Eigen::VectorXd eigenvalues() const {
    const Eigen::MatrixXcd h = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("RDM eigensolver did not converge");
    return solver.eigenvalues();
  }

  /// Throws NumericalError unless trace, Hermiticity and PSD hold within `tol`.
  void validate(double tol = 1e-12) const {
    if (trace_error() > tol) throw NumericalError("RDM trace deviates from 1 by " + std::to_string(trace_error()));
    if (hermiticity_error() > tol)
      throw NumericalError("RDM is not Hermitian (max deviation " + std::to_string(hermiticity_error()) + ")");
    if (dimension() > 0 && eigenvalues()(0) < -tol)
      throw NumericalError("RDM has negative eigenvalue " + std::to_string(eigenvalues()(0)));
  }
};

/// Largest RDM dimension the dense kernel accepts.
inline constexpr std::size_t kMaxRdmDimension = 4096;

namespace detail {

inline std::vector<OccupationVector> subset_patterns(const ModeRegistry& reg, const ModeSubset& subset) {
  std::size_t dim = 1;
  for (std::size_t i : subset.indices()) {
    dim *= static_cast<std::size_t>(reg.max_occupation(i) + 1);
    if (dim > kMaxRdmDimension)
      throw SizeGuardError("RDM dimension exceeds " + std::to_string(kMaxRdmDimension));
  }
  std::vector<OccupationVector> out;
  out.reserve(dim);
  OccupationVector p(subset.size(), 0);
  for (std::size_t count = 0; count < dim; ++count) {
    out.push_back(p);
    for (std::size_t j = subset.size(); j-- > 0;) {
      if (++p[j] <= reg.max_occupation(subset.indices()[j])) break;
      p[j] = 0;
    }
  }
  return out;
}

}  // namespace detail

/// Fock-space reduced density matrix of `subset` for a normalized state.
[[nodiscard]] inline ReducedDensityMatrix reduced_density_matrix(const ManyBodyState& state, const ModeSubset& subset) {
  const ModeRegistry& reg = state.registry();
  subset.check_bounds(reg);
  require_normalized(state);

  ReducedDensityMatrix rdm{subset, detail::subset_patterns(reg, subset), {}};
  const auto dim = static_cast<Eigen::Index>(rdm.patterns.size());
  rdm.matrix = Eigen::MatrixXcd::Zero(dim, dim);

  std::vector<std::size_t> strides(subset.size(), 1);
  for (std::size_t j = subset.size(); j-- > 1;)
    strides[j - 1] = strides[j] * static_cast<std::size_t>(reg.max_occupation(subset.indices()[j]) + 1);
  const Key subset_bits = reg.field_mask(subset.indices());

  std::map<Key, std::vector<std::pair<Eigen::Index, Complex>>> by_environment;
  for (const auto& [key, amp] : state.amplitudes()) {
    std::size_t p = 0;
    for (std::size_t j = 0; j < subset.size(); ++j)
      p += strides[j] * static_cast<std::size_t>(reg.occupation(key, subset.indices()[j]));
    by_environment[key & ~subset_bits].emplace_back(static_cast<Eigen::Index>(p), amp);
  }
  for (const auto& [env, terms] : by_environment)
    for (const auto& [row, a] : terms)
      for (const auto& [col, b] : terms) rdm.matrix(row, col) += a * std::conj(b);

#ifdef FOCKENT_CHECK_INVARIANTS
  rdm.validate(1e-10);
#endif
  return rdm;
}

/// -tr rho ln rho, natural log, 0 ln 0 = 0.
[[nodiscard]] inline double von_neumann_entropy(const ReducedDensityMatrix& rdm) {
  if (rdm.dimension() == 0) return 0.0;
  const Eigen::VectorXd ev = rdm.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double l = ev(i);
    if (l < -1e-12) throw NumericalError("RDM eigenvalue " + std::to_string(l) + " violates positivity");
    l = std::clamp(l, 0.0, 1.0);
    if (l > 0.0) s -= l * std::log(l);
  }
  return s;
}

/// Occupation-number entanglement between `subset` and the rest.
[[nodiscard]] inline double mode_entanglement(const ManyBodyState& state, const ModeSubset& subset) {
  return von_neumann_entropy(reduced_density_matrix(state, subset));
}

/// True iff every off-diagonal element has magnitude below `tol`.
[[nodiscard]] inline bool is_diagonal(const ReducedDensityMatrix& rdm, double tol = 1e-12) {
  const Eigen::Index n = rdm.matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && std::abs(rdm.matrix(i, j)) >= tol) return false;
  return true;
}

}  // namespace fockent
