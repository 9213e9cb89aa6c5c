// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

// Dense Jordan-Wigner reference for small fermionic registries. Basis index
// b = sum_i n_i 2^i; a†_j = Z_0 ... Z_{j-1} sigma+_j. Shares nothing with the
// library beyond the registry's encode().

#pragma once

#include <fockent/dynamics.hpp>

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace jw {

using Matrix = Eigen::MatrixXcd;

inline Matrix creation(std::size_t modes, std::size_t j) {
  const Eigen::Index dim = Eigen::Index{1} << modes;
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    if ((b >> j) & 1) continue;
    int below = 0;
    for (std::size_t i = 0; i < j; ++i) below += static_cast<int>((b >> i) & 1);
    out(b | (Eigen::Index{1} << j), b) = (below % 2) ? -1.0 : 1.0;
  }
  return out;
}

inline Matrix annihilation(std::size_t modes, std::size_t j) { return creation(modes, j).adjoint(); }

/// Dense vector of a state in the b = sum_i n_i 2^i basis.
inline Eigen::VectorXcd to_dense(const fockent::ManyBodyState& s) {
  const std::size_t m = s.registry().size();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << m);
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    fockent::OccupationVector n(m);
    for (std::size_t i = 0; i < m; ++i) n[i] = static_cast<int>((b >> i) & 1);
    v(b) = s.amplitude(n);
  }
  return v;
}

/// Full Fock-space matrix of h + h' + (1/2) sum V_ijlm a†_i a†_j a_m a_l.
inline Matrix hamiltonian(const fockent::SecondQuantizedHamiltonian& h) {
  const std::size_t m = h.registry().size();
  const Eigen::Index dim = Eigen::Index{1} << m;
  Matrix out = Matrix::Zero(dim, dim);
  const Matrix t = h.single_particle();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (t(i, j) != std::complex<double>{}) out += t(i, j) * creation(m, i) * annihilation(m, j);
  for (const auto& [k, v] : h.two_body()) {
    const auto [i, j, l, mm] = k;
    out += 0.5 * v * creation(m, i) * creation(m, j) * annihilation(m, mm) * annihilation(m, l);
  }
  return out;
}

/// Restriction of a full Fock-space matrix to basis vectors with `n` particles.
inline Matrix sector(const Matrix& full, std::size_t modes, int n) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index b = 0; b < (Eigen::Index{1} << modes); ++b)
    if (std::popcount(static_cast<unsigned long long>(b)) == n) idx.push_back(b);
  Matrix out(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = full(idx[r], idx[c]);
  return out;
}

}  // namespace jw
