// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dynamics.hpp
 * @brief Second-quantized Hamiltonians on a mode registry:
 *
 *   H = sum_ij <i|h + h'|j> a†_i a_j + 1/2 sum_ijlm <ij|V|lm> a†_i a†_j a_m a_l.
 *
 * Sector matrices, eigenstates, time evolution and the proper-basis
 * (single-particle eigenbasis) transform, all by dense linear algebra at
 * desk scale.
 */

#pragma once

#include <fockent/error.hpp>
#include <fockent/fock_core.hpp>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace fockent {

/// Sparse <ij|V|lm>, keyed by (i, j, l, m).
using TwoBodyTensor = std::map<std::array<std::size_t, 4>, Complex>;

/// Adds the Hermitian partner <lm|V|ij>* and the exchange partner <ji|V|ml>
/// of every entry. Throws InvalidArgument if explicit entries disagree.
[[nodiscard]] inline TwoBodyTensor complete_two_body(const TwoBodyTensor& v, double tol = 1e-12) {
  TwoBodyTensor out;
  auto put = [&](const std::array<std::size_t, 4>& key, Complex value) {
    auto [it, fresh] = out.try_emplace(key, value);
    if (!fresh && std::abs(it->second - value) > tol)
      throw InvalidArgument("two-body entries violate <ij|V|lm> = <lm|V|ij>* or <ij|V|lm> = <ji|V|ml>");
  };
  for (const auto& [k, value] : v) {
    const auto [i, j, l, m] = k;
    put({i, j, l, m}, value);
    put({l, m, i, j}, std::conj(value));
    put({j, i, m, l}, value);
    put({m, l, j, i}, std::conj(value));
  }
  std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) == 0.0; });
  return out;
}

class SecondQuantizedHamiltonian {
 public:
  SecondQuantizedHamiltonian(RegistryPtr registry, Eigen::MatrixXcd one_body, Eigen::MatrixXcd external = {},
                             const TwoBodyTensor& two_body = {})
      : registry_(std::move(registry)), one_body_(std::move(one_body)), external_(std::move(external)) {
    const auto n = static_cast<Eigen::Index>(registry_->size());
    if (external_.size() == 0) external_ = Eigen::MatrixXcd::Zero(n, n);
    if (one_body_.rows() != n || one_body_.cols() != n || external_.rows() != n || external_.cols() != n)
      throw InvalidArgument("one-body matrices must be " + std::to_string(n) + "x" + std::to_string(n));
    if ((one_body_ - one_body_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw InvalidArgument("one-body matrix is not Hermitian");
    if ((external_ - external_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw InvalidArgument("external one-body matrix is not Hermitian");
    for (const auto& [k, value] : two_body)
      for (std::size_t idx : k) registry_->check_mode(idx);
    two_body_ = complete_two_body(two_body);
  }

  [[nodiscard]] const ModeRegistry& registry() const noexcept { return *registry_; }
  [[nodiscard]] const RegistryPtr& registry_ptr() const noexcept { return registry_; }
  [[nodiscard]] const Eigen::MatrixXcd& one_body() const noexcept { return one_body_; }
  [[nodiscard]] const Eigen::MatrixXcd& external() const noexcept { return external_; }
  [[nodiscard]] const TwoBodyTensor& two_body() const noexcept { return two_body_; }
  /// h + h'
  [[nodiscard]] Eigen::MatrixXcd single_particle() const { return one_body_ + external_; }

  /// {"modes": [...], "one_body": [[...]], "external": [[...]], "two_body": [{"ijlm": [...], "value": [re, im]}]}
  ///
  /// A mode is either an integer (generic fermionic mode with that index) or
  /// {"species", "k", "spin", "extra", "cutoff"}. Matrix entries are numbers
  /// or [re, im]; "external" and "two_body" are optional.
  static SecondQuantizedHamiltonian from_json(const nlohmann::json& doc) {
    try {
      std::vector<ModeLabel> labels;
      std::vector<int> cutoffs;
      for (const auto& m : doc.at("modes")) {
        if (m.is_number_integer()) {
          labels.push_back(generic_mode(m.get<int>()));
          continue;
        }
        ModeLabel l;
        const std::string species = m.value("species", "generic");
        if (species == "electron") l.species = Species::electron;
        else if (species == "hole") l.species = Species::hole;
        else if (species == "boson") l.species = Species::boson;
        else if (species == "generic") l.species = Species::generic;
        else throw InvalidArgument("unknown species '" + species + "'");
        l.momentum = m.value("k", std::vector<int>{});
        const std::string spin = m.value("spin", "none");
        if (spin == "up") l.spin = Spin::up;
        else if (spin == "down") l.spin = Spin::down;
        else if (spin == "none") l.spin = Spin::none;
        else throw InvalidArgument("unknown spin '" + spin + "'");
        if (m.contains("extra")) l.extra = m.at("extra").get<int>();
        if (l.species == Species::boson) cutoffs.push_back(m.at("cutoff").get<int>());
        labels.push_back(std::move(l));
      }
      auto reg = registry_create(std::move(labels), std::move(cutoffs));
      const auto n = static_cast<Eigen::Index>(reg->size());
      auto read_matrix = [&](const char* name) -> Eigen::MatrixXcd {
        Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
        if (!doc.contains(name)) return out;
        const auto& rows = doc.at(name);
        if (static_cast<Eigen::Index>(rows.size()) != n)
          throw InvalidArgument(std::string(name) + " must have one row per mode");
        for (Eigen::Index i = 0; i < n; ++i) {
          if (static_cast<Eigen::Index>(rows[i].size()) != n)
            throw InvalidArgument(std::string(name) + " must be square");
          for (Eigen::Index j = 0; j < n; ++j) out(i, j) = complex_entry(rows[i][j]);
        }
        return out;
      };
      TwoBodyTensor v;
      if (doc.contains("two_body"))
        for (const auto& e : doc.at("two_body")) {
          const auto idx = e.at("ijlm").get<std::vector<std::size_t>>();
          if (idx.size() != 4) throw InvalidArgument("ijlm needs four indices");
          const std::array<std::size_t, 4> key{idx[0], idx[1], idx[2], idx[3]};
          if (v.contains(key)) throw InvalidArgument("duplicate two-body entry");
          v.emplace(key, complex_entry(e.at("value")));
        }
      return {reg, read_matrix("one_body"), read_matrix("external"), v};
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument(std::string("malformed Hamiltonian: ") + ex.what());
    }
  }

  static SecondQuantizedHamiltonian load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open Hamiltonian '" + path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument("Hamiltonian '" + path + "' is not valid JSON: " + ex.what());
    }
    return from_json(doc);
  }

 private:
  static Complex complex_entry(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    throw InvalidArgument("complex entry must be a number or [re, im], got " + j.dump());
  }

  RegistryPtr registry_;
  Eigen::MatrixXcd one_body_;
  Eigen::MatrixXcd external_;
  TwoBodyTensor two_body_;
};

/// H |psi>.
[[nodiscard]] inline ManyBodyState apply_hamiltonian(const SecondQuantizedHamiltonian& h, const ManyBodyState& psi) {
  const Eigen::MatrixXcd t = h.single_particle();
  ManyBodyState out(psi.registry_ptr());
  for (Eigen::Index j = 0; j < t.cols(); ++j) {
    if (t.col(j).cwiseAbs().maxCoeff() == 0.0) continue;
    const ManyBodyState aj = apply_annihilation(psi, static_cast<std::size_t>(j));
    if (aj.is_zero()) continue;
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      if (t(i, j) != Complex{}) out = add(out, apply_creation(aj, static_cast<std::size_t>(i)), t(i, j));
  }
  for (const auto& [k, v] : h.two_body()) {
    const auto [i, j, l, m] = k;
    ManyBodyState s = apply_annihilation(apply_annihilation(psi, l), m);
    if (s.is_zero()) continue;
    s = apply_creation(apply_creation(s, j), i);
    out = add(out, s, 0.5 * v);
  }
  return out;
}

[[nodiscard]] inline double energy_expectation(const SecondQuantizedHamiltonian& h, const ManyBodyState& psi) {
  return inner_product(psi, apply_hamiltonian(h, psi)).real();
}

/// || H n̂_i psi - n̂_i H psi ||
[[nodiscard]] inline double number_commutator_norm(const SecondQuantizedHamiltonian& h, const ManyBodyState& psi,
                                                   std::size_t mode) {
  const ManyBodyState d = add(apply_hamiltonian(h, apply_number(psi, mode)), apply_number(apply_hamiltonian(h, psi), mode), -1.0);
  return d.norm();
}

/// Sorted packed keys of every basis vector with `n` particles.
[[nodiscard]] inline std::vector<Key> sector_basis(const ModeRegistry& reg, int n) {
  if (n < 0) throw InvalidArgument("particle number must be nonnegative");
  // ways[i][r]: number of fillings of modes i.. with r particles
  const std::size_t m = reg.size();
  std::vector<std::vector<double>> ways(m + 1, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
  ways[m][0] = 1.0;
  for (std::size_t i = m; i-- > 0;)
    for (int r = 0; r <= n; ++r)
      for (int k = 0; k <= std::min(r, reg.max_occupation(i)); ++k) ways[i][r] += ways[i + 1][r - k];
  const double dim = ways[0][n];
  const std::size_t guard = sector_size_guard();
  if (dim > static_cast<double>(guard))
    throw SizeGuardError("sector N = " + std::to_string(n) + " has dimension " + std::to_string(static_cast<long long>(dim)) +
                         ", above the guard of " + std::to_string(guard));
  std::vector<Key> out;
  out.reserve(static_cast<std::size_t>(dim));
  auto rec = [&](auto&& self, std::size_t i, int left, Key key) -> void {
    if (i == m) {
      if (left == 0) out.push_back(key);
      return;
    }
    for (int k = 0; k <= std::min(left, reg.max_occupation(i)); ++k)
      if (ways[i + 1][left - k] > 0.0) self(self, i + 1, left - k, reg.with_occupation(key, i, k));
  };
  rec(rec, 0, n, Key{0});
  std::sort(out.begin(), out.end());
  return out;
}

struct SectorMatrix {
  int particles = 0;
  std::vector<Key> basis;
  Eigen::MatrixXcd matrix;

  [[nodiscard]] Eigen::Index index_of(Key k) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), k);
    if (it == basis.end() || *it != k) return -1;
    return static_cast<Eigen::Index>(it - basis.begin());
  }
};

/// <b|H|b'> over the N-particle sector.
[[nodiscard]] inline SectorMatrix hamiltonian_matrix(const SecondQuantizedHamiltonian& h, int n) {
  SectorMatrix out{n, sector_basis(h.registry(), n), {}};
  const auto dim = static_cast<Eigen::Index>(out.basis.size());
  out.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const ManyBodyState image =
        apply_hamiltonian(h, ManyBodyState(h.registry_ptr(), ManyBodyState::AmplitudeMap{{out.basis[col], 1.0}}));
    if (image.truncated()) throw NumericalError("Hamiltonian pushed a bosonic mode past its cutoff");
    for (const auto& [key, amp] : image.amplitudes()) {
      const Eigen::Index row = out.index_of(key);
      if (row < 0) throw NumericalError("Hamiltonian does not conserve particle number");
      out.matrix(row, col) = amp;
    }
  }
  return out;
}

struct Eigenpair {
  double energy;
  ManyBodyState state;
};

namespace detail {

/// Orthonormal basis of a degenerate eigenspace rotated toward occupation
/// basis vectors: while some basis vector e_b lies in the span (|P e_b| = 1),
/// emit it and remove it. The remainder keeps the solver's basis with each
/// column's largest component made real and positive.
inline Eigen::MatrixXcd canonicalize_cluster(Eigen::MatrixXcd v) {
  std::vector<Eigen::VectorXcd> picked;
  while (v.cols() > 0) {
    Eigen::Index best = 0;
    const double weight = v.rowwise().squaredNorm().maxCoeff(&best);
    if (weight < 1.0 - 1e-9) break;
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(v.rows());
    e(best) = 1.0;
    picked.push_back(e);
    v.row(best).setZero();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v, Eigen::ComputeThinU);
    const Eigen::Index keep = v.cols() - 1;
    v = svd.matrixU().leftCols(keep);
  }
  Eigen::MatrixXcd out(v.rows(), static_cast<Eigen::Index>(picked.size()) + v.cols());
  for (std::size_t i = 0; i < picked.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = picked[i];
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index big = 0;
    v.col(c).cwiseAbs().maxCoeff(&big);
    const Complex phase = std::abs(v(big, c)) > 0 ? std::conj(v(big, c)) / std::abs(v(big, c)) : Complex{1.0};
    out.col(static_cast<Eigen::Index>(picked.size()) + c) = v.col(c) * phase;
  }
  return out;
}

inline ManyBodyState vector_to_state(const RegistryPtr& reg, const std::vector<Key>& basis, const Eigen::VectorXcd& v) {
  ManyBodyState::AmplitudeMap terms;
  for (Eigen::Index i = 0; i < v.size(); ++i) terms.emplace(basis[static_cast<std::size_t>(i)], v(i));
  return ManyBodyState(reg, std::move(terms));
}

}  // namespace detail

/// Full eigendecomposition of the N-sector, ascending in energy. Degenerate
/// clusters (gap < 1e-10 max(1, max|E|)) are canonicalized toward
/// occupation-number eigenstates.
[[nodiscard]] inline std::vector<Eigenpair> eigenstates(const SecondQuantizedHamiltonian& h, int n) {
  const SectorMatrix sm = hamiltonian_matrix(h, n);
  if (sm.basis.empty()) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (sm.matrix + sm.matrix.adjoint()));
  if (solver.info() != Eigen::Success) throw NumericalError("sector eigensolver did not converge");
  const Eigen::VectorXd& e = solver.eigenvalues();
  const Eigen::MatrixXcd& u = solver.eigenvectors();
  const double tol = 1e-10 * std::max(1.0, e.cwiseAbs().maxCoeff());

  std::vector<Eigenpair> out;
  for (Eigen::Index start = 0; start < e.size();) {
    Eigen::Index end = start + 1;
    while (end < e.size() && e(end) - e(end - 1) < tol) ++end;
    const Eigen::MatrixXcd block = detail::canonicalize_cluster(u.middleCols(start, end - start));
    for (Eigen::Index c = 0; c < block.cols(); ++c)
      out.push_back({e(start + c), detail::vector_to_state(h.registry_ptr(), sm.basis, block.col(c))});
    start = end;
  }
  return out;
}

/// exp(-i H t) on every particle-number sector a state touches, with the
/// sector eigendecompositions computed once.
class Propagator {
 public:
  Propagator(const SecondQuantizedHamiltonian& h, const ManyBodyState& initial)
      : registry_(h.registry_ptr()) {
    if (initial.registry_ptr() != registry_ && !(initial.registry() == *registry_))
      throw InvalidArgument("state and Hamiltonian live on different registries");
    std::map<int, std::vector<std::pair<Key, Complex>>> by_sector;
    for (const auto& [key, amp] : initial.amplitudes()) by_sector[h.registry().total_particles(key)].emplace_back(key, amp);
    for (const auto& [n, terms] : by_sector) {
      Sector s;
      SectorMatrix sm = hamiltonian_matrix(h, n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (sm.matrix + sm.matrix.adjoint()));
      if (solver.info() != Eigen::Success) throw NumericalError("sector eigensolver did not converge");
      Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(sm.basis.size()));
      for (const auto& [key, amp] : terms) psi(sm.index_of(key)) = amp;
      s.energies = solver.eigenvalues();
      s.vectors = solver.eigenvectors();
      s.coefficients = s.vectors.adjoint() * psi;
      s.basis = std::move(sm.basis);
      sectors_.push_back(std::move(s));
    }
  }

  [[nodiscard]] ManyBodyState at(double t) const {
    ManyBodyState::AmplitudeMap terms;
    for (const auto& s : sectors_) {
      Eigen::VectorXcd c = s.coefficients;
      for (Eigen::Index i = 0; i < c.size(); ++i) c(i) *= std::exp(Complex{0.0, -s.energies(i) * t});
      const Eigen::VectorXcd psi = s.vectors * c;
      for (Eigen::Index i = 0; i < psi.size(); ++i) terms.emplace(s.basis[static_cast<std::size_t>(i)], psi(i));
    }
    return ManyBodyState(registry_, std::move(terms));
  }

 private:
  struct Sector {
    std::vector<Key> basis;
    Eigen::VectorXd energies;
    Eigen::MatrixXcd vectors;
    Eigen::VectorXcd coefficients;
  };
  RegistryPtr registry_;
  std::vector<Sector> sectors_;
};

/// exp(-i H t) |psi>.
[[nodiscard]] inline ManyBodyState evolve(const ManyBodyState& psi, const SecondQuantizedHamiltonian& h, double t) {
  return Propagator(h, psi).at(t);
}

struct ProperBasisReport {
  bool proper = false;
  /// Columns are eigenvectors of h + h' in the registry basis: c†_a = sum_i U_ia a†_i.
  Eigen::MatrixXcd rotation;
  Eigen::VectorXd single_particle_energies;
  /// H rewritten in the c_a modes (same registry, modes reinterpreted).
  SecondQuantizedHamiltonian transformed;
};

/// Whether h + h' is diagonal in the registry basis, and the rotation to
/// its eigenbasis otherwise. Each connected block of h + h' is diagonalized
/// separately so that uncoupled modes (e.g. opposite spins) are never mixed.
[[nodiscard]] inline ProperBasisReport check_proper_basis(const SecondQuantizedHamiltonian& h, double tol = 1e-12) {
  const Eigen::MatrixXcd t = h.single_particle();
  const auto n = t.rows();
  const ModeRegistry& reg = h.registry();

  std::vector<int> block(static_cast<std::size_t>(n), -1);
  int blocks = 0;
  for (Eigen::Index s = 0; s < n; ++s) {
    if (block[s] >= 0) continue;
    std::vector<Eigen::Index> stack{s};
    block[s] = blocks;
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < n; ++j)
        if (block[j] < 0 && std::abs(t(i, j)) > tol) {
          if (reg.is_fermionic(static_cast<std::size_t>(i)) != reg.is_fermionic(static_cast<std::size_t>(j)))
            throw InvalidArgument("one-body term couples a fermionic and a bosonic mode");
          block[j] = blocks;
          stack.push_back(j);
        }
    }
    ++blocks;
  }

  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  bool proper = true;
  for (int b = 0; b < blocks; ++b) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < n; ++i)
      if (block[i] == b) idx.push_back(i);
    if (idx.size() < 2) continue;
    proper = false;
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd sub(k, k);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = t(idx[r], idx[c]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub);
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) u(idx[r], idx[c]) = solver.eigenvectors()(r, c);
  }

  Eigen::MatrixXcd diag = u.adjoint() * t * u;
  Eigen::VectorXd energies = diag.diagonal().real();
  Eigen::MatrixXcd one_body = Eigen::MatrixXcd::Zero(n, n);
  one_body.diagonal() = energies.cast<Complex>();

  TwoBodyTensor v;
  if (proper) {
    v = h.two_body();
  } else {
    std::map<std::array<std::size_t, 4>, Complex> acc;
    const auto un = static_cast<std::size_t>(n);
    for (const auto& [key, value] : h.two_body()) {
      const auto [i, j, l, m] = key;
      for (std::size_t a = 0; a < un; ++a) {
        const Complex ua = std::conj(u(i, a));
        if (ua == Complex{}) continue;
        for (std::size_t b = 0; b < un; ++b) {
          const Complex ub = std::conj(u(j, b));
          if (ub == Complex{}) continue;
          for (std::size_t c = 0; c < un; ++c) {
            const Complex uc = u(l, c);
            if (uc == Complex{}) continue;
            for (std::size_t d = 0; d < un; ++d) {
              const Complex ud = u(m, d);
              if (ud == Complex{}) continue;
              acc[{a, b, c, d}] += ua * ub * value * uc * ud;
            }
          }
        }
      }
    }
    for (const auto& [key, value] : acc)
      if (std::abs(value) > 1e-14) v.emplace(key, value);
  }
  return {proper, u, energies, SecondQuantizedHamiltonian(h.registry_ptr(), one_body, {}, v)};
}

}  // namespace fockent
