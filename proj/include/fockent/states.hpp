// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief Exact Fock-space constructors for the reference many-body states.
 *
 * Excitons use the electron-hole picture: the filled ground state |G> is the
 * vacuum of electron (conduction) and hole (valence) modes. A hole mode is
 * labelled by its own momentum k' (species = hole); the identification
 * b†_{k s} = a_{-k,-s} is not materialised since entropies depend only on
 * mode identity.
 */

#pragma once

#include <fockent/amplitudes.hpp>
#include <fockent/entanglement.hpp>
#include <fockent/fock_core.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace fockent {

// ---------------------------------------------------------------------------
// Registries
// ---------------------------------------------------------------------------

/// `count` generic fermionic modes labelled 0..count-1.
[[nodiscard]] inline RegistryPtr generic_registry(std::size_t count) {
  std::vector<ModeLabel> labels;
  for (std::size_t i = 0; i < count; ++i) labels.push_back(generic_mode(static_cast<int>(i)));
  return registry_create(std::move(labels));
}

/// Modes (k, up), (-k, down) for every pair index k of a bcs_g table, in entry order.
[[nodiscard]] inline RegistryPtr bcs_registry(const PairAmplitudeTable& g) {
  g.require_kind(AmplitudeKind::bcs_g);
  std::vector<ModeLabel> labels;
  for (const auto& e : g.entries()) {
    labels.push_back(electron(e.k, Spin::up));
    labels.push_back(electron(negate(e.k), Spin::down));
  }
  return registry_create(std::move(labels));
}

/// Electron modes for every row key, then hole modes for every column key.
/// Spinful registries carry an up and a down mode per momentum.
[[nodiscard]] inline RegistryPtr exciton_registry(const PairAmplitudeTable& a, bool spinful) {
  a.require_kind(AmplitudeKind::exciton_A);
  std::vector<ModeLabel> labels;
  const std::vector<Spin> spins = spinful ? std::vector<Spin>{Spin::up, Spin::down} : std::vector<Spin>{Spin::none};
  for (const auto& k : a.row_keys())
    for (Spin s : spins) labels.push_back(electron(k, s));
  for (const auto& kp : a.col_keys())
    for (Spin s : spins) labels.push_back(hole(kp, s));
  return registry_create(std::move(labels));
}

/// Condensate mode q = 0 followed by (q, -q) per table entry.
[[nodiscard]] inline RegistryPtr bogoliubov_registry(const PairAmplitudeTable& table, int pair_cutoff,
                                                    int condensate_cutoff) {
  if (table.kind() != AmplitudeKind::bogoliubov_c && table.kind() != AmplitudeKind::bogoliubov_uv)
    throw InvalidArgument("bogoliubov_registry needs a bogoliubov_c or bogoliubov_uv table");
  const std::size_t dim = table.size() == 0 ? 1 : table.entries().front().k.size();
  std::vector<ModeLabel> labels{boson(std::vector<int>(dim, 0))};
  std::vector<int> cutoffs{condensate_cutoff};
  for (const auto& e : table.entries()) {
    labels.push_back(boson(e.k));
    labels.push_back(boson(negate(e.k)));
    cutoffs.push_back(pair_cutoff);
    cutoffs.push_back(pair_cutoff);
  }
  return registry_create(std::move(labels), std::move(cutoffs));
}

namespace detail {

/// a†_{ops[0]} a†_{ops[1]} ... |0>, i.e. the last listed operator acts first.
inline ManyBodyState create_on_vacuum(const RegistryPtr& reg, const std::vector<std::size_t>& ops) {
  ManyBodyState s = ManyBodyState::vacuum(reg);
  for (std::size_t i = ops.size(); i-- > 0;) s = apply_creation(s, ops[i]);
  return s;
}

inline void require_fermionic(const ModeRegistry& reg, std::size_t i, const char* what) {
  if (!reg.is_fermionic(i)) throw InvalidArgument(std::string(what) + ": mode " + reg.label(i).str() + " is bosonic");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Free Fermi gas
// ---------------------------------------------------------------------------

/// Single Slater determinant with the `filled` modes occupied.
[[nodiscard]] inline ManyBodyState fermi_sea(const RegistryPtr& reg, const ModeSubset& filled) {
  filled.check_bounds(*reg);
  OccupationVector n(reg->size(), 0);
  for (std::size_t i : filled.indices()) {
    detail::require_fermionic(*reg, i, "fermi_sea");
    n[i] = 1;
  }
  return ManyBodyState::basis(reg, n);
}

/// a†_to a_from |state>, normalized. Throws if the result vanishes.
[[nodiscard]] inline ManyBodyState particle_hole_excitation(const ManyBodyState& state, std::size_t from,
                                                           std::size_t to) {
  ManyBodyState out = apply_creation(apply_annihilation(state, from), to);
  if (out.is_zero()) throw InvalidArgument("excitation annihilates the state");
  return normalize(out);
}

// ---------------------------------------------------------------------------
// Excitons
// ---------------------------------------------------------------------------

/// sum_{k,k'} A_{k,k'} a†_k b†_k' |G>.
[[nodiscard]] inline ManyBodyState exciton_spinless(const RegistryPtr& reg, const PairAmplitudeTable& a) {
  a.require_kind(AmplitudeKind::exciton_A);
  ManyBodyState out(reg);
  for (const auto& e : a.entries()) {
    const std::size_t ei = reg->require_index(electron(e.k));
    const std::size_t hi = reg->require_index(hole(e.kp));
    out = add(out, detail::create_on_vacuum(reg, {ei, hi}), e.value);
  }
  return normalize(out);
}

enum class SpinChannel { triplet_up, triplet_zero, triplet_down, singlet };

[[nodiscard]] inline SpinChannel spin_channel_from_string(const std::string& s) {
  if (s == "triplet_up") return SpinChannel::triplet_up;
  if (s == "triplet_zero") return SpinChannel::triplet_zero;
  if (s == "triplet_down") return SpinChannel::triplet_down;
  if (s == "singlet") return SpinChannel::singlet;
  throw InvalidArgument("unknown spin channel '" + s + "'");
}

/// sum_{k,k'} A_{k,k'} |S, S_z>_{k,k'} with
///   |1, 1>  = a†_{k up} b†_{k' up} |G>
///   |1, 0>  = (a†_{k up} b†_{k' dn} - a†_{k dn} b†_{k' up}) |G> / sqrt 2
///   |1,-1>  = a†_{k dn} b†_{k' dn} |G>
///   |0, 0>  = (a†_{k up} b†_{k' dn} + a†_{k dn} b†_{k' up}) |G> / sqrt 2
[[nodiscard]] inline ManyBodyState exciton_spinful(const RegistryPtr& reg, const PairAmplitudeTable& a,
                                                  SpinChannel channel) {
  a.require_kind(AmplitudeKind::exciton_A);
  const double r = 1.0 / std::numbers::sqrt2;
  ManyBodyState out(reg);
  for (const auto& e : a.entries()) {
    auto term = [&](Spin se, Spin sh) {
      return detail::create_on_vacuum(reg, {reg->require_index(electron(e.k, se)), reg->require_index(hole(e.kp, sh))});
    };
    ManyBodyState branch(reg);
    switch (channel) {
      case SpinChannel::triplet_up: branch = term(Spin::up, Spin::up); break;
      case SpinChannel::triplet_down: branch = term(Spin::down, Spin::down); break;
      case SpinChannel::triplet_zero:
        branch = add(scale(term(Spin::up, Spin::down), r), term(Spin::down, Spin::up), -r);
        break;
      case SpinChannel::singlet:
        branch = add(scale(term(Spin::up, Spin::down), r), term(Spin::down, Spin::up), r);
        break;
    }
    out = add(out, branch, e.value);
  }
  return normalize(out);
}

/// S_z = sum over spin-resolved modes of (+1/2 up, -1/2 down) n̂, applied to `state`.
[[nodiscard]] inline ManyBodyState apply_spin_z(const ManyBodyState& state) {
  const ModeRegistry& reg = state.registry();
  ManyBodyState out(state.registry_ptr());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const Spin s = reg.label(i).spin;
    if (s == Spin::none) continue;
    out = add(out, apply_number(state, i), s == Spin::up ? 0.5 : -0.5);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BCS
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> bcs_pair_modes(const ModeRegistry& reg,
                                                                       const PairAmplitudeTable& g) {
  g.require_kind(AmplitudeKind::bcs_g);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& e : g.entries())
    out.emplace_back(reg.require_index(electron(e.k, Spin::up)), reg.require_index(electron(negate(e.k), Spin::down)));
  return out;
}

inline ManyBodyState apply_pair_creation(const ManyBodyState& s, std::pair<std::size_t, std::size_t> pair) {
  return apply_creation(apply_creation(s, pair.second), pair.first);
}

}  // namespace detail

/// prod_k (1 + g_k a†_{k up} a†_{-k dn}) |0>, normalized. Not number conserving.
[[nodiscard]] inline ManyBodyState bcs_unprojected(const RegistryPtr& reg, const PairAmplitudeTable& g) {
  const auto pairs = detail::bcs_pair_modes(*reg, g);
  ManyBodyState s = ManyBodyState::vacuum(reg);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s = add(s, detail::apply_pair_creation(s, pairs[i]), g.entries()[i].value);
  return normalize(s);
}

/// Projection of the BCS state onto N particles.
///
/// Sums prod g_{k_i} over unordered N/2-subsets of pair modes; the ordered
/// sum counts each subset (N/2)! times with the same sign, which drops out
/// on normalization. With `unpaired` set (odd N), pair `unpaired` is
/// excluded from the product and its (p, up) mode is occupied in every
/// branch.
[[nodiscard]] inline ManyBodyState bcs_projected(const RegistryPtr& reg, const PairAmplitudeTable& g, int n_particles,
                                                std::optional<std::size_t> unpaired = std::nullopt) {
  const auto pairs = detail::bcs_pair_modes(*reg, g);
  if (n_particles < 0) throw InvalidArgument("particle number must be nonnegative");
  if (!unpaired && n_particles % 2 != 0)
    throw InvalidArgument("odd N requires an unpaired mode");
  if (unpaired && n_particles % 2 == 0) throw InvalidArgument("an unpaired mode requires odd N");
  if (unpaired && *unpaired >= pairs.size()) throw InvalidArgument("unpaired pair index out of range");

  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!unpaired || i != *unpaired) usable.push_back(i);
  const auto half = static_cast<std::size_t>(n_particles / 2);
  if (half > usable.size())
    throw InvalidArgument("N/2 = " + std::to_string(half) + " exceeds the number of pair modes " +
                          std::to_string(usable.size()));

  ManyBodyState seed = ManyBodyState::vacuum(reg);
  if (unpaired) seed = apply_creation(seed, pairs[*unpaired].first);

  ManyBodyState out(reg);
  std::vector<std::size_t> pick(half);
  for (std::size_t i = 0; i < half; ++i) pick[i] = i;
  while (true) {
    Complex amp = 1.0;
    ManyBodyState term = seed;
    for (std::size_t i : pick) {
      amp *= g.entries()[usable[i]].value;
      term = detail::apply_pair_creation(term, pairs[usable[i]]);
    }
    out = add(out, term, amp);
    // next combination in lexicographic order
    std::size_t j = half;
    while (j > 0 && pick[j - 1] == usable.size() - half + j - 1) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t t = j; t < half; ++t) pick[t] = pick[t - 1] + 1;
  }
  if (out.is_zero()) throw InvalidArgument("every N/2-subset of pair modes has zero amplitude");
  return normalize(out);
}

// ---------------------------------------------------------------------------
// Bogoliubov
// ---------------------------------------------------------------------------

struct BogoliubovGroundState {
  ManyBodyState state;
  int cutoff = 0;  ///< max n_q kept per pair
  /// sum_q r_q^{2(cutoff+1)} / (1 - r_q^2), r_q = |v_q / u_q|: dropped weight
  /// relative to the kept weight, summed over pairs.
  double truncation_bound = 0.0;
};

/// Smallest n with r^{2n} / (1 - r^2) < 1e-14.
[[nodiscard]] inline int bogoliubov_default_cutoff(double r) {
  if (r >= 1.0) throw InvalidArgument("|v/u| must be < 1");
  if (r == 0.0) return 0;
  int n = 0;
  while (std::pow(r, 2 * n) / (1.0 - r * r) >= 1e-14) ++n;
  return n;
}

/// |n_0> ⊗ prod_q sum_{n_q} (-v_q/u_q)^{n_q} |n_q>_q |n_q>_{-q}, normalized.
///
/// The condensate mode carries the fixed occupation `condensate_occupation`.
/// Without an explicit `cutoff`, the largest per-pair default cutoff is used.
[[nodiscard]] inline BogoliubovGroundState bogoliubov_unprojected(const RegistryPtr& reg, const PairAmplitudeTable& uv,
                                                                 std::optional<int> cutoff = std::nullopt,
                                                                 int condensate_occupation = 0) {
  uv.require_kind(AmplitudeKind::bogoliubov_uv);
  std::vector<Complex> ratio;
  for (const auto& e : uv.entries()) {
    const Complex z = -e.v / e.value;
    if (std::abs(z) >= 1.0) throw InvalidArgument("|v_q / u_q| must be < 1 for geometric convergence");
    ratio.push_back(z);
  }
  int n_max = 0;
  if (cutoff) {
    if (*cutoff < 0) throw InvalidArgument("cutoff must be nonnegative");
    n_max = *cutoff;
  } else {
    for (Complex z : ratio) n_max = std::max(n_max, bogoliubov_default_cutoff(std::abs(z)));
  }

  const std::size_t dim = uv.size() == 0 ? 1 : uv.entries().front().k.size();
  const std::size_t condensate = reg->require_index(boson(std::vector<int>(dim, 0)));
  if (condensate_occupation < 0 || condensate_occupation > reg->max_occupation(condensate))
    throw InvalidArgument("condensate occupation exceeds its cutoff");

  ManyBodyState::AmplitudeMap terms{{reg->with_occupation(Key{0}, condensate, condensate_occupation), 1.0}};
  BogoliubovGroundState out{ManyBodyState(reg), n_max, 0.0};
  for (std::size_t j = 0; j < uv.size(); ++j) {
    const auto& e = uv.entries()[j];
    const std::size_t plus = reg->require_index(boson(e.k));
    const std::size_t minus = reg->require_index(boson(negate(e.k)));
    if (reg->max_occupation(plus) < n_max || reg->max_occupation(minus) < n_max)
      throw InvalidArgument("registry cutoff for pair " + reg->label(plus).str() + " is below " + std::to_string(n_max));
    const double r = std::abs(ratio[j]);
    out.truncation_bound += r == 0.0 ? 0.0 : std::pow(r, 2 * (n_max + 1)) / (1.0 - r * r);
    if (terms.size() * static_cast<std::size_t>(n_max + 1) > 2'000'000)
      throw SizeGuardError("unprojected Bogoliubov expansion exceeds 2e6 terms");
    ManyBodyState::AmplitudeMap next;
    for (const auto& [key, amp] : terms) {
      Complex w = 1.0;
      for (int n = 0; n <= n_max; ++n, w *= ratio[j]) {
        const Complex a = amp * w;
        if (std::abs(a) < ManyBodyState::kPruneTolerance) break;
        next.emplace(reg->with_occupation(reg->with_occupation(key, plus, n), minus, n), a);
      }
    }
    terms = std::move(next);
  }
  out.state = normalize(ManyBodyState(reg, std::move(terms)));
  return out;
}

/// Number-conserving Bogoliubov ground state
///
///   sum_{n_0 + ... + n_M = N/2} p(N/2; n_0..n_M) prod_j (-c_j)^{n_j} |2 n_0>_0 prod_j |n_j>_{q_j} |n_j>_{-q_j},
///
/// normalized, with p the multinomial coefficient. All bosonic cutoffs must be >= N.
[[nodiscard]] inline ManyBodyState bogoliubov_projected(const RegistryPtr& reg, const PairAmplitudeTable& c,
                                                       int n_particles) {
  c.require_kind(AmplitudeKind::bogoliubov_c);
  if (n_particles < 0 || n_particles % 2 != 0)
    throw InvalidArgument("number-conserving Bogoliubov state needs an even, nonnegative N");
  const std::size_t dim = c.size() == 0 ? 1 : c.entries().front().k.size();
  std::vector<std::size_t> plus{reg->require_index(boson(std::vector<int>(dim, 0)))};
  std::vector<std::size_t> minus{plus[0]};
  for (const auto& e : c.entries()) {
    plus.push_back(reg->require_index(boson(e.k)));
    minus.push_back(reg->require_index(boson(negate(e.k))));
  }
  for (std::size_t j = 0; j < plus.size(); ++j)
    if (reg->max_occupation(plus[j]) < n_particles || reg->max_occupation(minus[j]) < n_particles)
      throw InvalidArgument("bosonic cutoff below N = " + std::to_string(n_particles));

  const int half = n_particles / 2;
  std::vector<double> log_fact(static_cast<std::size_t>(half) + 1, 0.0);
  for (int i = 1; i <= half; ++i) log_fact[i] = log_fact[i - 1] + std::log(i);

  ManyBodyState::AmplitudeMap terms;
  std::vector<int> n(plus.size(), 0);
  std::size_t visited = 0;
  auto rec = [&](auto&& self, std::size_t box, int left) -> void {
    if (box + 1 == n.size()) {
      n[box] = left;
      if (++visited > 1'000'000) throw SizeGuardError("Bogoliubov composition count exceeds 1e6");
      double log_p = log_fact[half];
      Complex amp = 1.0;
      Key key = reg->with_occupation(Key{0}, plus[0], 2 * n[0]);
      for (std::size_t j = 0; j < n.size(); ++j) {
        log_p -= log_fact[n[j]];
        if (j == 0) continue;
        amp *= std::pow(-c.entries()[j - 1].value, n[j]);
        key = reg->with_occupation(reg->with_occupation(key, plus[j], n[j]), minus[j], n[j]);
      }
      terms.emplace(key, std::exp(log_p) * amp);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[box] = v;
      self(self, box + 1, left - v);
    }
  };
  rec(rec, 0, half);
  return normalize(ManyBodyState(reg, std::move(terms)));
}

// ---------------------------------------------------------------------------
// Uniform filling and one-particle superpositions
// ---------------------------------------------------------------------------

/// Equal-weight superposition of all C(M, K) patterns of K particles in the
/// M modes of `reg`. Every mode has <n̂> = K / M by symmetry.
[[nodiscard]] inline ManyBodyState uniform_filling_state(const RegistryPtr& reg, std::size_t modes, std::size_t particles) {
  if (reg->size() != modes) throw InvalidArgument("registry size must equal M");
  if (particles > modes) throw InvalidArgument("K = " + std::to_string(particles) + " exceeds M = " + std::to_string(modes));
  for (std::size_t i = 0; i < modes; ++i) detail::require_fermionic(*reg, i, "uniform_filling_state");
  if (modes > 30) throw SizeGuardError("uniform filling limited to 30 modes");
  ManyBodyState::AmplitudeMap terms;
  for (Key mask = 0; mask < (Key{1} << modes); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != particles) continue;
    OccupationVector n(modes, 0);
    for (std::size_t i = 0; i < modes; ++i) n[i] = static_cast<int>((mask >> i) & 1u);
    terms.emplace(reg->encode(n), 1.0);
  }
  return normalize(ManyBodyState(reg, std::move(terms)));
}

/// sum_i c_i |1>_i prod_{j != i} |0>_j over all registry modes.
[[nodiscard]] inline ManyBodyState single_particle_superposition(const RegistryPtr& reg,
                                                                const std::vector<Complex>& coefficients) {
  if (coefficients.size() != reg->size()) throw InvalidArgument("need one coefficient per registry mode");
  double total = 0.0;
  for (Complex c : coefficients) total += std::norm(c);
  if (std::abs(total - 1.0) > 1e-10) throw InvalidArgument("coefficients are not normalized");
  ManyBodyState::AmplitudeMap terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    OccupationVector n(reg->size(), 0);
    n[i] = 1;
    terms.emplace(reg->encode(n), coefficients[i]);
  }
  return ManyBodyState(reg, std::move(terms));
}

}  // namespace fockent
