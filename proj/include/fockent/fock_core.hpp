// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_core.hpp
 * @brief Many-body states in an occupation-number basis.
 *
 * A ModeRegistry fixes an ordered list of single-particle modes. Basis
 * vectors |n_0 n_1 ... n_{M-1}> are packed into a 64-bit key: one bit per
 * fermionic mode, a fixed-width digit per bosonic mode. A ManyBodyState is a
 * sparse map from keys to complex amplitudes over one registry.
 *
 * Sign convention: a fermionic basis vector is the product of creation
 * operators in ascending registry order acting on the vacuum,
 *
 *   |n> = (a†_0)^{n_0} (a†_1)^{n_1} ... |0>,
 *
 * so a†_j picks up (-1)^(number of occupied fermionic modes with index < j).
 * The parity string runs over all fermionic modes regardless of species.
 */

#pragma once

#include <fockent/error.hpp>

#include <bit>
#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <tuple>
#include <vector>

namespace fockent {

using Complex = std::complex<double>;

enum class Species { electron, hole, boson, generic };
enum class Spin { up, down, none };
enum class Statistics { fermion, boson };

[[nodiscard]] inline const char* to_string(Species s) {
  switch (s) {
    case Species::electron: return "e";
    case Species::hole: return "h";
    case Species::boson: return "b";
    case Species::generic: return "g";
  }
  return "?";
}

[[nodiscard]] inline const char* to_string(Spin s) {
  switch (s) {
    case Spin::up: return "up";
    case Spin::down: return "dn";
    case Spin::none: return "";
  }
  return "?";
}

/// Identity of one single-particle basis state.
struct ModeLabel {
  Species species = Species::generic;
  std::vector<int> momentum;
  Spin spin = Spin::none;
  std::optional<int> extra;

  friend bool operator==(const ModeLabel&, const ModeLabel&) = default;
  friend auto operator<=>(const ModeLabel& a, const ModeLabel& b) {
    return std::tie(a.species, a.momentum, a.spin, a.extra) <=>
           std::tie(b.species, b.momentum, b.spin, b.extra);
  }

  /// Bosons are bosonic; electron, hole and generic modes are fermionic.
  [[nodiscard]] Statistics statistics() const {
    return species == Species::boson ? Statistics::boson : Statistics::fermion;
  }

  /// Compact human-readable form, e.g. `e(1,-2)up` or `g(3)`.
  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << to_string(species) << '(';
    for (std::size_t i = 0; i < momentum.size(); ++i) os << (i ? "," : "") << momentum[i];
    os << ')' << to_string(spin);
    if (extra) os << '#' << *extra;
    return os.str();
  }
};

[[nodiscard]] inline std::vector<int> negate(std::vector<int> k) {
  for (int& v : k) v = -v;
  return k;
}

[[nodiscard]] inline ModeLabel electron(std::vector<int> k, Spin s = Spin::none) {
  return {Species::electron, std::move(k), s, std::nullopt};
}
[[nodiscard]] inline ModeLabel hole(std::vector<int> k, Spin s = Spin::none) {
  return {Species::hole, std::move(k), s, std::nullopt};
}
[[nodiscard]] inline ModeLabel boson(std::vector<int> q) {
  return {Species::boson, std::move(q), Spin::none, std::nullopt};
}
[[nodiscard]] inline ModeLabel generic_mode(int index, Spin s = Spin::none) {
  return {Species::generic, {index}, s, std::nullopt};
}

/// Packed occupation-number basis vector.
using Key = std::uint64_t;
/// Unpacked occupation numbers, one per registry mode.
using OccupationVector = std::vector<int>;

class ModeRegistry;
using RegistryPtr = std::shared_ptr<const ModeRegistry>;

/// Ordered, immutable set of modes plus the packed-key layout.
class ModeRegistry {
 public:
  /// `bosonic_cutoffs` lists one maximum occupation per bosonic mode, in
  /// registry order. Throws InvalidArgument on duplicate labels, a cutoff
  /// count mismatch, or a layout wider than 64 bits.
  static RegistryPtr create(std::vector<ModeLabel> labels, std::vector<int> bosonic_cutoffs = {}) {
    return RegistryPtr(new ModeRegistry(std::move(labels), std::move(bosonic_cutoffs)));
  }

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const ModeLabel& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] const std::vector<ModeLabel>& labels() const noexcept { return labels_; }

  [[nodiscard]] std::optional<std::size_t> index_of(const ModeLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::size_t require_index(const ModeLabel& l) const {
    if (auto i = index_of(l)) return *i;
    throw InvalidArgument("mode " + l.str() + " is not in the registry");
  }

  [[nodiscard]] bool is_fermionic(std::size_t i) const { return cutoff_.at(i) < 0; }
  /// Maximum occupation: 1 for fermions, the configured cutoff for bosons.
  [[nodiscard]] int max_occupation(std::size_t i) const {
    const int c = cutoff_.at(i);
    return c < 0 ? 1 : c;
  }

  void check_mode(std::size_t i) const {
    if (i >= size())
      throw InvalidArgument("mode index " + std::to_string(i) + " out of range for registry of size " +
                            std::to_string(size()));
  }

  [[nodiscard]] int occupation(Key key, std::size_t i) const {
    return static_cast<int>((key >> offset_[i]) & digit_mask(i));
  }

  [[nodiscard]] Key with_occupation(Key key, std::size_t i, int n) const {
    const Key m = digit_mask(i) << offset_[i];
    return (key & ~m) | (static_cast<Key>(n) << offset_[i]);
  }

  /// Parity (0 or 1) of occupied fermionic modes with index below `i`.
  [[nodiscard]] int fermion_parity_below(Key key, std::size_t i) const {
    const Key below = offset_[i] == 0 ? Key{0} : (~Key{0} >> (64 - offset_[i]));
    return std::popcount(key & fermion_bits_ & below) & 1;
  }

  [[nodiscard]] int total_particles(Key key) const {
    int n = std::popcount(key & fermion_bits_);
    for (std::size_t i : bosonic_) n += occupation(key, i);
    return n;
  }

  /// Bits of `key` that belong to the given modes.
  [[nodiscard]] Key field_mask(const std::vector<std::size_t>& modes) const {
    Key m = 0;
    for (std::size_t i : modes) m |= digit_mask(i) << offset_[i];
    return m;
  }

  [[nodiscard]] Key encode(const OccupationVector& n) const {
    if (n.size() != size())
      throw InvalidArgument("occupation vector has " + std::to_string(n.size()) + " entries, registry has " +
                            std::to_string(size()));
    Key key = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] < 0 || n[i] > max_occupation(i))
        throw InvalidArgument("occupation " + std::to_string(n[i]) + " out of range for mode " +
                              labels_[i].str());
      key |= static_cast<Key>(n[i]) << offset_[i];
    }
    return key;
  }

  [[nodiscard]] OccupationVector decode(Key key) const {
    OccupationVector n(size());
    for (std::size_t i = 0; i < size(); ++i) n[i] = occupation(key, i);
    return n;
  }

  friend bool operator==(const ModeRegistry& a, const ModeRegistry& b) {
    return a.labels_ == b.labels_ && a.cutoff_ == b.cutoff_;
  }

 private:
  ModeRegistry(std::vector<ModeLabel> labels, std::vector<int> bosonic_cutoffs)
      : labels_(std::move(labels)) {
    std::size_t next_cutoff = 0;
    unsigned bits = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, fresh] = index_.emplace(labels_[i], i);
      if (!fresh) throw InvalidArgument("duplicate mode label " + labels_[i].str());
      int cutoff = -1;
      unsigned width = 1;
      if (labels_[i].statistics() == Statistics::boson) {
        if (next_cutoff >= bosonic_cutoffs.size())
          throw InvalidArgument("missing cutoff for bosonic mode " + labels_[i].str());
        cutoff = bosonic_cutoffs[next_cutoff++];
        if (cutoff < 0) throw InvalidArgument("negative cutoff for bosonic mode " + labels_[i].str());
        width = std::max(1u, static_cast<unsigned>(std::bit_width(static_cast<unsigned>(cutoff))));
        bosonic_.push_back(i);
      } else {
        fermion_bits_ |= Key{1} << bits;
      }
      if (bits + width > 64)
        throw InvalidArgument("registry needs more than 64 bits of packed occupation storage");
      cutoff_.push_back(cutoff);
      offset_.push_back(bits);
      width_.push_back(width);
      bits += width;
    }
    if (next_cutoff != bosonic_cutoffs.size())
      throw InvalidArgument("got " + std::to_string(bosonic_cutoffs.size()) + " bosonic cutoffs for " +
                            std::to_string(next_cutoff) + " bosonic modes");
  }

  [[nodiscard]] Key digit_mask(std::size_t i) const { return (Key{1} << width_[i]) - 1; }

  std::vector<ModeLabel> labels_;
  std::map<ModeLabel, std::size_t> index_;
  std::vector<int> cutoff_;  // -1 marks a fermionic mode
  std::vector<unsigned> offset_;
  std::vector<unsigned> width_;
  std::vector<std::size_t> bosonic_;
  Key fermion_bits_ = 0;
};

/// Convenience spelling of ModeRegistry::create.
[[nodiscard]] inline RegistryPtr registry_create(std::vector<ModeLabel> labels,
                                                 std::vector<int> bosonic_cutoffs = {}) {
  return ModeRegistry::create(std::move(labels), std::move(bosonic_cutoffs));
}

/// Sparse superposition of occupation basis vectors.
///
/// Immutable: every operation below returns a new state. Amplitudes with
/// magnitude below kPruneTolerance are dropped on construction.
class ManyBodyState {
 public:
  using AmplitudeMap = std::map<Key, Complex>;
  static constexpr double kPruneTolerance = 1e-15;

  /// The zero vector.
  explicit ManyBodyState(RegistryPtr registry) : registry_(std::move(registry)) {
    if (!registry_) throw InvalidArgument("null registry");
  }

  ManyBodyState(RegistryPtr registry, AmplitudeMap amplitudes, bool truncated = false)
      : registry_(std::move(registry)), amplitudes_(std::move(amplitudes)), truncated_(truncated) {
    if (!registry_) throw InvalidArgument("null registry");
    std::erase_if(amplitudes_, [](const auto& kv) { return std::abs(kv.second) < kPruneTolerance; });
  }

  static ManyBodyState basis(RegistryPtr registry, const OccupationVector& n, Complex amplitude = 1.0) {
    const Key key = registry->encode(n);
    return ManyBodyState(std::move(registry), AmplitudeMap{{key, amplitude}});
  }

  static ManyBodyState vacuum(RegistryPtr registry) {
    return ManyBodyState(std::move(registry), AmplitudeMap{{Key{0}, Complex{1.0}}});
  }

  [[nodiscard]] const ModeRegistry& registry() const noexcept { return *registry_; }
  [[nodiscard]] const RegistryPtr& registry_ptr() const noexcept { return registry_; }
  [[nodiscard]] const AmplitudeMap& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return amplitudes_.empty(); }
  /// Set when a bosonic creation hit a cutoff and a component was dropped.
  [[nodiscard]] bool truncated() const noexcept { return truncated_; }

  [[nodiscard]] Complex amplitude(Key key) const {
    auto it = amplitudes_.find(key);
    return it == amplitudes_.end() ? Complex{} : it->second;
  }
  [[nodiscard]] Complex amplitude(const OccupationVector& n) const { return amplitude(registry_->encode(n)); }

  [[nodiscard]] double norm_squared() const {
    double s = 0.0;
    for (const auto& [k, a] : amplitudes_) s += std::norm(a);
    return s;
  }
  [[nodiscard]] double norm() const { return std::sqrt(norm_squared()); }

 private:
  RegistryPtr registry_;
  AmplitudeMap amplitudes_;
  bool truncated_ = false;
};

namespace detail {

inline void require_same_registry(const ManyBodyState& a, const ManyBodyState& b) {
  if (a.registry_ptr() != b.registry_ptr() && !(a.registry() == b.registry()))
    throw InvalidArgument("states live on different mode registries");
}

inline void accumulate(ManyBodyState::AmplitudeMap& m, Key k, Complex a) {
  auto [it, fresh] = m.try_emplace(k, a);
  if (!fresh) it->second += a;
}

}  // namespace detail

[[nodiscard]] inline ManyBodyState normalize(const ManyBodyState& s) {
  const double n = s.norm();
  if (n == 0.0) throw NumericalError("cannot normalize the zero state");
  ManyBodyState::AmplitudeMap out;
  for (const auto& [k, a] : s.amplitudes()) out.emplace(k, a / n);
  return {s.registry_ptr(), std::move(out), s.truncated()};
}

[[nodiscard]] inline ManyBodyState scale(const ManyBodyState& s, Complex c) {
  ManyBodyState::AmplitudeMap out;
  for (const auto& [k, a] : s.amplitudes()) out.emplace(k, c * a);
  return {s.registry_ptr(), std::move(out), s.truncated()};
}

/// a + c b
[[nodiscard]] inline ManyBodyState add(const ManyBodyState& a, const ManyBodyState& b, Complex c = 1.0) {
  detail::require_same_registry(a, b);
  auto out = a.amplitudes();
  for (const auto& [k, v] : b.amplitudes()) detail::accumulate(out, k, c * v);
  return {a.registry_ptr(), std::move(out), a.truncated() || b.truncated()};
}

/// a†_mode applied to `state`. Bosonic components already at the cutoff
/// are dropped and the result is flagged as truncated.
[[nodiscard]] inline ManyBodyState apply_creation(const ManyBodyState& state, std::size_t mode) {
  const ModeRegistry& reg = state.registry();
  reg.check_mode(mode);
  ManyBodyState::AmplitudeMap out;
  bool truncated = state.truncated();
  const bool fermion = reg.is_fermionic(mode);
  const int cap = reg.max_occupation(mode);
  for (const auto& [key, amp] : state.amplitudes()) {
    const int n = reg.occupation(key, mode);
    if (fermion) {
      if (n == 1) continue;
      const double sign = reg.fermion_parity_below(key, mode) ? -1.0 : 1.0;
      detail::accumulate(out, reg.with_occupation(key, mode, 1), sign * amp);
    } else {
      if (n == cap) {
        truncated = true;
        continue;
      }
      detail::accumulate(out, reg.with_occupation(key, mode, n + 1), std::sqrt(n + 1.0) * amp);
    }
  }
  return {state.registry_ptr(), std::move(out), truncated};
}

/// a_mode applied to `state`; annihilating an empty mode gives zero.
[[nodiscard]] inline ManyBodyState apply_annihilation(const ManyBodyState& state, std::size_t mode) {
  const ModeRegistry& reg = state.registry();
  reg.check_mode(mode);
  ManyBodyState::AmplitudeMap out;
  const bool fermion = reg.is_fermionic(mode);
  for (const auto& [key, amp] : state.amplitudes()) {
    const int n = reg.occupation(key, mode);
    if (n == 0) continue;
    const Key next = reg.with_occupation(key, mode, n - 1);
    if (fermion) {
      const double sign = reg.fermion_parity_below(key, mode) ? -1.0 : 1.0;
      detail::accumulate(out, next, sign * amp);
    } else {
      detail::accumulate(out, next, std::sqrt(static_cast<double>(n)) * amp);
    }
  }
  return {state.registry_ptr(), std::move(out), state.truncated()};
}

/// n̂_mode applied to `state` (diagonal).
[[nodiscard]] inline ManyBodyState apply_number(const ManyBodyState& state, std::size_t mode) {
  const ModeRegistry& reg = state.registry();
  reg.check_mode(mode);
  ManyBodyState::AmplitudeMap out;
  for (const auto& [key, amp] : state.amplitudes()) {
    const int n = reg.occupation(key, mode);
    if (n != 0) out.emplace(key, static_cast<double>(n) * amp);
  }
  return {state.registry_ptr(), std::move(out), state.truncated()};
}

/// <a|b>
[[nodiscard]] inline Complex inner_product(const ManyBodyState& a, const ManyBodyState& b) {
  detail::require_same_registry(a, b);
  const auto& small = a.size() <= b.size() ? a.amplitudes() : b.amplitudes();
  const auto& large = a.size() <= b.size() ? b.amplitudes() : a.amplitudes();
  const bool a_small = a.size() <= b.size();
  Complex s{};
  for (const auto& [k, v] : small) {
    auto it = large.find(k);
    if (it == large.end()) continue;
    s += a_small ? std::conj(v) * it->second : std::conj(it->second) * v;
  }
  return s;
}

/// <n̂_mode> = sum_n n_mode |psi(n)|^2 for a normalized state.
[[nodiscard]] inline double number_expectation(const ManyBodyState& state, std::size_t mode) {
  const ModeRegistry& reg = state.registry();
  reg.check_mode(mode);
  double s = 0.0;
  for (const auto& [key, amp] : state.amplitudes()) s += reg.occupation(key, mode) * std::norm(amp);
  return s;
}

/// Total particle numbers present in the superposition.
[[nodiscard]] inline std::set<int> particle_number_sectors(const ManyBodyState& state) {
  std::set<int> out;
  for (const auto& [key, amp] : state.amplitudes()) out.insert(state.registry().total_particles(key));
  return out;
}

/// Component with exactly `n` particles (not renormalized).
[[nodiscard]] inline ManyBodyState project_particle_number(const ManyBodyState& state, int n) {
  ManyBodyState::AmplitudeMap out;
  for (const auto& [key, amp] : state.amplitudes())
    if (state.registry().total_particles(key) == n) out.emplace(key, amp);
  return {state.registry_ptr(), std::move(out), state.truncated()};
}

/// Throws NumericalError if a fixed-N construction touched a bosonic cutoff.
inline void require_untruncated(const ManyBodyState& state, const std::string& context) {
  if (state.truncated())
    throw NumericalError(context + ": bosonic cutoff reached, state would be truncated");
}

/// Throws InvalidArgument unless | ||psi|| - 1 | <= tol.
inline void require_normalized(const ManyBodyState& state, double tol = 1e-9) {
  const double n = state.norm();
  if (std::abs(n - 1.0) > tol)
    throw InvalidArgument("state is not normalized (norm = " + std::to_string(n) + ")");
}

}  // namespace fockent
