// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file analytic.hpp
 * @brief Closed-form occupation-number entropies and distributions.
 *
 * Nothing here touches the Fock engine; these formulas are the independent
 * side of every brute-force cross-check.
 */

#pragma once

#include <fockent/amplitudes.hpp>
#include <fockent/error.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace fockent {

/// Probability distribution over occupation numbers 0, 1, ...
using Distribution = std::vector<double>;

/// -sum p ln p. Entries in [-1e-12, 0) are treated as rounding zeros.
[[nodiscard]] inline double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw InvalidArgument("negative probability " + std::to_string(x));
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

[[nodiscard]] inline double shannon_entropy(std::initializer_list<double> p) {
  return shannon_entropy(std::span<const double>(p.begin(), p.size()));
}

/// h(p) = -p ln p - (1-p) ln(1-p); h(0) = h(1) = 0.
[[nodiscard]] inline double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12) throw InvalidArgument("binary_entropy argument outside [0,1]: " + std::to_string(p));
  p = std::clamp(p, 0.0, 1.0);
  return shannon_entropy({p, 1.0 - p});
}

/// Exact nonnegative-denominator rational, kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& s) {
    auto to_int = [&](const std::string& t) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (t.empty() || used != t.size()) throw InvalidArgument("not an exact rational: '" + s + "'");
      return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return {to_int(s), 1};
    return {to_int(s.substr(0, slash)), to_int(s.substr(slash + 1))};
  }

  /// Proper fractional part, in [0, 1).
  [[nodiscard]] Rational frac() const {
    std::int64_t r = num % den;
    if (r < 0) r += den;
    return {r, den};
  }

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Entropy of a Landau-level mode at filling nu = n + f: h(f).
[[nodiscard]] inline double qh_entropy(const Rational& nu) {
  if (nu.num < 0) throw InvalidArgument("filling factor must be nonnegative, got " + nu.str());
  return binary_entropy(nu.frac().value());
}

/// Per-mode entropy of the number-nonconserving BCS state: h(1 / (1 + |g|^2)).
[[nodiscard]] inline double bcs_pair_entropy(std::complex<double> g) {
  const double w = std::norm(g);
  if (std::isinf(w)) return 0.0;
  return binary_entropy(1.0 / (1.0 + w));
}

/// Elementary symmetric polynomials e_0..e_order of `z` by the one-pass
/// recurrence e_j <- e_j + z_i e_{j-1}. All terms are added with the sign of
/// the inputs, so for nonnegative inputs there is no cancellation.
template <class T>
[[nodiscard]] std::vector<T> elementary_symmetric(std::span<const T> z, std::size_t order) {
  std::vector<T> e(order + 1, T{0});
  e[0] = T{1};
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = std::min(order, i + 1); j >= 1; --j) e[j] += z[i] * e[j - 1];
  return e;
}

namespace detail {

inline void check_bcs_size(std::size_t modes, int n_particles) {
  if (n_particles < 0 || n_particles % 2 != 0)
    throw InvalidArgument("projected BCS needs an even, nonnegative particle number, got " + std::to_string(n_particles));
  if (static_cast<std::size_t>(n_particles / 2) > modes)
    throw InvalidArgument("N/2 = " + std::to_string(n_particles / 2) + " exceeds the number of pair modes " +
                          std::to_string(modes));
}

}  // namespace detail

/// Occupation x_k of mode (k, s) in the N-particle projected BCS state:
///
///   x_k = |g_k|^2 e_{N/2-1}(w without k) / e_{N/2}(w),  w_i = |g_i|^2.
///
/// The leave-one-out polynomial is recomputed directly instead of divided
/// out of the full one, so no subtraction occurs.
[[nodiscard]] inline std::vector<double> bcs_projected_x(const PairAmplitudeTable& g, int n_particles) {
  g.require_kind(AmplitudeKind::bcs_g);
  const std::vector<double> w = g.weights();
  detail::check_bcs_size(w.size(), n_particles);
  const auto pairs = static_cast<std::size_t>(n_particles / 2);
  if (pairs == 0) return std::vector<double>(w.size(), 0.0);
  const double total = elementary_symmetric<double>(w, pairs)[pairs];
  if (total == 0.0) throw InvalidArgument("no N/2-subset of pair modes has nonzero amplitude");
  std::vector<double> x(w.size());
  std::vector<double> rest;
  for (std::size_t k = 0; k < w.size(); ++k) {
    rest.clear();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != k) rest.push_back(w[i]);
    x[k] = w[k] * elementary_symmetric<double>(rest, pairs - 1)[pairs - 1] / total;
  }
  return x;
}

[[nodiscard]] inline double bcs_projected_x(const PairAmplitudeTable& g, int n_particles, std::size_t k) {
  const auto x = bcs_projected_x(g, n_particles);
  if (k >= x.size()) throw InvalidArgument("pair index out of range");
  return x[k];
}

/// Gap Delta_k and single-particle energy eps_k per pair mode (energy units).
struct GapProfile {
  std::vector<double> delta;
  std::vector<double> kinetic;

  /// Quasiparticle energy E_k = sqrt(eps_k^2 + Delta_k^2).
  [[nodiscard]] double quasiparticle_energy(std::size_t k) const {
    return std::hypot(kinetic.at(k), delta.at(k));
  }
};

/// Root with |g| <= 1 of g / (1 + g^2) = ratio, for ratio in [0, 1/2].
[[nodiscard]] inline double pair_amplitude_from_gap_ratio(double ratio) {
  if (ratio < 0.0) throw InvalidArgument("gap ratio must be nonnegative");
  if (ratio > 0.5 + 1e-15) throw InvalidArgument("gap ratio " + std::to_string(ratio) + " > 1/2 has no real solution");
  if (ratio == 0.0) return 0.0;
  const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * ratio * ratio));
  // (1 - disc) / (2 ratio), written without cancellation.
  return 2.0 * ratio / (1.0 + disc);
}

[[nodiscard]] inline std::complex<double> gap_to_pair_amplitude(const GapProfile& profile, std::size_t k) {
  if (k >= profile.delta.size() || k >= profile.kinetic.size()) throw InvalidArgument("pair index out of range");
  const double delta = profile.delta[k];
  if (delta < 0.0) throw InvalidArgument("gap must be nonnegative");
  if (delta == 0.0) return 0.0;
  return pair_amplitude_from_gap_ratio(delta / (2.0 * profile.quasiparticle_energy(k)));
}

// ---------------------------------------------------------------------------
// Number-conserving Bogoliubov state
//
//   |Psi(N)> ∝ sum p(N/2; n_0..n_M) prod_j (-c_j)^{n_j} |2n_0> prod_j |n_j>_{q_j} |n_j>_{-q_j}
//
// with n_0 + ... + n_M = N/2 and p the multinomial coefficient.
// ---------------------------------------------------------------------------

inline constexpr int kBogoliubovMaxPairs = 8;  ///< N/2 guard for exact sums
inline constexpr std::size_t kBogoliubovMaxModes = 6;

namespace detail {

inline void check_bogoliubov_size(std::size_t modes, int n_particles) {
  if (n_particles < 0 || n_particles % 2 != 0)
    throw InvalidArgument("Bogoliubov state needs an even, nonnegative particle number");
  if (n_particles / 2 > kBogoliubovMaxPairs || modes > kBogoliubovMaxModes)
    throw SizeGuardError("exact Bogoliubov sums are limited to N/2 <= 8 and M <= 6");
}

/// Visits every composition n_0 + ... + n_{parts-1} = total.
template <class F>
void for_each_composition(int total, std::size_t parts, F&& f) {
  std::vector<int> n(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == parts) {
      n[i] = left;
      f(static_cast<const std::vector<int>&>(n));
      return;
    }
    for (int v = left; v >= 0; --v) {
      n[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (parts > 0) rec(rec, 0, total);
}

/// Marginal of box `box` (0 = condensate, j = pair mode j) under weights p^2 prod |c|^{2n}.
inline Distribution bogoliubov_marginal(const PairAmplitudeTable& c, int n_particles, std::size_t box) {
  c.require_kind(AmplitudeKind::bogoliubov_c);
  const std::vector<double> w = c.weights();
  check_bogoliubov_size(w.size(), n_particles);
  const int half = n_particles / 2;
  std::vector<double> fact(static_cast<std::size_t>(half) + 1, 1.0);
  for (int i = 1; i <= half; ++i) fact[i] = fact[i - 1] * i;

  Distribution x(static_cast<std::size_t>(half) + 1, 0.0);
  for_each_composition(half, w.size() + 1, [&](const std::vector<int>& n) {
    double p = fact[half];
    double weight = 1.0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      p /= fact[n[j]];
      if (j > 0) weight *= std::pow(w[j - 1], n[j]);
    }
    x[n[box]] += p * p * weight;
  });
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (double& v : x) v /= total;
  return x;
}

}  // namespace detail

/// x_{2 n_0}(0): distribution of the condensate pair count n_0 = 0..N/2.
[[nodiscard]] inline Distribution bogoliubov_x0_exact(const PairAmplitudeTable& c, int n_particles) {
  return detail::bogoliubov_marginal(c, n_particles, 0);
}

/// x_{n_1}(q_1): distribution of the occupation of pair mode `q1` (0-based entry index).
[[nodiscard]] inline Distribution bogoliubov_x1_exact(const PairAmplitudeTable& c, int n_particles, std::size_t q1) {
  if (q1 >= c.size()) throw InvalidArgument("pair index out of range");
  return detail::bogoliubov_marginal(c, n_particles, q1 + 1);
}

struct ApproximateDistribution {
  Distribution x;
  /// Same distribution from the closed-form geometric sum (x1 only).
  Distribution closed_form;
  /// |sum_{q != q'} c*_q c_q'|, the cross term the approximation drops.
  double residual = 0.0;
};

namespace detail {

inline double cross_term_residual(const std::vector<std::complex<double>>& c) {
  std::complex<double> sum{};
  double squares = 0.0;
  for (auto z : c) {
    sum += z;
    squares += std::norm(z);
  }
  return std::abs(std::norm(sum) - squares);
}

/// Divides by the total. The closed form carries a common factor (1 - |C'|^2)
/// that is negative for |C'| > 1, so only a zero or non-finite total is an error.
inline void normalize_distribution(Distribution& x) {
  const double total = std::accumulate(x.begin(), x.end(), 0.0);
  if (total == 0.0 || !std::isfinite(total)) throw NumericalError("approximate distribution has zero total weight");
  for (double& v : x) v /= total;
}

}  // namespace detail

/// x_{2 n_0}(0) ∝ |sum_q c_q|^{N - 2 n_0}, valid when the cross terms vanish.
[[nodiscard]] inline ApproximateDistribution bogoliubov_x0_approx(const PairAmplitudeTable& c, int n_particles) {
  c.require_kind(AmplitudeKind::bogoliubov_c);
  detail::check_bogoliubov_size(c.size(), n_particles);
  const auto values = c.values();
  std::complex<double> sum{};
  for (auto z : values) sum += z;
  const double s = std::abs(sum);
  const int half = n_particles / 2;
  ApproximateDistribution out;
  for (int n0 = 0; n0 <= half; ++n0) out.x.push_back(std::pow(s, n_particles - 2 * n0));
  detail::normalize_distribution(out.x);
  out.residual = detail::cross_term_residual(values);
  return out;
}

/// x_{n_1}(q_1) ∝ |c_1|^{2 n_1} sum_{n_0=0}^{N/2-n_1} |C'|^{N - 2 n_0 - 2 n_1}, C' = sum_{q != q_1} c_q.
///
/// `closed_form` evaluates the geometric sum as
/// |c_1|^{2 n_1} - (|c_1| / |C'|)^{2 n_1} |C'|^{N+2}, which is the sum times
/// (1 - |C'|^2); it falls back to the sum when |C'| is 0 or 1.
[[nodiscard]] inline ApproximateDistribution bogoliubov_x1_approx(const PairAmplitudeTable& c, int n_particles,
                                                                  std::size_t q1) {
  c.require_kind(AmplitudeKind::bogoliubov_c);
  detail::check_bogoliubov_size(c.size(), n_particles);
  if (q1 >= c.size()) throw InvalidArgument("pair index out of range");
  const auto values = c.values();
  std::complex<double> others{};
  for (std::size_t j = 0; j < values.size(); ++j)
    if (j != q1) others += values[j];
  const double a = std::abs(values[q1]);
  const double s = std::abs(others);
  const int half = n_particles / 2;

  ApproximateDistribution out;
  for (int n1 = 0; n1 <= half; ++n1) {
    double geometric = 0.0;
    for (int n0 = 0; n0 <= half - n1; ++n0) geometric += std::pow(s, n_particles - 2 * n0 - 2 * n1);
    out.x.push_back(std::pow(a, 2 * n1) * geometric);
  }
  detail::normalize_distribution(out.x);

  if (s == 0.0 || s == 1.0) {
    out.closed_form = out.x;
  } else {
    for (int n1 = 0; n1 <= half; ++n1)
      out.closed_form.push_back(std::pow(a, 2 * n1) - std::pow(a / s, 2 * n1) * std::pow(s, n_particles + 2));
    detail::normalize_distribution(out.closed_form);
  }
  out.residual = detail::cross_term_residual(values);
  return out;
}

/// Row and column sums of |A_{k,k'}|^2.
struct ExcitonMarginals {
  std::vector<double> alpha_electron;  ///< alpha_k
  std::vector<double> alpha_hole;      ///< alpha_k'
};

[[nodiscard]] inline ExcitonMarginals exciton_marginals(const PairAmplitudeTable& a) {
  const Eigen::MatrixXcd m = a.matrix();
  ExcitonMarginals out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.alpha_electron.push_back(m.row(i).squaredNorm());
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.alpha_hole.push_back(m.col(j).squaredNorm());
  return out;
}

/// Closed-form entropies for electron row `k` and hole column `kp`.
struct ExcitonPairEntropies {
  double weight = 0.0;        ///< |A_{k,k'}|^2
  double gamma_electron = 0;  ///< alpha_k - |A_{k,k'}|^2
  double gamma_hole = 0;      ///< alpha_k' - |A_{k,k'}|^2
  double electron = 0;        ///< S(e_k), spinless
  double hole = 0;            ///< S(h_k'), spinless
  double joint = 0;           ///< S({e_k, h_k'}), spinless
  double electron_spinful = 0;  ///< S(e_{k up}) for singlet / triplet_zero
  double hole_spinful = 0;      ///< S(h_{k' down}) for singlet / triplet_zero
  double joint_opposite_spin = 0;  ///< S({e_{k up}, h_{k' down}})
  double joint_same_spin = 0;      ///< S({e_{k up}, h_{k' up}})
};

[[nodiscard]] inline ExcitonPairEntropies exciton_pair_entropies(const PairAmplitudeTable& a, std::size_t k,
                                                                 std::size_t kp) {
  const Eigen::MatrixXcd m = a.matrix();
  if (k >= static_cast<std::size_t>(m.rows()) || kp >= static_cast<std::size_t>(m.cols()))
    throw InvalidArgument("exciton index out of range");
  const auto marg = exciton_marginals(a);
  const double ae = marg.alpha_electron[k];
  const double ah = marg.alpha_hole[kp];
  ExcitonPairEntropies s;
  s.weight = std::norm(m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(kp)));
  s.gamma_electron = ae - s.weight;
  s.gamma_hole = ah - s.weight;
  auto four = [](double w, double ge, double gh) {
    return shannon_entropy({w, ge, gh, std::max(0.0, 1.0 - w - ge - gh)});
  };
  s.electron = binary_entropy(ae);
  s.hole = binary_entropy(ah);
  s.joint = four(s.weight, s.gamma_electron, s.gamma_hole);
  s.electron_spinful = binary_entropy(ae / 2);
  s.hole_spinful = binary_entropy(ah / 2);
  s.joint_opposite_spin = four(s.weight / 2, s.gamma_electron / 2, s.gamma_hole / 2);
  s.joint_same_spin = shannon_entropy({ae / 2, ah / 2, std::max(0.0, 1.0 - ae / 2 - ah / 2)});
  return s;
}

}  // namespace fockent
