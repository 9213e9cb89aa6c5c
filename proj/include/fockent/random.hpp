// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace fockent {

/// Seeded generator for randomized instances.
///
/// Uses mt19937_64 (bit-exact across standard libraries) and converts raw
/// draws to doubles itself, since std::uniform_real_distribution output is
/// implementation-defined. Same seed, same instances, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  double phase() { return uniform(0.0, 2.0 * std::numbers::pi); }

  /// Magnitude uniform in [lo, hi), phase uniform in [0, 2 pi).
  std::complex<double> complex_polar(double lo, double hi) {
    const double r = uniform(lo, hi);
    return std::polar(r, phase());
  }

  /// Real and imaginary parts independently uniform in [-1, 1).
  std::complex<double> complex_box() {
    const double re = uniform(-1.0, 1.0);
    return {re, uniform(-1.0, 1.0)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fockent
