// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace fockent {

/// Base class for all library errors. `exit_code()` is the CLI status the
/// error maps to.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  [[nodiscard]] virtual int exit_code() const noexcept { return 2; }
};

/// Bad input: malformed tables, out-of-range indices, violated preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Fock sector, RDM or enumeration exceeded its size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] int exit_code() const noexcept override { return 3; }
};

/// A numerical invariant (PSD, normalization, truncation) was violated.
class NumericalError : public Error {
 public:
  using Error::Error;
  [[nodiscard]] int exit_code() const noexcept override { return 4; }
};

/// Sector-dimension guard, overridable through FOCKENT_SIZE_GUARD.
[[nodiscard]] inline std::size_t sector_size_guard() {
  constexpr std::size_t kDefault = 5000;
  const char* env = std::getenv("FOCKENT_SIZE_GUARD");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    throw InvalidArgument("FOCKENT_SIZE_GUARD must be a positive integer, got '" +
                          std::string(env) + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace fockent
