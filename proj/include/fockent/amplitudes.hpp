// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fockent/error.hpp>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fockent {

enum class AmplitudeKind { bcs_g, bogoliubov_c, bogoliubov_uv, exciton_A };

[[nodiscard]] inline const char* to_string(AmplitudeKind k) {
  switch (k) {
    case AmplitudeKind::bcs_g: return "bcs_g";
    case AmplitudeKind::bogoliubov_c: return "bogoliubov_c";
    case AmplitudeKind::bogoliubov_uv: return "bogoliubov_uv";
    case AmplitudeKind::exciton_A: return "exciton_A";
  }
  return "?";
}

[[nodiscard]] inline AmplitudeKind amplitude_kind_from_string(const std::string& s) {
  if (s == "bcs_g") return AmplitudeKind::bcs_g;
  if (s == "bogoliubov_c") return AmplitudeKind::bogoliubov_c;
  if (s == "bogoliubov_uv") return AmplitudeKind::bogoliubov_uv;
  if (s == "exciton_A") return AmplitudeKind::exciton_A;
  throw InvalidArgument("unknown amplitude table kind '" + s + "'");
}

struct AmplitudeEntry {
  std::vector<int> k;
  std::vector<int> kp;  ///< exciton_A only: hole momentum k'
  std::complex<double> value;  ///< g_k, c_q, A_{k,k'}, or u_q for bogoliubov_uv
  std::complex<double> v;  ///< bogoliubov_uv only
};

/// Amplitude functions over pair-mode indices: g_k (BCS), c_q (number
/// conserving Bogoliubov), (u_q, v_q) (Bogoliubov transformation) or A_{k,k'}
/// (exciton). Entry order is preserved and defines the pair-index order.
class PairAmplitudeTable {
 public:
  PairAmplitudeTable(AmplitudeKind kind, std::vector<AmplitudeEntry> entries)
      : kind_(kind), entries_(std::move(entries)) {
    validate();
  }

  /// g_k or c_q table with pair indices k = {1}, {2}, ...
  static PairAmplitudeTable indexed(AmplitudeKind kind, const std::vector<std::complex<double>>& values) {
    std::vector<AmplitudeEntry> e;
    for (std::size_t i = 0; i < values.size(); ++i) e.push_back({{static_cast<int>(i) + 1}, {}, values[i], {}});
    return {kind, std::move(e)};
  }

  /// (u_q, v_q) table with pair indices q = {1}, {2}, ...
  static PairAmplitudeTable bogoliubov_uv(const std::vector<std::complex<double>>& u,
                                          const std::vector<std::complex<double>>& v) {
    if (u.size() != v.size()) throw InvalidArgument("u and v tables differ in length");
    std::vector<AmplitudeEntry> e;
    for (std::size_t i = 0; i < u.size(); ++i) e.push_back({{static_cast<int>(i) + 1}, {}, u[i], v[i]});
    return {AmplitudeKind::bogoliubov_uv, std::move(e)};
  }

  /// Dense exciton table: row i is electron momentum {i}, column j hole momentum {j}.
  static PairAmplitudeTable exciton(const Eigen::MatrixXcd& a) {
    std::vector<AmplitudeEntry> e;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        e.push_back({{static_cast<int>(i)}, {static_cast<int>(j)}, a(i, j), {}});
    return {AmplitudeKind::exciton_A, std::move(e)};
  }

  [[nodiscard]] AmplitudeKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<AmplitudeEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  [[nodiscard]] std::vector<std::complex<double>> values() const {
    std::vector<std::complex<double>> out;
    for (const auto& e : entries_) out.push_back(e.value);
    return out;
  }

  /// |value|^2 per entry.
  [[nodiscard]] std::vector<double> weights() const {
    std::vector<double> out;
    for (const auto& e : entries_) out.push_back(std::norm(e.value));
    return out;
  }

  /// Distinct electron momenta in first-appearance order (exciton_A).
  [[nodiscard]] std::vector<std::vector<int>> row_keys() const { return distinct(&AmplitudeEntry::k); }
  /// Distinct hole momenta in first-appearance order (exciton_A).
  [[nodiscard]] std::vector<std::vector<int>> col_keys() const { return distinct(&AmplitudeEntry::kp); }

  /// Dense A_{k,k'} over row_keys() x col_keys(); missing entries are zero.
  [[nodiscard]] Eigen::MatrixXcd matrix() const {
    require_kind(AmplitudeKind::exciton_A);
    const auto rows = row_keys();
    const auto cols = col_keys();
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (const auto& e : entries_) {
      const auto r = std::find(rows.begin(), rows.end(), e.k) - rows.begin();
      const auto c = std::find(cols.begin(), cols.end(), e.kp) - cols.begin();
      a(r, c) = e.value;
    }
    return a;
  }

  void require_kind(AmplitudeKind k) const {
    if (kind_ != k)
      throw InvalidArgument(std::string("expected a ") + to_string(k) + " table, got " + to_string(kind_));
  }

  [[nodiscard]] nlohmann::json to_json() const {
    auto pair = [](std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); };
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : entries_) {
      nlohmann::json j{{"k", e.k}};
      if (kind_ == AmplitudeKind::exciton_A) j["kp"] = e.kp;
      if (kind_ == AmplitudeKind::bogoliubov_uv) {
        j["u"] = pair(e.value);
        j["v"] = pair(e.v);
      } else {
        j["value"] = pair(e.value);
      }
      entries.push_back(std::move(j));
    }
    return {{"kind", to_string(kind_)}, {"entries", std::move(entries)}};
  }

  static PairAmplitudeTable from_json(const nlohmann::json& doc) {
    try {
      const AmplitudeKind kind = amplitude_kind_from_string(doc.at("kind").get<std::string>());
      std::vector<AmplitudeEntry> entries;
      for (const auto& j : doc.at("entries")) {
        AmplitudeEntry e;
        e.k = j.at("k").get<std::vector<int>>();
        if (kind == AmplitudeKind::exciton_A) e.kp = j.at("kp").get<std::vector<int>>();
        if (kind == AmplitudeKind::bogoliubov_uv) {
          e.value = complex_from_json(j.at("u"));
          e.v = complex_from_json(j.at("v"));
        } else {
          e.value = complex_from_json(j.at("value"));
        }
        entries.push_back(std::move(e));
      }
      return {kind, std::move(entries)};
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument(std::string("malformed amplitude table: ") + ex.what());
    }
  }

  static PairAmplitudeTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open amplitude table '" + path + "'");
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidArgument("amplitude table '" + path + "' is not valid JSON: " + ex.what());
    }
    return from_json(doc);
  }

  /// `[re, im]` or a plain real number.
  static std::complex<double> complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    throw InvalidArgument("complex value must be a number or [re, im], got " + j.dump());
  }

 private:
  template <class Member>
  [[nodiscard]] std::vector<std::vector<int>> distinct(Member m) const {
    std::vector<std::vector<int>> out;
    for (const auto& e : entries_)
      if (std::find(out.begin(), out.end(), e.*m) == out.end()) out.push_back(e.*m);
    return out;
  }

  void validate() const {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& e : entries_) {
      if (!seen.emplace(e.k, e.kp).second) throw InvalidArgument("duplicate amplitude table key");
      if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag()) || !std::isfinite(std::abs(e.v)))
        throw InvalidArgument("non-finite amplitude");
    }
    switch (kind_) {
      case AmplitudeKind::bcs_g:
        break;
      case AmplitudeKind::bogoliubov_c:
        for (const auto& e : entries_)
          if (std::abs(e.value) >= 1.0) throw InvalidArgument("bogoliubov_c requires |c_q| < 1");
        [[fallthrough]];
      case AmplitudeKind::bogoliubov_uv:
        for (const auto& e : entries_) {
          if (std::all_of(e.k.begin(), e.k.end(), [](int x) { return x == 0; }))
            throw InvalidArgument("pair momentum q = 0 is the condensate, not a pair mode");
          std::vector<int> minus = e.k;
          for (int& x : minus) x = -x;
          for (const auto& f : entries_)
            if (f.k == minus) throw InvalidArgument("table lists both q and -q; list each pair once");
          if (kind_ == AmplitudeKind::bogoliubov_uv &&
              std::abs(std::norm(e.value) - std::norm(e.v) - 1.0) > 1e-12)
            throw InvalidArgument("bogoliubov_uv requires |u|^2 - |v|^2 = 1");
        }
        break;
      case AmplitudeKind::exciton_A: {
        double total = 0.0;
        for (const auto& e : entries_) total += std::norm(e.value);
        if (std::abs(total - 1.0) > 1e-12)
          throw InvalidArgument("exciton table is not normalized (sum |A|^2 = " + std::to_string(total) + ")");
        break;
      }
    }
  }

  AmplitudeKind kind_;
  std::vector<AmplitudeEntry> entries_;
};

}  // namespace fockent
