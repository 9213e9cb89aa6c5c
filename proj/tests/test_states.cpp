// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

#include <fockent/entanglement.hpp>
#include <fockent/states.hpp>

#include <gtest/gtest.h>

namespace {

using namespace fockent;

TEST(FermiSea, FillsRequestedModes) {
  const auto reg = generic_registry(5);
  const auto sea = fermi_sea(reg, ModeSubset{0, 1, 2});
  ASSERT_EQ(sea.size(), 1u);
  EXPECT_EQ(std::abs(sea.amplitude({1, 1, 1, 0, 0})), 1.0);
  const auto ex = particle_hole_excitation(sea, 1, 4);
  EXPECT_EQ(std::abs(ex.amplitude({1, 0, 1, 0, 1})), 1.0);
  EXPECT_THROW((void)particle_hole_excitation(sea, 4, 1), InvalidArgument);
}

TEST(Bcs, UnprojectedSinglePairHandExpansion) {
  const Complex g{0.6, -0.8};
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bcs_g, {g});
  const auto reg = bcs_registry(table);
  const auto s = bcs_unprojected(reg, table);
  // (1 + g a†_{k up} a†_{-k down}) |0> / sqrt(1 + |g|^2)
  const double n = std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s.amplitude({0, 0}) - 1.0 / n), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude({1, 1}) - g / n), 0.0, 1e-15);
}

TEST(Bcs, ProjectedTwoPairsHandExpansion) {
  const Complex g1{1.0, 0.0}, g2{0.0, 2.0};
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bcs_g, {g1, g2});
  const auto reg = bcs_registry(table);
  const auto s = bcs_projected(reg, table, 2);
  const double n = std::sqrt(5.0);
  EXPECT_NEAR(std::abs(s.amplitude({1, 1, 0, 0}) - g1 / n), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude({0, 0, 1, 1}) - g2 / n), 0.0, 1e-15);
  EXPECT_EQ(s.size(), 2u);
}

TEST(Bcs, ProjectedIsNumberProjectionOfUnprojected) {
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bcs_g, {{0.5, 0.2}, {1.3, -0.4}, {0.7, 0.9}});
  const auto reg = bcs_registry(table);
  const auto proj = normalize(project_particle_number(bcs_unprojected(reg, table), 4));
  const auto direct = bcs_projected(reg, table, 4);
  EXPECT_NEAR(std::abs(inner_product(proj, direct)), 1.0, 1e-14);
}

TEST(Bcs, OddParticleNumberUsesUnpairedMode) {
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bcs_g, {1.0, 1.0, 1.0});
  const auto reg = bcs_registry(table);
  EXPECT_THROW((void)bcs_projected(reg, table, 3), InvalidArgument);
  const auto s = bcs_projected(reg, table, 3, 0);
  for (const auto& [key, amp] : s.amplitudes()) {
    EXPECT_EQ(reg->total_particles(key), 3);
    EXPECT_EQ(reg->occupation(key, 0), 1);
    EXPECT_EQ(reg->occupation(key, 1), 0);
  }
  EXPECT_THROW((void)bcs_projected(reg, table, 8), InvalidArgument);
}

TEST(Exciton, SpinlessAmplitudes) {
  Eigen::MatrixXcd a(2, 2);
  a << 0.5, Complex(0.0, 0.5), -0.5, 0.5;
  const auto table = PairAmplitudeTable::exciton(a);
  const auto reg = exciton_registry(table, false);
  const auto s = exciton_spinless(reg, table);
  // electrons {0},{1} then holes {0},{1}; a†_e b†_h |G> carries +1 for e < h
  EXPECT_NEAR(std::abs(s.amplitude({1, 0, 0, 1}) - Complex(0.0, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude({0, 1, 1, 0}) + 0.5), 0.0, 1e-15);
}

TEST(Exciton, SpinChannelsHaveDefiniteSz) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Constant(2, 2, 0.5);
  const auto table = PairAmplitudeTable::exciton(a);
  const auto reg = exciton_registry(table, true);
  auto sz = [&](SpinChannel c) {
    const auto s = exciton_spinful(reg, table, c);
    return inner_product(s, apply_spin_z(s)).real();
  };
  EXPECT_NEAR(sz(SpinChannel::triplet_up), 1.0, 1e-14);
  EXPECT_NEAR(sz(SpinChannel::triplet_down), -1.0, 1e-14);
  EXPECT_NEAR(sz(SpinChannel::triplet_zero), 0.0, 1e-14);
  EXPECT_NEAR(sz(SpinChannel::singlet), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(inner_product(exciton_spinful(reg, table, SpinChannel::singlet),
                                     exciton_spinful(reg, table, SpinChannel::triplet_zero))),
              0.0, 1e-14);
  EXPECT_THROW((void)spin_channel_from_string("quintet"), InvalidArgument);
}

TEST(Exciton, RejectsUnnormalizedTable) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Constant(2, 2, 1.0);
  EXPECT_THROW((void)PairAmplitudeTable::exciton(a), InvalidArgument);
}

TEST(Bogoliubov, UnprojectedGeometricAmplitudes) {
  const auto uv = PairAmplitudeTable::bogoliubov_uv({std::sqrt(1.25)}, {Complex(0.0, 0.5)});
  const auto reg = bogoliubov_registry(uv, 40, 0);
  const auto g = bogoliubov_unprojected(reg, uv);
  const Complex ratio = -Complex(0.0, 0.5) / std::sqrt(1.25);
  EXPECT_EQ(g.cutoff, bogoliubov_default_cutoff(std::abs(ratio)));
  EXPECT_LT(g.truncation_bound, 1e-13);
  const Complex a0 = g.state.amplitude({0, 0, 0});
  for (int n = 1; n <= 3; ++n) EXPECT_NEAR(std::abs(g.state.amplitude({0, n, n}) / a0 - std::pow(ratio, n)), 0.0, 1e-13);
}

TEST(Bogoliubov, UvTableValidation) {
  EXPECT_THROW((void)PairAmplitudeTable::bogoliubov_uv({1.0}, {0.5}), InvalidArgument);
  EXPECT_THROW((void)PairAmplitudeTable::indexed(AmplitudeKind::bogoliubov_c, {1.0}), InvalidArgument);
  EXPECT_THROW((PairAmplitudeTable(AmplitudeKind::bogoliubov_c, {{{1}, {}, 0.1, {}}, {{-1}, {}, 0.2, {}}})),
               InvalidArgument);
  EXPECT_THROW((PairAmplitudeTable(AmplitudeKind::bogoliubov_c, {{{0}, {}, 0.1, {}}})), InvalidArgument);
}

// At N = 2 the number-conserving state is the N-projection of the
// unprojected one with c = v/u, the condensate holding N - 2 n_q bosons.
TEST(Bogoliubov, ProjectedAgreesWithProjectionAtNTwo) {
  const Complex u = std::sqrt(1.25), v{0.3, 0.4};
  const Complex c = v / u;
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bogoliubov_c, {c});
  const auto reg = bogoliubov_registry(table, 2, 2);
  const auto s = bogoliubov_projected(reg, table, 2);
  const double n = std::sqrt(1.0 + std::norm(c));
  EXPECT_NEAR(std::abs(s.amplitude({2, 0, 0}) - 1.0 / n), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude({0, 1, 1}) + c / n), 0.0, 1e-15);

  const auto uv = PairAmplitudeTable::bogoliubov_uv({u}, {v});
  const auto free = bogoliubov_unprojected(bogoliubov_registry(uv, 40, 0), uv).state;
  const Complex ratio_free = free.amplitude({0, 1, 1}) / free.amplitude({0, 0, 0});
  const Complex ratio_proj = s.amplitude({0, 1, 1}) / s.amplitude({2, 0, 0});
  EXPECT_NEAR(std::abs(ratio_free - ratio_proj), 0.0, 1e-14);
}

TEST(Bogoliubov, ProjectedWeightsAreMultinomialBeyondNTwo) {
  const Complex c{0.5, 0.0};
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bogoliubov_c, {c});
  const auto reg = bogoliubov_registry(table, 4, 4);
  const auto s = bogoliubov_projected(reg, table, 4);
  // p(2; 2,0)=1, p(2; 1,1)=2, p(2; 0,2)=1 times (-c)^{n_1}; a geometric
  // weight would instead give 1 : -c : c^2.
  const Complex a0 = s.amplitude({4, 0, 0});
  EXPECT_NEAR(std::abs(s.amplitude({2, 1, 1}) / a0 - 2.0 * (-c)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.amplitude({0, 2, 2}) / a0 - c * c), 0.0, 1e-14);
}

TEST(Bogoliubov, ProjectedNeedsCutoffAtLeastN) {
  const auto table = PairAmplitudeTable::indexed(AmplitudeKind::bogoliubov_c, {0.5});
  EXPECT_THROW((void)bogoliubov_projected(bogoliubov_registry(table, 2, 2), table, 4), InvalidArgument);
  EXPECT_THROW((void)bogoliubov_projected(bogoliubov_registry(table, 4, 4), table, 3), InvalidArgument);
}

TEST(UniformFilling, OccupationIsKOverM) {
  const auto reg = generic_registry(5);
  const auto s = uniform_filling_state(reg, 5, 2);
  EXPECT_EQ(s.size(), 10u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(number_expectation(s, i), 0.4, 1e-15);
  EXPECT_THROW((void)uniform_filling_state(reg, 5, 6), InvalidArgument);
  EXPECT_THROW((void)uniform_filling_state(reg, 4, 2), InvalidArgument);
}

TEST(SingleParticle, RequiresNormalizedCoefficients) {
  const auto reg = generic_registry(2);
  EXPECT_THROW((void)single_particle_superposition(reg, {1.0, 1.0}), InvalidArgument);
  EXPECT_THROW((void)single_particle_superposition(reg, {1.0}), InvalidArgument);
}

}  // namespace
