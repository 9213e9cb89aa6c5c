// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

#include "jw_oracle.hpp"

#include <fockent/acceptance.hpp>
#include <fockent/fock_core.hpp>
#include <fockent/states.hpp>

#include <gtest/gtest.h>

namespace {

using namespace fockent;

RegistryPtr mixed_registry() {
  return registry_create({generic_mode(0), boson({1}), generic_mode(1), boson({-1})}, {3, 2});
}

TEST(ModeRegistry, EncodeDecodeRoundTrip) {
  const auto reg = mixed_registry();
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 1; ++c)
        for (int d = 0; d <= 2; ++d) {
          const OccupationVector n{a, b, c, d};
          EXPECT_EQ(reg->decode(reg->encode(n)), n);
        }
}

TEST(ModeRegistry, RejectsBadInput) {
  EXPECT_THROW(registry_create({generic_mode(0), generic_mode(0)}), InvalidArgument);
  EXPECT_THROW(registry_create({boson({1})}), InvalidArgument);
  EXPECT_THROW(registry_create({boson({1})}, {-1}), InvalidArgument);
  EXPECT_THROW(registry_create({generic_mode(0)}, {2}), InvalidArgument);
  const auto reg = mixed_registry();
  EXPECT_THROW((void)reg->encode({2, 0, 0, 0}), InvalidArgument);
  EXPECT_THROW((void)reg->encode({0, 4, 0, 0}), InvalidArgument);
  EXPECT_THROW((void)reg->encode({0, 0, 0}), InvalidArgument);
  EXPECT_THROW(reg->check_mode(4), InvalidArgument);
  EXPECT_THROW((void)reg->require_index(electron({0})), InvalidArgument);
}

TEST(ModeRegistry, RejectsMoreThan64Bits) {
  std::vector<ModeLabel> labels;
  for (int i = 0; i < 65; ++i) labels.push_back(generic_mode(i));
  EXPECT_THROW(registry_create(labels), InvalidArgument);
}

TEST(ModeRegistry, LabelLookup) {
  const auto reg = registry_create({electron({1, 0}, Spin::up), hole({0, 2}), boson({3}), generic_mode(7)}, {1});
  EXPECT_EQ(reg->require_index(hole({0, 2})), 1u);
  EXPECT_EQ(reg->require_index(generic_mode(7)), 3u);
  EXPECT_TRUE(reg->is_fermionic(0));
  EXPECT_FALSE(reg->is_fermionic(2));
  EXPECT_EQ(reg->max_occupation(0), 1);
  EXPECT_EQ(reg->max_occupation(2), 1);
}

// Ascending-order convention: a†_j picks up (-1)^(occupied modes below j).
TEST(Operators, SignConvention) {
  const auto reg = generic_registry(3);
  const auto vac = ManyBodyState::vacuum(reg);
  const auto s01 = apply_creation(apply_creation(vac, 1), 0);  // a†_0 a†_1 |0>
  const auto s10 = apply_creation(apply_creation(vac, 0), 1);  // a†_1 a†_0 |0>
  EXPECT_DOUBLE_EQ(s01.amplitude({1, 1, 0}).real(), 1.0);
  EXPECT_DOUBLE_EQ(s10.amplitude({1, 1, 0}).real(), -1.0);
  const auto s = ManyBodyState::basis(reg, {1, 0, 1});
  EXPECT_DOUBLE_EQ(apply_annihilation(s, 2).amplitude({1, 0, 0}).real(), -1.0);
  EXPECT_DOUBLE_EQ(apply_annihilation(s, 0).amplitude({0, 0, 1}).real(), 1.0);
  EXPECT_TRUE(apply_creation(s, 0).is_zero());
  EXPECT_TRUE(apply_annihilation(s, 1).is_zero());
}

TEST(Operators, MatchJordanWignerOracle) {
  const auto reg = generic_registry(4);
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = detail::random_fermion_state(reg, rng);
    const Eigen::VectorXcd v = jw::to_dense(psi);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_LT((jw::to_dense(apply_creation(psi, j)) - jw::creation(4, j) * v).norm(), 1e-14);
      EXPECT_LT((jw::to_dense(apply_annihilation(psi, j)) - jw::annihilation(4, j) * v).norm(), 1e-14);
    }
  }
}

TEST(Operators, CanonicalAnticommutation) {
  const auto reg = generic_registry(4);
  Rng rng(3);
  const auto psi = detail::random_fermion_state(reg, rng);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto ad = add(apply_creation(apply_creation(psi, j), i), apply_creation(apply_creation(psi, i), j));
      EXPECT_LT(ad.norm(), 1e-14);
      const auto mix = add(apply_annihilation(apply_creation(psi, j), i), apply_creation(apply_annihilation(psi, i), j));
      EXPECT_LT(add(mix, psi, i == j ? -1.0 : 0.0).norm(), 1e-14) << i << "," << j;
    }
}

TEST(Operators, BosonLadder) {
  const auto reg = registry_create({boson({0})}, {3});
  auto s = ManyBodyState::vacuum(reg);
  for (int n = 0; n < 3; ++n) {
    s = apply_creation(s, 0);
    EXPECT_FALSE(s.truncated());
  }
  // (a†)^3 |0> = sqrt(3!) |3>
  EXPECT_NEAR(s.amplitude({3}).real(), std::sqrt(6.0), 1e-14);
  EXPECT_NEAR(apply_annihilation(s, 0).amplitude({2}).real(), std::sqrt(6.0) * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(apply_number(s, 0).amplitude({3}).real(), 3.0 * std::sqrt(6.0), 1e-14);
  const auto over = apply_creation(s, 0);
  EXPECT_TRUE(over.truncated());
  EXPECT_TRUE(over.is_zero());
  EXPECT_THROW(require_untruncated(over, "test"), NumericalError);
}

TEST(Operators, BosonsCommuteWithFermionsWithoutSign) {
  const auto reg = mixed_registry();
  const auto s = ManyBodyState::basis(reg, {1, 0, 0, 0});
  EXPECT_DOUBLE_EQ(apply_creation(s, 1).amplitude({1, 1, 0, 0}).real(), 1.0);
  // fermion 2 sees one occupied fermion below it; the boson in between does not count
  EXPECT_DOUBLE_EQ(apply_creation(apply_creation(s, 1), 2).amplitude({1, 1, 1, 0}).real(), -1.0);
}

TEST(ManyBodyState, InnerProductAndNormalization) {
  const auto reg = generic_registry(2);
  const auto a = ManyBodyState::basis(reg, {1, 0}, Complex{0.0, 2.0});
  const auto b = ManyBodyState::basis(reg, {1, 0}, 3.0);
  EXPECT_EQ(inner_product(a, b), (Complex{0.0, -6.0}));  // antilinear in the first slot
  EXPECT_NEAR(normalize(a).norm(), 1.0, 1e-15);
  EXPECT_THROW((void)normalize(ManyBodyState(reg)), NumericalError);
  EXPECT_THROW(require_normalized(a), InvalidArgument);
  EXPECT_THROW((void)inner_product(a, ManyBodyState::vacuum(generic_registry(3))), InvalidArgument);
}

TEST(ManyBodyState, ParticleNumberProjection) {
  const auto reg = generic_registry(3);
  const auto s = add(ManyBodyState::basis(reg, {1, 0, 0}), ManyBodyState::basis(reg, {1, 1, 0}));
  EXPECT_EQ(particle_number_sectors(s), (std::set<int>{1, 2}));
  const auto p = project_particle_number(s, 2);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_NEAR(number_expectation(normalize(s), 0), 1.0, 1e-15);
  EXPECT_NEAR(number_expectation(normalize(s), 1), 0.5, 1e-15);
}

}  // namespace
