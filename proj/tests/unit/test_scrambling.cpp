// Copyright 2026 The Scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "scramble/eigen.hpp"
#include "scramble/errors.hpp"
#include "scramble/floquet.hpp"
#include "scramble/power_law.hpp"
#include "scramble/scrambling.hpp"
#include "scramble/series.hpp"
#include "scramble/tfim.hpp"
#include "test_support.hpp"

namespace scramble {
namespace {

using testing::random_state;

// Rows n = 0..11 of the self-dual entropy table:
// S_X, S_Y, S_Z, S_XYZ, S_XY, S_YZ, S_ZX, I3.
constexpr std::array<std::array<int, 8>, 12> kSelfDualTable{{
    {1, 0, 0, 1, 1, 0, 1, 0},
    {1, 2, 2, 1, 2, 1, 2, 1},
    {1, 4, 4, 1, 4, 2, 4, 0},
    {1, 5, 5, 1, 6, 2, 6, -2},
    {1, 4, 4, 1, 4, 2, 4, 0},
    {1, 2, 2, 1, 2, 2, 2, 0},
    {1, 2, 2, 1, 2, 2, 2, 0},
    {1, 4, 4, 1, 4, 2, 4, 0},
    {1, 5, 5, 1, 6, 2, 6, -2},
    {1, 4, 4, 1, 4, 2, 4, 0},
    {1, 2, 2, 1, 2, 1, 2, 1},
    {1, 0, 0, 1, 1, 0, 1, 0},
}};

ModelParams self_dual(int n = 11, double hx = 0.0) {
  ModelParams p;
  p.num_sites = n;
  p.tau = Period::pi_fraction(1, 4);
  p.h_x = hx;
  return p;
}

ModelParams small_period(int n, double hx) {
  ModelParams p;
  p.num_sites = n;
  p.tau = Period::half_epsilon_multiple(1);
  p.h_x = hx;
  return p;
}

void expect_row(const TmiSample& s, const std::array<int, 8>& row) {
  const auto& e = s.entropies;
  EXPECT_NEAR(e.s_x, row[0], 1e-8);
  EXPECT_NEAR(e.s_y, row[1], 1e-8);
  EXPECT_NEAR(e.s_z, row[2], 1e-8);
  EXPECT_NEAR(e.s_xyz, row[3], 1e-8);
  EXPECT_NEAR(e.s_xy, row[4], 1e-8);
  EXPECT_NEAR(e.s_yz, row[5], 1e-8);
  EXPECT_NEAR(e.s_zx, row[6], 1e-8);
  EXPECT_NEAR(s.i3, row[7], 1e-8);
}

TEST(Partition, Geometry) {
  const Partition p(11, 5);
  EXPECT_EQ(p.x().indices(), std::vector<int>{0});
  EXPECT_EQ(p.y().indices(), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(p.z().indices(), (std::vector<int>{6, 7, 8, 9, 10}));
  EXPECT_EQ(p.w().indices(), std::vector<int>{11});
  EXPECT_TRUE(p.x().disjoint(p.y()) && p.y().disjoint(p.z()) && p.x().disjoint(p.z()));
  EXPECT_EQ((p.x() | p.y() | p.z()), SubsetMask::range(0, 11));
  EXPECT_THROW(Partition(11, 0), ArgumentError);
  EXPECT_THROW(Partition(11, 10), ArgumentError);
  EXPECT_THROW(Partition(2, 1), ArgumentError);
}

TEST(InitialState, ParseNames) {
  EXPECT_EQ(parse_initial_state("allup"), InitialStateKind::AllUp);
  EXPECT_EQ(parse_initial_state("all-up"), InitialStateKind::AllUp);
  EXPECT_EQ(parse_initial_state("neel"), InitialStateKind::Neel);
  EXPECT_THROW(parse_initial_state("ferro"), ArgumentError);
}

TEST(EncodedState, TwoSiteAllUp) {
  const auto s = prepare_encoded_state(InitialStateKind::AllUp, 2);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    // |W up, all up> = 0 and |W down, X down, rest up> = bit 2 | bit 0.
    const double expect = (i == 0b000 || i == 0b101) ? h : 0.0;
    EXPECT_NEAR(std::abs(s[i] - expect), 0.0, 1e-15) << i;
  }
}

TEST(EncodedState, NeelOrientation) {
  const auto s = prepare_product_state(InitialStateKind::Neel, 5);
  // Sites 1 and 3 down, W in superposition.
  EXPECT_NEAR(std::abs(s[0b001010]), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(s[0b101010]), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(EncodedState, OneEbitBetweenWAndX) {
  for (auto kind : {InitialStateKind::AllUp, InitialStateKind::Neel}) {
    const auto s = prepare_encoded_state(kind, 7);
    EXPECT_NEAR(subsystem_entropy(s, SubsetMask::of({7})), 1.0, 1e-12);
    EXPECT_NEAR(subsystem_entropy(s, SubsetMask::of({0})), 1.0, 1e-12);
    EXPECT_NEAR(tripartite_mi(s, Partition(7, 3)), 0.0, 1e-12);
  }
}

TEST(EncodedState, AncillaUnentangledBeforeCnot) {
  const auto s = prepare_product_state(InitialStateKind::AllUp, 6);
  const Partition p(6, 2);
  EXPECT_NEAR(tripartite_mi(s, p.w(), p.y(), p.z()), 0.0, 1e-12);
}

TEST(BipartiteMi, ProductStateIsZero) {
  const auto s = StateVector::basis_state(4, 0b10110);
  EXPECT_NEAR(bipartite_mi(s, SubsetMask::of({0, 1}), SubsetMask::of({3, 4})), 0.0, 1e-12);
}

TEST(BipartiteMi, BellPairIsTwo) {
  StateVector s(1, {1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)});
  EXPECT_NEAR(bipartite_mi(s, SubsetMask::of({0}), SubsetMask::of({1})), 2.0, 1e-12);
}

TEST(BipartiteMi, SelfDualFirstKick) {
  auto s = prepare_encoded_state(InitialStateKind::AllUp, 11);
  s = apply_floquet_kick(std::move(s), self_dual());
  const Partition p(11, 5);
  EXPECT_NEAR(bipartite_mi(s, p.x(), p.y()), 1.0, 1e-9);
}

TEST(BipartiteMi, OverlapRejected) {
  const auto s = random_state(3, 1);
  EXPECT_THROW(bipartite_mi(s, SubsetMask::of({0, 1}), SubsetMask::of({1, 2})), ArgumentError);
}

TEST(TripartiteMi, SelfDualThirdKick) {
  auto s = prepare_encoded_state(InitialStateKind::AllUp, 11);
  const FloquetPropagator prop(self_dual());
  for (int n = 0; n < 3; ++n) prop.apply_in_place(s.mutable_amplitudes());
  EXPECT_NEAR(tripartite_mi(s, Partition(11, 5)), -2.0, 1e-9);
}

TEST(TripartiteMi, DensePipelineOracle) {
  // N = 4, ell = 1, tau = 0.3, one integrable kick; dense unitary, explicit
  // reduced density matrices and Jacobi spectra throughout.
  ModelParams p;
  p.num_sites = 4;
  p.tau = Period::radians(0.3);
  const Partition part(4, 1);
  const auto encoded = prepare_encoded_state(InitialStateKind::AllUp, 4);
  const auto dense_state = apply_chain_unitary(encoded, build_floquet_dense(p));
  auto s_of = [&](SubsetMask m) {
    const auto rho = testing::brute_force_rho(dense_state, m.indices());
    return testing::entropy_bits(hermitian_eigenvalues(rho, EigenMethod::Jacobi));
  };
  const auto x = part.x(), y = part.y(), z = part.z();
  const double oracle = s_of(x) + s_of(y) + s_of(z) - s_of(x | y) - s_of(y | z) - s_of(z | x) +
                        s_of(x | y | z);
  const auto fast = apply_floquet_kick(encoded, p);
  EXPECT_NEAR(tripartite_mi(fast, part), oracle, 1e-9);
}

TEST(TripartiteMi, BothFormulasAgree) {
  EntropySet s{1.0, 2.0, 2.0, 1.0, 2.0, 1.0, 2.0};
  EXPECT_NEAR(s.expanded_tmi(), s.mutual_information_tmi(), 1e-15);
  EXPECT_NEAR(TmiEvaluator::checked_tmi(s), 1.0, 1e-15);
}

TEST(TripartiteMi, SymmetricInYAndZ) {
  ModelParams p = small_period(7, 1.0);
  p.tau = Period::radians(0.41);
  const FloquetPropagator prop(p);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_state(7, 300 + trial);
    for (int k = 0; k < trial % 5; ++k) prop.apply_in_place(s.mutable_amplitudes());
    const Partition part(7, 1 + trial % 5);
    const double a = tripartite_mi(s, part.x(), part.y(), part.z());
    const double b = tripartite_mi(s, part.x(), part.z(), part.y());
    EXPECT_NEAR(a, b, 1e-9);
  }
}

TEST(TripartiteMi, AncillaMirrorsX) {
  for (auto kind : {InitialStateKind::AllUp, InitialStateKind::Neel}) {
    const auto p = small_period(7, 1.0);
    const Partition part(7, 3);
    auto s = prepare_encoded_state(kind, 7);
    const FloquetPropagator prop(p);
    for (int n = 0; n <= 30; ++n) {
      EXPECT_NEAR(tripartite_mi(s, part.w(), part.y(), part.z()), tripartite_mi(s, part), 1e-9);
      prop.apply_in_place(s.mutable_amplitudes());
    }
  }
}

TEST(TripartiteMi, OraclePathAgrees) {
  auto s = prepare_encoded_state(InitialStateKind::Neel, 9);
  const FloquetPropagator prop(small_period(9, 1.0));
  for (int n = 0; n < 7; ++n) prop.apply_in_place(s.mutable_amplitudes());
  for (int ell = 1; ell <= 7; ++ell) {
    const Partition part(9, ell);
    EXPECT_NEAR(tripartite_mi(s, part, EntropyMethod::Schmidt),
                tripartite_mi(s, part, EntropyMethod::PartialTrace), 1e-9);
  }
}

TEST(EntropyTable, SelfDualPeriod) {
  const auto rows = entropy_table(self_dual(), Partition(11, 5), InitialStateKind::AllUp, 11);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    SCOPED_TRACE("n=" + std::to_string(n));
    EXPECT_EQ(rows[n].time, static_cast<double>(n));
    expect_row(rows[n], kSelfDualTable[n]);
  }
}

TEST(TimeSeries, SelfDualPeriodicity) {
  const auto series = tmi_time_series(self_dual(), Partition(11, 5), InitialStateKind::AllUp, 500);
  ASSERT_EQ(series.samples.size(), 501u);
  for (std::size_t n = 0; n + 11 <= 500; ++n)
    ASSERT_NEAR(series.samples[n + 11].i3, series.samples[n].i3, 1e-8) << "n=" << n;
  for (const auto& s : series.samples) {
    const double d = std::min({std::abs(s.i3), std::abs(s.i3 - 1.0), std::abs(s.i3 + 2.0)});
    ASSERT_LT(d, 1e-8) << "t=" << s.time;
  }
}

TEST(TimeSeries, NonintegrableSelfDualStaysInRange) {
  const auto series = tmi_time_series(self_dual(11, 1.0), Partition(11, 5), InitialStateKind::Neel, 200);
  for (const auto& s : series.samples) {
    EXPECT_GE(s.i3, -2.0 - 1e-6);
    EXPECT_LE(s.i3, 1.0 + 1e-6);
  }
}

TEST(TimeSeries, ZeroPeriodIsConstant) {
  ModelParams p = small_period(6, 1.0);
  p.tau = Period::pi_fraction(0, 1);
  const auto series = tmi_time_series(p, Partition(6, 2), InitialStateKind::Neel, 20);
  for (const auto& s : series.samples) EXPECT_NEAR(s.i3, series.samples.front().i3, 1e-12);
}

TEST(TimeSeries, MultiPartitionMatchesSingle) {
  const auto p = small_period(8, 1.0);
  std::vector<Partition> parts;
  for (int ell = 1; ell <= 6; ++ell) parts.emplace_back(8, ell);
  const auto all = tmi_time_series(p, parts, InitialStateKind::AllUp, 25);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto one = tmi_time_series(p, parts[k], InitialStateKind::AllUp, 25);
    for (std::size_t n = 0; n < one.samples.size(); ++n)
      EXPECT_EQ(one.samples[n].i3, all[k].samples[n].i3);
  }
}

TEST(TimeSeries, RejectsZeroKicks) {
  EXPECT_THROW(tmi_time_series(small_period(5, 0.0), Partition(5, 2), InitialStateKind::AllUp, 0),
               ArgumentError);
}

TEST(TimeSeries, TfimGridAndOracle) {
  ModelParams p;
  p.num_sites = 5;
  p.h_x = 1.0;
  const Partition part(5, 2);
  const auto series = tfim_time_series(p, part, InitialStateKind::Neel, TimeGrid{0.25, 8});
  ASSERT_EQ(series.samples.size(), 9u);
  const auto encoded = prepare_encoded_state(InitialStateKind::Neel, 5);
  for (const auto& s : series.samples) {
    const auto direct = tfim_propagate(encoded, p, s.time);
    EXPECT_NEAR(s.i3, tripartite_mi(direct, part), 1e-9) << s.time;
  }
}

TmiSeries synthetic(const std::vector<double>& times, const std::vector<double>& i3) {
  TmiSeries s;
  for (std::size_t k = 0; k < times.size(); ++k) s.samples.push_back({times[k], i3[k], {}});
  return s;
}

TEST(Average, ConstantSeries) {
  std::vector<double> t, v;
  for (int n = 0; n <= 50; ++n) {
    t.push_back(n);
    v.push_back(-1.0);
  }
  EXPECT_DOUBLE_EQ(averaged_tmi(synthetic(t, v), 10, 40), -1.0);
}

TEST(Average, AlternatingCancels) {
  std::vector<double> t, v;
  for (int n = 0; n <= 50; ++n) {
    t.push_back(n);
    v.push_back(n % 2 ? -0.3 : 0.3);
  }
  EXPECT_NEAR(averaged_tmi(synthetic(t, v), 10, 19), 0.0, 1e-15);
}

TEST(Average, NormalizedByTermCount) {
  std::vector<double> t, v;
  for (int n = 0; n <= 10; ++n) {
    t.push_back(n);
    v.push_back(n);
  }
  // Mean of 2..6 over five terms.
  EXPECT_DOUBLE_EQ(averaged_tmi(synthetic(t, v), 2, 6), 4.0);
}

TEST(Average, MissingCoverageRejected) {
  std::vector<double> t{0, 1, 2, 4, 5}, v(5, 0.0);
  EXPECT_THROW(averaged_tmi(synthetic(t, v), 1, 5), ArgumentError);
  EXPECT_THROW(averaged_tmi(synthetic(t, v), 0, 9), ArgumentError);
  EXPECT_THROW(averaged_tmi(synthetic(t, v), 3, 3), ArgumentError);
}

TEST(AverageContinuous, ConstantAndRamp) {
  std::vector<double> t, c, r;
  for (int k = 0; k <= 100; ++k) {
    t.push_back(0.1 * k);
    c.push_back(-1.0);
    r.push_back(2.0 + 0.5 * (0.1 * k));
  }
  EXPECT_NEAR(averaged_tmi_continuous(synthetic(t, c), 1.0, 9.0), -1.0, 1e-12);
  // Ramp from 2.5 at t=1 to 6.5 at t=9.
  EXPECT_NEAR(averaged_tmi_continuous(synthetic(t, r), 1.0, 9.0), 4.5, 1e-12);
}

TEST(AverageContinuous, NonUniformGridRejected) {
  std::vector<double> t{0.0, 0.1, 0.25, 0.3, 0.4}, v(5, 0.0);
  EXPECT_THROW(averaged_tmi_continuous(synthetic(t, v), 0.0, 0.4), ArgumentError);
}

TEST(Average, SmallPeriodNonintegrableNeelBaseline) {
  const auto series = tmi_time_series(small_period(11, 1.0), Partition(11, 5), InitialStateKind::Neel, 500);
  EXPECT_NEAR(averaged_tmi(series, 100, 500), -0.880547476371, 1e-9);
}

TEST(PowerLaw, ExactQuadratic) {
  std::vector<double> t, v;
  for (int n = 0; n <= 20; ++n) {
    t.push_back(n);
    v.push_back(1.0 - double(n) * n);
  }
  const auto fit = fit_power_law(t, v);
  EXPECT_NEAR(fit.exponent, 2.0, 1e-9);
  EXPECT_NEAR(fit.log_prefactor, 0.0, 1e-9);
  EXPECT_GE(fit.window_start, 1u);
  EXPECT_EQ(fit.window_start, 2u);
  EXPECT_EQ(fit.window_end, 20u);
  EXPECT_LT(fit.rms_residual, 1e-9);
}

TEST(PowerLaw, WindowStopsAtSaturation) {
  std::vector<double> t, v;
  for (int n = 0; n <= 40; ++n) {
    t.push_back(n);
    const double grow = n <= 12 ? 0.01 * std::pow(n, 1.5) : 0.01 * std::pow(12, 1.5) - 0.01 * (n - 12);
    v.push_back(-grow);
  }
  const auto fit = fit_power_law(t, v);
  // the centred average still rises one sample past the peak
  EXPECT_EQ(fit.window_end, 13u);
  EXPECT_GE(fit.window_end - fit.window_start + 1, 4u);
}

TEST(PowerLaw, InfeasibleWithoutCrossing) {
  std::vector<double> t{0, 1, 2, 3, 4, 5}, v(6, 0.0);
  EXPECT_THROW(fit_power_law(t, v), FitInfeasibleError);
  std::vector<double> short_v{0, 0, -0.5, -0.1, -0.05, -0.01};
  EXPECT_THROW(fit_power_law(t, short_v), FitInfeasibleError);
}

TEST(PowerLaw, SmallPeriodSingleSiteExponent) {
  const auto series = tmi_time_series(small_period(11, 0.0), Partition(11, 1), InitialStateKind::AllUp, 60);
  const auto fit = fit_power_law(series);
  EXPECT_GE(fit.exponent, 0.1);
  EXPECT_LE(fit.exponent, 0.5);
}

}  // namespace
}  // namespace scramble
