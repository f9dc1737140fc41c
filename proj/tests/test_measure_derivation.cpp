// Copyright 2026 The bornlab Authors
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

#include <algorithm>
#include <cmath>

#include "bornlab/additivity_lab.hpp"
#include "bornlab/measure_derivation.hpp"
#include "bornlab/random.hpp"
#include "oracles.hpp"

using namespace bornlab;

namespace {

constexpr double kTau = 1e-9;

// Independent route: solve the five linear conditions on (c, k0, k1, k2, k3)
// with hand-rolled elimination. The parallel condition is written as two
// cross-product components that are not both trivial for n.
std::vector<double> oracle_derivation(const std::array<double, 3>& n) {
  std::vector<std::vector<double>> a{
      {2, 1, n[0], n[1], n[2]},
      {2, 1, -n[0], -n[1], -n[2]},
      {2, -1, n[0], n[1], n[2]},
  };
  std::vector<double> b{1, 0, 0};
  // k x n = 0 : three rows, keep the two with the largest coefficients.
  std::vector<std::vector<double>> cross{
      {0, 0, 0, n[2], -n[1]},
      {0, 0, -n[2], 0, n[0]},
      {0, 0, n[1], -n[0], 0},
  };
  auto weight = [](const std::vector<double>& row) {
    double s = 0;
    for (double v : row) s += v * v;
    return s;
  };
  std::sort(cross.begin(), cross.end(),
            [&](const auto& x, const auto& y) { return weight(x) > weight(y); });
  a.push_back(cross[0]);
  a.push_back(cross[1]);
  b.push_back(0);
  b.push_back(0);
  return oracle::solve(a, b);
}

}  // namespace

TEST(GudderEval, Examples) {
  const GudderFunctional fz{0.0, FourVector(0.5, 0, 0, 0.5)};
  EXPECT_EQ(gudder_eval(fz, {1, 0, 0, 1}), 1.0);
  EXPECT_EQ(gudder_eval(fz, {1, 0, 0, -1}), 0.0);
  const GudderFunctional quad{1.0, FourVector()};
  EXPECT_EQ(gudder_eval(quad, {1, 1, 1, 1}), 4.0);
}

TEST(GudderEval, MatchesDefinition) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const GudderFunctional f{rng.normal(), sample_four_vector(rng)};
    const FourVector r = sample_four_vector(rng);
    double rr = 0, kr = 0;
    for (int mu = 0; mu < 4; ++mu) {
      rr += r[mu] * r[mu];
      kr += f.k[mu] * r[mu];
    }
    ASSERT_NEAR(gudder_eval(f, r), f.c * rr + kr, 1e-12 * (1 + std::abs(f.c * rr)));
  }
}

TEST(DeriveMeasure, Poles) {
  const Derivation z = derive_measure({0, 0, 1});
  EXPECT_EQ(z.measure.c, 0.0);
  EXPECT_EQ(z.measure.k, FourVector(0.5, 0, 0, 0.5));
  const Derivation x = derive_measure({1, 0, 0});
  EXPECT_EQ(x.measure.c, 0.0);
  EXPECT_EQ(x.measure.k, FourVector(0.5, 0.5, 0, 0));
}

TEST(DeriveMeasure, GeneralAxisAgainstOracle) {
  const auto want = oracle_derivation({0.6, 0.0, 0.8});
  // Frozen from the oracle: c = 0, k = (1/2, 0.3, 0, 0.4).
  EXPECT_NEAR(want[0], 0.0, 1e-15);
  EXPECT_NEAR(want[1], 0.5, 1e-15);
  EXPECT_NEAR(want[2], 0.3, 1e-15);
  EXPECT_NEAR(want[3], 0.0, 1e-15);
  EXPECT_NEAR(want[4], 0.4, 1e-15);

  const Derivation d = derive_measure({0.6, 0.0, 0.8});
  EXPECT_NEAR(d.measure.c, 0.0, 1e-15);
  EXPECT_NEAR(d.measure.k[0], 0.5, 1e-15);
  EXPECT_NEAR(d.measure.k[1], 0.3, 1e-15);
  EXPECT_NEAR(d.measure.k[2], 0.0, 1e-15);
  EXPECT_NEAR(d.measure.k[3], 0.4, 1e-15);
}

TEST(DeriveMeasure, TraceRecordsEachStep) {
  const Derivation d = derive_measure({0.6, 0.0, 0.8});
  const DerivationTrace& t = d.trace;
  EXPECT_EQ(t.n_phi, BlochVector(0.6, 0.0, 0.8));
  EXPECT_EQ(t.sum_constraint, 0.5);
  EXPECT_EQ(t.dot_constraint, 0.5);
  EXPECT_EQ(t.range_bound, 0.5);
  EXPECT_EQ(t.k_norm, 0.5);
  EXPECT_EQ(t.c, 0.0);
  EXPECT_EQ(t.k0, 0.5);
  EXPECT_EQ(t.complement_constraint, 0.0);
  EXPECT_LE(t.crosscheck_defect, 1e-15);
  EXPECT_TRUE(d.measure.is_derived_measure());
}

TEST(DeriveMeasure, RejectsNonUnit) {
  EXPECT_THROW(derive_measure({0, 0, 2}), ValidationError);
  EXPECT_THROW(derive_measure({0, 0, 0}), ValidationError);
}

TEST(DeriveMeasure, RandomAxesAgreeWithOracle) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const BlochVector n = sample_unit_bloch(rng);
    const auto want = oracle_derivation(n.to_array());
    const Derivation d = derive_measure(n);
    ASSERT_NEAR(d.measure.c, want[0], 1e-12);
    for (int mu = 0; mu < 4; ++mu) {
      ASSERT_NEAR(d.measure.k[mu], want[static_cast<std::size_t>(mu + 1)], 1e-12);
    }
  }
}

TEST(BornProbability, Examples) {
  EXPECT_EQ(born_probability({0, 0, 1}, {0, 0, 1}), 1.0);
  EXPECT_EQ(born_probability({0, 0, 1}, {0, 0, -1}), 0.0);
  EXPECT_EQ(born_probability({0, 0, 1}, {1, 0, 0}), 0.5);
  EXPECT_THROW(born_probability({0, 0, 1}, {0, 0, 0.9}), ValidationError);
  EXPECT_THROW(born_probability({0, 0, 1.1}, {0, 0, 1}), ValidationError);
}

TEST(BornProbability, EqualsDerivedFunctionalOnSlice) {
  Rng rng(19);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector a = sample_unit_bloch(rng);
    const BlochVector b = sample_unit_bloch(rng);
    ASSERT_EQ(born_probability(a, b),
              gudder_eval(derive_measure(a).measure, FourVector(1.0, b.coeffs())));
  }
}

TEST(MeasureLinearForm, Examples) {
  const GudderFunctional fz = derive_measure({0, 0, 1}).measure;
  EXPECT_EQ(measure_linear_form(fz, {-1, 0, 0, 1}), 0.0);
  EXPECT_EQ(measure_linear_form(fz, {2, 0, 0, 0}), 1.0);
  EXPECT_EQ(measure_linear_form(fz, {1, 0, 0, 1}), 1.0);
}

TEST(MeasureLinearForm, RejectsNonDerived) {
  EXPECT_THROW(measure_linear_form({0.1, FourVector(0.5, 0, 0, 0.5)}, {1, 0, 0, 1}),
               ContractError);
  EXPECT_THROW(measure_linear_form({0.0, FourVector(0.5, 0, 0, 0.7)}, {1, 0, 0, 1}),
               ContractError);
}

TEST(MeasureTraceForm, Examples) {
  EXPECT_NEAR(measure_trace_form({0, 0, 1}, {1, 0, 0, 1}), 1.0, 1e-15);
  EXPECT_NEAR(measure_trace_form({0, 0, 1}, {1, 0, 0, -1}), 0.0, 1e-15);
  // Oracle: Tr(P_z^dagger R) with R = [2 0; 0 1].
  const double want =
      oracle::hs(oracle::projector({0, 0, 1}), oracle::compose({3, 0, 0, 1})).real();
  EXPECT_NEAR(want, 2.0, 1e-15);
  EXPECT_NEAR(measure_trace_form({0, 0, 1}, {3, 0, 0, 1}), want, 1e-15);
  EXPECT_THROW(measure_trace_form({0, 0, 3}, {1, 0, 0, 1}), ValidationError);
}

TEST(MeasureTraceForm, NegativeOffSlice) {
  // Off the slice the measure is an unrestricted linear form.
  EXPECT_LT(measure_trace_form({0, 0, 1}, {-1, 0, 0, -1}), 0.0);
}

// ---------------------------------------------------------------------------
// Properties

TEST(DerivedMeasureProperties, FullLinearity) {
  Rng rng(23);
  for (int i = 0; i < 10000; ++i) {
    const GudderFunctional f = derive_measure(sample_unit_bloch(rng)).measure;
    const FourVector r = sample_four_vector(rng);
    const FourVector s = sample_four_vector(rng);
    ASSERT_NEAR(f(r + s), f(r) + f(s), 1e-12);
  }
}

TEST(DerivedMeasureProperties, ComplementRuleAndSymmetry) {
  Rng rng(29);
  for (int i = 0; i < 10000; ++i) {
    const BlochVector a = sample_unit_bloch(rng);
    const BlochVector b = sample_unit_bloch(rng);
    ASSERT_NEAR(born_probability(a, b) + born_probability(a, -b), 1.0, kTau);
    ASSERT_NEAR(born_probability(a, b), born_probability(b, a), kTau);
  }
}

TEST(DerivedMeasureProperties, RangeOnSlice) {
  Rng rng(31);
  for (int i = 0; i < 100000; ++i) {
    const double p = born_probability(sample_unit_bloch(rng), sample_unit_bloch(rng));
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
  }
}

TEST(DerivedMeasureProperties, ThreeRepresentations) {
  Rng rng(37);
  for (int i = 0; i < 10000; ++i) {
    const BlochVector n = sample_unit_bloch(rng);
    const FourVector r = sample_four_vector(rng);
    const GudderFunctional f = derive_measure(n).measure;
    const double g = gudder_eval(f, r);
    ASSERT_NEAR(g, measure_linear_form(f, r), kTau);
    ASSERT_NEAR(g, measure_trace_form(n, r), kTau);
  }
}
