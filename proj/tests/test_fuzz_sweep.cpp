// Copyright 2026 The revtri Authors
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


#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "revtri/counter_rng.hpp"
#include "revtri/error.hpp"
#include "revtri/fuzz.hpp"
#include "revtri/sweep.hpp"

namespace revtri {
namespace {

TEST(CounterRng, OutputIsAPureFunctionOfTheCounter) {
  CounterRng a(42, 7);
  std::vector<std::uint64_t> seq;
  for (int i = 0; i < 10; ++i) seq.push_back(a.next());
  const CounterRng b(42, 7);
  for (int i = 9; i >= 0; --i) EXPECT_EQ(b.at(static_cast<std::uint64_t>(i)), seq[i]);
  EXPECT_NE(CounterRng(42, 8).at(0), seq[0]);
  EXPECT_NE(CounterRng(43, 7).at(0), seq[0]);
}

TEST(CounterRng, UniformMoments) {
  CounterRng rng(1);
  double sum = 0.0, sum_sq = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum_sq += u * u;
  }
  EXPECT_NEAR(sum / kN, 0.5, 0.005);
  EXPECT_NEAR(sum_sq / kN, 1.0 / 3.0, 0.005);
}

TEST(CounterRng, NormalMoments) {
  CounterRng rng(2);
  double sum = 0.0, sum_sq = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / kN, 0.0, 0.01);
  EXPECT_NEAR(sum_sq / kN, 1.0, 0.01);
}

TEST(CounterRng, IntegerRange) {
  CounterRng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.integer(1, 8);
    ASSERT_GE(v, 1u);
    ASSERT_LE(v, 8u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Fuzz, TrialsAreOrderIndependent) {
  FuzzConfig c;
  c.bound = BoundId::kBand;
  c.seed = 5;
  c.panels = 32;
  const auto late = scenario_to_json(generate_trial(c, 9).scenario).dump();
  for (std::uint64_t t = 0; t < 9; ++t) generate_trial(c, t);
  EXPECT_EQ(scenario_to_json(generate_trial(c, 9).scenario).dump(), late);
  EXPECT_NE(scenario_to_json(generate_trial(c, 8).scenario).dump(), late);
}

TEST(Fuzz, GeneratedScenariosAreValidAndRoundTrip) {
  for (BoundId id : kAllBounds) {
    FuzzConfig c;
    c.bound = id;
    c.seed = 11;
    c.panels = 64;
    c.field = Field::kComplex;
    for (std::uint64_t t = 0; t < 5; ++t) {
      const FuzzCase fc = generate_trial(c, t);
      EXPECT_NO_THROW(validate_scenario(fc.scenario)) << to_string(id);
      const auto j = scenario_to_json(fc.scenario);
      EXPECT_EQ(report_to_json(run(parse_scenario(j))).dump(),
                report_to_json(run(fc.scenario)).dump())
          << to_string(id);
    }
  }
}

TEST(Fuzz, EveryBoundSoundOnASmallRun) {
  for (BoundId id : kAllBounds) {
    for (Field field : {Field::kReal, Field::kComplex}) {
      FuzzConfig c;
      c.bound = id;
      c.trials = 25;
      c.seed = 2024;
      c.field = field;
      c.dim = 3;
      c.family_size = 2;
      c.panels = 128;
      const FuzzSummary s = fuzz(c);
      EXPECT_EQ(s.holds, c.trials) << to_string(id);
      EXPECT_TRUE(s.clean()) << to_string(id);
      EXPECT_TRUE(s.violation_dumps.empty());
    }
  }
}

TEST(Fuzz, SingleDimensionRealRatio) {
  FuzzConfig c;
  c.bound = BoundId::kRatio;
  c.trials = 10;
  c.dim = 1;
  c.panels = 32;
  EXPECT_TRUE(fuzz(c).clean());
}

TEST(Fuzz, RejectsInfeasibleConfig) {
  FuzzConfig c;
  c.bound = BoundId::kFamilyBall;
  c.dim = 2;
  c.family_size = 3;
  EXPECT_THROW(fuzz(c), InfeasibleError);
  c.bound = BoundId::kBall;
  c.trials = 0;
  EXPECT_THROW(fuzz(c), InputError);
}

TEST(Fuzz, ComplexBoundsForceScalarField) {
  FuzzConfig c;
  c.bound = BoundId::kComplexBox;
  c.dim = 5;
  const auto n = normalized(c);
  EXPECT_EQ(n.dim, 1u);
  EXPECT_EQ(n.field, Field::kComplex);
}

TEST(Fuzz, SummaryReportsPrintedForm) {
  FuzzConfig c;
  c.bound = BoundId::kRatioBand;
  c.trials = 20;
  c.seed = 9;
  c.panels = 64;
  const auto s = fuzz(c);
  ASSERT_TRUE(s.printed_margin_min.has_value());
  EXPECT_LE(*s.printed_margin_min, *s.printed_margin_max);
  const auto j = summary_to_json(s);
  EXPECT_TRUE(j.contains("printed_form"));
  EXPECT_EQ(j["holds"], 20);
}

TEST(Fuzz, ObserverSeesEveryTrialInOrder) {
  FuzzConfig c;
  c.bound = BoundId::kDominance;
  c.trials = 7;
  c.panels = 16;
  std::vector<std::uint64_t> seen;
  fuzz(c, [&](const FuzzCase& fc, const RunReport& r) {
    seen.push_back(fc.provenance.trial);
    EXPECT_EQ(r.provenance->trial, fc.provenance.trial);
    EXPECT_EQ(r.provenance->generator, "fuzz/THM_2_1");
  });
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Sweep, BallRecipeMarginsVanish) {
  SweepRequest req;
  req.bound = BoundId::kBall;
  req.parameter = "rho";
  req.from = 0.05;
  req.to = 0.95;
  req.steps = 19;
  const auto t = sweep(req);
  ASSERT_EQ(t.rows.size(), 19u);
  EXPECT_TRUE(t.warnings.empty());
  for (const auto& row : t.rows) {
    EXPECT_LE(std::abs(row.margin), 1e-9) << row.value;
    ASSERT_TRUE(row.extremal_gap.has_value());
  }
}

TEST(Sweep, BandProfileRhsFormula) {
  SweepRequest req;
  req.bound = BoundId::kBandProfile;
  req.parameter = "M";
  req.from = 1.0;
  req.to = 10.0;
  req.steps = 10;
  const auto t = sweep(req);
  ASSERT_EQ(t.rows.size(), 10u);
  for (const auto& row : t.rows) {
    const double M = row.value;
    EXPECT_NEAR(row.rhs, 0.25 * (M - 1) * (M - 1) / (M + 1), 1e-12 * M) << M;
  }
}

TEST(Sweep, SingleStepEqualsRun) {
  const Scenario base = make_extremal_scenario([] {
    ExtremalRequest r;
    r.bound = BoundId::kBand;
    r.params.lower = 1.0;
    r.params.upper = 4.0;
    return r;
  }());
  SweepRequest req;
  req.bound = BoundId::kBand;
  req.parameter = "M";
  req.from = 4.0;
  req.to = 7.0;
  req.steps = 1;
  req.base = base;
  const auto t = sweep(req);
  ASSERT_EQ(t.rows.size(), 1u);
  const auto r = run(base).results[0];
  EXPECT_EQ(t.rows[0].lhs, r.lhs);
  EXPECT_EQ(t.rows[0].rhs, r.rhs);
  EXPECT_EQ(t.rows[0].margin, r.margin);
  EXPECT_FALSE(t.rows[0].extremal_gap.has_value());
}

TEST(Sweep, TruncatesOutsideValidity) {
  SweepRequest req;
  req.bound = BoundId::kBall;
  req.parameter = "rho";
  req.from = 0.5;
  req.to = 1.5;
  req.steps = 11;
  const auto t = sweep(req);
  EXPECT_EQ(t.rows.size(), 5u);
  EXPECT_EQ(t.warnings.size(), 6u);
}

TEST(Sweep, RejectsUnknownParameter) {
  SweepRequest req;
  req.bound = BoundId::kBall;
  req.parameter = "M";
  req.from = 1;
  req.to = 2;
  req.steps = 2;
  EXPECT_THROW(sweep(req), InputError);
  req.bound = BoundId::kRatio;
  req.parameter = "K";
  EXPECT_THROW(sweep(req), InputError);
}

TEST(Sweep, CsvLayout) {
  SweepRequest req;
  req.bound = BoundId::kBall;
  req.parameter = "rho";
  req.from = 0.6;
  req.to = 0.6;
  req.steps = 1;
  const std::string csv = sweep_csv(sweep(req));
  EXPECT_EQ(csv.rfind("rho,lhs,rhs,margin,extremal_gap,verdict\n0.6,", 0), 0u);
}

}  // namespace
}  // namespace revtri
