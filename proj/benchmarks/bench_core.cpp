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


#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "revtri/bounds.hpp"
#include "revtri/fuzz.hpp"
#include "revtri/quadrature.hpp"

namespace {

using namespace revtri;

GridFunction helix(std::size_t panels, std::size_t d) {
  const Grid g(0, 2, panels);
  std::vector<HVector> values;
  for (std::size_t j = 0; j < g.size(); ++j) {
    std::vector<Scalar> x(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double t = g.node(j) * static_cast<double>(i + 1);
      x[i] = Scalar(std::cos(t), std::sin(t));
    }
    values.emplace_back(Field::kComplex, x);
  }
  return GridFunction(g, values);
}

void BM_Defect(benchmark::State& state) {
  const auto f = helix(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(defect(f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Defect)->RangeMultiplier(4)->Range(64, 4096);

void BM_BallBound(benchmark::State& state) {
  const GridFunction f(helix(static_cast<std::size_t>(state.range(0)), 1)
                     .map([](const HVector& x) { return 0.5 * x + HVector::complex({1.0}); }));
  const HVector e = HVector::complex({Scalar(1, 0)});
  BoundParams p;
  p.rho = 0.6;
  for (auto _ : state) benchmark::DoNotOptimize(eval_unit_bound(f, e, p, BoundId::kBall));
}
BENCHMARK(BM_BallBound)->Arg(512)->Arg(4096);

void BM_FuzzTrial(benchmark::State& state) {
  FuzzConfig c;
  c.bound = static_cast<BoundId>(state.range(0));
  c.trials = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    c.seed = seed++;
    benchmark::DoNotOptimize(fuzz(c));
  }
  state.SetLabel(std::string(to_string(c.bound)));
}
BENCHMARK(BM_FuzzTrial)->DenseRange(0, static_cast<int>(std::size(kAllBounds)) - 1);

}  // namespace

BENCHMARK_MAIN();
