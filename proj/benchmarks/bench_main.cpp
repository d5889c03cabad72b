// Copyright 2026 The fuzznorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "fuzznorm/checker.hpp"
#include "fuzznorm/fuzzy.hpp"
#include "fuzznorm/lattice.hpp"
#include "fuzznorm/vague.hpp"

namespace {

using namespace fuzznorm;

void BM_AxiomsOnGrid(benchmark::State& state) {
  const auto t = tnorm(TNormFamily::kProduct);
  const auto d = Domain::grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(t, d).holds());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AxiomsOnGrid)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_LatticeTnormEnumeration(benchmark::State& state) {
  const auto l = FiniteLattice::chain(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_tnorms(l).size());
}
BENCHMARK(BM_LatticeTnormEnumeration)->DenseRange(2, 5);

void BM_DiamondTnormEnumeration(benchmark::State& state) {
  const auto l = FiniteLattice::diamond();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_tnorms(l).size());
}
BENCHMARK(BM_DiamondTnormEnumeration);

void BM_VagueMonoid(benchmark::State& state) {
  const auto v = induce_vague_tnorm("lukasiewicz", equalities::lukasiewicz(), tnorm(TNormFamily::kLukasiewicz),
                                    Domain::grid(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_vague_monoid(v.op).holds());
}
BENCHMARK(BM_VagueMonoid)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SubmonoidSweep(benchmark::State& state) {
  const auto d = Domain::grid(2);
  const auto carrier = interval_carrier(tnorm(TNormFamily::kMinimum), d);
  const auto tables = enumerate_subsets(d.points(), {UnitScalar(0), UnitScalar(1, 2), UnitScalar(1)});
  const SubstructureKind kind(Substructure::kTSubnorm);
  for (auto _ : state) {
    std::size_t passing = 0;
    for (const auto& mu : tables) passing += check_fuzzy_submonoid(mu, carrier, kind).holds() ? 1 : 0;
    benchmark::DoNotOptimize(passing);
  }
}
BENCHMARK(BM_SubmonoidSweep);

}  // namespace

BENCHMARK_MAIN();
