// Copyright 2026 the cremona authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "cremona/class_lattice.hpp"
#include "cremona/diagram.hpp"
#include "cremona/fixtures.hpp"
#include "cremona/mpoly.hpp"
#include "cremona/orbit.hpp"
#include "cremona/spectral.hpp"

using namespace cremona;

namespace {

void bm_mu_threshold(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  mpq_class tol(1, 1000000000000L);
  for (auto _ : state)
    benchmark::DoNotOptimize(mu_threshold(p, p, p, tol));
}
BENCHMARK(bm_mu_threshold)->Arg(4)->Arg(8)->Arg(16);

void bm_solve_mp(benchmark::State& state) {
  int p = static_cast<int>(state.range(0));
  mpq_class tol(1, 1000000000000L);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_mp(p, tol));
}
BENCHMARK(bm_solve_mp)->Arg(10)->Arg(40);

void bm_trace_orbits_f1009(benchmark::State& state) {
  auto fx = fixture_by_name("f1009-general40");
  for (auto _ : state)
    benchmark::DoNotOptimize(trace_orbits(fx->alpha, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_trace_orbits_f1009)->Arg(10)->Arg(40);

void bm_coxeter_radius(benchmark::State& state) {
  Diagram d;
  d.shape = Diagram::Shape::Tree;
  int p = static_cast<int>(state.range(0));
  d.arms = {ArmLength{true, 2}, ArmLength{true, 3}, ArmLength{true, p}};
  AdjacencyData adj = adjacency(d);
  IntMat cox = coxeter_element(adj);
  mpq_class tol(1, 1000000000000L);
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral_radius(cox, tol));
}
BENCHMARK(bm_coxeter_radius)->Arg(7)->Arg(12);

void bm_degree_growth(benchmark::State& state) {
  auto fx = fixture_by_name("t236-f11");
  for (auto _ : state)
    benchmark::DoNotOptimize(degree_growth(fx->alpha, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_degree_growth)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
