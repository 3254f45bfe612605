#include <benchmark/benchmark.h>

#include "isoprod/exceptional.hpp"
#include "isoprod/homological.hpp"
#include "isoprod/presets.hpp"

using namespace isoprod;

namespace {

const ProductQuotientSurface& surface() {
  static ProductQuotientSurface s = make_preset("z3^2");
  return s;
}

EquivariantLineBundle bundle(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const auto& s = surface();
  return EquivariantLineBundle{s.classes_c().from_coeffs({a, b, 0, 0}),
                               s.classes_d().from_coeffs({c, d, 0, 0}),
                               trivial_character(s.group())};
}

std::vector<EquivariantLineBundle> quadruple() {
  return {bundle(0, 0, 0, 0), bundle(-2, 1, 0, 0), bundle(0, 0, -2, 1), bundle(-2, 1, -2, 1)};
}

void BM_smith_3x3(benchmark::State& state) {
  IntMatrix m = IntMatrix::from_rows({{1, 0, -1}, {0, 3, -3}, {2, -1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_smith_3x3);

void BM_smith_diag_inplace(benchmark::State& state) {
  const std::array<std::int64_t, 9> a{1, 0, -1, 0, 3, -3, 2, -1, 0};
  std::array<std::int64_t, 9> scratch{};
  std::array<std::int64_t, 3> diag{};
  for (auto _ : state) {
    scratch = a;
    smith_diagonal_inplace(scratch, 3, 3, diag);
    benchmark::DoNotOptimize(diag);
  }
}
BENCHMARK(BM_smith_diag_inplace);

void BM_build_class_group(benchmark::State& state) {
  FinAbGroup g({3, 3});
  for (auto _ : state) {
    CurveWithAction c("C", 4, g,
                      {Orbit{"E1", group_reduce(g, {1, 0}), 0}, Orbit{"E2", group_reduce(g, {0, 1}), 0},
                       Orbit{"E3", group_reduce(g, {2, 0}), 0}, Orbit{"E4", group_reduce(g, {0, 2}), 0}},
                      0);
    benchmark::DoNotOptimize(build_class_group(c));
  }
}
BENCHMARK(BM_build_class_group);

void BM_invariant_profile(benchmark::State& state) {
  EquivariantLineBundle l = bundle(-2, 1, -2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_profile(l, surface()));
}
BENCHMARK(BM_invariant_profile);

void BM_verify_quadruple(benchmark::State& state) {
  auto q = quadruple();
  for (auto _ : state) benchmark::DoNotOptimize(verify_exceptional_sequence(q, surface()));
}
BENCHMARK(BM_verify_quadruple);

void BM_pseudoheight(benchmark::State& state) {
  auto q = quadruple();
  for (auto _ : state) benchmark::DoNotOptimize(pseudoheight(q, surface()));
}
BENCHMARK(BM_pseudoheight);

void BM_search_window(benchmark::State& state) {
  SearchWindow w;
  w.lo = -state.range(0);
  w.hi = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(search_sequences(w, surface()));
}
BENCHMARK(BM_search_window)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
