// Microbenchmarks for the hot paths: field/matrix arithmetic, bracket
// evaluation, basis-change transport, orbit decomposition, table construction,
// and the lattice computations behind the property suites.
#include <benchmark/benchmark.h>

#include "plie/correspondence.hpp"
#include "plie/counting.hpp"
#include "plie/gl.hpp"
#include "plie/magnus_lazard.hpp"

using namespace plie;

namespace {

Partition ones(std::int64_t n) { return Partition(std::vector<std::int64_t>(n, 1)); }

StructureTensor heis3() {
    StructureTensor T(3, ones(3), Side::ring);
    T.set_coeff(0, 1, 2, 1);
    T.set_coeff(1, 0, 2, 2);
    return T;
}

void BM_matrix_mul(benchmark::State& state) {
    std::int64_t n = state.range(0);
    FpMatrix A(7, n, n), B(7, n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            A.set(i, j, (3 * i + 5 * j + 1) % 7);
            B.set(i, j, (2 * i + j + 3) % 7);
        }
    for (auto _ : state) benchmark::DoNotOptimize(A * B);
}
BENCHMARK(BM_matrix_mul)->Arg(3)->Arg(8)->Arg(16);

void BM_bracket_eval(benchmark::State& state) {
    StructureTensor T = heis3();
    const Module& M = T.module();
    std::int64_t i = 0;
    for (auto _ : state) {
        Coords x = M.element(i % 27), y = M.element((i * 7 + 5) % 27);
        benchmark::DoNotOptimize(T.bracket(x, y));
        ++i;
    }
}
BENCHMARK(BM_bracket_eval);

void BM_basis_change(benchmark::State& state) {
    StructureTensor T = heis3();
    auto pairs = admissible_pairs(3, ones(3), Side::ring, {});
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(act(T, pairs[i % pairs.size()]));
        ++i;
    }
}
BENCHMARK(BM_basis_change);

void BM_gl_enumerate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gl_enumerate(state.range(0), 3, {}));
}
BENCHMARK(BM_gl_enumerate)->Arg(2)->Arg(3);

void BM_orbits_mixed_shape(benchmark::State& state) {
    Partition shape(std::vector<std::int64_t>{2, 1});
    TensorFilter lie{true, true, false};
    for (auto _ : state)
        benchmark::DoNotOptimize(orbits(3, shape, Side::ring, lie));
}
BENCHMARK(BM_orbits_mixed_shape);

void BM_group_table_27(benchmark::State& state) {
    StructureTensor T = heis3();
    for (auto _ : state) benchmark::DoNotOptimize(gp(T));
}
BENCHMARK(BM_group_table_27);

void BM_associativity_27(benchmark::State& state) {
    GroupTable G = gp(heis3());
    for (auto _ : state) benchmark::DoNotOptimize(check_associativity(G));
}
BENCHMARK(BM_associativity_27);

void BM_subgroup_lattice_27(benchmark::State& state) {
    GroupTable G = gp(heis3());
    for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(G));
}
BENCHMARK(BM_subgroup_lattice_27);

void BM_endo_set_27(benchmark::State& state) {
    FpLieAlgebra K(3, 3);
    K.set_coeff(0, 1, 2, 1);
    K.set_coeff(1, 0, 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(c_set(K));
}
BENCHMARK(BM_endo_set_27);

}  // namespace

BENCHMARK_MAIN();
