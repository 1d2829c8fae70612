#include <benchmark/benchmark.h>

#include <stefan/cli.hpp>
#include <stefan/kummer.hpp>
#include <stefan/model.hpp>
#include <stefan/solution.hpp>
#include <stefan/solver.hpp>
#include <stefan/verify.hpp>

#include <sstream>

using namespace stefan;

namespace {

ProblemSpec robin_spec() {
    ProblemSpec s;
    s.law = {1.0, -0.5};
    s.bc = BoundaryCondition::robin(10.0, 0.5);
    return s;
}

void BM_KummerM(benchmark::State& state) {
    const double z = -0.25 * state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(kummer_m(-0.75, 0.5, z));
}
BENCHMARK(BM_KummerM)->Arg(1)->Arg(16)->Arg(64);

void BM_SolveXi(benchmark::State& state) {
    const ProblemSpec s = robin_spec();
    for (auto _ : state) benchmark::DoNotOptimize(solve_xi(s).xi);
}
BENCHMARK(BM_SolveXi);

void BM_EvalU(benchmark::State& state) {
    const SimilaritySolution sol = solve_problem(robin_spec());
    const double front = eval_front(sol, 1.0).s;
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_u(sol, x, 1.0));
        x += front / 64.0;
        if (x > front) x = 0.0;
    }
}
BENCHMARK(BM_EvalU);

void BM_PdeResidual(benchmark::State& state) {
    const SimilaritySolution sol = solve_problem(robin_spec());
    for (auto _ : state)
        benchmark::DoNotOptimize(pde_residual(sol, GridSpec{}).pde_max_rel);
}
BENCHMARK(BM_PdeResidual);

void BM_Table1(benchmark::State& state) {
    for (auto _ : state) {
        std::ostringstream out, err;
        benchmark::DoNotOptimize(cli::run({"table", "1"}, out, err));
    }
}
BENCHMARK(BM_Table1);

} // namespace

BENCHMARK_MAIN();
