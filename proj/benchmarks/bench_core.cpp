#include <benchmark/benchmark.h>

#include <random>

#include "hopfdr/builtins.hpp"
#include "hopfdr/hopf_lie.hpp"
#include "hopfdr/spectral.hpp"

using namespace hopfdr;

namespace {

Mat random_sparse(Field f, std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution hit(density);
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (hit(rng)) m.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % 19) - 9));
    return m;
}

void BM_RankPrime(benchmark::State& state) {
    Mat m = random_sparse(Field::prime(7), static_cast<std::size_t>(state.range(0)), 0.05, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(100)->Arg(300);

void BM_RankRational(benchmark::State& state) {
    Mat m = random_sparse(Field::rationals(), static_cast<std::size_t>(state.range(0)), 0.05, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(50)->Arg(100);

void BM_Kernel(benchmark::State& state) {
    Mat m = random_sparse(Field::prime(5), static_cast<std::size_t>(state.range(0)), 0.02, 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m).dim());
}
BENCHMARK(BM_Kernel)->Arg(100)->Arg(200);

void BM_ValidateBuiltin(benchmark::State& state, const char* name) {
    HopfData d = builtin(name).data();
    for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(d).size());
}
BENCHMARK_CAPTURE(BM_ValidateBuiltin, fZ4, "fZ4");
BENCHMARK_CAPTURE(BM_ValidateBuiltin, taft3, "taft3");

void BM_UniversalDeRham(benchmark::State& state, const char* name) {
    Algebra a = algebra_of(builtin(name));
    for (auto _ : state) {
        DGA u = universal_calculus(a, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(cohomology(complex_of(u)).dims);
    }
}
BENCHMARK_CAPTURE(BM_UniversalDeRham, kZ4, "kZ4")->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_UniversalDeRham, taft3, "taft3")->Arg(3);

void BM_ExteriorCalculus(benchmark::State& state, const char* name) {
    FinHopfAlgebra p = builtin(name);
    auto named = builtin_ideals(name, p);
    CalculusIdeal ideal = named.empty() ? zero_ideal(p) : check_ideal(p, named[0].second);
    for (auto _ : state) benchmark::DoNotOptimize(build_exterior(ideal, 3).d.size());
}
BENCHMARK_CAPTURE(BM_ExteriorCalculus, fZ4, "fZ4");
BENCHMARK_CAPTURE(BM_ExteriorCalculus, sweedler_gx, "sweedler");

void BM_InvariantForms(benchmark::State& state) {
    FinHopfAlgebra p = builtin("fZ4");
    auto e = build_exterior(zero_ideal(p), 4);
    DGA omega = build_omega(e);
    auto c = complex_of(omega);
    auto comodules = omega_left_comodules(e);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_forms_check(p, omega, c, comodules).checks.size());
}
BENCHMARK(BM_InvariantForms);

void BM_AmitsurCohomology(benchmark::State& state) {
    auto f = regular_comodule(builtin("sweedler"));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cohomology(amitsur_complex(f, AmitsurVariant::reduced, static_cast<std::size_t>(state.range(0))).complex)
                .dims);
}
BENCHMARK(BM_AmitsurCohomology)->Arg(3)->Arg(4);

void BM_VanEst(benchmark::State& state, const char* name) {
    FinHopfAlgebra p = builtin(name);
    auto e = build_exterior(zero_ideal(p), 3);
    DGA omega = build_omega(e);
    std::vector<Mat> lambda;
    for (std::size_t n = 0; n <= 3; ++n) lambda.push_back(omega_left_coaction(e, n));
    auto fc = forms_as_hopf_modules(p, omega, lambda);
    for (auto _ : state) benchmark::DoNotOptimize(van_est_report(fc, 3).total.dims);
}
BENCHMARK_CAPTURE(BM_VanEst, fZ2, "fZ2");
BENCHMARK_CAPTURE(BM_VanEst, fZ3, "fZ3");

void BM_HopfLie(benchmark::State& state, const char* name) {
    auto e = build_exterior(zero_ideal(builtin(name)), 3);
    for (auto _ : state) {
        auto hl = build_hopf_lie(e);
        benchmark::DoNotOptimize(hl_complex(hl, e, HLConstruction::transpose).complex.dims);
    }
}
BENCHMARK_CAPTURE(BM_HopfLie, fZ4, "fZ4");
BENCHMARK_CAPTURE(BM_HopfLie, kZ3, "kZ3");

}  // namespace

BENCHMARK_MAIN();
