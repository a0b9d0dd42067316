#include <benchmark/benchmark.h>

#include <cmath>

#include "ncres/oracle.hpp"
#include "ncres/pipeline.hpp"

using namespace ncres;

namespace {

const SymbolCatalog& catalog(Family f) {
    static const SymbolCatalog dirac(Family::Dirac, {});
    static const SymbolCatalog signature(Family::Signature, {});
    return f == Family::Dirac ? dirac : signature;
}

void BM_CatalogBuild(benchmark::State& state) {
    auto fam = static_cast<Family>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(SymbolCatalog(fam, {}));
    state.SetLabel(family_name(fam));
}
BENCHMARK(BM_CatalogBuild)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ComputeCase(benchmark::State& state, Family fam, const char* id) {
    const auto& cat = catalog(fam);
    for (auto _ : state) benchmark::DoNotOptimize(compute_case(cat, id));
}
BENCHMARK_CAPTURE(BM_ComputeCase, dirac_aII, Family::Dirac, "aII")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeCase, dirac_b, Family::Dirac, "b")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeCase, dirac_c, Family::Dirac, "c")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeCase, signature_aI, Family::Signature, "aI")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeCase, signature_c, Family::Signature, "c")->Unit(benchmark::kMillisecond);

void BM_LineIntegralExact(benchmark::State& state) {
    for (auto _ : state)
        for (int pa = 1; pa <= 6; ++pa)
            for (int pb = 1; pb <= 6; ++pb)
                for (int n = 0; n <= pa + pb - 2; ++n) benchmark::DoNotOptimize(line_integral_over_pi(n, pa, pb));
}
BENCHMARK(BM_LineIntegralExact);

void BM_ContourIntegral(benchmark::State& state) {
    auto r = restrict(catalog(Family::Dirac).sigma_m1().at_base()) *
             restrict(symbol_derivative(catalog(Family::Dirac).sigma_m3(), {VarKind::XiN}).at_base());
    for (auto _ : state) benchmark::DoNotOptimize(integrate_boundary(r));
}
BENCHMARK(BM_ContourIntegral)->Unit(benchmark::kMillisecond);

void BM_QuadLine(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(quad_line([](double x) { return Complex(1.0 / std::pow(1.0 + x * x, 3)); }));
}
BENCHMARK(BM_QuadLine);

void BM_QuadSphere(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quad_sphere_monomial({4, 2, 2, 0, 2}));
}
BENCHMARK(BM_QuadSphere);

void BM_OracleCheck(benchmark::State& state) {
    auto r = compute_case(catalog(Family::Dirac), "b");
    auto inst = make_instantiation(0);
    for (auto _ : state) benchmark::DoNotOptimize(check_case(r, inst));
}
BENCHMARK(BM_OracleCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
