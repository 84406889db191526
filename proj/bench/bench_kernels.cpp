#include <benchmark/benchmark.h>

#include <omp.h>

#include "primedfa/kernels.hpp"
#include "primedfa/oracle.hpp"
#include "primedfa/reduction.hpp"

using namespace primedfa;

namespace {

// x1 and not x1 padded with unused variables: unsatisfiable, so the scan of
// D(A) never stops early.
MlsAutomaton unsat_instance(std::size_t r) {
  CnfFormula f;
  f.num_vars = r;
  f.clauses = {{1}, {-1}};
  return MlsAutomaton(build_cnf_dfa(std::get<NormalizedCnf>(normalize(f))));
}

void BM_PpScanSerial(benchmark::State& state) {
  const MlsAutomaton a = unsat_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::first_pp_breaking_serial(a, a.count_max_visiting_words()));
  }
}

void BM_PpScanParallel(benchmark::State& state) {
  const MlsAutomaton a = unsat_instance(static_cast<std::size_t>(state.range(0)));
  const auto jobs = static_cast<unsigned>(omp_get_max_threads());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::first_pp_breaking_parallel(a, a.count_max_visiting_words(), jobs));
  }
}

Dfa superset_target() { return generate_mls(GenConfig{3, 2, 7, 1000}); }

void BM_SupersetSerial(benchmark::State& state) {
  const Dfa target = superset_target();
  const kernels::CandidateSpace space(target.alphabet(), 5,
                                      kernels::CandidateSpace::Shape::Safety);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::superset_candidates_serial(space, target));
}

void BM_SupersetParallel(benchmark::State& state) {
  const Dfa target = superset_target();
  const kernels::CandidateSpace space(target.alphabet(), 5,
                                      kernels::CandidateSpace::Shape::Safety);
  const auto jobs = static_cast<unsigned>(omp_get_max_threads());
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::superset_candidates_parallel(space, target, jobs));
  }
}

}  // namespace

BENCHMARK(BM_PpScanSerial)->Arg(6)->Arg(9);
BENCHMARK(BM_PpScanParallel)->Arg(6)->Arg(9);
BENCHMARK(BM_SupersetSerial);
BENCHMARK(BM_SupersetParallel);

BENCHMARK_MAIN();
