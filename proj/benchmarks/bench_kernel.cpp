#include <benchmark/benchmark.h>

#include <vector>

#include "pgma/definition.hpp"
#include "pgma/fixture_set.hpp"
#include "pgma/fixtures.hpp"
#include "pgma/group_datum.hpp"

using namespace pgma;

namespace {

const Field Q = Field::rationals();

// Z2 conjugation by diag(1, -1, 1, -1, ...) on M_n, n = state.range(0).
PartialAction sign_conjugation(std::size_t n) {
  Vec s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(Q.from_int(i % 2 ? -1 : 1));
  return fixtures::diagonal_conjugation(fixtures::full_matrix_blocks(Q, n), GroupTable::cyclic(2),
                                        {Vec(n, Q.one()), s});
}

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m(Q, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Q.from_int(static_cast<long>((r * 7 + c * 3) % 11) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_CheckLeftPartialAction(benchmark::State& state) {
  const PartialAction p = sign_conjugation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_left_partial_action(p).passed());
}
BENCHMARK(BM_CheckLeftPartialAction)->Arg(2)->Arg(3);

void BM_CheckSweedlerPartial(benchmark::State& state) {
  const PartialAction p = fixtures::sweedler_partial(Q);
  for (auto _ : state) benchmark::DoNotOptimize(check_left_partial_action(p, true).passed());
}
BENCHMARK(BM_CheckSweedlerPartial);

void BM_LeftSmash(benchmark::State& state) {
  const PartialAction p = sign_conjugation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(left_smash(p).dim());
}
BENCHMARK(BM_LeftSmash)->Arg(2)->Arg(3);

void BM_DecomposeSynthesize(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const BlockedAlgebra r = fixtures::full_matrix_blocks(Q, n);
  const PartialAction p = sign_conjugation(n);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(decompose(r, p)).matrix().rows());
}
BENCHMARK(BM_DecomposeSynthesize)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CheckGroupDatum(benchmark::State& state) {
  const GroupDatum d = fixtures::z3_datum();
  for (auto _ : state) benchmark::DoNotOptimize(check_group_datum(d).passed());
}
BENCHMARK(BM_CheckGroupDatum)->Unit(benchmark::kMillisecond);

void BM_ParseResolveFixture(benchmark::State& state) {
  const FixtureSet* f = find_fixture("conjugation-m2");
  for (auto _ : state) {
    ParseResult p = parse_definition(f->definition);
    benchmark::DoNotOptimize(Workspace::resolve(*p.file).failures().size());
  }
}
BENCHMARK(BM_ParseResolveFixture);

}  // namespace

BENCHMARK_MAIN();
