#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "coinrm/dfa.hpp"
#include "coinrm/grid.hpp"
#include "coinrm/parity.hpp"
#include "coinrm/solver.hpp"

namespace {

using namespace coinrm;

// Random sequence with at least one heads-up coin, fixed seed per length.
std::string random_sequence(int length) {
  std::mt19937 rng(static_cast<std::uint32_t>(length) * 2654435761u);
  std::string text;
  do {
    text.clear();
    for (int i = 0; i < length; ++i) text += (rng() % 2 != 0) ? '1' : '0';
  } while (text.find('1') == std::string::npos);
  return text;
}

void BM_parity_sum(benchmark::State& state) {
  const LinearConfig cfg = parse_linear(random_sequence(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parity_sum(cfg).residue);
}
BENCHMARK(BM_parity_sum)->Range(16, 4096);

void BM_parity_sum_streaming(benchmark::State& state) {
  const LinearConfig cfg = parse_linear(random_sequence(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(parity_sum_streaming(cfg));
}
BENCHMARK(BM_parity_sum_streaming)->Range(16, 4096);

void BM_dfa_run(benchmark::State& state) {
  const Dfa dfa = minimize(build_recognizer());
  const std::string word = random_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run(dfa, word).accepted);
}
BENCHMARK(BM_dfa_run)->Range(16, 4096);

void BM_count_matrix(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_removable(n, CountMethod::matrix));
}
BENCHMARK(BM_count_matrix)->Arg(64)->Arg(1024)->Arg(65536);

void BM_count_recurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_removable(n, CountMethod::recurrence));
}
BENCHMARK(BM_count_recurrence)->Arg(64)->Arg(1024)->Arg(65536);

void BM_oracle_no_gaps(benchmark::State& state) {
  const LinearConfig cfg = parse_linear(random_sequence(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_removable(cfg).removable);
}
BENCHMARK(BM_oracle_no_gaps)->DenseRange(8, 16, 4);

void BM_oracle_with_gaps(benchmark::State& state) {
  const GappedLinearConfig cfg =
      to_gapped(parse_linear(random_sequence(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_removable(cfg).removable);
}
BENCHMARK(BM_oracle_with_gaps)->DenseRange(8, 14, 3);

void BM_greedy_solve(benchmark::State& state) {
  const LinearConfig cfg = parse_linear(random_sequence(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_solve(cfg).has_value());
}
BENCHMARK(BM_greedy_solve)->Range(16, 1024);

void BM_game_winner(benchmark::State& state) {
  const GappedLinearConfig cfg =
      to_gapped(parse_linear(random_sequence(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(game_winner(cfg));
}
BENCHMARK(BM_game_winner)->DenseRange(6, 12, 3);

void BM_grid_oracle(benchmark::State& state) {
  std::mt19937 rng(99);
  std::string text;
  for (int i = 0; i < 12; ++i) {
    if (i == 6) text += '/';
    text += (rng() % 2 != 0) ? '1' : '0';
  }
  const Grid grid = parse_grid(text);
  for (auto _ : state) benchmark::DoNotOptimize(grid_removable_bruteforce(grid).removable);
}
BENCHMARK(BM_grid_oracle);

}  // namespace

BENCHMARK_MAIN();
