#include <benchmark/benchmark.h>

#include "drgtight/classify.hpp"

using namespace drgtight;

namespace {

IntersectionArray j63() {
  return validate_array(3,
                        {Scalar::from_int(9), Scalar::from_int(4), Scalar::from_int(1)},
                        {Scalar::from_int(1), Scalar::from_int(4), Scalar::from_int(9)});
}

// Hamming-graph style array H(D, q): b_i = (D-i)(q-1), c_i = i.
IntersectionArray hamming(int D, long q) {
  std::vector<Scalar> b, c;
  for (int i = 0; i <= D - 1; ++i) b.push_back(Scalar::from_int((D - i) * (q - 1)));
  for (int i = 1; i <= D; ++i) c.push_back(Scalar::from_int(i));
  return validate_array(D, std::move(b), std::move(c));
}

void BM_pcs_exact(benchmark::State& state) {
  IntersectionArray arr = hamming(static_cast<int>(state.range(0)), 3);
  Scalar theta = Scalar::from_ratio(7, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(pseudo_cosine_sequence(arr, theta));
}
BENCHMARK(BM_pcs_exact)->Arg(4)->Arg(8)->Arg(16);

void BM_pcs_approx(benchmark::State& state) {
  IntersectionArray arr = hamming(static_cast<int>(state.range(0)), 3);
  Scalar theta = Scalar::from_double(2.3333333);
  for (auto _ : state)
    benchmark::DoNotOptimize(pseudo_cosine_sequence(arr, theta));
}
BENCHMARK(BM_pcs_approx)->Arg(4)->Arg(8)->Arg(16);

void BM_graph_eigenvalues(benchmark::State& state) {
  IntersectionArray arr = hamming(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(graph_eigenvalues(arr));
}
BENCHMARK(BM_graph_eigenvalues)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_tight_pair_exact(benchmark::State& state) {
  IntersectionArray arr = j63();
  PseudoCosineSeq s = pseudo_cosine_sequence(arr, Scalar::from_int(3));
  PseudoCosineSeq r = pseudo_cosine_sequence(arr, Scalar::from_int(-3));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_tight_pair(arr, s, r));
}
BENCHMARK(BM_tight_pair_exact);

void BM_classify_j63(benchmark::State& state) {
  IntersectionArray arr = j63();
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_tight_pairs(arr, std::nullopt));
}
BENCHMARK(BM_classify_j63);

}  // namespace

BENCHMARK_MAIN();
