#include <benchmark/benchmark.h>

#include <vector>

#include "sg/dynamics.hpp"
#include "sg/experiments.hpp"
#include "sg/numerics.hpp"
#include "sg/selection.hpp"
#include "sg/signed_graph.hpp"
#include "sg/spectral.hpp"

namespace {

sg::SignedGraph random_graph(int n, double neg_p, std::uint64_t seed) {
  sg::RngStream rng(seed);
  return sg::er_negative_graph(n, neg_p, rng);
}

void bm_eigen_sym(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_graph(n, 0.2, 7);
  auto sel = sg::SelectionModel::complete(g);
  sg::SpectralModel model(g, sel);
  auto m = model.expected_w(0.5, 0.3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.add(i, j, -1.0 / n);
  for (auto _ : state) {
    auto e = sg::eigenvalues_sym(m);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(bm_eigen_sym)->Arg(16)->Arg(64)->Arg(128);

void bm_theta_apply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_graph(n, 0.2, 11);
  auto sel = sg::SelectionModel::complete(g);
  auto terms = sel.edge_terms(g);
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0 - 1.0 / n;
  std::vector<double> out(v.size());
  for (auto _ : state) {
    sg::theta_apply(n, terms, 0.5, 0.3, v, out);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(bm_theta_apply)->Arg(16)->Arg(32)->Arg(64);

void bm_simulate(benchmark::State& state) {
  const int n = 50;
  auto g = random_graph(n, 0.1, 13);
  auto sel = sg::SelectionModel::uniform_neighbor(g);
  sg::UpdateParams params;
  params.alpha = 0.5;
  params.beta = 0.05;
  sg::SimulateOptions opt;
  opt.horizon = state.range(0);
  opt.record_every = opt.horizon;
  opt.eps_conv = -1.0;
  for (auto _ : state) {
    sg::RngStream rng(17);
    std::vector<double> x0(n);
    for (double& x : x0) x = rng.next_uniform(-1.0, 1.0);
    auto stats = sg::simulate(g, sel, params, std::move(x0), opt, rng);
    benchmark::DoNotOptimize(stats);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_simulate)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
