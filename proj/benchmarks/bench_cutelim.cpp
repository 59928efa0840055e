#include <benchmark/benchmark.h>

#include <vector>

#include "cutelim/generate.hpp"
#include "cutelim/io.hpp"
#include "cutelim/maximal.hpp"
#include "cutelim/rank.hpp"
#include "cutelim/search.hpp"
#include "cutelim/wnormal.hpp"
#include "cutelim/zucker.hpp"

using namespace cutelim;

namespace {

std::vector<Proof> corpus(std::size_t budget, bool imp, std::size_t n = 64) {
  GenOptions o;
  o.allowImp = imp;
  std::vector<Proof> out;
  for (std::uint64_t s = 0; s < n; ++s) out.push_back(generate_proof_with_cut(s, budget, o));
  return out;
}

void BM_ZEliminate(benchmark::State& st) {
  std::vector<ZProof> in;
  for (const Proof& p : corpus(st.range(0), false)) in.push_back(to_zucker(p));
  for (auto _ : st) {
    for (const ZProof& z : in) benchmark::DoNotOptimize(eliminate_cut_z(z));
  }
  st.SetItemsProcessed(st.iterations() * in.size());
}
BENCHMARK(BM_ZEliminate)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_WNormalize(benchmark::State& st) {
  auto in = corpus(st.range(0), true);
  for (auto _ : st) {
    for (const Proof& p : in) benchmark::DoNotOptimize(w_normalize(p));
  }
  st.SetItemsProcessed(st.iterations() * in.size());
}
BENCHMARK(BM_WNormalize)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EliminateCuts(benchmark::State& st) {
  auto in = corpus(st.range(0), true);
  for (auto _ : st) {
    for (const Proof& p : in) benchmark::DoNotOptimize(eliminate_cuts(p));
  }
  st.SetItemsProcessed(st.iterations() * in.size());
}
BENCHMARK(BM_EliminateCuts)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_AnnotateRanks(benchmark::State& st) {
  auto in = corpus(st.range(0), true);
  for (auto _ : st) {
    for (const Proof& p : in) benchmark::DoNotOptimize(annotate_ranks(p));
  }
}
BENCHMARK(BM_AnnotateRanks)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& st) {
  std::vector<std::string> text;
  for (const Proof& p : corpus(st.range(0), true)) text.push_back(print_proof(p));
  std::size_t bytes = 0;
  for (const auto& t : text) bytes += t.size();
  for (auto _ : st) {
    for (const auto& t : text) benchmark::DoNotOptimize(print_proof(parse_proof(t)));
  }
  st.SetBytesProcessed(st.iterations() * bytes);
}
BENCHMARK(BM_ParsePrint)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_Search(benchmark::State& st) {
  Sequent s = parse_sequent("a, (a -> a), (a -> a) |- a");
  Sequent t = parse_sequent("(p & q) |- (q & p)");
  for (auto _ : st) {
    benchmark::DoNotOptimize(search_cutfree(s, st.range(0)));
    benchmark::DoNotOptimize(search_cutfree(t, st.range(0)));
  }
}
BENCHMARK(BM_Search)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
