#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "rowmotion/kernels.hpp"
#include "rowmotion/root_system.hpp"

namespace {

using namespace rowmotion;

struct Fixture {
  Poset poset;
  AntichainSet ans;
};

const Fixture& fixture(const char* type) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(type);
  if (it == cache.end()) {
    auto p = root_poset(build_root_system(type), PosetVariant::full()).poset;
    auto ans = enumerate_antichains(p);
    it = cache.emplace(type, Fixture{std::move(p), std::move(ans)}).first;
  }
  return it->second;
}

void BM_TableSerial(benchmark::State& state, const char* type) {
  const auto& f = fixture(type);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::rowmotion_table_serial(f.poset, f.ans));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.ans.size()));
}

void BM_TableParallel(benchmark::State& state, const char* type) {
  const auto& f = fixture(type);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::rowmotion_table(f.poset, f.ans));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.ans.size()));
}

void BM_Enumerate(benchmark::State& state, const char* type) {
  const auto& p = fixture(type).poset;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_antichains(p));
}

}  // namespace

BENCHMARK_CAPTURE(BM_TableSerial, E7, "E7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableParallel, E7, "E7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableSerial, E8, "E8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableParallel, E8, "E8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, E8, "E8")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
