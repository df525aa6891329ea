#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dodeca/circuits.hpp"
#include "dodeca/engine.hpp"

using namespace dodeca;

namespace {

const RuleTable& rules() {
  static const RuleTable t = [] {
    std::ifstream in(std::string(DODECA_REPO_ROOT) + "/rules/full.txt");
    std::ostringstream os;
    os << in.rdbuf();
    return RuleTable::parse(os.str());
  }();
  return t;
}

void BM_CanonicalMask(benchmark::State& state) {
  std::mt19937 rng(42);
  std::vector<std::uint16_t> masks(1024);
  for (auto& m : masks) m = rng() & 0xfff;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_mask(masks[i++ & 1023]));
  }
}
BENCHMARK(BM_CanonicalMask);

void BM_RuleLookup(benchmark::State& state) {
  const RuleTable& t = rules();
  NeighborhoodWord w{State::B, {}};
  w.neighbors.fill(State::W);
  for (FaceId f : {2, 5, 6, 7}) w.neighbors[f] = State::B;
  for (auto _ : state) benchmark::DoNotOptimize(t.lookup(w));
}
BENCHMARK(BM_RuleLookup);

void BM_StepFlipFlop(benchmark::State& state) {
  Scenario s = make_scenario("flipflop-selected-a");
  Configuration cfg = s.initial;
  for (auto _ : state) {
    cfg = step(s.graph, rules(), cfg);
    benchmark::DoNotOptimize(cfg.states.data());
  }
}
BENCHMARK(BM_StepFlipFlop);

void BM_RunStraightTrack(benchmark::State& state) {
  Patch p = track_segment(AssemblyWord(state.range(0), Letter::S));
  inject_particle(p, p.in_ports[0]);
  Configuration init = p.initial_config();
  for (auto _ : state) {
    Trace tr = run(p.graph, rules(), init, static_cast<int>(state.range(0)) - 1, p.probe_order);
    benchmark::DoNotOptimize(tr.rows.size());
  }
}
BENCHMARK(BM_RunStraightTrack)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
