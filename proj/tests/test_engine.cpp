#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dodeca/circuits.hpp"
#include "dodeca/engine.hpp"
#include "test_util.hpp"

using namespace dodeca;
using test_util::full_rules;

TEST_CASE("the all-white configuration is a fixpoint on every shipped graph") {
  for (const auto& entry : scenario_catalog()) {
    Scenario s = make_scenario(entry.name);
    Configuration quiet = all_white(s.graph);
    CHECK(step(s.graph, full_rules(), quiet) == quiet);
  }
}

TEST_CASE("single steps match the golden flip-flop rows") {
  Scenario s = make_scenario("flipflop-selected-a");
  Configuration next = step(s.graph, full_rules(), s.initial);
  std::string probes;
  for (CellId c : s.probes) probes += to_char(next.states[c]);
  CHECK(probes == "WWBWWWWWWWBWW");  // golden row for time 1
}

TEST_CASE("a particle advances one straight cell per step") {
  Patch p = track_segment(AssemblyWord(6, Letter::S));
  inject_particle(p, p.in_ports[0]);
  Configuration cfg = p.initial_config();
  for (int t = 0; t < 5; ++t) {
    CHECK(cfg.states[p.id("t" + std::to_string(t))] == State::B);
    Configuration next = step(p.graph, full_rules(), cfg);
    // nothing but the particle moved
    for (CellId c = 0; c < p.graph.cell_count(); ++c) {
      if (c == p.id("t" + std::to_string(t)) || c == p.id("t" + std::to_string(t + 1))) continue;
      CHECK(next.states[c] == cfg.states[c]);
    }
    cfg = next;
  }
  CHECK(cfg.states[p.id("t5")] == State::B);
}

TEST_CASE("run emits rows for times 0..steps") {
  Scenario s = make_scenario("straight-track");
  Trace tr0 = run(s.graph, full_rules(), s.initial, 0, s.probes);
  CHECK(tr0.rows.size() == 1);

  Trace tr = run(s.graph, full_rules(), s.initial, 5, s.probes);
  CHECK(tr.rows.size() == 6);
  for (const auto& row : tr.rows) CHECK(row.size() == s.probes.size());

  // determinism: a second run from equal inputs is identical
  CHECK(run(s.graph, full_rules(), s.initial, 5, s.probes) == tr);
}

TEST_CASE("format_trace paper and csv modes") {
  Trace tr;
  tr.probe_names = {"1", "2"};
  tr.rows = {{State::W, State::B}, {State::B, State::W}};
  std::string paper = format_trace(tr, TraceFormat::paper);
  CHECK(paper.find("time 0 :") != std::string::npos);
  CHECK(paper.find("time 1 :") != std::string::npos);
  std::string csv = format_trace(tr, TraceFormat::csv);
  CHECK(csv == "time,1,2\n0,W,B\n1,B,W\n");

  Trace empty;
  std::string header_only = format_trace(empty, TraceFormat::paper);
  CHECK(std::count(header_only.begin(), header_only.end(), '\n') == 1);
}

TEST_CASE("compare_trace matches golden files and localizes mismatches") {
  Scenario s = make_scenario("flipflop-selected-a");
  Trace tr = run(s.graph, full_rules(), s.initial, 5, s.probes);
  std::string golden = test_util::read_file(test_util::repo_root() + "/golden/t_flip_flop.txt");
  CHECK(compare_trace(tr, golden).match);

  // the formatter's own output compares as equal
  CHECK(compare_trace(tr, format_trace(tr, TraceFormat::paper)).match);

  // flip one token: the verdict names the coordinate
  std::string broken = golden;
  auto pos = broken.rfind(" B ");
  broken[pos + 1] = 'W';
  Verdict v = compare_trace(tr, broken);
  CHECK_FALSE(v.match);
  CHECK(v.time == 5);
  CHECK(v.probe == "12");
  CHECK(v.expected == "W");
  CHECK(v.actual == "B");
}

TEST_CASE("sequential evaluation in any order equals the synchronous step") {
  std::mt19937 rng(5);
  Scenario s = make_scenario("memo-passive-nonselected");
  Configuration cfg = s.initial;
  std::vector<CellId> order(s.graph.cell_count());
  std::iota(order.begin(), order.end(), 0);
  for (int t = 0; t < s.recommended_steps; ++t) {
    Configuration expected = step(s.graph, full_rules(), cfg);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(step_in_order(s.graph, full_rules(), cfg, order) == expected);
    }
    cfg = expected;
  }
}

TEST_CASE("milestones stay black and changes stay near the support") {
  const auto& adj_ok = [](const CellGraph& g, const std::set<CellId>& prev, CellId c) {
    if (prev.count(c)) return true;
    for (FaceId f = 0; f < kFaceCount; ++f) {
      auto n = g.neighbor(c, f);
      if (n && prev.count(n->first)) return true;
    }
    return false;
  };
  for (const auto& entry : scenario_catalog()) {
    Scenario s = make_scenario(entry.name);
    Configuration cfg = s.initial;
    for (int t = 0; t <= s.recommended_steps; ++t) {
      for (CellId c = 0; c < s.graph.cell_count(); ++c)
        if (s.graph.role(c) == Role::milestone) CHECK(cfg.states[c] == State::B);
      if (t == s.recommended_steps) break;
      std::set<CellId> prev = support(cfg);
      cfg = step(s.graph, full_rules(), cfg);
      std::set<CellId> cur = support(cfg);
      for (CellId c : cur)
        if (!prev.count(c)) CHECK(adj_ok(s.graph, prev, c));
      for (CellId c : prev)
        if (!cur.count(c)) CHECK(adj_ok(s.graph, prev, c));
    }
  }
}

TEST_CASE("a missing rule aborts the run naming the cell") {
  // a lone black cell with five black neighbours has no covering rule
  CellGraph g;
  CellId hub = g.add_cell("hub", Role::plain);
  Configuration cfg;
  cfg.states.push_back(State::B);
  for (int i = 0; i < 5; ++i) {
    CellId n = g.add_cell("n" + std::to_string(i), Role::milestone);
    g.link(hub, 6 + i, n, 0);
    cfg.states.push_back(State::B);
  }
  try {
    step(g, full_rules(), cfg);
    FAIL("expected MissingRule");
  } catch (const MissingRule& e) {
    CHECK(e.cell == "hub");
  }
}
