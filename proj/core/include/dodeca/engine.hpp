#pragma once

#include <string>
#include <vector>

#include "dodeca/lattice.hpp"
#include "dodeca/rules.hpp"

namespace dodeca {

struct Trace {
  std::vector<std::string> probe_names;
  // rows[t] holds the probe states at time t; times run 0..steps.
  std::vector<std::vector<State>> rows;

  bool operator==(const Trace&) const = default;
};

enum class TraceFormat { paper, csv };

// One synchronous application of the global map: every cell's new state is
// the rule-table lookup of its pre-step neighbourhood word.  Throws
// MissingRule (with the offending cell and word) on an uncovered word.
Configuration step(const CellGraph& g, const RuleTable& t, const Configuration& cfg);

// Same result as step, but evaluates the cells in the given order.  All
// reads are of the old configuration, so any order agrees with step; used
// to exercise the parallel-sequential equivalence property.
Configuration step_in_order(const CellGraph& g, const RuleTable& t, const Configuration& cfg,
                            const std::vector<CellId>& order);

Trace run(const CellGraph& g, const RuleTable& t, Configuration cfg, int steps,
          const std::vector<CellId>& probes);

std::string format_trace(const Trace& tr, TraceFormat mode);

struct Verdict {
  bool match = false;
  int time = -1;           // first differing row (-1 when matching)
  std::string probe;       // probe label at the mismatch
  std::string expected;
  std::string actual;
  std::string message;
};

// Token-wise comparison of a trace against golden text in paper format;
// whitespace width is ignored.
Verdict compare_trace(const Trace& actual, const std::string& golden_text);

}  // namespace dodeca
