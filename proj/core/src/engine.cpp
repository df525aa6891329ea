#include "dodeca/engine.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dodeca {

namespace {

State next_state(const CellGraph& g, const RuleTable& t, const Configuration& cfg, CellId c) {
  NeighborhoodWord w = neighborhood_word(g, cfg, c);
  try {
    return t.lookup(w);
  } catch (const MissingRule&) {
    throw MissingRule(w, g.name(c));
  }
}

}  // namespace

Configuration step(const CellGraph& g, const RuleTable& t, const Configuration& cfg) {
  Configuration out;
  out.states.resize(cfg.states.size());
  for (CellId c = 0; c < g.cell_count(); ++c) out.states[c] = next_state(g, t, cfg, c);
  return out;
}

Configuration step_in_order(const CellGraph& g, const RuleTable& t, const Configuration& cfg,
                            const std::vector<CellId>& order) {
  Configuration out = cfg;
  for (CellId c : order) out.states[c] = next_state(g, t, cfg, c);
  return out;
}

Trace run(const CellGraph& g, const RuleTable& t, Configuration cfg, int steps,
          const std::vector<CellId>& probes) {
  Trace tr;
  for (CellId c : probes) tr.probe_names.push_back(g.name(c));
  auto snapshot = [&] {
    std::vector<State> row;
    row.reserve(probes.size());
    for (CellId c : probes) row.push_back(cfg.states[c]);
    tr.rows.push_back(std::move(row));
  };
  snapshot();
  for (int s = 0; s < steps; ++s) {
    cfg = step(g, t, cfg);
    snapshot();
  }
  return tr;
}

std::string format_trace(const Trace& tr, TraceFormat mode) {
  std::ostringstream os;
  if (mode == TraceFormat::csv) {
    os << "time";
    for (const auto& n : tr.probe_names) os << "," << n;
    os << "\n";
    for (std::size_t t = 0; t < tr.rows.size(); ++t) {
      os << t;
      for (State s : tr.rows[t]) os << "," << to_char(s);
      os << "\n";
    }
    return os.str();
  }
  // paper format
  std::size_t width = 2;
  for (const auto& n : tr.probe_names) width = std::max(width, n.size());
  std::size_t time_width = std::to_string(tr.rows.empty() ? 0 : tr.rows.size() - 1).size();
  os << std::string(5 + time_width + 2, ' ');
  for (const auto& n : tr.probe_names) os << " " << std::setw(static_cast<int>(width)) << n;
  os << "\n";
  for (std::size_t t = 0; t < tr.rows.size(); ++t) {
    os << "time " << std::setw(static_cast<int>(time_width)) << t << " :";
    for (State s : tr.rows[t]) os << " " << std::setw(static_cast<int>(width)) << to_char(s);
    os << "\n";
  }
  return os.str();
}

Verdict compare_trace(const Trace& actual, const std::string& golden_text) {
  Verdict v;
  std::vector<std::vector<std::string>> lines;
  {
    std::istringstream in(golden_text);
    std::string line;
    while (std::getline(in, line)) {
      auto cut = line.find("--");
      if (cut != std::string::npos) line = line.substr(0, cut);
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (!toks.empty()) lines.push_back(std::move(toks));
    }
  }
  auto fail = [&](const std::string& msg) {
    v.match = false;
    v.message = msg;
    return v;
  };
  if (lines.empty()) return fail("golden text has no content lines");

  const auto& header = lines.front();
  if (header.size() != actual.probe_names.size())
    return fail("golden header has " + std::to_string(header.size()) + " probes, trace has " +
                std::to_string(actual.probe_names.size()));
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] != actual.probe_names[i])
      return fail("probe " + std::to_string(i + 1) + ": golden header says '" + header[i] +
                  "', trace says '" + actual.probe_names[i] + "'");

  std::size_t golden_rows = lines.size() - 1;
  if (golden_rows != actual.rows.size())
    return fail("golden has " + std::to_string(golden_rows) + " rows, trace has " +
                std::to_string(actual.rows.size()));
  for (std::size_t t = 0; t < golden_rows; ++t) {
    const auto& toks = lines[t + 1];
    // expected shape: time <N> : <state>...
    if (toks.size() != 3 + actual.probe_names.size() || toks[0] != "time" || toks[2] != ":")
      return fail("golden row " + std::to_string(t) + " is not of the form 'time N : ...'");
    if (toks[1] != std::to_string(t))
      return fail("golden row " + std::to_string(t) + " is labeled time " + toks[1]);
    for (std::size_t p = 0; p < actual.probe_names.size(); ++p) {
      std::string got(1, to_char(actual.rows[t][p]));
      if (toks[3 + p] != got) {
        v.match = false;
        v.time = static_cast<int>(t);
        v.probe = actual.probe_names[p];
        v.expected = toks[3 + p];
        v.actual = got;
        v.message = "mismatch at time " + std::to_string(t) + ", probe " + v.probe +
                    ": expected " + v.expected + ", got " + v.actual;
        return v;
      }
    }
  }
  v.match = true;
  v.message = "match";
  return v;
}

}  // namespace dodeca
