#pragma once

#include <array>
#include <atomic>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dodeca/symmetry.hpp"

namespace dodeca {

// The 13-symbol observation: own state plus the 12 face neighbours.
struct NeighborhoodWord {
  State current = State::W;
  StateWord neighbors{};
};

std::string to_string(const NeighborhoodWord& w);

struct Rule {
  std::string label;  // e.g. "(0)", "(1-3)"; provenance only, no semantics
  NeighborhoodWord observation;
  State new_state = State::W;
  int source_line = 0;
};

struct MalformedRow : std::runtime_error {
  MalformedRow(int line_, const std::string& what_);
  int line;
};

struct MissingRule : std::runtime_error {
  explicit MissingRule(const NeighborhoodWord& w, std::string cell_ = {});
  NeighborhoodWord word;
  std::string cell;  // filled in by the engine when known
};

// line_b == kFallback means the row disagrees with the three-black-neighbour
// fallback rather than with another row.
struct Conflict {
  static constexpr int kFallback = -1;
  int line_a = 0;
  int line_b = 0;
  NeighborhoodWord canonical_word;
  State outcome_a = State::W;
  State outcome_b = State::W;
  std::string describe() const;
};

struct RedundancyReport {
  // Distinct rows that are rotations of one another with the same outcome.
  std::vector<std::pair<int, int>> pairs;
  // For every rule: (source line, count of B among the 12 neighbours).
  std::vector<std::pair<int, int>> parikh;
};

// A cell with at most three black neighbours keeps its state.
std::optional<State> fallback(const NeighborhoodWord& w);

class RuleTable {
public:
  // File format: "--" starts a comment; a data line is an optional
  // parenthesized label plus exactly 14 W/B tokens (current state, the 12
  // neighbours by face, new state).
  static RuleTable parse(const std::string& text);
  std::string serialize() const;

  // Rotation-invariant lookup; falls back to the conservative rule for at
  // most three black neighbours; throws MissingRule otherwise.
  State lookup(const NeighborhoodWord& w) const;

  // Index collisions with different outcomes, plus conservative "(0)" (or
  // unlabeled) rows that contradict the fallback.  Motion-labeled rows with
  // few black neighbours are deliberate overrides, reported separately.
  std::vector<Conflict> check_determinism() const;
  std::vector<Rule> fallback_overrides() const;

  RedundancyReport redundancy_report() const;

  const std::vector<Rule>& rules() const { return rules_; }

private:
  RuleTable() = default;
  void build_index();

  struct Entry {
    State new_state;
    int source_line;
  };

  std::vector<Rule> rules_;
  // key = current<<12 | canonical neighbour mask -> all rows mapping there
  std::unordered_map<std::uint32_t, std::vector<Entry>> index_;
  // memoized outcomes; 0=W, 1=B, 2=missing, -1=unset
  mutable std::unique_ptr<std::array<std::atomic<signed char>, 1 << 13>> cache_;
};

}  // namespace dodeca
