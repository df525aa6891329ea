#include "dodeca/rules.hpp"

#include <algorithm>
#include <sstream>

namespace dodeca {

namespace {

std::uint32_t index_key(State current, std::uint16_t canonical_neighbors) {
  return (static_cast<std::uint32_t>(current) << 12) | canonical_neighbors;
}

int black_neighbors(const StateWord& w) {
  int n = 0;
  for (State s : w)
    if (s == State::B) ++n;
  return n;
}

bool is_motion_label(const std::string& label) {
  // Paper labels: "(0)" marks conservative rows, anything else in
  // parentheses ("(1)", "(1-3)", "(2)", ...) marks a motion rule.
  return !label.empty() && label.front() == '(' && label.rfind("(0)", 0) != 0;
}

}  // namespace

std::string to_string(const NeighborhoodWord& w) {
  std::string s;
  s += to_char(w.current);
  s += " |";
  for (State n : w.neighbors) {
    s += ' ';
    s += to_char(n);
  }
  return s;
}

MalformedRow::MalformedRow(int line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

MissingRule::MissingRule(const NeighborhoodWord& w, std::string cell_)
    : std::runtime_error("no rule for cell " + (cell_.empty() ? std::string("?") : cell_) +
                         ", word " + to_string(w)),
      word(w),
      cell(std::move(cell_)) {}

std::string Conflict::describe() const {
  std::ostringstream os;
  os << "line " << line_a << " (-> " << to_char(outcome_a) << ") vs ";
  if (line_b == kFallback)
    os << "fallback (-> " << to_char(outcome_b) << ")";
  else
    os << "line " << line_b << " (-> " << to_char(outcome_b) << ")";
  os << " on canonical word " << to_string(canonical_word);
  return os.str();
}

std::optional<State> fallback(const NeighborhoodWord& w) {
  if (black_neighbors(w.neighbors) <= 3) return w.current;
  return std::nullopt;
}

RuleTable RuleTable::parse(const std::string& text) {
  RuleTable t;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto cut = line.find("--");
    if (cut != std::string::npos) line = line.substr(0, cut);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    Rule r;
    r.source_line = line_no;
    std::size_t at = 0;
    if (tokens[0].front() == '(') {
      r.label = tokens[0];
      at = 1;
    }
    if (tokens.size() - at != 14)
      throw MalformedRow(line_no, "expected 14 state tokens, got " +
                                      std::to_string(tokens.size() - at));
    std::array<State, 14> states;
    for (int i = 0; i < 14; ++i) {
      const std::string& s = tokens[at + i];
      if (s == "W")
        states[i] = State::W;
      else if (s == "B")
        states[i] = State::B;
      else
        throw MalformedRow(line_no, "bad state token '" + s + "'");
    }
    r.observation.current = states[0];
    for (int i = 0; i < kFaceCount; ++i) r.observation.neighbors[i] = states[1 + i];
    r.new_state = states[13];
    t.rules_.push_back(std::move(r));
  }
  t.build_index();
  return t;
}

std::string RuleTable::serialize() const {
  std::ostringstream os;
  for (const Rule& r : rules_) {
    if (!r.label.empty()) os << r.label << " ";
    os << to_char(r.observation.current);
    for (State s : r.observation.neighbors) os << " " << to_char(s);
    os << " " << to_char(r.new_state) << "\n";
  }
  return os.str();
}

void RuleTable::build_index() {
  index_.clear();
  for (const Rule& r : rules_) {
    std::uint16_t canon = canonical_mask(word_to_mask(r.observation.neighbors));
    index_[index_key(r.observation.current, canon)].push_back({r.new_state, r.source_line});
  }
  cache_ = std::make_unique<std::array<std::atomic<signed char>, 1 << 13>>();
  for (auto& c : *cache_) c.store(-1, std::memory_order_relaxed);
}

State RuleTable::lookup(const NeighborhoodWord& w) const {
  std::uint16_t mask = word_to_mask(w.neighbors);
  std::uint32_t raw = (static_cast<std::uint32_t>(w.current) << 12) | mask;
  if (cache_) {
    signed char c = (*cache_)[raw].load(std::memory_order_relaxed);
    if (c == 0) return State::W;
    if (c == 1) return State::B;
    if (c == 2) throw MissingRule(w);
  }
  signed char outcome;
  auto it = index_.find(index_key(w.current, canonical_mask(mask)));
  if (it != index_.end()) {
    outcome = static_cast<signed char>(it->second.front().new_state);
  } else if (auto fb = fallback(w)) {
    outcome = static_cast<signed char>(*fb);
  } else {
    outcome = 2;
  }
  if (cache_) (*cache_)[raw].store(outcome, std::memory_order_relaxed);
  if (outcome == 2) throw MissingRule(w);
  return outcome == 1 ? State::B : State::W;
}

std::vector<Conflict> RuleTable::check_determinism() const {
  std::vector<Conflict> out;
  // Two rows sharing (current, canonical neighbours) with different outcomes.
  std::unordered_map<std::uint32_t, const Rule*> first;
  for (const Rule& r : rules_) {
    std::uint16_t canon = canonical_mask(word_to_mask(r.observation.neighbors));
    std::uint32_t key = index_key(r.observation.current, canon);
    auto [it, inserted] = first.try_emplace(key, &r);
    if (!inserted && it->second->new_state != r.new_state) {
      Conflict c;
      c.line_a = it->second->source_line;
      c.line_b = r.source_line;
      c.canonical_word = {r.observation.current, mask_to_word(canon)};
      c.outcome_a = it->second->new_state;
      c.outcome_b = r.new_state;
      out.push_back(std::move(c));
    }
  }
  // Rows that claim to be conservative (or carry no motion label) yet
  // disagree with the three-black-neighbour fallback.
  for (const Rule& r : rules_) {
    if (is_motion_label(r.label)) continue;
    auto fb = fallback(r.observation);
    if (fb && *fb != r.new_state) {
      Conflict c;
      c.line_a = r.source_line;
      c.line_b = Conflict::kFallback;
      c.canonical_word = {r.observation.current, canonical(r.observation.neighbors)};
      c.outcome_a = r.new_state;
      c.outcome_b = *fb;
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Rule> RuleTable::fallback_overrides() const {
  std::vector<Rule> out;
  for (const Rule& r : rules_) {
    auto fb = fallback(r.observation);
    if (fb && *fb != r.new_state) out.push_back(r);
  }
  return out;
}

RedundancyReport RuleTable::redundancy_report() const {
  RedundancyReport rep;
  std::unordered_map<std::uint32_t, std::vector<const Rule*>> groups;
  for (const Rule& r : rules_) {
    std::uint16_t canon = canonical_mask(word_to_mask(r.observation.neighbors));
    groups[index_key(r.observation.current, canon)].push_back(&r);
    rep.parikh.emplace_back(r.source_line, black_neighbors(r.observation.neighbors));
  }
  for (const auto& [key, rows] : groups) {
    (void)key;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (rows[i]->new_state == rows[j]->new_state)
          rep.pairs.emplace_back(rows[i]->source_line, rows[j]->source_line);
  }
  std::sort(rep.pairs.begin(), rep.pairs.end());
  std::sort(rep.parikh.begin(), rep.parikh.end());
  return rep;
}

}  // namespace dodeca
