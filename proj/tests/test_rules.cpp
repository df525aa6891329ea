#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "dodeca/rules.hpp"
#include "test_util.hpp"

using namespace dodeca;
using test_util::full_rules;
using test_util::word_with_b;

TEST_CASE("parsing the rule-file format") {
  RuleTable t = RuleTable::parse(
      "-- comment line\n"
      "(0)  W W W W W W W W W W W W W W\n"
      "(0)  W W W B W W B B B W W W W W  -- trailing comment\n"
      "B B W W W W W W W W W W W B\n");
  REQUIRE(t.rules().size() == 3);
  CHECK(t.rules()[0].label == "(0)");
  CHECK(t.rules()[0].observation.current == State::W);
  CHECK(t.rules()[0].new_state == State::W);
  CHECK(t.rules()[1].observation.neighbors == word_with_b({2, 5, 6, 7}));
  CHECK(t.rules()[1].new_state == State::W);
  CHECK(t.rules()[2].label.empty());
  CHECK(t.rules()[2].source_line == 4);

  CHECK_THROWS_AS(RuleTable::parse("(0) W W W W W W W W W W W W W\n"), MalformedRow);  // 13 tokens
  CHECK_THROWS_AS(RuleTable::parse("W W W W W W W W W W W W W X\n"), MalformedRow);
  try {
    RuleTable::parse("\n\n(1) B B\n");
  } catch (const MalformedRow& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("fallback keeps cells with at most three black neighbours") {
  NeighborhoodWord quiet{State::W, {}};
  quiet.neighbors.fill(State::W);
  CHECK(fallback(quiet) == State::W);

  NeighborhoodWord three{State::B, word_with_b({0, 1, 2})};
  CHECK(fallback(three) == State::B);

  NeighborhoodWord four{State::W, word_with_b({3, 5, 9, 11})};
  CHECK_FALSE(fallback(four).has_value());
}

TEST_CASE("lookup on the shipped table reproduces the straight-element motion") {
  const RuleTable& t = full_rules();
  // particle seen on face 4 -> the cell absorbs it
  CHECK(t.lookup({State::W, word_with_b({2, 4, 5, 6, 7})}) == State::B);
  // occupied straight element with milestones only -> the particle leaves
  CHECK(t.lookup({State::B, word_with_b({2, 5, 6, 7})}) == State::W);
  // quiescence
  NeighborhoodWord quiet{State::W, {}};
  quiet.neighbors.fill(State::W);
  CHECK(t.lookup(quiet) == State::W);
  // uncovered word -> MissingRule carrying the 13-symbol observation
  NeighborhoodWord odd{State::B, word_with_b({0, 2, 4, 6, 8, 10})};
  CHECK_THROWS_AS(t.lookup(odd), MissingRule);
  try {
    t.lookup(odd);
  } catch (const MissingRule& e) {
    CHECK(e.word.current == State::B);
    CHECK(e.word.neighbors == odd.neighbors);
  }
}

TEST_CASE("rotation soundness on a sample of rows") {
  const RuleTable& t = full_rules();
  const auto& rots = RotationGroup::instance().elements();
  for (std::size_t i = 0; i < t.rules().size(); i += 7) {
    const Rule& r = t.rules()[i];
    for (const auto& rho : rots)
      CHECK(t.lookup({r.observation.current, dodeca::apply(rho, r.observation.neighbors)}) == r.new_state);
  }
}

TEST_CASE("check_determinism") {
  CHECK(full_rules().check_determinism().empty());

  SUBCASE("contradictory duplicated row") {
    RuleTable t = RuleTable::parse(
        "W W W W W B B B B W W W W W\n"
        "W W W W W B B B B W W W W B\n");
    auto conflicts = t.check_determinism();
    REQUIRE(conflicts.size() == 1);
    CHECK(conflicts[0].line_a == 1);
    CHECK(conflicts[0].line_b == 2);
  }
  SUBCASE("rotated contradiction is still a conflict") {
    // second row is a rotated copy of the first with the other outcome
    StateWord w = word_with_b({2, 5, 6, 7, 9});
    StateWord v = dodeca::apply(RotationGroup::instance().elements()[17], w);
    std::string text;
    auto row = [](const StateWord& nbr, char out) {
      std::string s = "W";
      for (State x : nbr) s += std::string(" ") + to_char(x);
      s += std::string(" ") + out + "\n";
      return s;
    };
    text += row(w, 'W');
    text += row(v, 'B');
    CHECK(RuleTable::parse(text).check_determinism().size() == 1);
  }
  SUBCASE("unlabeled state-changing row with one black neighbour contradicts the fallback") {
    RuleTable t = RuleTable::parse("W W W B W W W W W W W W W B\n");
    auto conflicts = t.check_determinism();
    REQUIRE(conflicts.size() == 1);
    CHECK(conflicts[0].line_b == Conflict::kFallback);
  }
  SUBCASE("motion-labeled departure rows override the fallback without conflicting") {
    // the special straight element's departure: three black neighbours,
    // state changes; the label marks it as a deliberate motion rule
    RuleTable t = RuleTable::parse("(2) B W W B W W W B B W W W W W\n");
    CHECK(t.check_determinism().empty());
    REQUIRE(t.fallback_overrides().size() == 1);
    CHECK(t.fallback_overrides()[0].source_line == 1);
  }
}

TEST_CASE("the shipped table's only fallback override is the special departure") {
  auto overrides = full_rules().fallback_overrides();
  REQUIRE(overrides.size() == 1);
  CHECK(overrides[0].source_line == 47);
  CHECK(overrides[0].label == "(2)");
}

TEST_CASE("redundancy report") {
  CHECK(RuleTable::parse("").redundancy_report().pairs.empty());

  SUBCASE("a row and its hand-rotated copy make one pair") {
    StateWord w = word_with_b({3, 5, 6, 7, 8, 10, 11});
    StateWord v = dodeca::apply(RotationGroup::instance().elements()[42], w);
    std::string text;
    for (const StateWord* nbr : {&w, &v}) {
      text += "W";
      for (State x : *nbr) text += std::string(" ") + to_char(x);
      text += " W\n";
    }
    auto rep = RuleTable::parse(text).redundancy_report();
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0] == std::pair<int, int>(1, 2));
  }
  SUBCASE("shipped table: archived pair count and parikh vectors") {
    auto rep = full_rules().redundancy_report();
    CHECK(rep.pairs.size() == 20);  // frozen from the pre-build oracle
    CHECK(std::count(rep.pairs.begin(), rep.pairs.end(), std::pair<int, int>(19, 123)) == 1);
    CHECK(std::count(rep.pairs.begin(), rep.pairs.end(), std::pair<int, int>(140, 141)) == 1);
    REQUIRE(rep.parikh.size() == full_rules().rules().size());
    std::map<int, int> by_line(rep.parikh.begin(), rep.parikh.end());
    CHECK(by_line.at(13) == 0);   // the all-white row
    CHECK(by_line.at(23) == 4);   // straight-element conservative row
  }
}

TEST_CASE("parse then serialize reproduces the same multiset of rows") {
  const RuleTable& t = full_rules();
  RuleTable again = RuleTable::parse(t.serialize());
  REQUIRE(again.rules().size() == t.rules().size());
  auto key = [](const Rule& r) {
    return std::tuple(r.label, r.observation.current, r.observation.neighbors, r.new_state);
  };
  std::multiset<std::tuple<std::string, State, StateWord, State>> a, b;
  for (const Rule& r : t.rules()) a.insert(key(r));
  for (const Rule& r : again.rules()) b.insert(key(r));
  CHECK(a == b);
}

TEST_CASE("fallback subsumption: conservative low-weight rows are redundant") {
  const RuleTable& t = full_rules();
  for (const Rule& r : t.rules()) {
    auto fb = fallback(r.observation);
    if (!fb || *fb != r.new_state) continue;
    // rebuild the table without this row; the lookup must not change
    std::string text;
    for (const Rule& other : t.rules()) {
      if (other.source_line == r.source_line) continue;
      text += to_char(other.observation.current);
      for (State s : other.observation.neighbors) text += std::string(" ") + to_char(s);
      text += std::string(" ") + to_char(other.new_state) + "\n";
    }
    CHECK(RuleTable::parse(text).lookup(r.observation) == r.new_state);
  }
}
