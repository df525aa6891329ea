#include "dodeca/circuits.hpp"

#include <algorithm>

namespace dodeca {

namespace {

// Rotation about the face-1 axis taking the straight element's ballast
// milestone from face 5 to face 0 (the "bottom0" placement), and its
// square, which takes face 2 to the ballast position ("bottom2").
const FacePermutation& rho_bottom0() {
  static const FacePermutation p = rotation_from_flag(2, 1);
  return p;
}
const FacePermutation& rho_bottom2() {
  static const FacePermutation p = compose(rho_bottom0(), rho_bottom0());
  return p;
}

std::vector<FaceId> map_faces(const FacePermutation& p, std::initializer_list<FaceId> fs) {
  std::vector<FaceId> out;
  for (FaceId f : fs) out.push_back(p[f]);
  return out;
}

Patch make_straight(const std::string& name, const std::vector<FaceId>& milestones,
                    const std::vector<FaceId>& entries, FaceId exit) {
  Patch p;
  CellId c = p.graph.add_cell(name, Role::track);
  p.initial.push_back(State::W);
  for (FaceId f : milestones) {
    CellId m = p.graph.add_cell(name + ".m" + std::to_string(f), Role::milestone);
    p.initial.push_back(State::B);
    p.graph.link(c, f, m, 0);
  }
  for (FaceId f : entries) p.in_ports.push_back({c, f});
  p.out_ports.push_back({c, exit});
  p.probe_order.push_back(c);
  return p;
}

Patch straight_element_named(StraightVariant v, const std::string& name) {
  switch (v) {
    case StraightVariant::direct:
      return make_straight(name, {2, 5, 6, 7}, {4, 3, 8, 10}, 1);
    case StraightVariant::special3:
      return make_straight(name, {2, 6, 7}, {4}, 1);
    case StraightVariant::bottom0: {
      const auto& r = rho_bottom0();
      return make_straight(name, map_faces(r, {2, 5, 6, 7}), map_faces(r, {4, 10, 3, 8}), r[1]);
    }
    case StraightVariant::bottom2: {
      const auto& r = rho_bottom2();
      return make_straight(name, map_faces(r, {2, 5, 6, 7}), map_faces(r, {4, 10, 3, 8}), r[1]);
    }
  }
  throw std::invalid_argument("unknown straight variant");
}

Patch corner_named(CornerDirection d, bool ballast0, const std::string& name) {
  std::vector<FaceId> milestones = (d == CornerDirection::fwd_1to2)
                                       ? std::vector<FaceId>{3, 5, 6, 7, 8, 10, 11}
                                       : std::vector<FaceId>{3, 5, 6, 7, 8, 9, 11};
  if (ballast0) milestones.insert(milestones.begin(), 0);
  FaceId entry = (d == CornerDirection::fwd_1to2) ? 1 : 2;
  FaceId exit = (d == CornerDirection::fwd_1to2) ? 2 : 1;
  return make_straight(name, milestones, {entry}, exit);
}

Patch element_for(Letter l, const std::string& name) {
  switch (l) {
    case Letter::S: return straight_element_named(StraightVariant::direct, name);
    case Letter::P: return straight_element_named(StraightVariant::special3, name);
    case Letter::s1: return straight_element_named(StraightVariant::bottom0, name);
    case Letter::s0: {
      // The ballast face keeps no milestone: the rotated special element.
      const auto& r = rho_bottom0();
      return make_straight(name, map_faces(r, {2, 6, 7}), map_faces(r, {4, 10, 3, 8}), r[1]);
    }
    case Letter::Q_fwd: return corner_named(CornerDirection::fwd_1to2, false, name);
    case Letter::Q_rev: return corner_named(CornerDirection::rev_2to1, false, name);
    case Letter::c: return corner_named(CornerDirection::rev_2to1, true, name);
  }
  throw std::invalid_argument("unknown assembly letter");
}

}  // namespace

CellId Patch::add(const std::string& name, Role role, State st) {
  CellId c = graph.add_cell(name, role);
  initial.push_back(st);
  return c;
}

CellId Patch::add_track(const std::string& name, std::initializer_list<FaceId> milestone_faces,
                        Role role) {
  CellId c = add(name, role, State::W);
  for (FaceId f : milestone_faces) {
    CellId m = add(name + ".m" + std::to_string(f), Role::milestone, State::B);
    graph.link(c, f, m, 0);
  }
  return c;
}

int Patch::absorb(const Patch& other) {
  int off = graph.cell_count();
  for (CellId c = 0; c < other.graph.cell_count(); ++c) {
    graph.add_cell(other.graph.name(c), other.graph.role(c));
    initial.push_back(other.initial[c]);
  }
  for (const LinkRecord& l : other.graph.links()) graph.link(l.a + off, l.fa, l.b + off, l.fb);
  return off;
}

void Patch::rename(const std::string& from, const std::string& to) {
  std::string prefix = from + ".";
  for (CellId c = 0; c < graph.cell_count(); ++c) {
    const std::string& n = graph.name(c);
    if (n == from)
      graph.rename_cell(c, to);
    else if (n.rfind(prefix, 0) == 0)
      graph.rename_cell(c, to + n.substr(from.size()));
  }
}

void Patch::add_prefix(const std::string& prefix) {
  for (CellId c = 0; c < graph.cell_count(); ++c) graph.rename_cell(c, prefix + graph.name(c));
}

Configuration Patch::initial_config() const {
  Configuration cfg;
  cfg.states = initial;
  return cfg;
}

CellId Patch::id(const std::string& name) const {
  CellId c = graph.find(name);
  if (c < 0) throw UnknownCell("patch has no cell named '" + name + "'");
  return c;
}

IncompatiblePorts::IncompatiblePorts(int position_, const std::string& what_)
    : std::runtime_error("assembly word position " + std::to_string(position_) + ": " + what_),
      position(position_) {}

Patch straight_element(StraightVariant variant) {
  return straight_element_named(variant, "e");
}

Patch corner(CornerDirection direction, bool ballast0) {
  return corner_named(direction, ballast0, "e");
}

Patch track_segment(const AssemblyWord& w) {
  if (w.empty()) throw IncompatiblePorts(0, "empty assembly word");
  Patch out;
  Port prev_exit;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Patch el = element_for(w[i], "t" + std::to_string(i));
    if (el.in_ports.empty() || el.out_ports.empty())
      throw IncompatiblePorts(static_cast<int>(i), "element has no free ports");
    int off = out.absorb(el);
    Port entry{el.in_ports[0].cell + off, el.in_ports[0].face};
    if (i == 0) {
      for (const Port& q : el.in_ports) out.in_ports.push_back({q.cell + off, q.face});
    } else {
      try {
        out.graph.link(prev_exit.cell, prev_exit.face, entry.cell, entry.face);
      } catch (const std::exception& e) {
        throw IncompatiblePorts(static_cast<int>(i), e.what());
      }
    }
    for (CellId c : el.probe_order) out.probe_order.push_back(c + off);
    prev_exit = {el.out_ports[0].cell + off, el.out_ports[0].face};
  }
  out.out_ports.push_back(prev_exit);
  return out;
}

Patch fixed_switch(Side side) {
  Patch p;
  // Central cell 4 is a straight element rotated so its ballast milestone
  // sits on face 0; branches a (8,9,10) and b (5,6,7) merge into it and the
  // exit track u (3,2,1) leaves through its face 1.
  p.add_track("4", {0, 5, 6, 7});
  for (const char* n : {"3", "2", "1", "5", "6", "7", "8", "9", "10"})
    p.add_track(n, {2, 5, 6, 7});
  FaceId face_a = (side == Side::right) ? 4 : 3;
  FaceId face_b = (side == Side::right) ? 3 : 4;
  p.graph.link(p.id("8"), 1, p.id("4"), face_a);
  p.graph.link(p.id("5"), 1, p.id("4"), face_b);
  p.graph.link(p.id("9"), 1, p.id("8"), 4);
  p.graph.link(p.id("10"), 1, p.id("9"), 4);
  p.graph.link(p.id("6"), 1, p.id("5"), 4);
  p.graph.link(p.id("7"), 1, p.id("6"), 4);
  p.graph.link(p.id("4"), 1, p.id("3"), 4);
  p.graph.link(p.id("3"), 1, p.id("2"), 4);
  p.graph.link(p.id("2"), 1, p.id("1"), 4);
  p.in_ports = {{p.id("10"), 4}, {p.id("7"), 4}};
  p.out_ports = {{p.id("1"), 1}};
  for (const char* n : {"10", "9", "8", "7", "6", "5", "4", "3", "2", "1"})
    p.probe_order.push_back(p.id(n));
  return p;
}

Patch flip_flop_switch(Branch selected) {
  Patch p;
  for (const char* n : {"1", "2", "3"}) p.add_track(n, {2, 5, 6, 7});
  p.add_track("4", {2, 5, 8, 10, 11});
  for (const char* n : {"5", "6", "7", "8", "9", "10"}) p.add_track(n, {2, 5, 6, 7});
  p.add_track("11", {1, 6, 7}, Role::sensor);
  p.add_track("12", {1, 6, 7}, Role::sensor);
  p.add_track("13", {1, 6, 7, 8, 10}, Role::controller);
  // Track u = 1,2,3 feeds the central cell through its face 1; the link
  // from 1 enters 2 on face 10 so the u entry port (face 4 of 2) stays
  // free for particle injection.
  p.graph.link(p.id("1"), 1, p.id("2"), 10);
  p.graph.link(p.id("2"), 1, p.id("3"), 4);
  p.graph.link(p.id("3"), 1, p.id("4"), 1);
  p.graph.link(p.id("4"), 3, p.id("5"), 4);   // branch b
  p.graph.link(p.id("4"), 4, p.id("8"), 3);   // branch a
  p.graph.link(p.id("4"), 9, p.id("13"), 0);  // controller watches the crossing
  p.graph.link(p.id("5"), 1, p.id("6"), 4);
  p.graph.link(p.id("6"), 1, p.id("7"), 4);
  p.graph.link(p.id("8"), 1, p.id("9"), 4);
  p.graph.link(p.id("9"), 1, p.id("10"), 4);
  p.graph.link(p.id("5"), 9, p.id("11"), 0);  // sensors sit on the first branch cells
  p.graph.link(p.id("8"), 9, p.id("12"), 0);
  p.graph.link(p.id("13"), 3, p.id("11"), 4);
  p.graph.link(p.id("13"), 4, p.id("12"), 3);
  p.initial[p.id(selected == Branch::a ? "11" : "12")] = State::B;
  p.in_ports = {{p.id("2"), 4}};
  p.out_ports = {{p.id("10"), 1}, {p.id("7"), 1}};  // a exit, b exit
  for (int i = 1; i <= 13; ++i) p.probe_order.push_back(p.id(std::to_string(i)));
  return p;
}

namespace {

Patch passive_core(Branch selected, bool with_path_stubs) {
  Patch p;
  // The central cell 4 is a plain straight element; both branches run
  // towards it and the merged track u = 3,2,1 leaves through its face 1.
  for (int i = 1; i <= 10; ++i) p.add_track(std::to_string(i), {2, 5, 6, 7});
  p.add_track("11", {1, 8, 10}, Role::sensor);
  p.add_track("12", {1, 8, 10}, Role::sensor);
  p.add_track("13", {0, 1, 6, 7, 11}, Role::controller);
  // Branch b = 7,6,5 and branch a = 10,9,8; the links into 6 and 9 enter
  // on face 10 so the branch entry ports (face 4) stay free.
  p.graph.link(p.id("7"), 1, p.id("6"), 10);
  p.graph.link(p.id("6"), 1, p.id("5"), 4);
  p.graph.link(p.id("5"), 1, p.id("4"), 3);
  p.graph.link(p.id("10"), 1, p.id("9"), 10);
  p.graph.link(p.id("9"), 1, p.id("8"), 4);
  p.graph.link(p.id("8"), 1, p.id("4"), 4);
  p.graph.link(p.id("4"), 1, p.id("3"), 4);
  p.graph.link(p.id("3"), 1, p.id("2"), 4);
  p.graph.link(p.id("2"), 1, p.id("1"), 4);
  // The controller watches the last branch cells through faces 3 and 4 and
  // carries the two markers on faces 10 and 8.
  p.graph.link(p.id("13"), 3, p.id("5"), 0);
  p.graph.link(p.id("13"), 4, p.id("8"), 0);
  p.graph.link(p.id("13"), 8, p.id("12"), 0);
  p.graph.link(p.id("13"), 10, p.id("11"), 0);
  if (with_path_stubs) {
    p.add_track("14", {2, 6, 7});
    p.add_track("15", {2, 6, 7});
    p.graph.link(p.id("13"), 9, p.id("14"), 4);
    p.graph.link(p.id("14"), 1, p.id("15"), 4);
  }
  // Selected branch a pairs with marker 12: the controller flashes only
  // when the particle appears on the other side.
  p.initial[p.id(selected == Branch::a ? "12" : "11")] = State::B;
  p.in_ports = {{p.id("6"), 4}, {p.id("9"), 4}};  // b entry, a entry
  p.out_ports = {{p.id("1"), 1}};
  int last_probe = with_path_stubs ? 15 : 13;
  for (int i = 1; i <= last_probe; ++i) p.probe_order.push_back(p.id(std::to_string(i)));
  return p;
}

}  // namespace

Patch passive_memory_switch(Branch selected) { return passive_core(selected, true); }

Patch active_memory_switch(Branch selected) {
  Patch p;
  for (const char* n : {"1", "2", "3"}) p.add_track(n, {2, 5, 6, 7});
  p.add_track("4", {2, 5, 8, 10, 11});
  for (const char* n : {"5", "6", "7", "8", "9", "10"}) p.add_track(n, {2, 5, 6, 7});
  p.add_track("11", {1, 6, 7}, Role::sensor);
  p.add_track("12", {1, 6, 7}, Role::sensor);
  p.add_track("13", {1, 2, 3, 4, 5, 8, 9, 10}, Role::controller);
  p.graph.link(p.id("1"), 1, p.id("2"), 10);
  p.graph.link(p.id("2"), 1, p.id("3"), 4);
  p.graph.link(p.id("3"), 1, p.id("4"), 1);
  p.graph.link(p.id("4"), 3, p.id("5"), 4);
  p.graph.link(p.id("4"), 4, p.id("8"), 3);
  // Unlike the flip-flop, the controller sees the crossing through its
  // face 11 and ignores it; its face 0 is the signal port.
  p.graph.link(p.id("4"), 9, p.id("13"), 11);
  p.graph.link(p.id("5"), 1, p.id("6"), 4);
  p.graph.link(p.id("6"), 1, p.id("7"), 4);
  p.graph.link(p.id("8"), 1, p.id("9"), 4);
  p.graph.link(p.id("9"), 1, p.id("10"), 4);
  p.graph.link(p.id("5"), 9, p.id("11"), 0);
  p.graph.link(p.id("8"), 9, p.id("12"), 0);
  p.graph.link(p.id("13"), 6, p.id("11"), 4);
  p.graph.link(p.id("13"), 7, p.id("12"), 3);
  p.initial[p.id(selected == Branch::a ? "11" : "12")] = State::B;
  p.in_ports = {{p.id("2"), 4}, {p.id("13"), 0}};  // main entry, signal feed
  p.out_ports = {{p.id("10"), 1}, {p.id("7"), 1}};
  for (int i = 1; i <= 13; ++i) p.probe_order.push_back(p.id(std::to_string(i)));
  return p;
}

Patch memory_switch(Branch selected, const AssemblyWord& path_spec) {
  Patch p = passive_core(selected, false);
  p.add_prefix("p");
  Patch path = track_segment(path_spec);
  for (std::size_t i = 0; i < path_spec.size(); ++i)
    path.rename("t" + std::to_string(i), "p" + std::to_string(14 + i));
  int off = p.absorb(path);
  if (path.in_ports.empty() || path.out_ports.empty())
    throw IncompatiblePorts(0, "signal path has no free ports");
  p.graph.link(p.id("p13"), 9, path.in_ports[0].cell + off, path.in_ports[0].face);

  Patch act = active_memory_switch(selected);
  act.add_prefix("a");
  int aoff = p.absorb(act);
  (void)aoff;
  p.graph.link(path.out_ports[0].cell + off, path.out_ports[0].face, p.id("a13"), 0);

  p.in_ports = {{p.id("p6"), 4}, {p.id("p9"), 4}, {p.id("a2"), 4}};
  p.out_ports = {{p.id("p1"), 1}, {p.id("a10"), 1}, {p.id("a7"), 1}};
  p.probe_order.clear();
  for (int i = 1; i <= 15; ++i) {
    CellId c = p.graph.find("p" + std::to_string(i));
    if (c >= 0) p.probe_order.push_back(c);
  }
  for (const char* n : {"a11", "a12", "a13"}) p.probe_order.push_back(p.id(n));
  return p;
}

void inject_particle(Patch& p, const Port& port) {
  if (port.cell < 0 || port.cell >= p.graph.cell_count())
    throw UnknownCell("inject_particle: no such cell");
  if (p.graph.has_link(port.cell, port.face))
    throw std::invalid_argument("inject_particle: port face is linked");
  if (p.initial[port.cell] == State::B)
    throw PortOccupied("inject_particle: cell " + p.graph.name(port.cell) + " already holds a particle");
  p.initial[port.cell] = State::B;
}

namespace {

Scenario to_scenario(std::string name, std::string description, const Patch& p, int steps) {
  Scenario s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.graph = p.graph;
  s.initial = p.initial_config();
  s.probes = p.probe_order;
  s.recommended_steps = steps;
  return s;
}

Scenario build_scenario(const std::string& name) {
  if (name == "straight-track") {
    Patch p = track_segment(AssemblyWord(24, Letter::S));
    for (int i = 0; i < 24; ++i) p.rename("t" + std::to_string(i), std::to_string(i));
    inject_particle(p, p.in_ports[0]);
    return to_scenario(name, "particle running along 24 straight elements", p, 20);
  }
  if (name == "corner-turn") {
    Patch p = track_segment({Letter::S, Letter::Q_fwd, Letter::S, Letter::Q_fwd, Letter::S});
    for (int i = 0; i < 5; ++i) p.rename("t" + std::to_string(i), std::to_string(i + 1));
    inject_particle(p, p.in_ports[0]);
    return to_scenario(name, "particle through an (SQ)^2 S segment with two corners", p, 4);
  }
  if (name == "fixed-left" || name == "fixed-right") {
    Patch p = fixed_switch(name == "fixed-left" ? Side::left : Side::right);
    inject_particle(p, {p.id("10"), 4});
    return to_scenario(name, "fixed switch collecting branch a into the exit track", p, 6);
  }
  if (name == "flipflop-selected-a" || name == "flipflop-selected-b") {
    Patch p = flip_flop_switch(name == "flipflop-selected-a" ? Branch::a : Branch::b);
    inject_particle(p, p.in_ports[0]);
    return to_scenario(name, "flip-flop crossing: exit on the selected branch, then toggle", p, 5);
  }
  if (name == "memo-passive-nonselected" || name == "memo-passive-selected") {
    Patch p = passive_memory_switch(Branch::a);
    Patch tail = track_segment(AssemblyWord(3, Letter::S));
    for (int i = 0; i < 3; ++i) tail.rename("t" + std::to_string(i), "u" + std::to_string(i + 1));
    int off = p.absorb(tail);
    p.graph.link(p.id("1"), 1, tail.in_ports[0].cell + off, tail.in_ports[0].face);
    bool nonselected = name == "memo-passive-nonselected";
    inject_particle(p, nonselected ? p.in_ports[0] : p.in_ports[1]);
    return to_scenario(name,
                       nonselected ? "passive memory crossing on the non-selected branch (flash)"
                                   : "passive memory crossing on the selected branch (no flash)",
                       p, 7);
  }
  if (name == "memo-active-signal") {
    Patch p = active_memory_switch(Branch::a);
    Patch feed = track_segment(AssemblyWord(3, Letter::P));
    for (int i = 0; i < 3; ++i) feed.rename("t" + std::to_string(i), "s" + std::to_string(i + 1));
    int off = p.absorb(feed);
    p.graph.link(feed.out_ports[0].cell + off, feed.out_ports[0].face, p.id("13"), 0);
    for (const char* n : {"s1", "s2", "s3"}) p.probe_order.push_back(p.id(n));
    inject_particle(p, {feed.in_ports[0].cell + off, feed.in_ports[0].face});
    return to_scenario(name, "signal pulse reaching the active controller and swapping sensors",
                       p, 6);
  }
  if (name == "memo-full") {
    Patch p = memory_switch(Branch::a, AssemblyWord(6, Letter::P));
    inject_particle(p, p.in_ports[0]);
    return to_scenario(name, "memory switch: passive non-selected crossing re-selects both parts",
                       p, 12);
  }
  throw UnknownScenario("unknown scenario '" + name + "'");
}

}  // namespace

const std::vector<CatalogEntry>& scenario_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const char* n :
         {"straight-track", "corner-turn", "fixed-left", "fixed-right", "flipflop-selected-a",
          "flipflop-selected-b", "memo-passive-nonselected", "memo-passive-selected",
          "memo-active-signal", "memo-full"})
      out.push_back({n, build_scenario(n).description});
    return out;
  }();
  return entries;
}

Scenario make_scenario(const std::string& name) { return build_scenario(name); }

}  // namespace dodeca
