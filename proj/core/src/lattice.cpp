#include "dodeca/lattice.hpp"

#include <sstream>

namespace dodeca {

const char* role_name(Role r) {
  switch (r) {
    case Role::track: return "track";
    case Role::milestone: return "milestone";
    case Role::sensor: return "sensor";
    case Role::controller: return "controller";
    case Role::plain: return "plain";
  }
  return "?";
}

std::optional<Role> role_from_name(const std::string& s) {
  for (Role r : {Role::track, Role::milestone, Role::sensor, Role::controller, Role::plain})
    if (s == role_name(r)) return r;
  return std::nullopt;
}

CellId CellGraph::add_cell(std::string display_name, Role role) {
  if (by_name_.count(display_name))
    throw std::invalid_argument("duplicate cell name '" + display_name + "'");
  CellId id = cell_count();
  by_name_.emplace(display_name, id);
  names_.push_back(std::move(display_name));
  roles_.push_back(role);
  adj_.emplace_back();
  return id;
}

void CellGraph::rename_cell(CellId c, std::string new_name) {
  check_cell(c, "rename_cell");
  if (by_name_.count(new_name))
    throw std::invalid_argument("duplicate cell name '" + new_name + "'");
  by_name_.erase(names_[c]);
  by_name_.emplace(new_name, c);
  names_[c] = std::move(new_name);
}

void CellGraph::check_cell(CellId c, const char* ctx) const {
  if (c < 0 || c >= cell_count())
    throw UnknownCell(std::string(ctx) + ": no cell with id " + std::to_string(c));
}

void CellGraph::link(CellId a, FaceId fa, CellId b, FaceId fb) {
  check_cell(a, "link");
  check_cell(b, "link");
  if (fa < 0 || fa >= kFaceCount || fb < 0 || fb >= kFaceCount)
    throw std::invalid_argument("link: face out of range");
  if (a == b && fa == fb) throw SelfLink("link: cell " + names_[a] + " face onto itself");
  if (adj_[a][fa].cell >= 0)
    throw FaceOccupied("link: face " + std::to_string(fa) + " of cell " + names_[a] +
                       " already linked");
  if (adj_[b][fb].cell >= 0)
    throw FaceOccupied("link: face " + std::to_string(fb) + " of cell " + names_[b] +
                       " already linked");
  adj_[a][fa] = {b, fb};
  adj_[b][fb] = {a, fa};
}

bool CellGraph::has_link(CellId c, FaceId f) const {
  check_cell(c, "has_link");
  return adj_[c][f].cell >= 0;
}

std::optional<std::pair<CellId, FaceId>> CellGraph::neighbor(CellId c, FaceId f) const {
  check_cell(c, "neighbor");
  if (f < 0 || f >= kFaceCount) throw std::invalid_argument("neighbor: face out of range");
  const Half& h = adj_[c][f];
  if (h.cell < 0) return std::nullopt;
  return std::make_pair(h.cell, h.face);
}

const std::string& CellGraph::name(CellId c) const {
  check_cell(c, "name");
  return names_[c];
}

Role CellGraph::role(CellId c) const {
  check_cell(c, "role");
  return roles_[c];
}

CellId CellGraph::find(const std::string& display_name) const {
  auto it = by_name_.find(display_name);
  return it == by_name_.end() ? -1 : it->second;
}

std::vector<LinkRecord> CellGraph::links() const {
  std::vector<LinkRecord> out;
  for (CellId a = 0; a < cell_count(); ++a)
    for (FaceId f = 0; f < kFaceCount; ++f) {
      const Half& h = adj_[a][f];
      if (h.cell < 0) continue;
      if (h.cell > a || (h.cell == a && h.face > f)) out.push_back({a, f, h.cell, h.face});
    }
  return out;
}

std::vector<Defect> CellGraph::validate() const {
  std::vector<Defect> out;
  for (CellId a = 0; a < cell_count(); ++a)
    for (FaceId f = 0; f < kFaceCount; ++f) {
      const Half& h = adj_[a][f];
      if (h.cell < 0) continue;
      if (h.cell >= cell_count() || h.face < 0 || h.face >= kFaceCount) {
        out.push_back({"dangling endpoint at cell " + names_[a] + " face " + std::to_string(f)});
        continue;
      }
      const Half& back = adj_[h.cell][h.face];
      if (back.cell != a || back.face != f)
        out.push_back({"broken reciprocity: cell " + names_[a] + " face " + std::to_string(f) +
                       " -> cell " + names_[h.cell] + " face " + std::to_string(h.face)});
    }
  return out;
}

void CellGraph::set_half_link_for_tests(CellId a, FaceId fa, CellId b, FaceId fb) {
  check_cell(a, "set_half_link_for_tests");
  adj_[a][fa] = {b, fb};
}

Configuration all_white(const CellGraph& g) {
  Configuration cfg;
  cfg.states.assign(g.cell_count(), State::W);
  return cfg;
}

NeighborhoodWord neighborhood_word(const CellGraph& g, const Configuration& cfg, CellId c) {
  NeighborhoodWord w;
  w.current = cfg.states[c];
  for (FaceId f = 0; f < kFaceCount; ++f) {
    auto n = g.neighbor(c, f);
    w.neighbors[f] = n ? cfg.states[n->first] : State::W;
  }
  return w;
}

std::set<CellId> support(const Configuration& cfg) {
  std::set<CellId> out;
  for (CellId c = 0; c < static_cast<CellId>(cfg.states.size()); ++c)
    if (cfg.states[c] == State::B) out.insert(c);
  return out;
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto need_cell = [&](const std::string& nm) {
    CellId c = s.graph.find(nm);
    if (c < 0) throw ScenarioParseError(line_no, "unknown cell '" + nm + "'");
    return c;
  };
  std::vector<State> states;
  while (std::getline(in, line)) {
    ++line_no;
    auto cut = line.find("--");
    if (cut != std::string::npos) line = line.substr(0, cut);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "CELL") {
      std::string nm, role_s, state_s;
      if (!(ls >> nm >> role_s >> state_s))
        throw ScenarioParseError(line_no, "CELL needs <name> <role> <W|B>");
      auto role = role_from_name(role_s);
      if (!role) throw ScenarioParseError(line_no, "unknown role '" + role_s + "'");
      if (state_s != "W" && state_s != "B")
        throw ScenarioParseError(line_no, "bad state '" + state_s + "'");
      try {
        s.graph.add_cell(nm, *role);
      } catch (const std::invalid_argument& e) {
        throw ScenarioParseError(line_no, e.what());
      }
      states.push_back(state_s == "B" ? State::B : State::W);
    } else if (kw == "LINK") {
      std::string na, nb;
      int fa, fb;
      if (!(ls >> na >> fa >> nb >> fb))
        throw ScenarioParseError(line_no, "LINK needs <name> <face> <name> <face>");
      try {
        s.graph.link(need_cell(na), fa, need_cell(nb), fb);
      } catch (const std::exception& e) {
        throw ScenarioParseError(line_no, e.what());
      }
    } else if (kw == "PROBE") {
      std::string nm;
      while (ls >> nm) s.probes.push_back(need_cell(nm));
    } else {
      throw ScenarioParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  s.initial.states = std::move(states);
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  if (!s.name.empty()) os << "-- scenario: " << s.name << "\n";
  if (s.recommended_steps > 0) os << "-- recommended steps: " << s.recommended_steps << "\n";
  for (CellId c = 0; c < s.graph.cell_count(); ++c)
    os << "CELL " << s.graph.name(c) << " " << role_name(s.graph.role(c)) << " "
       << to_char(s.initial.states[c]) << "\n";
  for (const LinkRecord& l : s.graph.links())
    os << "LINK " << s.graph.name(l.a) << " " << l.fa << " " << s.graph.name(l.b) << " " << l.fb
       << "\n";
  if (!s.probes.empty()) {
    os << "PROBE";
    for (CellId c : s.probes) os << " " << s.graph.name(c);
    os << "\n";
  }
  return os.str();
}

}  // namespace dodeca
