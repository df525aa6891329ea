#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dodeca/engine.hpp"
#include "dodeca/lattice.hpp"

namespace dodeca {

struct Port {
  CellId cell = -1;
  FaceId face = -1;
  bool operator==(const Port&) const = default;
};

// A reusable circuit fragment: a wired cell-graph fragment with its rest
// configuration (milestones black, track white), entry/exit ports on
// unlinked faces, and the probe order used for traces.
struct Patch {
  CellGraph graph;
  std::vector<State> initial;
  std::vector<Port> in_ports;
  std::vector<Port> out_ports;
  std::vector<CellId> probe_order;

  CellId add(const std::string& name, Role role, State st);
  // A track-style cell with its black milestone cells on the given faces;
  // each milestone hangs off the track cell through the milestone's face 0.
  CellId add_track(const std::string& name, std::initializer_list<FaceId> milestone_faces,
                   Role role = Role::track);
  // Appends the other patch's cells, links and states; returns the id
  // offset of the absorbed cells.  Ports and probes are not merged.
  int absorb(const Patch& other);
  // Renames cell `from` to `to`, along with its satellite cells "from.x".
  void rename(const std::string& from, const std::string& to);
  // Prepends `prefix` to every cell name.
  void add_prefix(const std::string& prefix);

  Configuration initial_config() const;
  CellId id(const std::string& name) const;  // throws UnknownCell when absent
};

struct IncompatiblePorts : std::runtime_error {
  IncompatiblePorts(int position_, const std::string& what_);
  int position;
};
struct PortOccupied : std::runtime_error {
  explicit PortOccupied(const std::string& what_) : std::runtime_error(what_) {}
};
struct UnknownScenario : std::runtime_error {
  explicit UnknownScenario(const std::string& what_) : std::runtime_error(what_) {}
};

enum class StraightVariant {
  direct,    // milestones 2,5,6,7; entries 4,3,8,10; exit 1
  special3,  // milestones 2,6,7; entry 4; exit 1 (memory-switch path element)
  bottom0,   // direct rotated about the face-1 axis so the ballast face is 0
  bottom2,   // direct rotated so face 2 takes the ballast position
};

enum class CornerDirection { fwd_1to2, rev_2to1 };

enum class Branch { a, b };
enum class Side { left, right };

// Assembly-word letters: S = direct straight, Q = corner, s1/s0 = return
// straights with/without a milestone on the ballast face, c = return
// corner, P = special (three-milestone) straight.
enum class Letter { S, Q_fwd, Q_rev, s1, s0, c, P };
using AssemblyWord = std::vector<Letter>;

Patch straight_element(StraightVariant variant);
Patch corner(CornerDirection direction, bool ballast0);

// Stitches the letters' patches exit-to-entry in word order.
Patch track_segment(const AssemblyWord& w);

Patch fixed_switch(Side side);
Patch flip_flop_switch(Branch selected);
Patch passive_memory_switch(Branch selected);
Patch active_memory_switch(Branch selected);
// Passive and active parts joined by a signal path; the path starts at the
// passive controller's face 9 (its cells take the 14, 15, ... numbering)
// and feeds the active controller's face 0.
Patch memory_switch(Branch selected, const AssemblyWord& path_spec);

// Sets the cell behind the (unlinked) port to B.
void inject_particle(Patch& p, const Port& port);

struct CatalogEntry {
  std::string name;
  std::string description;
};
const std::vector<CatalogEntry>& scenario_catalog();
Scenario make_scenario(const std::string& name);  // throws UnknownScenario

}  // namespace dodeca
