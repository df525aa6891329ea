#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dodeca/rules.hpp"
#include "dodeca/symmetry.hpp"

namespace dodeca {

using CellId = int;

enum class Role { track, milestone, sensor, controller, plain };

const char* role_name(Role r);
std::optional<Role> role_from_name(const std::string& s);

struct UnknownCell : std::runtime_error {
  explicit UnknownCell(const std::string& what_) : std::runtime_error(what_) {}
};
struct FaceOccupied : std::runtime_error {
  explicit FaceOccupied(const std::string& what_) : std::runtime_error(what_) {}
};
struct SelfLink : std::runtime_error {
  explicit SelfLink(const std::string& what_) : std::runtime_error(what_) {}
};

struct Defect {
  std::string description;
};

struct LinkRecord {
  CellId a;
  FaceId fa;
  CellId b;
  FaceId fb;
};

// A finite, explicitly wired fragment of the dodecagrid.  Every link is
// reciprocal; faces left unlinked look into the quiescent hinterland and
// always read W.  Each cell carries its own private face frame.
class CellGraph {
public:
  CellId add_cell(std::string display_name, Role role);
  void rename_cell(CellId c, std::string new_name);

  void link(CellId a, FaceId fa, CellId b, FaceId fb);
  bool has_link(CellId c, FaceId f) const;
  std::optional<std::pair<CellId, FaceId>> neighbor(CellId c, FaceId f) const;

  int cell_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(CellId c) const;
  Role role(CellId c) const;
  CellId find(const std::string& display_name) const;  // -1 when absent

  // Links with a <= b, each reported once.
  std::vector<LinkRecord> links() const;

  // Broken reciprocity, dangling endpoints, out-of-range faces.
  std::vector<Defect> validate() const;

  // Testing backdoor: installs one direction of a link only.
  void set_half_link_for_tests(CellId a, FaceId fa, CellId b, FaceId fb);

private:
  void check_cell(CellId c, const char* ctx) const;

  struct Half {
    CellId cell = -1;
    FaceId face = -1;
  };
  std::vector<std::string> names_;
  std::vector<Role> roles_;
  std::vector<std::array<Half, kFaceCount>> adj_;
  std::unordered_map<std::string, CellId> by_name_;
};

// States of the graph's cells; anything outside the graph is perpetually W.
struct Configuration {
  std::vector<State> states;

  bool operator==(const Configuration&) const = default;
};

Configuration all_white(const CellGraph& g);

NeighborhoodWord neighborhood_word(const CellGraph& g, const Configuration& cfg, CellId c);

std::set<CellId> support(const Configuration& cfg);

// ---- scenario files -------------------------------------------------------
//
// Line-oriented text:  "--" comments;  CELL <name> <role> <W|B>;
// LINK <name> <face> <name> <face>;  PROBE <name> ...

struct ScenarioParseError : std::runtime_error {
  ScenarioParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

struct Scenario {
  std::string name;
  std::string description;
  CellGraph graph;
  Configuration initial;
  std::vector<CellId> probes;
  int recommended_steps = 0;
};

Scenario parse_scenario(const std::string& text);
std::string serialize_scenario(const Scenario& s);

}  // namespace dodeca
