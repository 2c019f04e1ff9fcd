#pragma once

// Oriented classical/virtual link diagrams as signed Gauss codes.
//
// A diagram is a list of components; each component is a cyclic word of
// passages (crossing id, over/under, sign). Virtual crossings are never
// stored: any signed Gauss code is accepted, realizable in the plane or not.
// Crossing-free circles are components with an empty passage word.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbb/error.hpp"

namespace pbb {

enum class Role : uint8_t { Over, Under };

inline Role other(Role r) { return r == Role::Over ? Role::Under : Role::Over; }

struct Passage {
  int crossing = 0;  // positive integer id
  Role role = Role::Over;
  int sign = +1;  // +1 or -1
  bool operator==(const Passage&) const = default;
};

// Position of a passage: component index + index into the cyclic word.
struct PassagePos {
  int comp = 0;
  int idx = 0;
  bool operator==(const PassagePos&) const = default;
};

// One endpoint of a crossing, by role and flow direction.
struct CrossingEnds {
  int sign = 0;
  int under_in = -1, under_out = -1, over_in = -1, over_out = -1;  // semiarc ids
  PassagePos under_pos, over_pos;
};

struct SemiarcDesc {
  int id = -1;
  bool closed = false;          // crossing-free circle
  int comp = 0;
  int tail_crossing = -1;       // crossing at the tail (start) of the arc
  Role tail_role = Role::Over;
  int head_crossing = -1;
  Role head_role = Role::Over;
};

class OrientedDiagram {
public:
  OrientedDiagram() = default;
  explicit OrientedDiagram(std::vector<std::vector<Passage>> comps);

  const std::vector<std::vector<Passage>>& components() const { return comps_; }
  int crossing_count() const { return n_; }
  int component_count() const { return static_cast<int>(comps_.size()); }

  // Semiarc s(c,i) runs from passage i to passage i+1 (cyclic) of component c.
  // Crossing-free circles contribute one closed semiarc each.
  int semiarc_count() const { return total_semiarcs_; }
  int semiarc_after(int comp, int idx) const;
  int semiarc_before(int comp, int idx) const;
  std::vector<SemiarcDesc> semiarcs() const;

  // Crossing ids present, ascending.
  std::vector<int> crossing_ids() const;
  const CrossingEnds& crossing(int id) const;

  std::string to_string() const;
  // Rotation-minimal, component-sorted, ids renumbered by first occurrence.
  std::string canonical_string() const;

  bool operator==(const OrientedDiagram& o) const { return comps_ == o.comps_; }
  // Equality up to rotation of each component's cyclic word.
  bool equal_up_to_rotation(const OrientedDiagram& o) const;

private:
  void validate_and_index();

  std::vector<std::vector<Passage>> comps_;
  int n_ = 0;
  int total_semiarcs_ = 0;
  std::vector<int> comp_arc_offset_;
  std::vector<int> ids_;
  std::vector<CrossingEnds> ends_;  // parallel to ids_
};

OrientedDiagram parse_gauss(const std::string& text);
OrientedDiagram parse_pd(const std::string& text);

// ---- Reidemeister moves --------------------------------------------------

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

// R1Insert: site = {comp,idx} semiarc position; variant bit0: under passed
// first; bit1: negative sign.
// R1Delete: a = crossing id.
// R2Insert: two semiarc positions; first gets the over passages. variant
// bit0: antiparallel (second pair reversed); bit1: first crossing negative.
// R2Delete: a,b = crossing ids of the bigon.
// R3: a,b,c = crossing ids; site1..site3 = first passage of each of the
// three adjacent pairs to swap.
struct MoveSpec {
  MoveKind kind;
  PassagePos site1, site2, site3;
  int a = 0, b = 0, c = 0;
  int variant = 0;
};

OrientedDiagram apply_move(const OrientedDiagram& d, const MoveSpec& m);

// Sites where delete/R3 moves match; used by the fuzz harness.
std::vector<MoveSpec> find_r1_deletes(const OrientedDiagram& d);
std::vector<MoveSpec> find_r2_deletes(const OrientedDiagram& d);
std::vector<MoveSpec> find_r3_moves(const OrientedDiagram& d);

}  // namespace pbb
