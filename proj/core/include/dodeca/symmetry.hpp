#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace dodeca {

// Cell state of the two-state automaton.  W is the quiescent state.
enum class State : std::uint8_t { W = 0, B = 1 };

inline char to_char(State s) { return s == State::W ? 'W' : 'B'; }

using FaceId = int;
inline constexpr int kFaceCount = 12;

// States of the 12 face neighbours, indexed by face.
using StateWord = std::array<State, kFaceCount>;

// A permutation of the faces; image[i] is where face i goes.
using FacePermutation = std::array<FaceId, kFaceCount>;

// Face numbering convention: face 0 is the bottom, faces 1..5 the lower
// ring (cyclically adjacent), faces 6..10 the upper ring, face 11 the top.
// Lower-ring face i touches faces 0, its two ring neighbours, and upper
// faces 5+i and (i mod 5)+6.  Faces 0 and 11 are not adjacent.
const std::array<std::array<FaceId, 5>, kFaceCount>& face_adjacency();
bool adjacent(FaceId a, FaceId b);

// The neighbour of f that follows g in the fixed oriented 5-cycle of f's
// neighbours.  The cycles define the orientation of the cell; every
// rotation preserves them, a mirror reflection would reverse them.
FaceId oriented_next(FaceId f, FaceId g);

// The unique rotation sending the flag (0,1) to (f,g); g must be adjacent
// to f.  Ranging over all 60 flags enumerates the whole group.
FacePermutation rotation_from_flag(FaceId f, FaceId g);

class RotationGroup {
public:
  // Construction fails loudly if the closure does not have exactly 60
  // elements (that would mean the adjacency convention is broken).
  static const RotationGroup& instance();

  const std::vector<FacePermutation>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

private:
  RotationGroup();
  std::vector<FacePermutation> elems_;
};

FacePermutation identity_permutation();
// (a after b): compose(a,b)[i] = a[b[i]].
FacePermutation compose(const FacePermutation& a, const FacePermutation& b);
FacePermutation inverse(const FacePermutation& p);

// Output position rho(i) holds input position i's symbol.
StateWord apply(const FacePermutation& rho, const StateWord& w);

// Lexicographic minimum of the 60 rotated images, under W < B comparing
// faces 0..11 in index order.  Rotation-invariant and idempotent.
StateWord canonical(const StateWord& w);

// Bit-mask helpers used on the lookup hot path; bit i set <=> face i is B.
std::uint16_t word_to_mask(const StateWord& w);
StateWord mask_to_word(std::uint16_t m);
std::uint16_t apply_mask(const FacePermutation& rho, std::uint16_t m);
std::uint16_t canonical_mask(std::uint16_t m);

}  // namespace dodeca
