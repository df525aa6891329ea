#include "dodeca/symmetry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dodeca {

namespace {

std::array<std::array<FaceId, 5>, kFaceCount> build_adjacency() {
  std::array<std::array<FaceId, 5>, kFaceCount> adj{};
  adj[0] = {1, 2, 3, 4, 5};
  for (int i = 1; i <= 5; ++i) {
    int prev = (i == 1) ? 5 : i - 1;
    int next = (i == 5) ? 1 : i + 1;
    adj[i] = {0, prev, next, 5 + i, (i % 5) + 6};
  }
  for (int i = 6; i <= 10; ++i) {
    int prev = (i == 6) ? 10 : i - 1;
    int next = (i == 10) ? 6 : i + 1;
    // lower-ring contacts: face 5+j and (j mod 5)+6 touch lower face j
    int lo_a = i - 5;                    // j with 5+j == i
    int lo_b = (i == 6) ? 5 : i - 6;     // j with (j mod 5)+6 == i
    adj[i] = {lo_a, lo_b, prev, next, 11};
  }
  adj[11] = {6, 7, 8, 9, 10};
  return adj;
}

// next_[f][g] = neighbour of f after g in f's oriented cycle, or -1.
struct OrientedCycles {
  std::array<std::array<FaceId, kFaceCount>, kFaceCount> next;

  OrientedCycles() {
    const auto& adj = face_adjacency();
    for (auto& row : next) row.fill(-1);
    // The neighbours of a face induce a 5-cycle; given two consecutive
    // members the rest of the cycle is forced by adjacency.
    auto set_cycle_from = [&](FaceId f, FaceId start, FaceId second) {
      std::array<FaceId, 5> cyc{start, second, -1, -1, -1};
      for (int k = 2; k < 5; ++k) {
        FaceId prev = cyc[k - 2], cur = cyc[k - 1], found = -1;
        for (FaceId x : adj[f]) {
          if (x == prev || !adjacent(x, cur)) continue;
          if (found >= 0) throw std::runtime_error("induced neighbour cycle is ambiguous");
          found = x;
        }
        if (found < 0) throw std::runtime_error("induced neighbour cycle is broken");
        cyc[k] = found;
      }
      for (int k = 0; k < 5; ++k) next[f][cyc[k]] = cyc[(k + 1) % 5];
    };
    // Seed: the cycle around face 0 is (1,2,3,4,5).
    set_cycle_from(0, 1, 2);
    // Walking f -> g -> h around a vertex and flipping to g's frame gives
    // next_g(h) = f; each derived pair fixes the whole cycle of g.
    bool changed = true;
    while (changed) {
      changed = false;
      for (FaceId f = 0; f < kFaceCount; ++f) {
        for (FaceId g = 0; g < kFaceCount; ++g) {
          FaceId h = next[f][g];
          if (h < 0) continue;
          if (next[g][h] < 0) {
            set_cycle_from(g, h, f);
            changed = true;
          } else if (next[g][h] != f) {
            throw std::runtime_error("oriented cycles are inconsistent");
          }
        }
      }
    }
    // Sanity: every adjacent pair is filled and every cycle is a 5-cycle.
    for (FaceId f = 0; f < kFaceCount; ++f) {
      for (FaceId g : adj[f]) {
        if (next[f][g] < 0) throw std::runtime_error("oriented cycles did not close");
      }
      FaceId g = adj[f][0];
      std::set<FaceId> seen;
      for (int k = 0; k < 5; ++k) {
        seen.insert(g);
        g = next[f][g];
      }
      if (g != adj[f][0] || seen.size() != 5)
        throw std::runtime_error("oriented neighbour order is not a 5-cycle");
    }
  }
};

const OrientedCycles& cycles() {
  static const OrientedCycles c;
  return c;
}

std::uint16_t lex_key(std::uint16_t m) {
  // Face 0 is the most significant position for the W<B lexicographic order.
  std::uint16_t k = 0;
  for (int i = 0; i < kFaceCount; ++i)
    if (m & (1u << i)) k |= static_cast<std::uint16_t>(1u << (11 - i));
  return k;
}

}  // namespace

const std::array<std::array<FaceId, 5>, kFaceCount>& face_adjacency() {
  static const auto adj = build_adjacency();
  return adj;
}

bool adjacent(FaceId a, FaceId b) {
  const auto& adj = face_adjacency();
  return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
}

FaceId oriented_next(FaceId f, FaceId g) {
  FaceId h = cycles().next[f][g];
  if (h < 0) throw std::invalid_argument("oriented_next: faces not adjacent");
  return h;
}

FacePermutation rotation_from_flag(FaceId f, FaceId g) {
  if (!adjacent(f, g)) throw std::invalid_argument("rotation_from_flag: faces not adjacent");
  FacePermutation img;
  img.fill(-1);
  img[0] = f;
  img[1] = g;
  // A rotation that maps the flag (0,1) to (f,g) maps oriented cycles to
  // oriented cycles; walking the cycle of 0 and then the cycles of the
  // newly determined faces fixes every image.
  bool changed = true;
  while (changed) {
    changed = false;
    for (FaceId a = 0; a < kFaceCount; ++a) {
      if (img[a] < 0) continue;
      for (FaceId b : face_adjacency()[a]) {
        if (img[b] < 0) continue;
        FaceId c = oriented_next(a, b);
        FaceId ic = oriented_next(img[a], img[b]);
        if (img[c] < 0) {
          img[c] = ic;
          changed = true;
        } else if (img[c] != ic) {
          throw std::runtime_error("rotation_from_flag: inconsistent propagation");
        }
      }
    }
  }
  for (FaceId a = 0; a < kFaceCount; ++a)
    if (img[a] < 0) throw std::runtime_error("rotation_from_flag: propagation incomplete");
  return img;
}

RotationGroup::RotationGroup() {
  std::set<FacePermutation> seen;
  for (FaceId f = 0; f < kFaceCount; ++f)
    for (FaceId g : face_adjacency()[f]) seen.insert(rotation_from_flag(f, g));
  elems_.assign(seen.begin(), seen.end());
  if (elems_.size() != 60)
    throw std::runtime_error("rotation group closure has size != 60");
  // Cross-check: closing two generators under composition gives the same set.
  std::set<FacePermutation> closure{identity_permutation()};
  const FacePermutation gen_a = rotation_from_flag(0, 2);  // about the 0-11 axis
  const FacePermutation gen_b = rotation_from_flag(1, 0);  // about an edge-adjacent axis
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FacePermutation> batch(closure.begin(), closure.end());
    for (const auto& p : batch)
      for (const auto* g : {&gen_a, &gen_b})
        if (closure.insert(compose(*g, p)).second) grew = true;
  }
  if (closure != seen)
    throw std::runtime_error("generator closure disagrees with flag enumeration");
}

const RotationGroup& RotationGroup::instance() {
  static const RotationGroup g;
  return g;
}

FacePermutation identity_permutation() {
  FacePermutation p;
  for (int i = 0; i < kFaceCount; ++i) p[i] = i;
  return p;
}

FacePermutation compose(const FacePermutation& a, const FacePermutation& b) {
  FacePermutation r;
  for (int i = 0; i < kFaceCount; ++i) r[i] = a[b[i]];
  return r;
}

FacePermutation inverse(const FacePermutation& p) {
  FacePermutation r;
  for (int i = 0; i < kFaceCount; ++i) r[p[i]] = i;
  return r;
}

StateWord apply(const FacePermutation& rho, const StateWord& w) {
  StateWord out;
  for (int i = 0; i < kFaceCount; ++i) out[rho[i]] = w[i];
  return out;
}

std::uint16_t word_to_mask(const StateWord& w) {
  std::uint16_t m = 0;
  for (int i = 0; i < kFaceCount; ++i)
    if (w[i] == State::B) m |= static_cast<std::uint16_t>(1u << i);
  return m;
}

StateWord mask_to_word(std::uint16_t m) {
  StateWord w;
  for (int i = 0; i < kFaceCount; ++i)
    w[i] = (m & (1u << i)) ? State::B : State::W;
  return w;
}

std::uint16_t apply_mask(const FacePermutation& rho, std::uint16_t m) {
  std::uint16_t out = 0;
  for (int i = 0; i < kFaceCount; ++i)
    if (m & (1u << i)) out |= static_cast<std::uint16_t>(1u << rho[i]);
  return out;
}

std::uint16_t canonical_mask(std::uint16_t m) {
  std::uint16_t best = 0;
  std::uint16_t best_key = 0xffff;
  for (const auto& rho : RotationGroup::instance().elements()) {
    std::uint16_t img = apply_mask(rho, m);
    std::uint16_t key = lex_key(img);
    if (key < best_key) {
      best_key = key;
      best = img;
    }
  }
  return best;
}

StateWord canonical(const StateWord& w) {
  return mask_to_word(canonical_mask(word_to_mask(w)));
}

}  // namespace dodeca
