#include <doctest.h>

#include <random>
#include <set>

#include "dodeca/symmetry.hpp"
#include "test_util.hpp"

using namespace dodeca;
using test_util::word_with_b;

namespace {

StateWord random_word(std::mt19937& rng) {
  StateWord w;
  for (auto& s : w) s = (rng() & 1) ? State::B : State::W;
  return w;
}

}  // namespace

TEST_CASE("face adjacency follows the ring convention") {
  const auto& adj = face_adjacency();
  for (FaceId f = 0; f < kFaceCount; ++f) {
    CHECK(adj[f].size() == 5);
    std::set<FaceId> uniq(adj[f].begin(), adj[f].end());
    CHECK(uniq.size() == 5);
    CHECK(uniq.count(f) == 0);
  }
  CHECK(adjacent(0, 3));
  CHECK_FALSE(adjacent(0, 11));
  for (FaceId a = 0; a < kFaceCount; ++a)
    for (FaceId b = 0; b < kFaceCount; ++b) CHECK(adjacent(a, b) == adjacent(b, a));
  // the documented ring contacts
  CHECK(adjacent(1, 6));
  CHECK(adjacent(1, 7));
  CHECK(adjacent(5, 6));
  CHECK(adjacent(5, 10));
  CHECK(adjacent(6, 11));
}

TEST_CASE("rotation group has exactly 60 adjacency-preserving elements") {
  const auto& rots = RotationGroup::instance().elements();
  REQUIRE(rots.size() == 60);

  std::set<FacePermutation> all(rots.begin(), rots.end());
  CHECK(all.count(identity_permutation()) == 1);

  for (const auto& p : rots) {
    // bijection preserving adjacency
    std::set<FaceId> image(p.begin(), p.end());
    CHECK(image.size() == kFaceCount);
    for (FaceId a = 0; a < kFaceCount; ++a)
      for (FaceId b = 0; b < kFaceCount; ++b)
        CHECK(adjacent(a, b) == adjacent(p[a], p[b]));
    // orientation: the oriented corner triples are preserved, never reversed
    for (FaceId f = 0; f < kFaceCount; ++f)
      for (FaceId g : face_adjacency()[f])
        CHECK(oriented_next(p[f], p[g]) == p[oriented_next(f, g)]);
    // closure under inverse and composition with every element
    CHECK(all.count(inverse(p)) == 1);
    CHECK(compose(p, inverse(p)) == identity_permutation());
  }
  for (const auto& a : all)
    for (const auto& b : all) CHECK(all.count(compose(a, b)) == 1);
}

TEST_CASE("every flag yields a rotation and all 60 are distinct") {
  std::set<FacePermutation> seen;
  for (FaceId f = 0; f < kFaceCount; ++f)
    for (FaceId g : face_adjacency()[f]) {
      FacePermutation p = rotation_from_flag(f, g);
      CHECK(p[0] == f);
      CHECK(p[1] == g);
      seen.insert(p);
    }
  CHECK(seen.size() == 60);
}

TEST_CASE("apply moves symbols to permuted positions") {
  std::mt19937 rng(7);
  StateWord w = random_word(rng);
  CHECK(dodeca::apply(identity_permutation(), w) == w);

  StateWord all_w{};
  all_w.fill(State::W);
  for (const auto& p : RotationGroup::instance().elements()) CHECK(dodeca::apply(p, all_w) == all_w);

  // dodeca::apply(a, dodeca::apply(b, w)) == dodeca::apply(a∘b, w) over all pairs
  for (int trial = 0; trial < 3; ++trial) {
    StateWord v = random_word(rng);
    for (const auto& a : RotationGroup::instance().elements())
      for (const auto& b : RotationGroup::instance().elements())
        CHECK(dodeca::apply(a, dodeca::apply(b, v)) == dodeca::apply(compose(a, b), v));
  }
}

TEST_CASE("canonical is a rotation-stable lexicographic minimum") {
  StateWord all_w{};
  all_w.fill(State::W);
  CHECK(canonical(all_w) == all_w);

  // face-transitivity: every single-B placement has the same canonical,
  // and under the W<B index order the B lands on face 11
  StateWord expected_single = word_with_b({11});
  for (int f = 0; f < kFaceCount; ++f) CHECK(canonical(word_with_b({f})) == expected_single);

  // frozen oracle value for the straight-element milestone pattern
  CHECK(canonical(word_with_b({2, 5, 6, 7})) == word_with_b({7, 8, 9, 10}));
  // frozen oracle value for the flip-flop central milestone pattern
  CHECK(canonical(word_with_b({2, 5, 8, 10, 11})) == word_with_b({4, 5, 7, 8, 9}));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    StateWord w = random_word(rng);
    StateWord c = canonical(w);
    CHECK(canonical(c) == c);  // idempotent
    // the canonical is one of the 60 images, and is minimal under W<B
    std::set<StateWord> images;
    for (const auto& p : RotationGroup::instance().elements()) {
      StateWord img = dodeca::apply(p, w);
      images.insert(img);
      CHECK(canonical(img) == c);  // rotation stability
    }
    CHECK(images.count(c) == 1);
    for (const auto& img : images) {
      // W < B comparing faces in index order
      bool c_le = true;
      for (int i = 0; i < kFaceCount; ++i) {
        if (c[i] == img[i]) continue;
        c_le = (c[i] == State::W);
        break;
      }
      CHECK(c_le);
    }
  }
}

TEST_CASE("rotation equivalence holds exactly when canonicals agree") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    StateWord a = random_word(rng);
    StateWord b = random_word(rng);
    bool equivalent = false;
    for (const auto& p : RotationGroup::instance().elements())
      if (dodeca::apply(p, a) == b) equivalent = true;
    CHECK(equivalent == (canonical(a) == canonical(b)));
  }
}

TEST_CASE("mask helpers agree with the word operations") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    StateWord w = random_word(rng);
    std::uint16_t m = word_to_mask(w);
    CHECK(mask_to_word(m) == w);
    for (const auto& p : RotationGroup::instance().elements())
      CHECK(apply_mask(p, m) == word_to_mask(dodeca::apply(p, w)));
    CHECK(mask_to_word(canonical_mask(m)) == canonical(w));
  }
}
