#include "doctest.h"

#include <set>

#include "pslab/boundary.hpp"
#include "pslab/cylinder.hpp"
#include "pslab/errors.hpp"
#include "pslab/potential.hpp"
#include "pslab/ball.hpp"
#include "pslab/sampling.hpp"
#include "pslab/word.hpp"

#include "oracles.hpp"

using namespace pslab;

namespace {

const Alphabet k2(2);

ReducedWord W(const char* s) { return parse_word(k2, s); }

BoundaryPoint P(const char* head, const char* cycle) {
  return BoundaryPoint(parse_word(k2, head), parse_word(k2, cycle));
}

}  // namespace

TEST_CASE("multiply: cancellation, identity, oracle agreement") {
  CHECK(multiply(W("a"), W("A")) == W("1"));
  CHECK(multiply(W("ab"), W("Ba")) == W("aa"));
  CHECK(multiply(W("1"), W("aBa")) == W("aBa"));

  Sampler gen(k2, 2024);
  for (int i = 0; i < 2000; ++i) {
    const ReducedWord a = gen.random_word_up_to(10);
    const ReducedWord b = gen.random_word_up_to(10);
    const ReducedWord c = gen.random_word_up_to(10);
    CHECK(multiply(a, b) == oracle::naive_multiply(a, b));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const std::size_t cancel = cancellation_length(a, b);
    CHECK(multiply(a, b).size() == a.size() + b.size() - 2 * cancel);
  }
}

TEST_CASE("invert: definition and involution") {
  CHECK(invert(W("ab")) == W("BA"));
  CHECK(invert(W("1")) == W("1"));
  CHECK(invert(W("abA")) == W("aBA"));

  Sampler gen(k2, 7);
  for (int i = 0; i < 500; ++i) {
    const ReducedWord a = gen.random_word_up_to(12);
    CHECK(invert(invert(a)) == a);
    CHECK(multiply(a, invert(a)) == ReducedWord{});
  }
}

TEST_CASE("common prefix length on words and boundary points") {
  CHECK(common_prefix_len(W("ab"), P("1", "aB")) == 1);
  CHECK(common_prefix_len(P("1", "ab"), P("1", "ab")) == kInfinitePrefix);
  CHECK(common_prefix_len(W("aab"), W("a")) == 1);
  CHECK(common_prefix_len(W("ab"), W("ab")) == kInfinitePrefix);

  // The same point written with a different head/cycle split.
  CHECK(P("ab", "ab") == P("1", "ab"));
  CHECK(P("1", "abab") == P("1", "ab"));
  CHECK(common_prefix_len(P("ab", "ab"), P("1", "ab")) == kInfinitePrefix);
}

TEST_CASE("ultrametric inequality on sampled triples") {
  Sampler gen(k2, 99);
  // Mixed triples of vertices and boundary points.
  for (int i = 0; i < 10000; ++i) {
    const BoundaryPoint x = gen.random_boundary(4, 3);
    const BoundaryPoint y = gen.random_boundary(4, 3);
    const ReducedWord g = gen.random_word_up_to(6);
    const double dxy = prefix_dist(common_prefix_len(x, y));
    const double dxg = prefix_dist(common_prefix_len(g, x));
    const double dgy = prefix_dist(common_prefix_len(g, y));
    CHECK(dxy <= std::max(dxg, dgy) + 1e-15);
    CHECK(dxg <= std::max(dxy, dgy) + 1e-15);
  }
}

TEST_CASE("confluence: branch vertex of two directions") {
  CHECK(confluence(P("a", "b"), P("b", "a")) == W("1"));
  CHECK(confluence(P("1", "ab"), P("a", "BA")) == W("a"));

  const Alphabet k3(3);
  const BoundaryPoint x(parse_word(k3, "aab"), parse_word(k3, "a"));
  const BoundaryPoint y(parse_word(k3, "aac"), parse_word(k3, "a"));
  CHECK(confluence(x, y) == parse_word(k3, "aa"));

  CHECK_THROWS_AS(confluence(P("1", "ab"), P("ab", "ab")), EqualPoints);
  CHECK_THROWS_AS(confluence(W("ab"), W("ab")), EqualPoints);
}

TEST_CASE("boundary point canonical form and seam validation") {
  CHECK_THROWS(BoundaryPoint(W("1"), W("1")));        // empty cycle
  CHECK_THROWS(BoundaryPoint(W("a"), W("Ab")));       // head-cycle seam
  CHECK_THROWS(BoundaryPoint(W("1"), W("abA")));      // cycle-cycle seam
  CHECK(P("1", "abab").cycle() == W("ab"));           // primitive cycle
  CHECK(P("aba", "ba").head() == W("1"));             // absorbed head

  Sampler gen(k2, 31337);
  for (int i = 0; i < 1000; ++i) {
    const BoundaryPoint x = gen.random_boundary(5, 4);
    // Re-express with the first cycle letter moved into the head and the
    // cycle doubled; the canonical form must not change.
    std::vector<Letter> h(x.head().letters().begin(), x.head().letters().end());
    h.push_back(x.cycle()[0]);
    std::vector<Letter> c(x.cycle().letters().begin(), x.cycle().letters().end());
    std::rotate(c.begin(), c.begin() + 1, c.end());
    std::vector<Letter> cc(c);
    cc.insert(cc.end(), c.begin(), c.end());
    const BoundaryPoint y(ReducedWord(std::move(h)), ReducedWord(std::move(cc)));
    CHECK(x == y);
  }
}

TEST_CASE("action on boundary points") {
  CHECK(act(W("a"), P("1", "Ab")) == P("1", "bA"));
  Sampler gen(k2, 5);
  for (int i = 0; i < 2000; ++i) {
    const ReducedWord g = gen.random_word_up_to(7);
    const ReducedWord h = gen.random_word_up_to(7);
    const BoundaryPoint x = gen.random_boundary(4, 3);
    CHECK(act(invert(g), act(g, x)) == x);
    CHECK(act(multiply(g, h), x) == act(g, act(h, x)));
    // Prefix consistency: acting on the point matches word arithmetic on a
    // deep prefix.
    const ReducedWord deep = x.prefix(g.size() + 12);
    CHECK(act(g, x).prefix(multiply(g, deep).size()) == multiply(g, deep));
  }
}

TEST_CASE("complement: examples and involution") {
  const CylinderSet all = CylinderSet::whole_boundary();
  CHECK(complement(k2, all).is_empty());
  CHECK(complement(k2, CylinderSet::empty_set()) == all);

  const CylinderSet ca = CylinderSet::single(Cylinder(W("a")));
  CHECK(complement(k2, ca) == CylinderSet::of(k2, {W("A"), W("b"), W("B")}));

  const CylinderSet cab = CylinderSet::single(Cylinder(W("ab")));
  CHECK(complement(k2, cab) ==
        CylinderSet::of(k2, {W("A"), W("b"), W("B"), W("aa"), W("aB")}));

  // Brute-force membership probe at depth 2 for the expected set.
  CHECK(oracle::matches_membership(
      k2, complement(k2, cab),
      [&](const BoundaryPoint& x) { return !cab.contains(x); }, 3));

  Sampler gen(k2, 11);
  for (int i = 0; i < 300; ++i) {
    std::vector<ReducedWord> stems;
    for (int j = 0; j < 4; ++j) stems.push_back(gen.random_word_up_to(3));
    const CylinderSet s = CylinderSet::of(k2, stems);
    CHECK(complement(k2, complement(k2, s)) == s);
    CHECK(unite(k2, s, complement(k2, s)) == all);
    CHECK(intersect(k2, s, complement(k2, s)).is_empty());
  }
}

TEST_CASE("canonical form merges complete families and is idempotent") {
  // All four depth-1 cylinders merge to the whole boundary.
  CHECK(CylinderSet::of(k2, {W("a"), W("A"), W("b"), W("B")}) == CylinderSet::whole_boundary());
  // The three children of a merge back to C_a.
  CHECK(CylinderSet::of(k2, {W("aa"), W("ab"), W("aB")}) ==
        CylinderSet::single(Cylinder(W("a"))));
  // Antichain absorption.
  CHECK(CylinderSet::of(k2, {W("a"), W("ab"), W("abb")}) ==
        CylinderSet::single(Cylinder(W("a"))));

  Sampler gen(k2, 123);
  for (int i = 0; i < 500; ++i) {
    std::vector<ReducedWord> stems;
    for (int j = 0; j < 6; ++j) stems.push_back(gen.random_word_up_to(4));
    const CylinderSet s = CylinderSet::of(k2, stems);
    CHECK(CylinderSet::of(k2, s.stems()) == s);
  }
}

TEST_CASE("act on cylinder sets: examples") {
  const CylinderSet cb = CylinderSet::single(Cylinder(W("b")));
  CHECK(act(k2, W("1"), cb) == cb);
  const CylinderSet a_cb = act(k2, W("a"), cb);
  CHECK(a_cb == CylinderSet::single(Cylinder(W("ab"))));
  CHECK(oracle::matches_membership(
      k2, a_cb, [&](const BoundaryPoint& x) { return cb.contains(act(W("A"), x)); }, 3));

  // Cancellation consuming the whole stem: a . C_{a^-1} covers everything
  // except C_a.
  const CylinderSet ca_inv = CylinderSet::single(Cylinder(W("A")));
  const CylinderSet image = act(k2, W("a"), ca_inv);
  CHECK(image == CylinderSet::of(k2, {W("A"), W("b"), W("B")}));
  CHECK(image == complement(k2, CylinderSet::single(Cylinder(W("a")))));
  CHECK(oracle::matches_membership(
      k2, image, [&](const BoundaryPoint& x) { return ca_inv.contains(act(W("A"), x)); }, 4));
}

TEST_CASE("act is a group action preserving the boundary and disjointness") {
  Sampler gen(k2, 77);
  CHECK(act(k2, W("ab"), CylinderSet::whole_boundary()) == CylinderSet::whole_boundary());
  for (int i = 0; i < 1000; ++i) {
    const ReducedWord g = gen.random_word_up_to(4);
    const ReducedWord h = gen.random_word_up_to(4);
    std::vector<ReducedWord> stems;
    for (int j = 0; j < 3; ++j) stems.push_back(gen.random_word_up_to(3));
    const CylinderSet s = CylinderSet::of(k2, stems);
    CHECK(act(k2, multiply(g, h), s) == act(k2, g, act(k2, h, s)));
    CHECK(act(k2, invert(g), act(k2, g, s)) == s);
    const CylinderSet t = complement(k2, s);
    CHECK(intersect(k2, act(k2, g, s), act(k2, g, t)).is_empty());
    CHECK(unite(k2, act(k2, g, s), act(k2, g, t)) == CylinderSet::whole_boundary());
  }
}

TEST_CASE("contraction onto the target ball") {
  // gamma maps the complement of B_eps(gamma^-1) into B_eps(gamma) once
  // |gamma| >= 2m + 1; at |gamma| = 2m the image can touch distance
  // exactly eps.
  for (unsigned m = 1; m <= 3; ++m) {
    const WeightedPotential unit = WeightedPotential::uniform(k2);
    std::size_t checked = 0;
    for_each_in_ball(unit, 2.0 * m + 2.0, [&](std::span<const Letter> letters, double) {
      if (letters.size() < 2 * m + 1) return;
      const ReducedWord g(std::vector<Letter>(letters.begin(), letters.end()));
      const CylinderSet source =
          complement(k2, boundary_ball(k2, invert(g), m));
      const CylinderSet target = boundary_ball(k2, g, m);
      CHECK(subset_of(k2, act(k2, g, source), target));
      ++checked;
    });
    CHECK(checked > 0);

    // Sharpness witness at |gamma| = 2m: a point whose prefix agrees with
    // gamma^-1 to depth exactly m lands on the sphere of radius eps.
    std::vector<Letter> letters;
    for (unsigned i = 0; i < 2 * m; ++i) letters.push_back(i % 2 ? 2 : 0);  // abab...
    const ReducedWord g = ReducedWord::reduced_from(letters);
    const CylinderSet source = complement(k2, boundary_ball(k2, invert(g), m));
    CHECK_FALSE(subset_of(k2, act(k2, g, source), boundary_ball(k2, g, m)));
  }
}

TEST_CASE("ball enumeration: counts, order, oracle") {
  const WeightedPotential unit = WeightedPotential::uniform(k2);
  CHECK(ball_count(unit, 1.0) == 5);
  CHECK(ball_count(unit, 2.0) == 17);

  const WeightedPotential weighted(k2, {1.0, 1.0, 2.0, 2.0});
  CHECK(ball_count(weighted, 2.0) == 7);

  // Exhaustive oracle: naive BFS enumeration filtered by magnitude.
  std::set<std::vector<Letter>> expected;
  std::vector<std::vector<Letter>> frontier{{}};
  for (int len = 0; len <= 2; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      double mag = 0;
      for (Letter l : w) mag += weighted.weight(l);
      if (mag <= 2.0) expected.insert(w);
      for (Letter l = 0; l < 4; ++l) {
        if (!w.empty() && l == inverse_letter(w.back())) continue;
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<Letter>> got;
  for (const auto& [w, mag] : ball_sorted(weighted, 2.0))
    got.insert({w.letters().begin(), w.letters().end()});
  CHECK(got == expected);

  double last = -1.0;
  for (const auto& [w, mag] : ball_sorted(weighted, 6.0)) {
    CHECK(mag >= last);
    last = mag;
    CHECK(mag == doctest::Approx(weighted.magnitude(w)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(WeightedPotential(k2, {1.0, -1.0, 2.0, 2.0}), NonPositiveWeight);
}

TEST_CASE("sphere growth matches the no-backtracking count") {
  const WeightedPotential unit = WeightedPotential::uniform(k2);
  // S(n) = 4 * 3^(n-1) for n >= 1.
  std::vector<std::size_t> spheres(7, 0);
  for_each_in_ball(unit, 6.0, [&](std::span<const Letter> letters, double) {
    ++spheres[letters.size()];
  });
  CHECK(spheres[0] == 1);
  std::size_t expected = 4;
  for (int n = 1; n <= 6; ++n) {
    CHECK(spheres[static_cast<std::size_t>(n)] == expected);
    expected *= 3;
  }
}
