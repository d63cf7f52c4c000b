#include "doctest.h"

#include <cmath>

#include "pslab/ball.hpp"
#include "pslab/errors.hpp"
#include "pslab/potential.hpp"
#include "pslab/rational.hpp"
#include "pslab/sampling.hpp"

#include "oracles.hpp"

using namespace pslab;

namespace {

const Alphabet k2(2);

ReducedWord W(const char* s) { return parse_word(k2, s); }
BoundaryPoint P(const char* head, const char* cycle) {
  return BoundaryPoint(parse_word(k2, head), parse_word(k2, cycle));
}

const WeightedPotential unit = WeightedPotential::uniform(k2);
const WeightedPotential asym(k2, {1.0, 3.0, 2.0, 2.0});    // a:1 A:3 b:2 B:2
const WeightedPotential w1122(k2, {1.0, 1.0, 2.0, 2.0});

// Direct-difference evaluation of the cocycle at a deep approach vertex,
// independent of the confluence shortcut.
double sigma_probe(const WeightedPotential& p, const ReducedWord& g, const BoundaryPoint& x,
                   std::size_t depth) {
  const ReducedWord approach = x.prefix(depth);
  return p.eval(invert(g), approach) - p.eval(ReducedWord{}, approach);
}

}  // namespace

TEST_CASE("potential evaluation and geodesic additivity") {
  CHECK(unit.eval(W("a"), W("ab")) == doctest::Approx(1.0));
  CHECK(asym.eval(W("1"), W("a")) == doctest::Approx(1.0));
  CHECK(asym.eval(W("a"), W("1")) == doctest::Approx(3.0));
  CHECK(unit.eval(W("bab"), W("bab")) == doctest::Approx(0.0));

  // psi(p, q) = psi(p, u) + psi(u, q) for u on the geodesic [p, q]; exact
  // over rationals.
  const BasicWeightedPotential<Rational> rasym(k2, {Rational(1), Rational(3), Rational(2),
                                                    Rational(2)});
  Sampler gen(k2, 42);
  for (int i = 0; i < 2000; ++i) {
    const ReducedWord p = gen.random_word_up_to(8);
    const ReducedWord q = gen.random_word_up_to(8);
    const ReducedWord path = multiply(invert(p), q);
    const std::size_t cut = path.empty() ? 0 : gen.rng()() % (path.size() + 1);
    const ReducedWord u = multiply(p, path.prefix(cut));
    CHECK(rasym.eval(p, q) == rasym.eval(p, u) + rasym.eval(u, q));
  }
}

TEST_CASE("sigma: closed form against the deep-probe oracle") {
  const Cocycle cu = primal_cocycle(unit);
  CHECK(sigma(cu, W("a"), P("a", "b")) == doctest::Approx(1.0));
  CHECK(sigma(cu, W("a"), P("A", "b")) == doctest::Approx(-1.0));
  CHECK(sigma(primal_cocycle(asym), W("1"), P("b", "a")) == doctest::Approx(0.0));

  Sampler gen(k2, 6021);
  for (const auto* p : {&unit, &asym}) {
    const Cocycle c = primal_cocycle(*p);
    for (int i = 0; i < 1000; ++i) {
      const ReducedWord g = gen.random_word_up_to(6);
      const BoundaryPoint x = gen.random_boundary(4, 3);
      const double direct = sigma_probe(*p, g, x, g.size() + 14);
      CHECK(sigma(c, g, x) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("sigma on cylinders: constancy detection and pointwise agreement") {
  const Cocycle cu = primal_cocycle(unit);
  CHECK(*sigma_on_cylinder(cu, W("a"), Cylinder(W("aa"))) == doctest::Approx(1.0));
  CHECK(*sigma_on_cylinder(cu, W("a"), Cylinder(W("Ab"))) == doctest::Approx(-1.0));
  CHECK(!sigma_on_cylinder(cu, W("a"), Cylinder(W("1"))).has_value());
  CHECK(*sigma_on_cylinder(cu, W("1"), Cylinder(W("1"))) == doctest::Approx(0.0));

  // Value on the cylinder equals sigma at interior points, and refinement
  // always resolves an undetermined stem.
  Sampler gen(k2, 99);
  for (int i = 0; i < 800; ++i) {
    const ReducedWord g = gen.random_word_up_to(4);
    const ReducedWord stem = gen.random_word_up_to(5);
    const auto value = sigma_on_cylinder(cu, g, Cylinder(stem));
    if (value) {
      for (int rep = 0; rep < 2; ++rep) {
        const BoundaryPoint x = gen.random_point_in(stem);
        CHECK(*value == doctest::Approx(sigma(cu, g, x)).epsilon(1e-12));
      }
    } else {
      for (const auto& deep : refine_to_depth(k2, CylinderSet::single(Cylinder(stem)),
                                              g.size() + 1))
        CHECK(sigma_on_cylinder(cu, g, Cylinder(deep)).has_value());
    }
  }
}

TEST_CASE("cocycle identity: zero defect, exactly over rationals") {
  const Cocycle cu = primal_cocycle(unit);
  Sampler gen(k2, 12);

  std::vector<Triple> sample;
  sample.emplace_back(W("a"), W("A"), P("b", "ab"));
  for (int i = 0; i < 10000; ++i)
    sample.emplace_back(gen.random_word_up_to(6), gen.random_word_up_to(6),
                        gen.random_boundary(4, 3));
  CHECK(cocycle_identity_defect(cu, sample) <= 1e-12);
  CHECK(cocycle_identity_defect(primal_cocycle(asym), sample) <= 1e-12);
  CHECK(cocycle_identity_defect(dual_cocycle(asym), sample) <= 1e-12);

  // Same formulas over exact rationals: the defect is identically zero.
  const BasicWeightedPotential<Rational> rasym(k2, {Rational(1), Rational(3), Rational(2),
                                                    Rational(2)});
  const BasicCocycle<Rational> rc = primal_cocycle(rasym);
  std::vector<Triple> rsample(sample.begin(), sample.begin() + 2000);
  CHECK(cocycle_identity_defect(rc, rsample) == Rational(0));
}

TEST_CASE("expansion constant") {
  const Cocycle cu = primal_cocycle(unit);
  CHECK(expansion_constant(cu, 1, 3.0) == doctest::Approx(2.0));
  CHECK(expansion_constant(cu, 1, 5.0) == doctest::Approx(2.0));  // stable in R
  CHECK(expansion_constant(cu, 0, 4.0) == doctest::Approx(0.0));
  CHECK(expansion_constant(cu, 1, 0.0) == doctest::Approx(0.0));  // identity only

  // |sigma - ||g||| = 2 psi(o, confluence) <= 2 m max_w outside the ball.
  for (unsigned m = 1; m <= 2; ++m)
    CHECK(expansion_constant(primal_cocycle(asym), m, 6.0) <=
          2.0 * m * asym.max_weight() + 1e-12);
}

TEST_CASE("nice magnitude: zero defect at sufficient depth") {
  const Cocycle cu = primal_cocycle(unit);
  CHECK(nice_magnitude_defect(cu, W("a"), P("b", "a"), 5) == doctest::Approx(0.0));
  CHECK(nice_magnitude_defect(cu, W("ab"), P("1", "ab"), 6) == doctest::Approx(0.0));
  CHECK(nice_magnitude_defect(cu, W("1"), P("a", "b"), 1) == doctest::Approx(0.0));

  Sampler gen(k2, 3);
  const Cocycle ca = primal_cocycle(asym);
  for (int i = 0; i < 500; ++i) {
    const ReducedWord alpha = gen.random_word_up_to(5);
    const BoundaryPoint x = gen.random_boundary(3, 3);
    CHECK(nice_magnitude_defect(ca, alpha, x, alpha.size() + 1 + gen.rng()() % 6) <= 1e-12);
  }
}

TEST_CASE("potential round trip from magnitudes") {
  const Cocycle ca = primal_cocycle(asym);
  const WeightedPotential back = cocycle_to_potential(ca);
  CHECK(back.weights() == asym.weights());
  CHECK(back.eval(W("a"), W("ab")) == doctest::Approx(2.0));  // the b edge

  Sampler gen(k2, 8);
  const Cocycle cb = primal_cocycle(back);
  for (int i = 0; i < 300; ++i) {
    const ReducedWord g = gen.random_word_up_to(5);
    const BoundaryPoint x = gen.random_boundary(3, 3);
    CHECK(sigma(cb, g, x) == doctest::Approx(sigma(ca, g, x)).epsilon(1e-12));
  }
}

TEST_CASE("properness: sphere minima grow linearly") {
  double previous = -1.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    double min_mag = 1e300;
    for (const auto& stem : all_stems_of_depth(k2, n))
      min_mag = std::min(min_mag, asym.magnitude(stem));
    CHECK(min_mag == doctest::Approx(static_cast<double>(n) * asym.min_weight()));
    CHECK(min_mag > previous);
    previous = min_mag;
  }
}

TEST_CASE("multiplicative estimate under separation") {
  // If dist(alpha^-1, beta) >= 2^-m the cancellation is at most m letters,
  // so the magnitude defect is bounded by 2 m max_w.
  Sampler gen(k2, 2718);
  for (unsigned m = 0; m <= 3; ++m) {
    const double bound = 2.0 * m * asym.max_weight() + 1e-12;
    int tested = 0;
    for (int i = 0; tested < 4000 && i < 100000; ++i) {
      const ReducedWord alpha = gen.random_word_up_to(8);
      const ReducedWord beta = gen.random_word_up_to(8);
      if (prefix_dist(common_prefix_len(invert(alpha), beta)) < std::ldexp(1.0, -(int)m))
        continue;
      ++tested;
      const double defect = std::abs(asym.magnitude(multiply(alpha, beta)) -
                                     asym.magnitude(alpha) - asym.magnitude(beta));
      CHECK(defect <= bound);
    }
    CHECK(tested > 100);
  }
}

TEST_CASE("duality: magnitudes swap under inversion") {
  const WeightedPotential dual = asym.dual();
  CHECK(dual.weight(k2.parse_letter('a')) == doctest::Approx(3.0));
  for (const auto& [g, mag] : ball_sorted(asym, 6.0))
    CHECK(mag == doctest::Approx(dual.magnitude(invert(g))).epsilon(1e-12));
}

TEST_CASE("coarse symmetry detector") {
  // Symmetric weights: |g| and |g^-1| carry equal magnitude, everywhere.
  for (const auto& [g, mag] : ball_sorted(w1122, 8.0))
    CHECK(mag == doctest::Approx(w1122.magnitude(invert(g))).epsilon(1e-12));
  CHECK(w1122.symmetric());
  CHECK(!asym.symmetric());

  // Asymmetric weights: the witness a^n shows linear growth of the gap.
  std::vector<Letter> run;
  for (int n = 1; n <= 10; ++n) {
    run.push_back(k2.parse_letter('a'));
    const ReducedWord an = ReducedWord::reduced_from(run);
    const double gap = std::abs(asym.magnitude(an) - asym.magnitude(invert(an)));
    CHECK(gap == doctest::Approx(2.0 * n));
  }
}
