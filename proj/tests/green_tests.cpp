#include "doctest.h"

#include <cmath>

#include "pslab/errors.hpp"
#include "pslab/green.hpp"
#include "pslab/sampling.hpp"

using namespace pslab;

namespace {

const Alphabet k2(2);
const Alphabet k3(3);

ReducedWord W(const char* s) { return parse_word(k2, s); }

// On the 2k-regular tree the isotropic first-passage probability solves
// (2k-1) F^2 - 2k F + 1 = 0; the minimal root is 1/(2k-1).
double isotropic_first_passage(unsigned k) { return 1.0 / (2.0 * k - 1.0); }

bool within_3_sigma(const MonteCarloEstimate& est, double truth) {
  const double band = 3.0 * std::max(est.std_error, 1e-9);
  return std::abs(est.estimate - truth) <= band;
}

}  // namespace

TEST_CASE("walk spec validation") {
  CHECK_THROWS_AS(WalkSpec(k2, {0.5, 0.5, -0.1, 0.1}), NonPositiveWeight);
  CHECK_THROWS(WalkSpec(k2, {0.5, 0.5, 0.5, 0.5}));
  const WalkSpec asym(k2, {0.4, 0.4, 0.1, 0.1});
  const WalkSpec back = asym.reflected();
  CHECK(back.prob(k2.parse_letter('a')) == doctest::Approx(0.4));
  const WalkSpec skew(k2, {0.5, 0.1, 0.2, 0.2});
  CHECK(skew.reflected().prob(k2.parse_letter('a')) == doctest::Approx(0.1));
}

TEST_CASE("first passage: isotropic closed forms") {
  const FirstPassage f2 = solve_first_passage(WalkSpec::isotropic(k2));
  for (double f : f2.F) CHECK(f == doctest::Approx(isotropic_first_passage(2)).epsilon(1e-12));

  const FirstPassage f3 = solve_first_passage(WalkSpec::isotropic(k3));
  for (double f : f3.F) CHECK(f == doctest::Approx(isotropic_first_passage(3)).epsilon(1e-12));
}

TEST_CASE("first passage: fixed-point residual and range for an asymmetric walk") {
  const WalkSpec walk(k2, {0.4, 0.4, 0.1, 0.1});
  const FirstPassage fp = solve_first_passage(walk, 1e-14);
  for (Letter s = 0; s < 4; ++s) {
    double back = 0.0;
    for (Letter t = 0; t < 4; ++t)
      if (t != s) back += walk.prob(t) * fp.F[inverse_letter(t)];
    CHECK(fp.F[s] == doctest::Approx(walk.prob(s) + back * fp.F[s]).epsilon(1e-10));
    CHECK(fp.F[s] > 0.0);
    CHECK(fp.F[s] < 1.0);
  }
}

TEST_CASE("green potential weights") {
  const WeightedPotential g2 = green_potential(WalkSpec::isotropic(k2));
  for (double w : g2.weights()) CHECK(w == doctest::Approx(std::log(3.0)).epsilon(1e-10));
  const WeightedPotential g3 = green_potential(WalkSpec::isotropic(k3));
  for (double w : g3.weights()) CHECK(w == doctest::Approx(std::log(5.0)).epsilon(1e-10));

  // The reflected walk's weights are the dual table.
  const WalkSpec asym(k2, {0.4, 0.3, 0.2, 0.1});
  const WeightedPotential g = green_potential(asym);
  const WeightedPotential gbar = green_potential(asym.reflected());
  for (Letter l = 0; l < 4; ++l)
    CHECK(gbar.weight(l) == doctest::Approx(g.dual().weight(l)).epsilon(1e-10));
}

TEST_CASE("monte carlo hits: trivial target and isotropic bands") {
  const WalkSpec iso = WalkSpec::isotropic(k2);
  const auto at_identity = monte_carlo_hit(iso, W("1"), 1000, 100, 7);
  CHECK(at_identity.estimate == 1.0);

  const auto hit_a = monte_carlo_hit(iso, W("a"), 100000, 1500, 12345, 4);
  CHECK(within_3_sigma(hit_a, 1.0 / 3.0));

  // Multiplicativity: F(e, ab) = 1/9.
  const auto hit_ab = monte_carlo_hit(iso, W("ab"), 100000, 1500, 999, 4);
  CHECK(within_3_sigma(hit_ab, 1.0 / 9.0));
}

TEST_CASE("monte carlo cross-validates the fixed point for an asymmetric walk") {
  const WalkSpec walk(k2, {0.4, 0.4, 0.1, 0.1});
  const FirstPassage fp = solve_first_passage(walk);
  for (const char* target : {"a", "b"}) {
    const ReducedWord t = W(target);
    const auto est = monte_carlo_hit(walk, t, 60000, 4000, 5150, 4);
    CHECK(within_3_sigma(est, fp.hit_probability(t)));
  }
}

TEST_CASE("monte carlo determinism across worker counts") {
  const WalkSpec iso = WalkSpec::isotropic(k2);
  const auto one = monte_carlo_hit(iso, W("a"), 30000, 2000, 424242, 1);
  const auto four = monte_carlo_hit(iso, W("a"), 30000, 2000, 424242, 4);
  CHECK(one.successes == four.successes);
  const auto h1 = harmonic_cylinder_mass(iso, Cylinder(W("a")), 20000, 600, 777, 1);
  const auto h3 = harmonic_cylinder_mass(iso, Cylinder(W("a")), 20000, 600, 777, 3);
  CHECK(h1.successes == h3.successes);
}

TEST_CASE("harmonic measure of cylinders for the isotropic walk") {
  const WalkSpec iso = WalkSpec::isotropic(k2);
  const auto whole = harmonic_cylinder_mass(iso, Cylinder(W("1")), 1000, 100, 3);
  CHECK(whole.estimate == 1.0);

  // Symmetry forces the uniform masses 1/4 and 1/12.
  const auto ca = harmonic_cylinder_mass(iso, Cylinder(W("a")), 80000, 900, 31, 4);
  CHECK(within_3_sigma(ca, 0.25));
  const auto cab = harmonic_cylinder_mass(iso, Cylinder(W("ab")), 80000, 900, 32, 4);
  CHECK(within_3_sigma(cab, 1.0 / 12.0));
}

TEST_CASE("green multiplicativity against direct monte carlo") {
  // -log F(p, q) equals the weight sum along the geodesic; check F(e, w)
  // directly for random words of a few letters.
  const WalkSpec walk(k2, {0.3, 0.3, 0.2, 0.2});
  const FirstPassage fp = solve_first_passage(walk);
  const WeightedPotential green = green_potential(walk, fp);
  Sampler gen(k2, 404);
  int strong = 0;
  for (int i = 0; i < 60; ++i) {
    const ReducedWord w = gen.random_word(1 + gen.rng()() % 3);
    const double truth = std::exp(-green.magnitude(w));
    const auto est = monte_carlo_hit(walk, w, 8000, 1200, 1000 + i, 4);
    CHECK(within_3_sigma(est, truth));
    if (est.std_error < truth) ++strong;
  }
  CHECK(strong > 40);  // the bands are informative, not vacuous
}
