#pragma once

#include <cstdint>
#include <vector>

#include "pslab/cylinder.hpp"
#include "pslab/potential.hpp"
#include "pslab/word.hpp"

namespace pslab {

// A nearest-neighbor step distribution on the letters, full support.
class WalkSpec {
 public:
  WalkSpec(const Alphabet& alphabet, std::vector<double> step_probs);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  double prob(Letter l) const { return probs_[l]; }

  // The reflected walk: lambda-bar(s) = lambda(s^-1).
  WalkSpec reflected() const;

  static WalkSpec isotropic(const Alphabet& alphabet);

 private:
  Alphabet alphabet_;
  std::vector<double> probs_;
};

// First-passage probabilities F_s: the probability that the walk started at
// the identity ever hits the vertex s.  Minimal nonnegative solution of
//   F_s = lambda(s) + sum_{t != s} lambda(t) F_{t^-1} F_s,
// found by monotone fixed-point iteration from zero.
struct FirstPassage {
  std::vector<double> F;
  unsigned iterations = 0;

  // F(e, target) by multiplicativity along the geodesic.
  double hit_probability(const ReducedWord& target) const {
    double f = 1.0;
    for (Letter l : target.letters()) f *= F[l];
    return f;
  }
};

FirstPassage solve_first_passage(const WalkSpec& walk, double tol = 1e-12);

// The Green quasimetric as a weighted potential: w(s) = -log F_s, so that
// psi(p, q) = -log F(p, q) exactly by tree multiplicativity.
WeightedPotential green_potential(const WalkSpec& walk, const FirstPassage& fp);
WeightedPotential green_potential(const WalkSpec& walk, double tol = 1e-12);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t paths = 0;
};

// Fraction of simulated paths that hit the target vertex within the step
// cap.  Deterministic in (seed); independent of the worker count.
MonteCarloEstimate monte_carlo_hit(const WalkSpec& walk, const ReducedWord& target,
                                   std::uint64_t n_paths, std::uint32_t cap, std::uint64_t seed,
                                   unsigned workers = 1);

// Fraction of paths whose reduced location at the cap lies in the cylinder.
MonteCarloEstimate harmonic_cylinder_mass(const WalkSpec& walk, const Cylinder& cyl,
                                          std::uint64_t n_paths, std::uint32_t cap,
                                          std::uint64_t seed, unsigned workers = 1);

// splitmix64; used to derive per-block RNG streams from (seed, block).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace pslab
