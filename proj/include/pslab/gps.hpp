#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pslab/boundary.hpp"
#include "pslab/exponent.hpp"
#include "pslab/measure.hpp"
#include "pslab/potential.hpp"

namespace pslab {

// Gromov product G_psi(x, y) = psi(c, o) + psi(o, c) at the confluence c of
// x and y; exact on a tree.  Throws EqualPoints when x == y.
template <typename T>
T gromov_potential(const BasicWeightedPotential<T>& p, const BoundaryPoint& x,
                   const BoundaryPoint& y) {
  const ReducedWord c = confluence(x, y);
  return p.magnitude(invert(c)) + p.magnitude(c);
}

// The magnitude route: ||alpha^-1|| + ||beta|| - ||alpha^-1 beta|| with
// alpha, beta the depth-d prefixes of x and y.  Agrees with the potential
// route exactly once the prefixes pass the confluence; nullopt when the
// depth cannot resolve it.
template <typename T>
std::optional<T> gromov_magnitude(const BasicWeightedPotential<T>& p, const BoundaryPoint& x,
                                  const BoundaryPoint& y, std::size_t depth) {
  const std::size_t cp = common_prefix_len(x, y);
  if (cp == kInfinitePrefix) throw EqualPoints("gromov_magnitude: equal boundary points");
  if (depth <= cp) return std::nullopt;
  const ReducedWord alpha = x.prefix(depth);
  const ReducedWord beta = y.prefix(depth);
  const ReducedWord alpha_inv = invert(alpha);
  return p.magnitude(alpha_inv) + p.magnitude(beta) - p.magnitude(multiply(alpha_inv, beta));
}

// max over the sample of
// |sigma-bar(g, x) + sigma(g, y) - (G(gx, gy) - G(x, y))|; identically zero
// here (a continuous Gromov-Patterson-Sullivan system).
template <typename T>
T gps_defect(const BasicWeightedPotential<T>& p,
             const std::vector<std::tuple<ReducedWord, BoundaryPoint, BoundaryPoint>>& sample) {
  const BasicCocycle<T> primal = primal_cocycle(p);
  const BasicCocycle<T> dual = dual_cocycle(p);
  T worst(0);
  for (const auto& [g, x, y] : sample) {
    const T lhs = sigma(dual, g, x) + sigma(primal, g, y);
    const T rhs = gromov_potential(p, act(g, x), act(g, y)) - gromov_potential(p, x, y);
    const T d = abs(lhs - rhs);
    if (worst < d) worst = d;
  }
  return worst;
}

// The product measure nu = e^{delta G} mu-bar (x) mu on pairs of distinct
// boundary points, evaluated exactly on pairs of disjoint cylinders (G is
// constant there).
struct BmsMeasure {
  WeightedPotential potential;
  BoundaryMeasure mu_bar;  // Patterson-Sullivan measure of the dual cocycle
  BoundaryMeasure mu;
  double delta = 0.0;

  // Throws NonConstantG unless the cylinders are disjoint.
  double mass_pair(const Cylinder& a, const Cylinder& b) const;
};

BmsMeasure bms_measure(const WeightedPotential& p, double tol = 1e-12);

// max relative defect of nu(gA x gB) against nu(A x B) over all ordered
// pairs of distinct depth-d cylinders.
double bms_invariance_defect(const BmsMeasure& bms, const ReducedWord& g, std::size_t depth);

// max over ||g|| <= R of | ||g||_sigma - ||g^-1||_sigma-bar |; identically
// zero by left-invariance.
double duality_gap(const WeightedPotential& p, double R);

enum class GrowthVerdict { Bounded, Linear };

struct RigidityReport {
  double delta0 = 0.0;
  double delta1 = 0.0;
  std::vector<std::pair<double, double>> grid;  // (R, D(R))
  double slope = 0.0;
  double relative_residual = 0.0;
  GrowthVerdict verdict = GrowthVerdict::Bounded;
};

// D(R) = max over ||g||_0 <= R of |delta0 ||g||_0 - delta1 ||g||_1| on an
// R-grid, with a bounded-or-linear verdict.  Bounded magnitude discrepancy
// is the absolutely-continuous side of the dichotomy; linear growth is the
// singular side.
RigidityReport rigidity_statistic(const WeightedPotential& p0, const WeightedPotential& p1,
                                  double r_min = 4.0, double r_max = 12.0, unsigned samples = 9);

enum class ConvexityVerdict { Strict, Equal };

struct ConvexityReport {
  double lambda = 0.0;
  double delta_lambda = 0.0;
  ConvexityVerdict verdict = ConvexityVerdict::Equal;
  WeightedPotential combined;
};

// Critical exponent of lambda w0 + (1 - lambda) w1 after normalizing both
// inputs to critical exponent 1.  The exponent never exceeds 1; a strict
// drop certifies that the two normalized magnitudes are not boundedly
// equivalent.
ConvexityReport convexity_experiment(const WeightedPotential& p0, const WeightedPotential& p1,
                                     double lambda);

// Rescales weights so the critical exponent becomes exactly 1.
WeightedPotential normalize_to_unit_exponent(const WeightedPotential& p);

struct EntropyGapReport {
  double delta_sub = 0.0;
  double delta_ambient = 0.0;
  SeriesVerdict subgroup_verdict = SeriesVerdict::Undetermined;
  double subgroup_slope = 0.0;
};

// Free factor F_sub inside F_ambient with unit weights: the subgroup's
// exponent, the ambient exponent, and the divergence of the subgroup
// series at its own exponent.
EntropyGapReport entropy_gap_experiment(unsigned ambient_k, unsigned sub_k);

const char* to_string(GrowthVerdict v);
const char* to_string(ConvexityVerdict v);

}  // namespace pslab
