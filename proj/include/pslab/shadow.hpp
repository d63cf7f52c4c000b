#pragma once

#include <cstddef>
#include <vector>

#include "pslab/cylinder.hpp"
#include "pslab/measure.hpp"
#include "pslab/potential.hpp"

namespace pslab {

// The shadow S_eps(g) = g(M - B_eps(g^-1)) with eps = 2^-m, computed exactly
// as a cylinder set.  The ball is empty when |g| <= m (the identity's ball
// in particular: a boundary word shares no prefix with the empty word), so
// the shadow degenerates to the whole boundary for short g.
struct Shadow {
  ReducedWord gamma;
  unsigned m = 0;
  CylinderSet set;
};

Shadow shadow(const Alphabet& alphabet, const ReducedWord& g, unsigned m);

struct ShadowBand {
  double min_normalized = 0.0;
  double max_normalized = 0.0;
  ReducedWord argmin;
  ReducedWord argmax;
  std::size_t count = 0;
};

// Extremal normalized shadow masses mu(S_eps(g)) e^{delta ||g||} over the
// nontrivial elements of the R-ball.  Requires m >= 1: the identity's ball
// convention makes m = 0 degenerate.
ShadowBand shadow_lemma_stats(const BoundaryMeasure& mu, const WeightedPotential& p, unsigned m,
                              double R);

struct NestingReport {
  unsigned m_prime = 0;
  std::size_t pairs_intersecting = 0;
  std::size_t pairs_total = 0;
};

// Smallest m' >= m with S_eps(beta) inside S_{2^-m'}(alpha) for every
// intersecting pair ||alpha|| <= ||beta|| <= R.
NestingReport nesting_check(const WeightedPotential& p, unsigned m, double R);

struct VitaliCover {
  std::vector<ReducedWord> selected;
  unsigned m_prime = 0;
};

// Greedy disjoint subfamily in nondecreasing magnitude order whose enlarged
// shadows cover the originals; m' is the enlargement actually needed.
VitaliCover vitali_cover(const WeightedPotential& p, const std::vector<ReducedWord>& family,
                         unsigned m);

// Mass of the union of S_eps(g) over n <= ||g|| <= n + window.  The window
// defaults to twice the maximal letter weight so that every boundary ray has
// a prefix in range.  letter_limit restricts the enumeration to a free
// factor.
double conical_coverage(const BoundaryMeasure& mu, const WeightedPotential& p, unsigned m,
                        double n, double window = 0.0, unsigned letter_limit = 0);

}  // namespace pslab
