#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pslab/potential.hpp"
#include "pslab/word.hpp"

namespace pslab {

// Depth-first visit of every reduced word with magnitude <= R (the identity
// included), allocation-free per word.  Words using only the first
// letter_limit letters are visited when a limit below 2k is given, which
// restricts the enumeration to the free factor on the first letter_limit/2
// generators.  Visit order is deterministic (letters ascending) but not
// sorted by magnitude.
void for_each_in_ball(const WeightedPotential& p, double R,
                      const std::function<void(std::span<const Letter>, double)>& visit,
                      unsigned letter_limit = 0);

// The ball as a vector sorted by (magnitude, shortlex); deterministic.
std::vector<std::pair<ReducedWord, double>> ball_sorted(const WeightedPotential& p, double R,
                                                        unsigned letter_limit = 0);

// Exact count of words with magnitude <= R.
std::size_t ball_count(const WeightedPotential& p, double R, unsigned letter_limit = 0);

// Exact partial Poincare sum over the ball at parameter s.
double poincare_partial(const WeightedPotential& p, double s, double R,
                        unsigned letter_limit = 0);

}  // namespace pslab
