#include "pslab/potential.hpp"

#include <algorithm>
#include <cmath>

#include "pslab/ball.hpp"

namespace pslab {

double expansion_constant(const Cocycle& c, unsigned m, double R) {
  const WeightedPotential psi = c.effective();
  const Alphabet& alphabet = psi.alphabet();
  const auto stems = all_stems_of_depth(alphabet, m + 1);
  double worst = 0.0;
  for_each_in_ball(psi, R, [&](std::span<const Letter> letters, double mag) {
    const ReducedWord g(std::vector<Letter>(letters.begin(), letters.end()));
    const ReducedWord g_inv = invert(g);
    for (const auto& v : stems) {
      if (g_inv.size() >= m + 1 && is_prefix_of(v, g_inv)) continue;  // inside the ball
      const auto value = sigma_on_cylinder(c, g, Cylinder(v));
      worst = std::max(worst, std::abs(*value - mag));
    }
  });
  return worst;
}

double nice_magnitude_defect(const Cocycle& c, const ReducedWord& alpha, const BoundaryPoint& x,
                             std::size_t depth) {
  if (depth < alpha.size() + 1)
    throw DepthTooShallow("nice_magnitude_defect: depth must exceed |alpha|");
  const ReducedWord g_d = x.prefix(depth);
  const double via_magnitudes =
      cocycle_magnitude(c, multiply(alpha, g_d)) - cocycle_magnitude(c, g_d);
  return std::abs(sigma(c, alpha, x) - via_magnitudes);
}

WeightedPotential cocycle_to_potential(const Cocycle& c) {
  const Alphabet& alphabet = c.potential.alphabet();
  std::vector<double> weights(alphabet.letter_count());
  for (Letter l = 0; l < alphabet.letter_count(); ++l)
    weights[l] = cocycle_magnitude(c, ReducedWord({l}));
  return WeightedPotential(alphabet, std::move(weights));
}

}  // namespace pslab
