#include "pslab/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pslab/ball.hpp"

namespace pslab {

Shadow shadow(const Alphabet& alphabet, const ReducedWord& g, unsigned m) {
  Shadow s;
  s.gamma = g;
  s.m = m;
  const CylinderSet ball = boundary_ball(alphabet, invert(g), m);
  s.set = act(alphabet, g, complement(alphabet, ball));
  return s;
}

ShadowBand shadow_lemma_stats(const BoundaryMeasure& mu, const WeightedPotential& p, unsigned m,
                              double R) {
  if (m < 1) throw std::invalid_argument("shadow_lemma_stats: m must be at least 1");
  const Alphabet& alphabet = p.alphabet();
  ShadowBand band;
  band.min_normalized = std::numeric_limits<double>::infinity();
  for (const auto& [g, mag] : ball_sorted(p, R)) {
    if (g.empty()) continue;
    const double value = mu.mass(shadow(alphabet, g, m).set) * std::exp(mu.delta() * mag);
    if (value < band.min_normalized) {
      band.min_normalized = value;
      band.argmin = g;
    }
    if (value > band.max_normalized) {
      band.max_normalized = value;
      band.argmax = g;
    }
    ++band.count;
  }
  if (band.count == 0) throw std::invalid_argument("shadow_lemma_stats: empty ball");
  return band;
}

NestingReport nesting_check(const WeightedPotential& p, unsigned m, double R) {
  const Alphabet& alphabet = p.alphabet();
  const auto ball = ball_sorted(p, R);
  std::vector<Shadow> shadows;
  shadows.reserve(ball.size());
  for (const auto& [g, mag] : ball) shadows.push_back(shadow(alphabet, g, m));

  NestingReport report;
  report.m_prime = m;
  // ball_sorted is nondecreasing in magnitude, so i <= j gives
  // ||alpha|| <= ||beta||.
  for (std::size_t i = 0; i < shadows.size(); ++i) {
    for (std::size_t j = i; j < shadows.size(); ++j) {
      ++report.pairs_total;
      if (!intersects(shadows[i].set, shadows[j].set)) continue;
      ++report.pairs_intersecting;
      unsigned mp = m;
      // Larger m' shrinks the excluded ball, so the enlarged shadow grows;
      // once m' >= |alpha| it is the whole boundary.
      while (!subset_of(alphabet, shadows[j].set, shadow(alphabet, shadows[i].gamma, mp).set)) {
        ++mp;
        if (mp > shadows[i].gamma.size() + 1)
          throw std::logic_error("nesting_check: enlargement failed to absorb the shadow");
      }
      report.m_prime = std::max(report.m_prime, mp);
    }
  }
  return report;
}

VitaliCover vitali_cover(const WeightedPotential& p, const std::vector<ReducedWord>& family,
                         unsigned m) {
  const Alphabet& alphabet = p.alphabet();
  std::vector<std::pair<ReducedWord, double>> ordered;
  ordered.reserve(family.size());
  for (const auto& g : family) ordered.emplace_back(g, p.magnitude(g));
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return shortlex_less(a.first, b.first);
  });

  VitaliCover cover;
  cover.m_prime = m;
  std::vector<Shadow> kept;
  std::vector<Shadow> rejected;
  for (const auto& [g, mag] : ordered) {
    Shadow s = shadow(alphabet, g, m);
    bool disjoint = true;
    for (const auto& k : kept)
      if (intersects(k.set, s.set)) {
        disjoint = false;
        break;
      }
    if (disjoint) {
      kept.push_back(std::move(s));
      cover.selected.push_back(g);
    } else {
      rejected.push_back(std::move(s));
    }
  }
  // Enlarge the kept shadows until they absorb every rejected one.
  for (const auto& r : rejected) {
    bool covered = false;
    for (unsigned mp = cover.m_prime; !covered; ++mp) {
      for (const auto& k : kept) {
        if (!intersects(k.set, r.set)) continue;
        if (subset_of(alphabet, r.set, shadow(alphabet, k.gamma, mp).set)) {
          covered = true;
          cover.m_prime = std::max(cover.m_prime, mp);
          break;
        }
      }
      if (!covered && mp > 64)
        throw std::logic_error("vitali_cover: enlargement failed to absorb a shadow");
    }
  }
  return cover;
}

double conical_coverage(const BoundaryMeasure& mu, const WeightedPotential& p, unsigned m,
                        double n, double window, unsigned letter_limit) {
  const Alphabet& alphabet = p.alphabet();
  if (window <= 0.0) window = 2.0 * p.max_weight();
  std::vector<ReducedWord> stems;
  for_each_in_ball(
      p, n + window,
      [&](std::span<const Letter> letters, double mag) {
        if (mag < n) return;
        const ReducedWord g(std::vector<Letter>(letters.begin(), letters.end()));
        const Shadow s = shadow(alphabet, g, m);
        stems.insert(stems.end(), s.set.stems().begin(), s.set.stems().end());
      },
      letter_limit);
  return mu.mass(CylinderSet::of(alphabet, std::move(stems)));
}

}  // namespace pslab
