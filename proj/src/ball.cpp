#include "pslab/ball.hpp"

#include <algorithm>
#include <cmath>

namespace pslab {
namespace {

struct BallWalker {
  const WeightedPotential& p;
  double R;
  unsigned letters;
  const std::function<void(std::span<const Letter>, double)>& visit;
  std::vector<Letter> buf;

  void walk(double mag) {
    visit(buf, mag);
    for (Letter l = 0; l < letters; ++l) {
      if (!buf.empty() && l == inverse_letter(buf.back())) continue;
      const double next = mag + p.weight(l);
      if (next > R) continue;
      buf.push_back(l);
      walk(next);
      buf.pop_back();
    }
  }
};

}  // namespace

void for_each_in_ball(const WeightedPotential& p, double R,
                      const std::function<void(std::span<const Letter>, double)>& visit,
                      unsigned letter_limit) {
  if (R < 0) return;
  const unsigned letters =
      (letter_limit == 0) ? p.alphabet().letter_count() : letter_limit;
  BallWalker walker{p, R, letters, visit, {}};
  walker.buf.reserve(static_cast<std::size_t>(R / p.min_weight()) + 2);
  walker.walk(0.0);
}

std::vector<std::pair<ReducedWord, double>> ball_sorted(const WeightedPotential& p, double R,
                                                        unsigned letter_limit) {
  std::vector<std::pair<ReducedWord, double>> out;
  for_each_in_ball(
      p, R,
      [&](std::span<const Letter> letters, double mag) {
        out.emplace_back(ReducedWord(std::vector<Letter>(letters.begin(), letters.end())), mag);
      },
      letter_limit);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return shortlex_less(a.first, b.first);
  });
  return out;
}

std::size_t ball_count(const WeightedPotential& p, double R, unsigned letter_limit) {
  std::size_t n = 0;
  for_each_in_ball(p, R, [&](std::span<const Letter>, double) { ++n; }, letter_limit);
  return n;
}

double poincare_partial(const WeightedPotential& p, double s, double R, unsigned letter_limit) {
  double sum = 0.0;
  for_each_in_ball(p, R, [&](std::span<const Letter>, double mag) { sum += std::exp(-s * mag); },
                   letter_limit);
  return sum;
}

}  // namespace pslab
