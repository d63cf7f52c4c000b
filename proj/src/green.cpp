#include "pslab/green.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pslab/errors.hpp"
#include "pslab/parallel.hpp"

namespace pslab {
namespace {

constexpr std::uint64_t kPathsPerBlock = 8192;

double u64_to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

// Walk simulator shared by the hit and escape estimators.  The state is the
// reduced location plus the length of its common prefix with a fixed word,
// both updated in O(1) per step.
struct WalkState {
  std::vector<Letter> word;
  std::size_t pref = 0;  // common prefix length with `ref`
  const ReducedWord& ref;

  explicit WalkState(const ReducedWord& reference, std::uint32_t cap) : ref(reference) {
    word.reserve(cap + 1);
  }

  void reset() {
    word.clear();
    pref = 0;
  }

  void step(Letter l) {
    if (!word.empty() && word.back() == inverse_letter(l)) {
      word.pop_back();
      if (pref > word.size()) pref = word.size();
    } else {
      if (pref == word.size() && pref < ref.size() && ref[pref] == l) ++pref;
      word.push_back(l);
    }
  }

  std::size_t dist_to_ref() const { return word.size() + ref.size() - 2 * pref; }
  bool at_ref() const { return word.size() == ref.size() && pref == ref.size(); }
};

struct LetterSampler {
  std::vector<double> cum;

  explicit LetterSampler(const WalkSpec& walk) {
    cum.resize(walk.alphabet().letter_count());
    double acc = 0.0;
    for (std::size_t l = 0; l < cum.size(); ++l) {
      acc += walk.prob(static_cast<Letter>(l));
      cum[l] = acc;
    }
    cum.back() = 1.0;
  }

  Letter draw(std::mt19937_64& rng) const {
    const double u = u64_to_unit(rng());
    std::size_t l = 0;
    while (u >= cum[l]) ++l;
    return static_cast<Letter>(l);
  }
};

MonteCarloEstimate finish_estimate(std::uint64_t successes, std::uint64_t paths) {
  MonteCarloEstimate est;
  est.successes = successes;
  est.paths = paths;
  est.estimate = static_cast<double>(successes) / static_cast<double>(paths);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(paths));
  return est;
}

}  // namespace

WalkSpec::WalkSpec(const Alphabet& alphabet, std::vector<double> step_probs)
    : alphabet_(alphabet), probs_(std::move(step_probs)) {
  if (probs_.size() != alphabet_.letter_count())
    throw std::invalid_argument("WalkSpec: need one probability per letter");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p > 0.0)) throw NonPositiveWeight("WalkSpec: step probabilities must be positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WalkSpec: step probabilities must sum to 1");
}

WalkSpec WalkSpec::reflected() const {
  std::vector<double> probs(probs_.size());
  for (std::size_t l = 0; l < probs_.size(); ++l)
    probs[l] = probs_[inverse_letter(static_cast<Letter>(l))];
  return WalkSpec(alphabet_, std::move(probs));
}

WalkSpec WalkSpec::isotropic(const Alphabet& alphabet) {
  return WalkSpec(alphabet,
                  std::vector<double>(alphabet.letter_count(), 1.0 / alphabet.letter_count()));
}

FirstPassage solve_first_passage(const WalkSpec& walk, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_first_passage: tol must be positive");
  const unsigned n = walk.alphabet().letter_count();
  std::vector<double> F(n, 0.0), next(n, 0.0);
  constexpr unsigned kMaxIter = 1000000;
  for (unsigned iter = 1; iter <= kMaxIter; ++iter) {
    double change = 0.0;
    for (Letter s = 0; s < n; ++s) {
      double back = 0.0;
      for (Letter t = 0; t < n; ++t)
        if (t != s) back += walk.prob(t) * F[inverse_letter(t)];
      next[s] = walk.prob(s) + back * F[s];
      change = std::max(change, std::abs(next[s] - F[s]));
    }
    F.swap(next);
    if (change < tol) {
      FirstPassage fp{std::move(F), iter};
      for (double f : fp.F)
        if (!(f > 0.0 && f < 1.0))
          throw NoConvergence("solve_first_passage: fixed point left (0,1)");
      return fp;
    }
  }
  throw NoConvergence("solve_first_passage: no convergence within iteration budget");
}

WeightedPotential green_potential(const WalkSpec& walk, const FirstPassage& fp) {
  std::vector<double> weights(fp.F.size());
  for (std::size_t l = 0; l < fp.F.size(); ++l) weights[l] = -std::log(fp.F[l]);
  return WeightedPotential(walk.alphabet(), std::move(weights));
}

WeightedPotential green_potential(const WalkSpec& walk, double tol) {
  return green_potential(walk, solve_first_passage(walk, tol));
}

MonteCarloEstimate monte_carlo_hit(const WalkSpec& walk, const ReducedWord& target,
                                   std::uint64_t n_paths, std::uint32_t cap, std::uint64_t seed,
                                   unsigned workers) {
  if (n_paths < 1) throw std::invalid_argument("monte_carlo_hit: need at least one path");
  if (target.empty()) return finish_estimate(n_paths, n_paths);

  const LetterSampler sampler(walk);
  const std::size_t n_blocks = (n_paths + kPathsPerBlock - 1) / kPathsPerBlock;
  const auto per_block = run_blocks<std::uint64_t>(
      n_blocks, workers, [&](std::size_t block) -> std::uint64_t {
        std::mt19937_64 rng(mix_seed(seed, block));
        const std::uint64_t lo = block * kPathsPerBlock;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kPathsPerBlock, n_paths);
        WalkState state(target, cap);
        std::uint64_t hits = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          state.reset();
          for (std::uint32_t step = 0; step < cap; ++step) {
            // A path too far away to reach the target within the remaining
            // steps is already decided.
            if (state.dist_to_ref() > cap - step) break;
            state.step(sampler.draw(rng));
            if (state.at_ref()) {
              ++hits;
              break;
            }
          }
        }
        return hits;
      });
  std::uint64_t total = 0;
  for (std::uint64_t h : per_block) total += h;
  return finish_estimate(total, n_paths);
}

MonteCarloEstimate harmonic_cylinder_mass(const WalkSpec& walk, const Cylinder& cyl,
                                          std::uint64_t n_paths, std::uint32_t cap,
                                          std::uint64_t seed, unsigned workers) {
  if (n_paths < 1) throw std::invalid_argument("harmonic_cylinder_mass: need at least one path");
  if (cyl.is_all()) return finish_estimate(n_paths, n_paths);

  const LetterSampler sampler(walk);
  const ReducedWord& stem = cyl.stem();
  const std::size_t n_blocks = (n_paths + kPathsPerBlock - 1) / kPathsPerBlock;
  const auto per_block = run_blocks<std::uint64_t>(
      n_blocks, workers, [&](std::size_t block) -> std::uint64_t {
        std::mt19937_64 rng(mix_seed(seed, block));
        const std::uint64_t lo = block * kPathsPerBlock;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kPathsPerBlock, n_paths);
        WalkState state(stem, cap);
        std::uint64_t inside = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
          state.reset();
          for (std::uint32_t step = 0; step < cap; ++step) state.step(sampler.draw(rng));
          if (state.word.size() >= stem.size() && state.pref == stem.size()) ++inside;
        }
        return inside;
      });
  std::uint64_t total = 0;
  for (std::uint64_t h : per_block) total += h;
  return finish_estimate(total, n_paths);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace pslab
