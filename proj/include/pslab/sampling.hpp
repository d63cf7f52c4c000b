#pragma once

#include <cstdint>
#include <random>

#include "pslab/boundary.hpp"
#include "pslab/word.hpp"

namespace pslab {

// Deterministic generators for property tests and sampled verification
// suites.  Boundary points are drawn with a random reduced head and a random
// reduced cycle glued reducibly at both seams.
class Sampler {
 public:
  explicit Sampler(const Alphabet& alphabet, std::uint64_t seed)
      : alphabet_(alphabet), rng_(seed) {}

  std::mt19937_64& rng() noexcept { return rng_; }

  Letter random_letter() {
    return static_cast<Letter>(rng_() % alphabet_.letter_count());
  }

  // Letter admissible after `prev` (pass the letter count itself for "no
  // previous letter").
  Letter random_step(unsigned prev) {
    for (;;) {
      const Letter l = random_letter();
      if (prev >= alphabet_.letter_count() || l != inverse_letter(static_cast<Letter>(prev)))
        return l;
    }
  }

  ReducedWord random_word(std::size_t length) {
    ReducedWord w;
    unsigned prev = alphabet_.letter_count();
    for (std::size_t i = 0; i < length; ++i) {
      const Letter l = random_step(prev);
      w.push_reduced(l);
      prev = l;
    }
    return w;
  }

  ReducedWord random_word_up_to(std::size_t max_length) {
    return random_word(rng_() % (max_length + 1));
  }

  BoundaryPoint random_boundary(std::size_t max_head, std::size_t max_cycle) {
    const ReducedWord head = random_word_up_to(max_head);
    const std::size_t cycle_len = 1 + rng_() % std::max<std::size_t>(1, max_cycle);
    for (;;) {
      ReducedWord cycle;
      unsigned prev = head.empty() ? alphabet_.letter_count() : head.back();
      for (std::size_t i = 0; i < cycle_len; ++i) {
        const Letter l = random_step(prev);
        cycle.push_reduced(l);
        prev = l;
      }
      if (cycle.size() != cycle_len) continue;  // collapsed; redraw
      if (cycle.back() == inverse_letter(cycle[0])) continue;
      if (!head.empty() && head.back() == inverse_letter(cycle[0])) continue;
      return BoundaryPoint(head, cycle);
    }
  }

  // A boundary point inside C_stem.
  BoundaryPoint random_point_in(const ReducedWord& stem) {
    for (;;) {
      ReducedWord cycle;
      unsigned prev = stem.empty() ? alphabet_.letter_count() : stem.back();
      const std::size_t cycle_len = 1 + rng_() % 3;
      for (std::size_t i = 0; i < cycle_len; ++i) {
        const Letter l = random_step(prev);
        cycle.push_reduced(l);
        prev = l;
      }
      if (cycle.size() != cycle_len) continue;
      if (cycle.back() == inverse_letter(cycle[0])) continue;
      if (!stem.empty() && stem.back() == inverse_letter(cycle[0])) continue;
      return BoundaryPoint(stem, cycle);
    }
  }

 private:
  Alphabet alphabet_;
  std::mt19937_64 rng_;
};

}  // namespace pslab
