#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check: word reduction by repeated scanning, set arithmetic by
// pointwise membership of representative boundary points, and scalar
// root-finding for the transfer-matrix characteristic equations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "pslab/boundary.hpp"
#include "pslab/cylinder.hpp"
#include "pslab/word.hpp"

namespace pslab::oracle {

// Reduction by repeated full scans; quadratic and obviously correct.
inline std::vector<Letter> naive_reduce(std::vector<Letter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i + 1] == inverse_letter(letters[i])) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

inline ReducedWord naive_multiply(const ReducedWord& a, const ReducedWord& b) {
  std::vector<Letter> cat(a.letters().begin(), a.letters().end());
  cat.insert(cat.end(), b.letters().begin(), b.letters().end());
  return ReducedWord(naive_reduce(std::move(cat)));
}

// A representative boundary point deep inside C_stem: continue the stem with
// a fixed non-backtracking pattern.
inline BoundaryPoint representative_point(const Alphabet& alphabet, const ReducedWord& stem) {
  // Pick a single-letter cycle that does not cancel against the stem end.
  for (Letter l = 0; l < alphabet.letter_count(); ++l) {
    if (!stem.empty() && l == inverse_letter(stem.back())) continue;
    return BoundaryPoint(stem, ReducedWord({l}));
  }
  throw std::logic_error("representative_point: no admissible cycle letter");
}

// All representative points of the depth-d cylinders; two cylinder sets over
// dF_k agree iff they agree on every depth-d representative, provided both
// sets only involve stems of depth <= d.
inline std::vector<BoundaryPoint> depth_probes(const Alphabet& alphabet, std::size_t depth) {
  std::vector<BoundaryPoint> probes;
  for (const auto& stem : all_stems_of_depth(alphabet, depth)) {
    // Two distinct continuations per stem guard against accidental
    // agreement at the stem itself.
    for (Letter l = 0; l < alphabet.letter_count(); ++l) {
      if (l == inverse_letter(stem.back())) continue;
      probes.emplace_back(stem, ReducedWord({l}));
    }
  }
  return probes;
}

// Pointwise comparison of a cylinder set against a membership predicate.
inline bool matches_membership(const Alphabet& alphabet, const CylinderSet& set,
                               const std::function<bool(const BoundaryPoint&)>& member,
                               std::size_t probe_depth) {
  for (const auto& x : depth_probes(alphabet, probe_depth))
    if (set.contains(x) != member(x)) return false;
  return true;
}

// Bisection for a continuous strictly monotone function with a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-13) {
  double flo = f(lo);
  if (!(flo * f(hi) <= 0.0)) throw std::logic_error("oracle::bisect: no sign change");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) * flo > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace pslab::oracle
