#pragma once

#include <cstddef>
#include <string>

#include "pslab/word.hpp"

namespace pslab {

// An eventually-periodic point of dF_k: the infinite reduced word
// head . cycle . cycle . ...  Stored in canonical form (minimal head,
// primitive cycle), which is unique per boundary point, so operator==
// decides equality of points.
class BoundaryPoint {
 public:
  // The concatenated infinite word must be reduced at both seams and the
  // cycle must be nonempty.  The representation is canonicalized.
  BoundaryPoint(ReducedWord head, ReducedWord cycle);

  // The purely periodic point cycle^infinity.
  static BoundaryPoint periodic(ReducedWord cycle);

  const ReducedWord& head() const noexcept { return head_; }
  const ReducedWord& cycle() const noexcept { return cycle_; }

  Letter letter_at(std::size_t i) const noexcept {
    if (i < head_.size()) return head_[i];
    return cycle_[(i - head_.size()) % cycle_.size()];
  }

  // The finite prefix of the infinite word.
  ReducedWord prefix(std::size_t len) const;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  ReducedWord head_;
  ReducedWord cycle_;
};

// The left action of g on dF_k, computed exactly.
BoundaryPoint act(const ReducedWord& g, const BoundaryPoint& x);

// kInfinitePrefix iff the two arguments are the same point of F_k U dF_k.
// A vertex and a boundary point are never the same point.
std::size_t common_prefix_len(const ReducedWord& u, const BoundaryPoint& x);
std::size_t common_prefix_len(const BoundaryPoint& x, const ReducedWord& u);
std::size_t common_prefix_len(const BoundaryPoint& x, const BoundaryPoint& y);

// The longest common prefix of two distinct points: the vertex where the
// geodesics from the basepoint separate, i.e. the point of the geodesic
// [x, y] closest to the basepoint.  Throws EqualPoints when x == y.
ReducedWord confluence(const ReducedWord& x, const ReducedWord& y);
ReducedWord confluence(const ReducedWord& x, const BoundaryPoint& y);
ReducedWord confluence(const BoundaryPoint& x, const ReducedWord& y);
ReducedWord confluence(const BoundaryPoint& x, const BoundaryPoint& y);

std::string to_string(const Alphabet& alphabet, const BoundaryPoint& x);

}  // namespace pslab
