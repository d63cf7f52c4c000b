#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pslab/boundary.hpp"
#include "pslab/word.hpp"

namespace pslab {

// The cylinder C_w = { x in dF_k : x starts with w }; the empty stem denotes
// all of the boundary.
class Cylinder {
 public:
  Cylinder() = default;
  explicit Cylinder(ReducedWord stem) : stem_(std::move(stem)) {}

  const ReducedWord& stem() const noexcept { return stem_; }
  std::size_t depth() const noexcept { return stem_.size(); }
  bool is_all() const noexcept { return stem_.empty(); }

  bool contains(const BoundaryPoint& x) const {
    return common_prefix_len(stem_, x) == stem_.size();
  }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;

 private:
  ReducedWord stem_;
};

// A finite union of cylinders in canonical form: a lexicographically sorted
// antichain of stems (no stem is a prefix of another) with every complete
// sibling family merged into its parent.  Value-equal sets have identical
// canonical forms, so operator== decides set equality.
class CylinderSet {
 public:
  CylinderSet() = default;  // the empty set

  static CylinderSet empty_set() { return CylinderSet{}; }
  static CylinderSet whole_boundary();
  static CylinderSet single(Cylinder c);
  static CylinderSet of(const Alphabet& alphabet, std::vector<ReducedWord> stems);

  bool is_empty() const noexcept { return stems_.empty(); }
  bool is_whole() const noexcept { return stems_.size() == 1 && stems_[0].empty(); }
  const std::vector<ReducedWord>& stems() const noexcept { return stems_; }
  std::size_t size() const noexcept { return stems_.size(); }

  bool contains(const BoundaryPoint& x) const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

 private:
  std::vector<ReducedWord> stems_;
};

CylinderSet unite(const Alphabet& alphabet, const CylinderSet& a, const CylinderSet& b);
CylinderSet intersect(const Alphabet& alphabet, const CylinderSet& a, const CylinderSet& b);
bool intersects(const CylinderSet& a, const CylinderSet& b);
bool subset_of(const Alphabet& alphabet, const CylinderSet& a, const CylinderSet& b);

// Exact complement in dF_k, via sibling expansion along each stem.
CylinderSet complement(const Alphabet& alphabet, const CylinderSet& s);

// Exact image g . s.  For a single cylinder C_w: when the cancellation
// between g and w does not consume all of w the image is C_{g.w}; otherwise
// C_w is first refined to depth |g|+1.
CylinderSet act(const Alphabet& alphabet, const ReducedWord& g, const CylinderSet& s);

// All reduced extensions of the stems to the given depth (stems already at
// least that deep are kept).
std::vector<ReducedWord> refine_to_depth(const Alphabet& alphabet, const CylinderSet& s,
                                         std::size_t depth);

// All reduced words of the given length (the depth-d cylinder stems).
std::vector<ReducedWord> all_stems_of_depth(const Alphabet& alphabet, std::size_t depth);

// The trace on dF_k of the open metric ball B_{2^-m}(center) around a vertex:
// { x : common_prefix_len(x, center) >= m+1 }.  A single cylinder when
// |center| >= m+1 and empty otherwise.
CylinderSet boundary_ball(const Alphabet& alphabet, const ReducedWord& center, unsigned m);

// sup of d(x, y) over the set: 2^-(min pairwise stem agreement), and
// 2^-depth for a single cylinder.  Zero for the empty set.
double set_diameter(const CylinderSet& s);

std::string to_string(const Alphabet& alphabet, const CylinderSet& s);

}  // namespace pslab
