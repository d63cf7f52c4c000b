#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pslab/alphabet.hpp"

namespace pslab {

// Sentinel for the common-prefix length of two equal points of F_k U dF_k.
inline constexpr std::size_t kInfinitePrefix = static_cast<std::size_t>(-1);

// A reduced word in the letters of F_k.  Doubles as a group element and as a
// vertex of the Cayley tree; the empty word is the identity / basepoint.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Letters must already form a reduced word.
  explicit ReducedWord(std::vector<Letter> letters);

  // Reduces the given letter sequence (cancels adjacent inverse pairs).
  static ReducedWord reduced_from(std::span<const Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter back() const noexcept { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  ReducedWord prefix(std::size_t len) const;

  // Appends one letter with cancellation; stays reduced.
  void push_reduced(Letter l);

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Group law: the reduction of the concatenation a.b.
ReducedWord multiply(const ReducedWord& a, const ReducedWord& b);

// Reversed word with inverted letters; multiply(a, invert(a)) == identity.
ReducedWord invert(const ReducedWord& a);

// Number of trailing letters of g cancelling against leading letters of w
// when forming g.w.
std::size_t cancellation_length(const ReducedWord& g, const ReducedWord& w);

// kInfinitePrefix iff u == v (equal vertices of the tree).
std::size_t common_prefix_len(const ReducedWord& u, const ReducedWord& v);

bool is_prefix_of(const ReducedWord& p, const ReducedWord& w);

// The compactifying metric d(u, v) = 2^-common_prefix_len, with d = 0 for
// equal points.
double prefix_dist(std::size_t common_prefix);

// Plain lexicographic order on letter sequences (prefixes sort first).
bool lex_less(const ReducedWord& a, const ReducedWord& b);

// Length, then lexicographic; the deterministic report order.
bool shortlex_less(const ReducedWord& a, const ReducedWord& b);

std::string to_string(const Alphabet& alphabet, const ReducedWord& w);

// Inverse of to_string; "1" (or "") parses as the identity.
ReducedWord parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace pslab
