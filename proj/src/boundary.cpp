#include "pslab/boundary.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pslab/errors.hpp"

namespace pslab {
namespace {

// Smallest period of the letter sequence, by direct divisor check; cycles
// are short so this is fine.
std::size_t primitive_period(std::span<const Letter> c) {
  const std::size_t n = c.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = (c[i] == c[i - p]);
    if (ok) return p;
  }
  return n;
}

}  // namespace

BoundaryPoint::BoundaryPoint(ReducedWord head, ReducedWord cycle)
    : head_(std::move(head)), cycle_(std::move(cycle)) {
  if (cycle_.empty())
    throw std::invalid_argument("BoundaryPoint: empty cycle");
  if (cycle_.size() > 1 && cycle_.back() == inverse_letter(cycle_[0]))
    throw std::invalid_argument("BoundaryPoint: cycle-cycle seam not reduced");
  if (!head_.empty() && head_.back() == inverse_letter(cycle_[0]))
    throw std::invalid_argument("BoundaryPoint: head-cycle seam not reduced");

  // Canonical form: primitive cycle, then the minimal head.  While the last
  // head letter equals the last cycle letter, that letter can be absorbed by
  // rotating the cycle right: H'.x.(C'.x)^inf = H'.(x.C')^inf.
  const std::size_t p = primitive_period(cycle_.letters());
  if (p != cycle_.size()) cycle_ = cycle_.prefix(p);
  std::vector<Letter> h(head_.letters().begin(), head_.letters().end());
  std::vector<Letter> c(cycle_.letters().begin(), cycle_.letters().end());
  while (!h.empty() && h.back() == c.back()) {
    h.pop_back();
    std::rotate(c.begin(), c.end() - 1, c.end());
  }
  head_ = ReducedWord(std::move(h));
  cycle_ = ReducedWord(std::move(c));
}

BoundaryPoint BoundaryPoint::periodic(ReducedWord cycle) {
  return BoundaryPoint(ReducedWord{}, std::move(cycle));
}

ReducedWord BoundaryPoint::prefix(std::size_t len) const {
  std::vector<Letter> letters(len);
  for (std::size_t i = 0; i < len; ++i) letters[i] = letter_at(i);
  return ReducedWord(std::move(letters));
}

BoundaryPoint act(const ReducedWord& g, const BoundaryPoint& x) {
  // Cancel the tail of g against the start of the infinite word; at most
  // |g| letters of x are consumed, so the result is again eventually
  // periodic with the same primitive cycle up to rotation.
  std::size_t j = 0;
  std::size_t remain = g.size();
  while (remain > 0 && g[remain - 1] == inverse_letter(x.letter_at(j))) {
    --remain;
    ++j;
  }
  std::vector<Letter> head(g.letters().begin(),
                           g.letters().begin() + static_cast<std::ptrdiff_t>(remain));
  const std::size_t hs = x.head().size();
  if (j <= hs) {
    head.insert(head.end(), x.head().letters().begin() + static_cast<std::ptrdiff_t>(j),
                x.head().letters().end());
    return BoundaryPoint(ReducedWord(std::move(head)), x.cycle());
  }
  const std::size_t r = (j - hs) % x.cycle().size();
  std::vector<Letter> cyc(x.cycle().letters().begin(), x.cycle().letters().end());
  std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(r), cyc.end());
  return BoundaryPoint(ReducedWord(std::move(head)), ReducedWord(std::move(cyc)));
}

std::size_t common_prefix_len(const ReducedWord& u, const BoundaryPoint& x) {
  std::size_t i = 0;
  while (i < u.size() && u[i] == x.letter_at(i)) ++i;
  return i;
}

std::size_t common_prefix_len(const BoundaryPoint& x, const ReducedWord& u) {
  return common_prefix_len(u, x);
}

std::size_t common_prefix_len(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x == y) return kInfinitePrefix;
  // Distinct eventually-periodic words must disagree within the pre-periods
  // plus one full joint period.
  const std::size_t bound = x.head().size() + y.head().size() +
                            2 * x.cycle().size() * y.cycle().size() + 2;
  for (std::size_t i = 0; i < bound; ++i)
    if (x.letter_at(i) != y.letter_at(i)) return i;
  throw std::logic_error("common_prefix_len: distinct points agree past the periodicity bound");
}

ReducedWord confluence(const ReducedWord& x, const ReducedWord& y) {
  const std::size_t cp = common_prefix_len(x, y);
  if (cp == kInfinitePrefix) throw EqualPoints("confluence: equal vertices");
  return x.prefix(cp);
}

ReducedWord confluence(const ReducedWord& x, const BoundaryPoint& y) {
  return x.prefix(common_prefix_len(x, y));
}

ReducedWord confluence(const BoundaryPoint& x, const ReducedWord& y) {
  return y.prefix(common_prefix_len(y, x));
}

ReducedWord confluence(const BoundaryPoint& x, const BoundaryPoint& y) {
  const std::size_t cp = common_prefix_len(x, y);
  if (cp == kInfinitePrefix) throw EqualPoints("confluence: equal boundary points");
  return x.prefix(cp);
}

std::string to_string(const Alphabet& alphabet, const BoundaryPoint& x) {
  std::string s;
  if (!x.head().empty()) s += to_string(alphabet, x.head());
  s += "(";
  s += to_string(alphabet, x.cycle());
  s += ")*";
  return s;
}

}  // namespace pslab
