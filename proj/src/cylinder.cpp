#include "pslab/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pslab {
namespace {

// Sorted antichain + full sibling families merged upward.  Input may be any
// stem list; output is the unique canonical form of the union.
std::vector<ReducedWord> canonicalize(const Alphabet& alphabet, std::vector<ReducedWord> stems) {
  if (stems.empty()) return stems;
  std::sort(stems.begin(), stems.end(), lex_less);
  stems.erase(std::unique(stems.begin(), stems.end()), stems.end());

  // Antichain: in lex order an absorbing prefix is always the last kept stem.
  std::vector<ReducedWord> chain;
  chain.reserve(stems.size());
  for (auto& w : stems) {
    if (!chain.empty() && is_prefix_of(chain.back(), w)) continue;
    chain.push_back(std::move(w));
  }

  if (chain.size() == 1 && chain[0].empty()) return chain;

  // Merge complete sibling families, deepest level first; merged parents can
  // cascade into merges one level up.
  std::size_t max_depth = 0;
  for (const auto& w : chain) max_depth = std::max(max_depth, w.size());
  std::vector<std::vector<ReducedWord>> by_depth(max_depth + 1);
  for (auto& w : chain) by_depth[w.size()].push_back(std::move(w));

  std::vector<ReducedWord> out;
  for (std::size_t d = max_depth; d >= 1; --d) {
    auto& level = by_depth[d];
    std::sort(level.begin(), level.end(), lex_less);
    const std::size_t family = (d == 1) ? alphabet.letter_count() : alphabet.letter_count() - 1;
    std::size_t i = 0;
    while (i < level.size()) {
      std::size_t j = i + 1;
      while (j < level.size() &&
             std::equal(level[i].letters().begin(), level[i].letters().end() - 1,
                        level[j].letters().begin()))
        ++j;
      if (j - i == family)
        by_depth[d - 1].push_back(level[i].prefix(d - 1));
      else
        for (std::size_t t = i; t < j; ++t) out.push_back(level[t]);
      i = j;
    }
  }
  if (!by_depth[0].empty()) return {ReducedWord{}};
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

void extend_stem(const Alphabet& alphabet, std::vector<Letter>& buf, std::size_t depth,
                 std::vector<ReducedWord>& out) {
  if (buf.size() == depth) {
    out.emplace_back(buf);
    return;
  }
  for (Letter l = 0; l < alphabet.letter_count(); ++l) {
    if (!buf.empty() && l == inverse_letter(buf.back())) continue;
    buf.push_back(l);
    extend_stem(alphabet, buf, depth, out);
    buf.pop_back();
  }
}

struct ComplementWalker {
  const Alphabet& alphabet;
  const std::vector<ReducedWord>& stems;
  std::vector<ReducedWord> out;
  std::vector<Letter> prefix;

  // Stems in [lo, hi) all extend the current prefix of length d.
  void walk(std::size_t lo, std::size_t hi, std::size_t d) {
    if (lo < hi && stems[lo].size() == d) return;  // subtree fully covered
    std::size_t i = lo;
    for (Letter l = 0; l < alphabet.letter_count(); ++l) {
      if (d > 0 && l == inverse_letter(prefix.back())) continue;
      std::size_t j = i;
      while (j < hi && stems[j][d] == l) ++j;
      prefix.push_back(l);
      if (i == j)
        out.emplace_back(prefix);
      else
        walk(i, j, d + 1);
      prefix.pop_back();
      i = j;
    }
  }
};

}  // namespace

CylinderSet CylinderSet::whole_boundary() {
  CylinderSet s;
  s.stems_.push_back(ReducedWord{});
  return s;
}

CylinderSet CylinderSet::single(Cylinder c) {
  CylinderSet s;
  s.stems_.push_back(c.stem());
  return s;
}

CylinderSet CylinderSet::of(const Alphabet& alphabet, std::vector<ReducedWord> stems) {
  CylinderSet s;
  s.stems_ = canonicalize(alphabet, std::move(stems));
  return s;
}

bool CylinderSet::contains(const BoundaryPoint& x) const {
  for (const auto& w : stems_)
    if (common_prefix_len(w, x) == w.size()) return true;
  return false;
}

CylinderSet unite(const Alphabet& alphabet, const CylinderSet& a, const CylinderSet& b) {
  std::vector<ReducedWord> stems = a.stems();
  stems.insert(stems.end(), b.stems().begin(), b.stems().end());
  return CylinderSet::of(alphabet, std::move(stems));
}

CylinderSet intersect(const Alphabet& alphabet, const CylinderSet& a, const CylinderSet& b) {
  std::vector<ReducedWord> stems;
  for (const auto& u : a.stems())
    for (const auto& v : b.stems()) {
      if (is_prefix_of(u, v))
        stems.push_back(v);
      else if (is_prefix_of(v, u))
        stems.push_back(u);
    }
  return CylinderSet::of(alphabet, std::move(stems));
}

bool intersects(const CylinderSet& a, const CylinderSet& b) {
  for (const auto& u : a.stems())
    for (const auto& v : b.stems())
      if (is_prefix_of(u, v) || is_prefix_of(v, u)) return true;
  return false;
}

bool subset_of(const Alphabet& alphabet, const CylinderSet& a, const CylinderSet& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  for (const auto& u : a.stems()) {
    bool absorbed = false;
    std::vector<ReducedWord> inside;
    for (const auto& v : b.stems()) {
      if (is_prefix_of(v, u)) {
        absorbed = true;
        break;
      }
      if (is_prefix_of(u, v)) inside.push_back(v);
    }
    if (absorbed) continue;
    // The stems of b inside C_u cover it exactly when they merge back to u.
    CylinderSet merged = CylinderSet::of(alphabet, std::move(inside));
    if (!(merged.size() == 1 && merged.stems()[0] == u)) return false;
  }
  return true;
}

CylinderSet complement(const Alphabet& alphabet, const CylinderSet& s) {
  if (s.is_empty()) return CylinderSet::whole_boundary();
  if (s.is_whole()) return CylinderSet::empty_set();
  ComplementWalker walker{alphabet, s.stems(), {}, {}};
  walker.walk(0, s.stems().size(), 0);
  return CylinderSet::of(alphabet, std::move(walker.out));
}

CylinderSet act(const Alphabet& alphabet, const ReducedWord& g, const CylinderSet& s) {
  if (g.empty() || s.is_empty()) return s;
  if (s.is_whole()) return s;  // the action is a bijection of the boundary
  std::vector<ReducedWord> images;
  for (const auto& w : s.stems()) {
    const std::size_t c = cancellation_length(g, w);
    if (c < w.size()) {
      images.push_back(multiply(g, w));
      continue;
    }
    // Cancellation may swallow the whole stem; refine first so every piece
    // keeps at least one letter after cancelling against g.
    std::vector<ReducedWord> refined;
    std::vector<Letter> buf(w.letters().begin(), w.letters().end());
    extend_stem(alphabet, buf, g.size() + 1, refined);
    for (const auto& v : refined) images.push_back(multiply(g, v));
  }
  return CylinderSet::of(alphabet, std::move(images));
}

std::vector<ReducedWord> refine_to_depth(const Alphabet& alphabet, const CylinderSet& s,
                                         std::size_t depth) {
  std::vector<ReducedWord> out;
  for (const auto& w : s.stems()) {
    if (w.size() >= depth) {
      out.push_back(w);
      continue;
    }
    std::vector<Letter> buf(w.letters().begin(), w.letters().end());
    extend_stem(alphabet, buf, depth, out);
  }
  return out;
}

std::vector<ReducedWord> all_stems_of_depth(const Alphabet& alphabet, std::size_t depth) {
  std::vector<ReducedWord> out;
  std::vector<Letter> buf;
  extend_stem(alphabet, buf, depth, out);
  return out;
}

CylinderSet boundary_ball(const Alphabet& alphabet, const ReducedWord& center, unsigned m) {
  (void)alphabet;
  if (center.size() < m + 1) return CylinderSet::empty_set();
  return CylinderSet::single(Cylinder(center.prefix(m + 1)));
}

double set_diameter(const CylinderSet& s) {
  if (s.is_empty()) return 0.0;
  std::size_t min_cp = kInfinitePrefix;
  for (const auto& w : s.stems()) min_cp = std::min(min_cp, w.size());
  for (std::size_t i = 0; i + 1 < s.stems().size(); ++i)
    min_cp = std::min(min_cp, common_prefix_len(s.stems()[i], s.stems()[i + 1]));
  return prefix_dist(min_cp);
}

std::string to_string(const Alphabet& alphabet, const CylinderSet& s) {
  if (s.is_empty()) return "{}";
  std::string out = "{";
  for (std::size_t i = 0; i < s.stems().size(); ++i) {
    if (i) out += ", ";
    out += "C_";
    out += to_string(alphabet, s.stems()[i]);
  }
  out += "}";
  return out;
}

}  // namespace pslab
