#include "pslab/word.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pslab {

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == inverse_letter(letters_[i - 1]))
      throw std::invalid_argument("ReducedWord: adjacent inverse letters");
}

ReducedWord ReducedWord::reduced_from(std::span<const Letter> letters) {
  ReducedWord w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) w.push_reduced(l);
  return w;
}

ReducedWord ReducedWord::prefix(std::size_t len) const {
  if (len > letters_.size())
    throw std::invalid_argument("ReducedWord::prefix: length exceeds word");
  ReducedWord w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(len));
  return w;
}

void ReducedWord::push_reduced(Letter l) {
  if (!letters_.empty() && letters_.back() == inverse_letter(l))
    letters_.pop_back();
  else
    letters_.push_back(l);
}

ReducedWord multiply(const ReducedWord& a, const ReducedWord& b) {
  const std::size_t c = cancellation_length(a, b);
  ReducedWord out;
  std::vector<Letter> letters;
  letters.reserve(a.size() + b.size() - 2 * c);
  letters.assign(a.letters().begin(), a.letters().end() - static_cast<std::ptrdiff_t>(c));
  letters.insert(letters.end(), b.letters().begin() + static_cast<std::ptrdiff_t>(c),
                 b.letters().end());
  return ReducedWord(std::move(letters));
}

ReducedWord invert(const ReducedWord& a) {
  std::vector<Letter> letters(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    letters[i] = inverse_letter(a[a.size() - 1 - i]);
  return ReducedWord(std::move(letters));
}

std::size_t cancellation_length(const ReducedWord& g, const ReducedWord& w) {
  const std::size_t n = std::min(g.size(), w.size());
  std::size_t c = 0;
  while (c < n && g[g.size() - 1 - c] == inverse_letter(w[c])) ++c;
  return c;
}

std::size_t common_prefix_len(const ReducedWord& u, const ReducedWord& v) {
  const std::size_t n = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  if (i == u.size() && i == v.size()) return kInfinitePrefix;
  return i;
}

bool is_prefix_of(const ReducedWord& p, const ReducedWord& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.letters().begin(), p.letters().end(), w.letters().begin());
}

double prefix_dist(std::size_t common_prefix) {
  if (common_prefix == kInfinitePrefix) return 0.0;
  return std::ldexp(1.0, -static_cast<int>(common_prefix));
}

bool lex_less(const ReducedWord& a, const ReducedWord& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

bool shortlex_less(const ReducedWord& a, const ReducedWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::string to_string(const Alphabet& alphabet, const ReducedWord& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (Letter l : w.letters()) s.push_back(alphabet.letter_char(l));
  return s;
}

ReducedWord parse_word(const Alphabet& alphabet, std::string_view text) {
  if (text.empty() || text == "1") return ReducedWord{};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(alphabet.parse_letter(c));
  return ReducedWord(std::move(letters));
}

}  // namespace pslab
