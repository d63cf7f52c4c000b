#pragma once

#include <cstdint>
#include <stdexcept>

namespace pslab {

// Letters of the free group F_k: generator i is letter 2i, its inverse is
// letter 2i+1, so the involution is inv(l) = l ^ 1.  Generators print as
// 'a'..'z' and inverses as 'A'..'Z'.
using Letter = std::uint8_t;

inline constexpr Letter inverse_letter(Letter l) noexcept {
  return static_cast<Letter>(l ^ 1u);
}

class Alphabet {
 public:
  explicit Alphabet(unsigned rank) : k_(rank) {
    if (rank < 2 || rank > 26)
      throw std::invalid_argument("Alphabet: rank must be in [2, 26]");
  }

  unsigned rank() const noexcept { return k_; }
  unsigned letter_count() const noexcept { return 2 * k_; }
  bool valid(Letter l) const noexcept { return l < 2 * k_; }

  char letter_char(Letter l) const {
    if (!valid(l)) throw std::invalid_argument("Alphabet: letter out of range");
    const char base = (l & 1u) ? 'A' : 'a';
    return static_cast<char>(base + (l >> 1));
  }

  Letter parse_letter(char c) const {
    Letter l;
    if (c >= 'a' && c <= 'z')
      l = static_cast<Letter>(2 * (c - 'a'));
    else if (c >= 'A' && c <= 'Z')
      l = static_cast<Letter>(2 * (c - 'A') + 1);
    else
      throw std::invalid_argument("Alphabet: unknown letter character");
    if (!valid(l)) throw std::invalid_argument("Alphabet: letter beyond rank");
    return l;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  unsigned k_;
};

}  // namespace pslab
