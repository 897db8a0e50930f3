#ifndef GRSC_WORD_HPP
#define GRSC_WORD_HPP

#include <string>
#include <vector>

#include "grsc/errors.hpp"

namespace grsc {

/// The finite alphabet S. Letter order is fixed at construction and is the
/// base of every canonical order in the toolkit.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& token(int i) const { return letters_.at(i); }
  const std::vector<std::string>& tokens() const { return letters_; }
  /// Returns the index of a token, or -1.
  int index(const std::string& token) const;

 private:
  std::vector<std::string> letters_;
};

/// One letter of a word in M(S): an alphabet index with exponent +1 or -1.
struct SignedLetter {
  int idx = 0;
  int sign = 1;

  SignedLetter inverse() const { return {idx, -sign}; }
  friend bool operator==(SignedLetter a, SignedLetter b) {
    return a.idx == b.idx && a.sign == b.sign;
  }
  friend bool operator!=(SignedLetter a, SignedLetter b) { return !(a == b); }
  // Canonical order: alphabet index first, inverse before positive.
  friend bool operator<(SignedLetter a, SignedLetter b) {
    if (a.idx != b.idx) return a.idx < b.idx;
    return a.sign < b.sign;
  }
};

using Word = std::vector<SignedLetter>;

Word inverse(const Word& w);
bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// The unique reduced word freely equal to w.
Word free_reduce(const Word& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

/// Requires w reduced.
CyclicReduction cyclic_reduce(const Word& w);

/// Lexicographic comparison in the canonical letter order; on a shared
/// prefix the shorter word is smaller.
bool word_less(const Word& a, const Word& b);

Word rotate(const Word& w, int k);

/// Lex-least word over all rotations of w and of its inverse. Input must be
/// cyclically reduced. Conjugacy of cyclically reduced words up to inversion
/// reduces to equality of this form.
Word canonical_cyclic(const Word& w);

/// Whitespace-separated tokens, inverse marked by a '-' prefix.
Word parse_word(const Alphabet& a, const std::string& text);
std::string word_str(const Alphabet& a, const Word& w);

/// Minimal cyclic period of a cyclically reduced word; w is a proper power
/// iff the period is a proper divisor of |w|.
int minimal_period(const Word& w);

}  // namespace grsc

#endif
