#include "grsc/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grsc {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  std::set<std::string> seen;
  for (const auto& t : letters_) {
    if (t.empty()) throw InputError("empty alphabet token");
    if (t[0] == '-') throw InputError("alphabet token may not start with '-': " + t);
    if (!seen.insert(t).second) throw InputError("duplicate alphabet token: " + t);
  }
}

int Alphabet::index(const std::string& token) const {
  for (int i = 0; i < size(); ++i)
    if (letters_[i] == token) return i;
  return -1;
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.sign = -l.sign;
  return r;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == w[i].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  if (!is_reduced(w)) throw PreconditionFailed("cyclic_reduce: word not reduced");
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == w[j - 1].inverse()) {
    ++i;
    --j;
  }
  CyclicReduction r;
  r.conjugator.assign(w.begin(), w.begin() + i);
  r.core.assign(w.begin() + i, w.begin() + j);
  return r;
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word rotate(const Word& w, int k) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  k = ((k % n) + n) % n;
  Word r(w.begin() + k, w.end());
  r.insert(r.end(), w.begin(), w.begin() + k);
  return r;
}

Word canonical_cyclic(const Word& w) {
  if (!is_cyclically_reduced(w))
    throw PreconditionFailed("canonical_cyclic: word not cyclically reduced");
  if (w.empty()) return w;
  Word best = w;
  const Word inv = inverse(w);
  for (const Word* base : {&w, &inv}) {
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
      Word cand = rotate(*base, k);
      if (word_less(cand, best)) best = cand;
    }
  }
  return best;
}

Word parse_word(const Alphabet& a, const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok[0] == '-') {
      sign = -1;
      tok = tok.substr(1);
    }
    int idx = a.index(tok);
    if (idx < 0) throw InputError("unknown letter: " + tok);
    w.push_back({idx, sign});
  }
  return w;
}

std::string word_str(const Alphabet& a, const Word& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    if (l.sign < 0) s += '-';
    s += a.token(l.idx);
  }
  return s;
}

int minimal_period(const Word& w) {
  int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    if (rotate(w, p) == w) return p;
  }
  return n;
}

}  // namespace grsc
