#include "grsc/quotient.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace grsc {

namespace {

std::vector<std::int64_t> exponent_vector(int letters, const Word& w) {
  std::vector<std::int64_t> v(letters, 0);
  for (SignedLetter l : w) v[l.idx] += l.sign;
  return v;
}

using Perm = std::vector<int>;

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm evaluate(const std::vector<Perm>& images, const Word& w, int n) {
  Perm acc = perm_identity(n);
  for (SignedLetter l : w) {
    const Perm img = l.sign > 0 ? images[l.idx] : perm_inverse(images[l.idx]);
    Perm next(n);
    for (int i = 0; i < n; ++i) next[i] = img[acc[i]];
    acc = std::move(next);
  }
  return acc;
}

// Substitutes letter x by def (and x^-1 by def^-1), freely reducing.
Word substitute(const Word& w, int x, const Word& def) {
  Word out;
  Word def_inv = inverse(def);
  for (SignedLetter l : w) {
    const Word* rep = nullptr;
    if (l.idx == x) rep = l.sign > 0 ? &def : &def_inv;
    if (rep)
      out.insert(out.end(), rep->begin(), rep->end());
    else
      out.push_back(l);
  }
  return free_reduce(out);
}

}  // namespace

NontrivialityCertifier::NontrivialityCertifier(const Presentation& p,
                                               Options opts)
    : letters_(p.alphabet.size()) {
  // Abelianization: triangular basis of the relator exponent lattice.
  {
    std::vector<std::vector<std::int64_t>> cols;
    for (const auto& r : p.relators) {
      auto v = exponent_vector(letters_, r);
      if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }))
        cols.push_back(std::move(v));
    }
    for (int row = 0; row < letters_; ++row) {
      for (;;) {
        std::vector<int> nz;
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
          if (cols[c][row] != 0) nz.push_back(c);
        if (nz.size() <= 1) break;
        // Euclid on the two columns with smallest lead magnitude.
        std::sort(nz.begin(), nz.end(), [&](int a, int b) {
          return std::abs(cols[a][row]) < std::abs(cols[b][row]);
        });
        int a = nz[0], b = nz[1];
        std::int64_t q = cols[b][row] / cols[a][row];
        for (int i = 0; i < letters_; ++i) cols[b][i] -= q * cols[a][i];
      }
      for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        if (cols[c][row] != 0) {
          if (cols[c][row] < 0)
            for (auto& x : cols[c]) x = -x;
          lattice_.push_back(cols[c]);
          pivot_row_.push_back(row);
          cols.erase(cols.begin() + c);
          break;
        }
    }
  }

  // Finite quotients: eliminate letters occurring exactly once in some
  // relator (a Tietze move), then hunt for symmetric-group homs by random
  // assignment of the surviving letters.
  std::vector<Word> relators = p.relators;
  std::vector<std::pair<int, Word>> defs;  // letter -> defining word
  std::set<int> eliminated;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t ri = 0; ri < relators.size() && !changed; ++ri) {
      std::map<int, int> count;
      for (SignedLetter l : relators[ri]) ++count[l.idx];
      for (SignedLetter l : relators[ri]) {
        if (count[l.idx] != 1 || eliminated.count(l.idx)) continue;
        // Rotate the occurrence to the front: r = x^s . rest = 1.
        int pos = 0;
        while (relators[ri][pos].idx != l.idx) ++pos;
        Word rot = rotate(relators[ri], pos);
        Word rest(rot.begin() + 1, rot.end());
        Word def = rot[0].sign > 0 ? inverse(rest) : rest;
        // Keep all defs free of eliminated letters.
        for (auto& [y, dw] : defs) dw = substitute(dw, l.idx, def);
        std::vector<Word> next;
        for (size_t rj = 0; rj < relators.size(); ++rj) {
          if (rj == ri) continue;
          Word s = substitute(relators[rj], l.idx, def);
          if (!s.empty()) next.push_back(std::move(s));
        }
        relators = std::move(next);
        defs.push_back({l.idx, std::move(def)});
        eliminated.insert(l.idx);
        changed = true;
        break;
      }
    }
  }

  std::mt19937 rng(opts.seed);
  // Cap per degree, not just in total: low degrees yield homs by the
  // thousand but separate few elements.
  int per_degree = std::max(1, opts.max_homs / std::max(1, opts.max_degree - 2));
  for (int n = 3; n <= opts.max_degree; ++n) {
    int found_here = 0;
    for (int t = 0; t < opts.trials_per_degree; ++t) {
      if (static_cast<int>(homs_.size()) >= opts.max_homs ||
          found_here >= per_degree)
        break;
      std::vector<Perm> images(letters_);
      for (int x = 0; x < letters_; ++x) {
        if (eliminated.count(x)) continue;
        images[x] = perm_identity(n);
        std::shuffle(images[x].begin(), images[x].end(), rng);
      }
      bool ok = true;
      for (const auto& r : relators)
        if (ok && evaluate(images, r, n) != perm_identity(n)) ok = false;
      if (!ok) continue;
      // Fill eliminated letters from their defining words (which only use
      // surviving letters).
      for (const auto& [x, def] : defs) images[x] = evaluate(images, def, n);
      // Sanity: every original relator dies.
      for (const auto& r : p.relators)
        if (ok && evaluate(images, r, n) != perm_identity(n)) ok = false;
      if (!ok) continue;
      // Skip homs with trivial image of everything (useless).
      bool all_id = true;
      for (int x = 0; x < letters_; ++x)
        if (!images[x].empty() && images[x] != perm_identity(n)) all_id = false;
      if (all_id) continue;
      homs_.push_back(std::move(images));
      hom_degree_.push_back(n);
      ++found_here;
    }
  }
}

bool NontrivialityCertifier::in_lattice(std::vector<std::int64_t> v) const {
  for (size_t i = 0; i < lattice_.size(); ++i) {
    int row = pivot_row_[i];
    if (v[row] % lattice_[i][row] != 0) return false;
    std::int64_t q = v[row] / lattice_[i][row];
    for (int j = 0; j < letters_; ++j) v[j] -= q * lattice_[i][j];
  }
  return std::all_of(v.begin(), v.end(),
                     [](std::int64_t x) { return x == 0; });
}

std::optional<NontrivialityCertifier::Certificate>
NontrivialityCertifier::certify(const Word& w) const {
  if (w.empty()) return std::nullopt;
  auto v = exponent_vector(letters_, w);
  if (!in_lattice(v))
    return Certificate{"abelianization",
                       "exponent vector outside the relator lattice"};
  for (size_t h = 0; h < homs_.size(); ++h) {
    int n = hom_degree_[h];
    std::vector<Perm> images = homs_[h];
    for (int x = 0; x < letters_; ++x)
      if (images[x].empty()) images[x] = perm_identity(n);
    if (evaluate(images, w, n) != perm_identity(n))
      return Certificate{"finite-quotient",
                         "nonidentity image in S_" + std::to_string(n) +
                             " quotient #" + std::to_string(h)};
  }
  return std::nullopt;
}

}  // namespace grsc
