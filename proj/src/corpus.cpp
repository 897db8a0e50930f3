#include "grsc/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace grsc {

LabelledGraph gen_figure1() {
  GraphBuilder b{Alphabet({"a", "b", "c"})};
  b.begin_component("fig1");
  // Top row X1..X4, middle Y1..Y3, bottom Z1..Z4.
  int X1 = b.add_vertex(), X2 = b.add_vertex(), X3 = b.add_vertex(),
      X4 = b.add_vertex();
  int Y1 = b.add_vertex(), Y2 = b.add_vertex(), Y3 = b.add_vertex();
  int Z1 = b.add_vertex(), Z2 = b.add_vertex(), Z3 = b.add_vertex(),
      Z4 = b.add_vertex();
  b.add_edge(Y1, X1, "b");
  b.add_edge(X1, X2, "a");
  b.add_edge(X2, X3, "b");
  b.add_edge(X3, X4, "b");
  b.add_edge(X4, Y3, "c");
  b.add_edge(Y1, Y2, "a");
  b.add_edge(Y2, Y3, "a");
  b.add_edge(Y1, Z1, "c");
  b.add_edge(Z1, Z2, "a");
  b.add_edge(Z2, Z3, "c");
  b.add_edge(Z3, Z4, "c");
  b.add_edge(Z4, Y3, "b");
  return b.build();
}

LabelledGraph gen_classical(const Alphabet& alphabet,
                            const std::vector<Word>& relators) {
  std::vector<Word> classes;
  std::set<Word> seen;
  for (const auto& r : relators) {
    if (r.empty()) throw PreconditionFailed("gen_classical: empty relator");
    if (!is_cyclically_reduced(r))
      throw PreconditionFailed("gen_classical: relator not cyclically reduced");
    Word canon = canonical_cyclic(r);
    if (seen.insert(canon).second) classes.push_back(canon);
  }
  GraphBuilder b{alphabet};
  for (size_t i = 0; i < classes.size(); ++i) {
    b.begin_component("r" + std::to_string(i));
    const Word& w = classes[i];
    int n = static_cast<int>(w.size());
    std::vector<int> vs(n);
    for (int j = 0; j < n; ++j) vs[j] = b.add_vertex();
    for (int j = 0; j < n; ++j) {
      int u = vs[j], v = vs[(j + 1) % n];
      if (w[j].sign > 0)
        b.add_edge(u, v, w[j].idx);
      else
        b.add_edge(v, u, w[j].idx);
    }
  }
  if (classes.empty()) b.begin_component("empty");
  return b.build();
}

LabelledGraph gen_cayley_cycle(int k, const std::string& letter) {
  if (k < 1) throw PreconditionFailed("gen_cayley_cycle: k must be >= 1");
  GraphBuilder b{Alphabet({letter})};
  b.begin_component("cyc" + std::to_string(k));
  std::vector<int> vs(k);
  for (int i = 0; i < k; ++i) vs[i] = b.add_vertex();
  for (int i = 0; i < k; ++i) b.add_edge(vs[i], vs[(i + 1) % k], 0);
  return b.build();
}

namespace {

// Gray-code seed word number k over a two-letter sub-alphabet, width bits.
Word word_of_bits(int g, int bits, int lo, int hi) {
  Word w;
  for (int i = bits - 1; i >= 0; --i)
    w.push_back({(g >> i) & 1 ? hi : lo, 1});
  return w;
}

int gray(int k) { return k ^ (k >> 1); }

// A graph whose arc carries a single seed word (the n = 1 case) needs a
// seed with pairwise distinct internal bigrams: a repeated bigram is a
// length-2 piece, and the short cycle of the first graph cannot spare the
// segmentation slack. Exactly four width-5 words qualify (the Eulerian
// paths of the two-letter de Bruijn graph).
constexpr int kBigramDistinct[] = {0b00110, 0b01100, 0b11001, 0b10011};

}  // namespace

std::vector<Figure5Graph> gen_figure5(int p, int n_max, std::function<int(int)> f) {
  if (p < 2 || n_max < 1) throw PreconditionFailed("gen_figure5: bad parameters");
  if (!f) f = [](int n) { return (n + 1) * (n + 1); };
  Alphabet alphabet({"a", "b", "s", "t", "u", "v"});
  const int a = 0, bb = 1, s = 2, t = 3, u = 4, v = 5;
  int bits = 5;
  while ((1 << bits) <= p * n_max) ++bits;

  // Seed pattern per index: Gray codes, except that singleton seeds (the
  // n = 1 arcs) take a bigram-distinct pattern unused by any other index,
  // so the first graph keeps its small cancellation slack.
  auto seed_bits = [&](int k) { return gray(k); };
  int singleton_bits = gray(p);
  if (bits == 5) {
    std::set<int> used;
    for (int n = 2; n <= n_max; ++n)
      for (int k = (p - 1) * n + 1; k <= p * n; ++k) used.insert(gray(k));
    for (int cand : kBigramDistinct)
      if (!used.count(cand)) {
        singleton_bits = cand;
        break;
      }
  }

  std::vector<Figure5Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    int fn = f(n);
    if (fn < 1) throw PreconditionFailed("gen_figure5: f(n) must be positive");
    Word pn(fn, SignedLetter{bb, 1});
    Word x, y;
    for (int k = (p - 1) * n + 1; k <= p * n; ++k) {
      int pat = n == 1 ? singleton_bits : seed_bits(k);
      Word wk = word_of_bits(pat, bits, s, t);
      x.insert(x.end(), wk.begin(), wk.end());
      x.push_back({a, 1});
      Word vk = word_of_bits(pat, bits, u, v);
      if (!y.empty()) y.push_back({a, 1});
      y.insert(y.end(), vk.begin(), vk.end());
    }
    for (int i = 0; i < fn; ++i) y.push_back({a, 1});

    GraphBuilder b{alphabet};
    b.begin_component("gamma" + std::to_string(n));
    int A = b.add_vertex();
    auto arc = [&](int from, int to, const Word& w) {
      int at = from;
      for (size_t i = 0; i < w.size(); ++i) {
        int next = (i + 1 == w.size()) ? to : b.add_vertex();
        if (w[i].sign > 0)
          b.add_edge(at, next, w[i].idx);
        else
          b.add_edge(next, at, w[i].idx);
        at = next;
      }
    };
    int eta = b.add_vertex();
    int nu = b.add_vertex();
    arc(A, eta, pn);
    arc(A, eta, x);
    arc(eta, nu, pn);
    arc(eta, nu, y);
    out.push_back({b.build(), eta, nu, x, y, pn});
  }
  return out;
}

LabelledGraph gen_four_cycles() {
  std::vector<std::string> letters;
  for (int i = 1; i <= 28; ++i) letters.push_back("l" + std::to_string(i));
  Alphabet alphabet(letters);
  GraphBuilder b{alphabet};
  auto cycle = [&](const std::string& name, const std::vector<int>& ls) {
    b.begin_component(name);
    int n = static_cast<int>(ls.size());
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = b.add_vertex();
    for (int i = 0; i < n; ++i) b.add_edge(vs[i], vs[(i + 1) % n], ls[i] - 1);
  };
  std::vector<int> c1, c2, c3, c4;
  for (int i = 1; i <= 14; ++i) c1.push_back(i);
  for (int i = 15; i <= 28; ++i) c2.push_back(i);
  for (int i = 1; i <= 27; i += 2) c3.push_back(i);
  for (int i = 2; i <= 28; i += 2) c4.push_back(i);
  cycle("c1", c1);
  cycle("c2", c2);
  cycle("c3", c3);
  cycle("c4", c4);
  return b.build();
}

}  // namespace grsc
