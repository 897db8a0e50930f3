// Acceptance suite: twelve end-to-end criteria, one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.
#include <climits>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grsc/conditions.hpp"
#include "grsc/corpus.hpp"
#include "grsc/diagram.hpp"
#include "grsc/geometry.hpp"
#include "grsc/pieces.hpp"
#include "grsc/presentation.hpp"
#include "grsc/quotient.hpp"
#include "grsc/solver.hpp"
#include "grsc/word.hpp"
#include "helpers.hpp"

using namespace grsc;
using grsc_test::W;
using grsc_test::distinct_letter_cycle;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// ---- closed-path segmentation oracle (criterion 4) ----

int linear_segmentation(const PieceIndex& idx, const PathRef& p) {
  int pos = 0, count = 0;
  int L = p.length();
  while (pos < L) {
    PathRef suffix{idx.graph().step_source(p.steps[pos]),
                   {p.steps.begin() + pos, p.steps.end()}};
    int ext = max_piece_prefix(idx, suffix, false);
    if (ext == 0) return -1;
    pos += ext;
    ++count;
  }
  return count;
}

int closed_path_minimum(const PieceIndex& idx, int max_len) {
  const LabelledGraph& g = idx.graph();
  int best = INT_MAX;
  struct Frame {
    int at;
    std::vector<Step> steps;
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<Frame> stack{{s, {}}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (!f.steps.empty() && f.at == s) {
        Step first = f.steps.front(), last = f.steps.back();
        bool cyc_red = f.steps.size() == 1 ||
                       !(first.edge == last.edge && first.forward != last.forward);
        if (cyc_red) {
          int k = linear_segmentation(idx, PathRef{s, f.steps});
          if (k >= 0 && k < best) best = k;
        }
      }
      if (static_cast<int>(f.steps.size()) == max_len) continue;
      for (Step st : g.steps_at(f.at)) {
        if (!f.steps.empty()) {
          Step lastst = f.steps.back();
          if (st.edge == lastst.edge && st.forward != lastst.forward) continue;
        }
        Frame nf = f;
        nf.steps.push_back(st);
        nf.at = g.step_target(st);
        stack.push_back(nf);
      }
    }
  }
  return best;
}

int simple_cycle_minimum(const ConditionReport& rep) {
  int best = INT_MAX;
  for (const auto& s : rep.stats)
    if (!s.unsegmentable && s.min_segmentation < best) best = s.min_segmentation;
  return best;
}

// ---- diagram fixtures (criteria 6, 7) ----

Diagram cycle_face(const Alphabet& a, const Word& w) {
  Diagram d;
  d.alphabet = a;
  int n = static_cast<int>(w.size());
  d.num_vertices = n;
  d.faces.resize(1);
  for (int i = 0; i < n; ++i) {
    int u = i, v = (i + 1) % n;
    if (w[i].sign > 0) {
      d.edges.push_back({u, v, w[i].idx});
      d.faces[0].push_back({i, true});
    } else {
      d.edges.push_back({v, u, w[i].idx});
      d.faces[0].push_back({i, false});
    }
  }
  d.boundary = d.faces[0];
  d.base = 0;
  return d;
}

Diagram glue_two_faces(const Alphabet& a, const Word& w1, const Word& w2) {
  Diagram d;
  d.alphabet = a;
  int m0 = 0, m1 = 1;
  d.num_vertices = 2;
  if (w1[0].sign > 0)
    d.edges.push_back({m0, m1, w1[0].idx});
  else
    d.edges.push_back({m1, m0, w1[0].idx});
  auto arc = [&](int from, int to, const Word& w, std::vector<Dart>& walk) {
    int at = from;
    for (size_t i = 0; i < w.size(); ++i) {
      int nx = (i + 1 == w.size()) ? to : d.num_vertices++;
      if (w[i].sign > 0) {
        d.edges.push_back({at, nx, w[i].idx});
        walk.push_back({static_cast<int>(d.edges.size()) - 1, true});
      } else {
        d.edges.push_back({nx, at, w[i].idx});
        walk.push_back({static_cast<int>(d.edges.size()) - 1, false});
      }
      at = nx;
    }
  };
  std::vector<Dart> f1{{0, w1[0].sign > 0}};
  arc(m1, m0, Word(w1.begin() + 1, w1.end()), f1);
  std::vector<Dart> f2{{0, w1[0].sign <= 0}};
  arc(m0, m1, Word(w2.begin() + 1, w2.end()), f2);
  d.faces = {f1, f2};
  d.base = m0;
  for (size_t i = 1; i < f2.size(); ++i) d.boundary.push_back(f2[i]);
  for (size_t i = 1; i < f1.size(); ++i) d.boundary.push_back(f1[i]);
  return d;
}

Diagram polygon_pair(int n) {
  Alphabet a({"a"});
  return glue_two_faces(a, Word(n, SignedLetter{0, 1}),
                        cat({Word{SignedLetter{0, -1}},
                             Word(n - 1, SignedLetter{0, 1})}));
}

Diagram honeycomb3(bool subdivide_spoke) {
  Diagram d;
  d.alphabet = Alphabet({"a"});
  int c = 0;
  d.num_vertices = 1;
  std::vector<int> a(3), spoke(3);
  for (int i = 0; i < 3; ++i) {
    a[i] = d.num_vertices++;
    spoke[i] = static_cast<int>(d.edges.size());
    d.edges.push_back({c, a[i], 0});
  }
  std::vector<Dart> spoke_fwd(3), spoke_bwd(3);
  for (int i = 0; i < 3; ++i) {
    spoke_fwd[i] = {spoke[i], true};
    spoke_bwd[i] = {spoke[i], false};
  }
  if (subdivide_spoke) {
    int m = d.num_vertices++;
    d.edges[spoke[0]] = {c, m, 0};
    d.edges.push_back({m, a[0], 0});
  }
  std::vector<std::vector<Dart>> chain(3);
  for (int i = 0; i < 3; ++i) {
    int at = a[i];
    for (int k = 0; k < 4; ++k) {
      int to = (k == 3) ? a[(i + 1) % 3] : d.num_vertices++;
      d.edges.push_back({at, to, 0});
      chain[i].push_back({static_cast<int>(d.edges.size()) - 1, true});
      at = to;
    }
  }
  auto spoke_out = [&](int i) {
    std::vector<Dart> w{spoke_fwd[i]};
    if (subdivide_spoke && i == 0) w.push_back({3, true});
    return w;
  };
  auto spoke_in = [&](int i) {
    std::vector<Dart> w;
    if (subdivide_spoke && i == 0) w.push_back({3, false});
    w.push_back(spoke_bwd[i]);
    return w;
  };
  for (int i = 0; i < 3; ++i) {
    std::vector<Dart> f = spoke_out(i);
    for (Dart dt : chain[i]) f.push_back(dt);
    for (Dart dt : spoke_in((i + 1) % 3)) f.push_back(dt);
    d.faces.push_back(std::move(f));
  }
  d.base = a[0];
  for (int i = 0; i < 3; ++i)
    for (Dart dt : chain[i]) d.boundary.push_back(dt);
  return d;
}

// ---- word enumeration ----

void reduced_words(int letters, int n, Word& cur, std::vector<Word>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < letters; ++i)
    for (int s : {1, -1}) {
      SignedLetter l{i, s};
      if (!cur.empty() && cur.back() == l.inverse()) continue;
      cur.push_back(l);
      reduced_words(letters, n - 1, cur, out);
      cur.pop_back();
    }
}

std::vector<Word> reduced_words_up_to(int letters, int max_len, int min_len = 1) {
  std::vector<Word> out;
  Word cur;
  for (int n = min_len; n <= max_len; ++n) reduced_words(letters, n, cur, out);
  return out;
}

// Sound triviality oracle sample: reduced products of at most two conjugated
// relator variants, bounded conjugator length, filtered to length <= cap.
std::set<Word> conjugate_product_trivials(const Presentation& p, int conj_len,
                                          int cap) {
  std::vector<Word> variants;
  for (const auto& r : p.relators)
    for (int inv = 0; inv < 2; ++inv) {
      Word base = inv ? inverse(r) : r;
      for (size_t k = 0; k < r.size(); ++k) variants.push_back(rotate(base, k));
    }
  std::vector<Word> conjugators = reduced_words_up_to(p.alphabet.size(), conj_len, 0);
  conjugators.push_back({});
  std::set<Word> singles;
  for (const Word& u : conjugators)
    for (const Word& v : variants) {
      Word w = free_reduce(cat({u, v, inverse(u)}));
      if (!w.empty() && static_cast<int>(w.size()) <= cap + 4) singles.insert(w);
    }
  std::set<Word> out;
  for (const Word& w : singles)
    if (static_cast<int>(w.size()) <= cap) out.insert(w);
  for (const Word& w1 : singles)
    for (const Word& w2 : singles) {
      Word w = free_reduce(cat({w1, w2}));
      if (!w.empty() && static_cast<int>(w.size()) <= cap) out.insert(w);
    }
  return out;
}

// ---- criteria ----

Checker criterion1() {
  Checker c;
  auto g = gen_figure1();
  PieceIndex idx(g);
  c.expect(check_Cprime(idx, Rational(1, 6)).holds, "C'(1/6) fails");
  c.expect(check_Gr_prime(idx, Rational(1, 6)).holds, "Gr'(1/6) fails");
  auto c7 = check_Cn(idx, 7);
  c.expect(c7.holds, "C(7) fails");
  c.expect(check_Gr_n(idx, 7).holds, "Gr(7) fails");
  for (const auto& s : c7.stats)
    c.expect(s.max_piece_subpath == 1, "piece subpath longer than one edge");
  c.expect(girth_and_diameter(g, 0).girth == 7, "girth != 7");
  Presentation p = relators_pi1(g);
  std::set<Word> got(p.relators.begin(), p.relators.end());
  std::set<Word> want{canonical_cyclic(W(g.alphabet(), "a a -c -b -b -a -b")),
                      canonical_cyclic(W(g.alphabet(), "a a -b -c -c -a -c"))};
  c.expect(got == want, "fundamental group relators differ from the two cells");
  return c;
}

Checker criterion2() {
  Checker c;
  Alphabet abc({"a", "b", "c"});
  auto g = gen_classical(abc, {W(abc, "a a -c -b -b -a -b"),
                               W(abc, "a a -b -c -c -a -c")});
  PieceIndex idx(g);
  auto rep = check_Cprime(idx, Rational(1, 6));
  c.expect(!rep.holds, "classical cycles unexpectedly pass C'(1/6)");
  c.expect(rep.witness.has_value(), "no witness");
  if (rep.witness) {
    const Word& w = rep.witness->piece;
    c.expect(w.size() == 2, "witness piece is not two letters");
    c.expect(w.size() == 2 && w[0].idx == 0 && w[1].idx == 0 &&
                 w[0].sign == w[1].sign,
             "witness piece is not the doubled first letter");
    c.expect(is_piece(idx, w).piece, "witness is not actually a piece");
    c.expect(rep.witness->cycle_word.size() == 7, "witness cycle is not a 7-cycle");
  }
  return c;
}

Checker criterion3() {
  Checker c;
  for (int k = 3; k <= 20; ++k) {
    auto g = gen_cayley_cycle(k);
    PieceIndex idx(g);
    for (int m = 1; m <= k; ++m)
      c.expect(!is_piece(idx, Word(m, SignedLetter{0, 1})).essential,
               "essential piece on the " + std::to_string(k) + "-cycle");
    for (int n = 2; n <= 20; ++n)
      c.expect(check_Gr_n(idx, n).holds,
               "Gr(" + std::to_string(n) + ") fails on k=" + std::to_string(k));
    c.expect(!check_Cn(idx, 2).holds, "C(2) holds on k=" + std::to_string(k));
  }
  return c;
}

Checker criterion4() {
  Checker c;
  std::vector<LabelledGraph> graphs;
  graphs.push_back(gen_figure1());
  graphs.push_back(gen_cayley_cycle(5));
  graphs.push_back(gen_cayley_cycle(7));
  graphs.push_back(distinct_letter_cycle(6, "q"));
  {
    Alphabet ab({"a", "b"});
    graphs.push_back(gen_classical(ab, {W(ab, "a b -a -b")}));
  }
  for (const auto& g : graphs) {
    if (g.num_edges() > 12) {
      c.expect(false, "fixture exceeds 12 edges");
      continue;
    }
    PieceIndex idx(g);
    int brute = closed_path_minimum(idx, 2 * g.num_edges());
    int cyc = simple_cycle_minimum(check_Cn(idx, 2));
    c.expect(brute == cyc, "closed-path minimum differs from simple-cycle minimum");
  }
  return c;
}

Checker criterion5() {
  Checker c;
  // Linear bound over the verified Gr(7) graph.
  auto g = gen_figure1();
  {
    PieceIndex idx(g);
    if (!check_Gr_n(idx, 7).holds) {
      c.expect(false, "Gr(7) not verified");
      return c;
    }
  }
  Presentation p = relators_pi1(g);
  int checked = 0;
  for (const Word& w : conjugate_product_trivials(p, 2, 8)) {
    auto v = solve(w, p, CondTag::Gr7);
    c.expect(v.kind == WordVerdict::Kind::Trivial,
             "oracle-trivial word not solved: " + word_str(p.alphabet, w));
    c.expect(static_cast<std::int64_t>(v.derivation.size()) <=
                 8 * static_cast<std::int64_t>(w.size()),
             "derivation exceeds 8|w|");
    ++checked;
  }
  // Small cancellation keeps products of two conjugated relators above
  // length 8, so the oracle set is exactly the 28 relator variants.
  c.expect(checked >= 28, "too few Gr(7) oracle words");

  // Quadratic bound over a verified Gr(6) fixture.
  auto h = distinct_letter_cycle(6, "q");
  {
    PieceIndex idx(h);
    if (!check_Gr_n(idx, 6).holds) {
      c.expect(false, "Gr(6) not verified on the fixture");
      return c;
    }
  }
  Presentation q = relators_pi1(h);
  int checked6 = 0;
  for (const Word& w : conjugate_product_trivials(q, 2, 8)) {
    auto v = solve(w, q, CondTag::Gr6);
    c.expect(v.kind == WordVerdict::Kind::Trivial,
             "oracle-trivial word not solved on the Gr(6) fixture");
    c.expect(static_cast<std::int64_t>(v.derivation.size()) <=
                 3 * static_cast<std::int64_t>(w.size()) *
                     static_cast<std::int64_t>(w.size()),
             "derivation exceeds 3|w|^2");
    ++checked6;
  }
  c.expect(checked6 >= 12, "too few Gr(6) oracle words");
  return c;
}

Checker criterion6() {
  Checker c;
  // Diagrams produced by the solver.
  std::vector<Diagram> diagrams;
  {
    Presentation p = relators_pi1(gen_cayley_cycle(7));
    for (int k : {7, 14}) {
      Word w(k, SignedLetter{0, 1});
      auto v = solve(w, p, CondTag::Gr7);
      if (v.kind != WordVerdict::Kind::Trivial) {
        c.expect(false, "solver failed on a power of the cycle relator");
        return c;
      }
      diagrams.push_back(derivation_to_diagram(w, v.derivation, p));
    }
    auto g = gen_figure1();
    Presentation q = relators_pi1(g);
    Word u = W(g.alphabet(), "b -c");
    Word w = free_reduce(cat({u, q.relators[1], inverse(u)}));
    auto v = solve(w, q, CondTag::Gr7);
    if (v.kind != WordVerdict::Kind::Trivial) {
      c.expect(false, "solver failed on a conjugated relator");
      return c;
    }
    diagrams.push_back(derivation_to_diagram(w, v.derivation, q));
  }
  diagrams.push_back(honeycomb3(false));
  diagrams.push_back(polygon_pair(7));
  for (const Diagram& d : diagrams) {
    validate(d);
    // Whenever the preconditions admit a formula, it must hold.
    try {
      auto r = curvature_I(d);
      c.expect(r.satisfied, "curvature formula I fails on a valid diagram");
    } catch (const PreconditionFailed&) {
    }
    try {
      auto r = curvature_II(d);
      c.expect(r.satisfied, "curvature formula II fails on a valid diagram");
    } catch (const PreconditionFailed&) {
    }
  }
  // Violating near-diagrams are rejected by preconditions, not formulas.
  for (const Diagram& bad : {honeycomb3(true), polygon_pair(4)}) {
    bool rejected = false;
    try {
      curvature_II(bad);
    } catch (const PreconditionFailed&) {
      rejected = true;
    }
    c.expect(rejected, "a violating near-diagram slipped past the preconditions");
  }
  return c;
}

Checker criterion7() {
  Checker c;
  // Folding a freely trivial face: exact before/after.
  Alphabet abcd({"a", "b", "c", "d"});
  Word w = W(abcd, "a b -d d -b c -c -a");
  Diagram before = cycle_face(abcd, w);
  Diagram after = fold_trivial_face(before, 0);
  validate(after);
  c.expect(after.faces.empty(), "fold left a face");
  c.expect(after.boundary_word() == w, "fold changed the boundary word");
  c.expect(after.num_vertices == 5 && after.edges.size() == 4,
           "folded tree has wrong shape");
  c.expect(diagram_to_json(fold_trivial_face(before, 0)) == diagram_to_json(after),
           "fold is not deterministic");

  // Pinching a doubly-traversed relator.
  Alphabet sq_ab({"a", "b", "c", "d"});
  auto sq = gen_classical(sq_ab, {W(sq_ab, "a b c d")});
  PieceIndex sq_idx(sq);
  Word dbl = W(sq_ab, "a b c d a b c d");
  Diagram oct = cycle_face(sq_ab, dbl);
  Diagram pinched = pinch_vertices(oct, sq_idx, 0, 0, 4);
  validate(pinched);
  c.expect(pinched.faces.size() == 2, "pinch did not split the face");
  for (const auto& f : pinched.faces)
    c.expect(word_str(sq_ab, pinched.walk_word(f)) == "a b c d",
             "pinched face reads the wrong word");
  c.expect(pinched.boundary_word() == dbl, "pinch changed the boundary");

  // Mirror faces over one cell: the second branch with a freely trivial
  // boundary subdiagram.
  auto g = gen_figure1();
  PieceIndex idx(g);
  auto c7 = check_Cn(idx, 7);
  Word up = W(g.alphabet(), "a a -c -b -b -a -b");
  Word mirror = W(g.alphabet(), "-a b a b b c -a");
  Diagram d = glue_two_faces(g.alphabet(), up, mirror);
  validate(d);
  auto res = remove_originating_edges(d, idx, c7);
  c.expect(!res.merged, "mirror faces were merged");
  c.expect(res.trivial_boundary.has_value() && !res.trivial_boundary->empty() &&
               free_reduce(*res.trivial_boundary).empty(),
           "second branch boundary is not freely trivial");
  c.expect(!res.offending_faces.empty(), "no offending faces reported");
  return c;
}

Checker criterion8() {
  Checker c;
  // Bouquet of loops: every generator dies.
  {
    GraphBuilder b{Alphabet({"a", "b"})};
    b.begin_component("bouquet");
    int v = b.add_vertex();
    b.add_edge(v, v, 0);
    b.add_edge(v, v, 1);
    c.expect(classify(b.build()).verdict == Verdict::Trivial,
             "bouquet not Trivial");
  }
  {
    auto r = classify(distinct_letter_cycle(7, "q"));
    c.expect(r.verdict == Verdict::FreeOfRank && r.rank == 6,
             "7-distinct-letter cycle not free of rank 6");
  }
  {
    auto r = classify(gen_figure1());
    c.expect(r.verdict == Verdict::ContainsFreeSubgroup,
             "three-arc graph not ContainsFreeSubgroup");
    c.expect(r.reason.find("C(7)") != std::string::npos,
             "no C(7) evidence in the verdict");
  }
  {
    auto g = gen_cayley_cycle(7);
    auto r = classify(g);
    c.expect(r.verdict == Verdict::InfiniteCyclic, "one-letter cycle verdict");
    c.expect(r.reduction.has_value() &&
                 r.reduction->reduced.alphabet().size() == 1,
             "reduction did not end at a single letter");
  }
  return c;
}

Checker criterion9() {
  Checker c;
  auto g = gen_four_cycles();
  PieceIndex idx(g);
  auto wit = free_subgroup_witness(idx);
  if (!wit) {
    c.expect(false, "no witness emitted");
    return c;
  }
  c.expect(wit->cycles.size() == 4, "fewer than four cycles");
  std::set<int> comps;
  for (const auto& cy : wit->cycles) {
    comps.insert(g.component_of(cy.x));
    // Oracle: all pieces here are single edges, so piece distance is graph
    // distance; the pair must realize 4 both ways.
    c.expect(graph_distance(g, cy.x, cy.y) == 4, "graph distance is not 4");
    auto dp = piece_distance(idx, cy.x, cy.y, false);
    c.expect(dp.distance.has_value() && *dp.distance == 4,
             "piece distance is not 4");
  }
  c.expect(comps.size() == 4, "cycles share a component");

  // No nonempty reduced word in alpha, beta of length <= 6 is solver-Trivial.
  Presentation p = relators_pi1(g);
  NontrivialityCertifier::Options copts;
  copts.trials_per_degree = 20000;
  NontrivialityCertifier cert(p, copts);
  SolveOptions opts;
  opts.certifier = &cert;
  opts.node_budget = 20000;
  int checked = 0;
  for (const Word& sym : reduced_words_up_to(2, 6)) {
    Word w;
    for (SignedLetter l : sym) {
      Word part = l.idx == 0 ? wit->alpha : wit->beta;
      if (l.sign < 0) part = inverse(part);
      w.insert(w.end(), part.begin(), part.end());
    }
    w = free_reduce(w);
    c.expect(!w.empty(), "a word in alpha,beta freely cancels");
    auto v = solve(w, p, CondTag::Gr7, opts);
    c.expect(v.kind != WordVerdict::Kind::Trivial,
             "a word in alpha,beta is trivial");
    ++checked;
  }
  c.expect(checked > 1000, "too few words checked");
  return c;
}

Checker criterion10() {
  Checker c;
  auto g = gen_figure1();
  Presentation p = relators_pi1(g);
  NontrivialityCertifier::Options copts;
  copts.trials_per_degree = 60000;
  NontrivialityCertifier cert(p, copts);
  int radius = girth_and_diameter(g, 0).diameter + 8;
  auto rep = embed_component_certified(g, 0, p, cert, radius);
  c.expect(rep.certified, "embedding not certified");
  c.expect(rep.isometric, "embedding not isometric");
  c.expect(rep.injective, "embedding not injective");
  for (const auto& pr : rep.pairs)
    c.expect(pr.d_cayley == pr.d_graph, "a pairwise distance is distorted");

  // Injectivity of every Gr(6) fixture: all vertex-pair words are certified
  // nontrivial in the group.
  for (const auto& G : gen_figure5(6, 3)) {
    PieceIndex idx(G.graph);
    if (!check_Gr_n(idx, 6).holds) {
      c.expect(false, "a distortion-family graph fails Gr(6)");
      continue;
    }
    Presentation q = relators_pi1(G.graph);
    NontrivialityCertifier::Options o5;
    o5.trials_per_degree = 20000;
    NontrivialityCertifier qc(q, o5);
    const auto& verts = G.graph.component_vertices(0);
    bool injective = true;
    for (size_t a = 0; a < verts.size() && injective; ++a)
      for (size_t b = a + 1; b < verts.size() && injective; ++b) {
        Word uv = free_reduce(
            G.graph.label(*shortest_path(G.graph, verts[a], verts[b])));
        if (uv.empty() || !qc.certify(uv)) injective = false;
      }
    c.expect(injective, "a vertex pair could not be separated in the group");
  }
  return c;
}

Checker criterion11() {
  Checker c;
  auto fam = gen_figure5(6, 3);
  Rational prev;
  bool have_prev = false;
  for (int n = 1; n <= 3; ++n) {
    const auto& G = fam[n - 1];
    PieceIndex idx(G.graph);
    c.expect(check_Cn(idx, 6).holds, "C(6) fails");
    int f = (n + 1) * (n + 1);
    c.expect(graph_distance(G.graph, G.eta, G.nu) == f, "d(eta,nu) != f(n)");
    // The embedding is 1-Lipschitz, so d_Cay <= d_graph = f(n) <= |x_n|.
    int xlen = static_cast<int>(G.x.size());
    c.expect(f <= xlen, "Cayley bound above |x_n|");
    Rational ratio(xlen, f);
    if (have_prev) c.expect(ratio < prev, "|x_n|/f(n) not strictly decreasing");
    prev = ratio;
    have_prev = true;
  }
  return c;
}

Checker criterion12() {
  Checker c;
  auto gap = sparse_check({4, 16, 256, 65536}, Rational(3));
  c.expect(gap.gap_found, "no gap in the sparse list");
  c.expect(gap.witness_a.has_value(), "no gap witness");
  if (gap.gap_found && gap.witness_a) {
    c.expect(Rational(4) < *gap.witness_a && *gap.witness_a * Rational(3) < Rational(16),
             "gap witness inequalities fail");
  }
  c.expect(!sparse_check({7, 14, 28, 56}, Rational(3)).gap_found,
           "spurious gap in the doubling list");

  // Doubly exponential girths: 8, 64, 512 (cycle graphs, C = 1/2).
  GraphBuilder b{Alphabet({"a"})};
  for (int n : {8, 64, 512}) {
    b.begin_component("g" + std::to_string(n));
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = b.add_vertex();
    for (int i = 0; i < n; ++i) b.add_edge(vs[i], vs[(i + 1) % n], 0);
  }
  auto rep = lacunary_select(b.build(), "girth-arith");
  c.expect(rep.status == "all-selected", "selection stalled");
  c.expect(rep.selected.size() == 3, "wrong selection count");
  // Recompute every recorded inequality.
  std::int64_t max_prior = 0;
  for (size_t i = 0; i < rep.selected.size(); ++i) {
    if (i > 0) {
      Rational lhs(rep.selected[i].girth);
      Rational rhs = Rational(static_cast<std::int64_t>(i) + 1) * Rational(2) *
                     rep.C * Rational(max_prior);
      c.expect(lhs > rhs, "a recorded selection inequality fails");
    }
    if (rep.selected[i].girth > max_prior) max_prior = rep.selected[i].girth;
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Checker()> run;
  };
  std::vector<Entry> entries{
      {"example graph conditions and relators", criterion1},
      {"classical contrast fails C'(1/6)", criterion2},
      {"cycle graphs separate Gr from C", criterion3},
      {"closed-path segmentation oracle", criterion4},
      {"isoperimetric derivation bounds", criterion5},
      {"curvature validators", criterion6},
      {"diagram moves", criterion7},
      {"classification verdicts", criterion8},
      {"free-subgroup witness", criterion9},
      {"isometric and injective embeddings", criterion10},
      {"distortion family", criterion11},
      {"lacunary criteria", criterion12},
  };
  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    Checker c;
    try {
      c = entries[i].run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu: %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1,
                entries[i].name, c.ok ? "" : " -- ", c.ok ? "" : c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
