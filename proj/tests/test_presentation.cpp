#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "grsc/corpus.hpp"
#include "grsc/graph_io.hpp"
#include "grsc/presentation.hpp"
#include "grsc/solver.hpp"
#include "helpers.hpp"

using namespace grsc;
using grsc_test::W;
using grsc_test::distinct_letter_cycle;

namespace {

std::set<std::string> relator_strings(const Presentation& p) {
  std::set<std::string> out;
  for (const auto& r : p.relators) out.insert(word_str(p.alphabet, r));
  return out;
}

LabelledGraph loop_bouquet(const std::vector<std::string>& letters) {
  GraphBuilder b{Alphabet(letters)};
  b.begin_component("bouquet");
  int v = b.add_vertex();
  for (size_t i = 0; i < letters.size(); ++i) b.add_edge(v, v, static_cast<int>(i));
  return b.build();
}

}  // namespace

TEST_CASE("pi1 relators of the three-arc graph match the displayed pair") {
  auto g = gen_figure1();
  auto p = relators_pi1(g);
  CHECK(p.alphabet.size() == 3);
  // The two defining relators, as canonical forms. They coincide with the
  // canonical forms of a²c⁻¹b⁻²a⁻¹b⁻¹ and a²b⁻¹c⁻²a⁻¹c⁻¹.
  Word r1 = W(p.alphabet, "a a -c -b -b -a -b");
  Word r2 = W(p.alphabet, "a a -b -c -c -a -c");
  CHECK(relator_strings(p) ==
        std::set<std::string>{word_str(p.alphabet, canonical_cyclic(r1)),
                              word_str(p.alphabet, canonical_cyclic(r2))});
  CHECK(relator_strings(p) ==
        std::set<std::string>{"-a -a b a b b c", "-a -a c a c c b"});
  for (const auto& pr : p.provenance) CHECK(pr.kind == "pi1");
}

TEST_CASE("simple cycle relators") {
  auto g = gen_figure1();
  auto p = relators_simple_cycles(g);
  CHECK(relator_strings(p) ==
        std::set<std::string>{"-a -a b a b b c", "-a -a c a c c b",
                              "-a -b c a c c b -c -b -b"});
  // Loop graph: single relator of length 1.
  auto pl = relators_simple_cycles(loop_bouquet({"a"}));
  REQUIRE(pl.relators.size() == 1);
  CHECK(pl.relators[0].size() == 1);

  // Trees give the free presentation.
  GraphBuilder b{Alphabet({"a", "b"})};
  b.begin_component("t");
  int u = b.add_vertex(), v = b.add_vertex();
  b.add_edge(u, v, 0);
  CHECK(relators_simple_cycles(b.build()).relators.empty());
  CHECK(relators_pi1(b.build()).relators.empty());
}

TEST_CASE("pi1 of disjoint distinct-letter cycles") {
  // k single cycles over disjoint letters -> k relators.
  std::vector<std::string> letters;
  for (int i = 0; i < 12; ++i) letters.push_back("x" + std::to_string(i));
  GraphBuilder b{Alphabet(letters)};
  for (int c = 0; c < 3; ++c) {
    b.begin_component("k" + std::to_string(c));
    std::vector<int> vs(4);
    for (int i = 0; i < 4; ++i) vs[i] = b.add_vertex();
    for (int i = 0; i < 4; ++i) b.add_edge(vs[i], vs[(i + 1) % 4], 4 * c + i);
  }
  auto p = relators_pi1(b.build());
  CHECK(p.relators.size() == 3);
  std::set<int> comps;
  for (const auto& pr : p.provenance) comps.insert(pr.component);
  CHECK(comps == std::set<int>{0, 1, 2});
}

TEST_CASE("presentation invariants") {
  for (const auto& g : {gen_figure1(), gen_four_cycles()}) {
    for (const auto& p : {relators_pi1(g), relators_simple_cycles(g)}) {
      std::set<Word> seen;
      for (const auto& r : p.relators) {
        CHECK(is_cyclically_reduced(r));
        CHECK(canonical_cyclic(r) == r);
        CHECK(seen.insert(r).second);  // no duplicates
      }
      CHECK(p.provenance.size() == p.relators.size());
    }
  }
}

TEST_CASE("conciseness and proper powers") {
  Alphabet abc({"a", "b", "c"});
  auto rep = conciseness_and_powers({W(abc, "a b a b")});
  CHECK(!rep.concise);
  REQUIRE(rep.proper_powers.size() == 1);
  CHECK(rep.proper_powers[0].root == W(abc, "a b"));
  CHECK(rep.proper_powers[0].exponent == 2);

  auto rot = conciseness_and_powers({W(abc, "a b c"), W(abc, "b c a")});
  CHECK(!rot.concise);
  REQUIRE(rot.conjugate_pairs.size() == 1);
  CHECK(rot.conjugate_pairs[0] == std::pair<int, int>{0, 1});

  // Conjugate up to inversion is also flagged.
  auto inv = conciseness_and_powers({W(abc, "a b c"), W(abc, "-a -c -b")});
  CHECK(!inv.concise);
  CHECK(inv.conjugate_pairs.size() == 1);

  auto ok = conciseness_and_powers({W(abc, "a b c"), W(abc, "a c b")});
  CHECK(ok.concise);

  CHECK_THROWS_AS(conciseness_and_powers({W(abc, "a b -a")}),
                  PreconditionFailed);

  // The derived presentations of verified fixtures are concise.
  for (const auto& g : {gen_figure1(), gen_four_cycles()}) {
    auto p = relators_pi1(g);
    CHECK(conciseness_and_powers(p.relators).concise);
  }
}

TEST_CASE("tietze reduction") {
  // A cycle over 7 distinct letters loses one edge and letter, leaving a
  // tree on 6 letters.
  auto g = distinct_letter_cycle(7, "q");
  auto r = tietze_reduce(g);
  CHECK(r.reduced.alphabet().size() == 6);
  CHECK(r.reduced.num_edges() == 6);
  CHECK(simple_cycles(r.reduced).empty());
  REQUIRE(r.audit.size() == 1);
  CHECK(r.audit[0].letter == "q0");  // canonical order picks the least edge
  CHECK(r.audit[0].cycle_word.size() == 7);

  // The three-arc graph is already reduced: every letter labels 4 edges.
  auto f = tietze_reduce(gen_figure1());
  CHECK(f.audit.empty());
  auto fig1 = gen_figure1();
  CHECK(f.reduced.alphabet().tokens() == fig1.alphabet().tokens());
  REQUIRE(f.reduced.num_edges() == fig1.num_edges());
  for (int e = 0; e < fig1.num_edges(); ++e) {
    CHECK(f.reduced.edge(e).src == fig1.edge(e).src);
    CHECK(f.reduced.edge(e).dst == fig1.edge(e).dst);
    CHECK(f.reduced.edge(e).letter == fig1.edge(e).letter);
  }

  // Trees are fixed points.
  GraphBuilder b{Alphabet({"a"})};
  b.begin_component("t");
  int u = b.add_vertex(), v = b.add_vertex();
  b.add_edge(u, v, 0);
  CHECK(tietze_reduce(b.build()).audit.empty());
}

TEST_CASE("tietze audit replays bit-exactly") {
  for (const auto& g :
       {distinct_letter_cycle(7, "q"), gen_figure1(),
        distinct_letter_cycle(3, "z")}) {
    auto r = tietze_reduce(g);
    // Rebuild by applying the audit to the original graph.
    std::vector<std::string> letters = g.alphabet().tokens();
    struct E {
      int src, dst;
      std::string letter;
    };
    std::vector<E> edges;
    for (const auto& e : g.edges())
      edges.push_back({e.src, e.dst, g.alphabet().token(e.letter)});
    for (const auto& rem : r.audit) {
      auto it = std::find_if(edges.begin(), edges.end(), [&](const E& e) {
        return e.src == rem.src && e.dst == rem.dst && e.letter == rem.letter;
      });
      REQUIRE(it != edges.end());
      edges.erase(it);
      letters.erase(std::find(letters.begin(), letters.end(), rem.letter));
    }
    Alphabet a2(letters);
    std::vector<Edge> es;
    for (const auto& e : edges) es.push_back({e.src, e.dst, a2.index(e.letter)});
    LabelledGraph replay(a2, g.num_vertices(), es);
    CHECK(serialize_graph(replay) == serialize_graph(r.reduced));
  }
}

TEST_CASE("random removal orders reach consistent verdicts") {
  // The removal rule is order-dependent in principle; the structural verdict
  // (forest? surviving letter count?) must agree with the canonical order.
  auto g = distinct_letter_cycle(7, "q");
  auto canon = tietze_reduce(g);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::string> letters = g.alphabet().tokens();
    struct E {
      int src, dst;
      std::string letter;
    };
    std::vector<E> edges;
    for (const auto& e : g.edges())
      edges.push_back({e.src, e.dst, g.alphabet().token(e.letter)});
    for (;;) {
      Alphabet a(letters);
      std::vector<Edge> es;
      for (const auto& e : edges) es.push_back({e.src, e.dst, a.index(e.letter)});
      LabelledGraph cur(a, g.num_vertices(), es);
      auto cycles = simple_cycles(cur);
      std::map<std::string, int> count;
      for (const auto& e : edges) ++count[e.letter];
      std::set<int> on_cycle;
      for (const auto& c : cycles)
        for (int e : c.edges) on_cycle.insert(e);
      std::vector<int> eligible;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (on_cycle.count(e) && count[edges[e].letter] == 1)
          eligible.push_back(e);
      if (eligible.empty()) {
        CHECK(simple_cycles(cur).empty() ==
              simple_cycles(canon.reduced).empty());
        CHECK(a.size() == canon.reduced.alphabet().size());
        break;
      }
      int pick = eligible[rng() % eligible.size()];
      std::string gone = edges[pick].letter;
      edges.erase(edges.begin() + pick);
      letters.erase(std::find(letters.begin(), letters.end(), gone));
    }
  }
}

TEST_CASE("classification verdicts") {
  auto triv = classify(loop_bouquet({"a", "b"}));
  CHECK(triv.verdict == Verdict::Trivial);

  auto free6 = classify(distinct_letter_cycle(7, "q"));
  CHECK(free6.verdict == Verdict::FreeOfRank);
  CHECK(free6.rank == 6);

  auto zc = classify(gen_cayley_cycle(7));
  CHECK(zc.verdict == Verdict::InfiniteCyclic);

  auto fig = classify(gen_figure1());
  CHECK(fig.verdict == Verdict::ContainsFreeSubgroup);
  CHECK(fig.theorem_only);  // only one disjoint cycle: no witness
  CHECK(!fig.witness.has_value());

  // Commutator 4-cycle: non-forest, two letters, C(7) fails.
  Alphabet ab({"a", "b"});
  auto inc = classify(gen_classical(ab, {W(ab, "a b -a -b")}));
  CHECK(inc.verdict == Verdict::Inconclusive);
}

TEST_CASE("free subgroup witness on the four-cycle corpus") {
  auto g = gen_four_cycles();
  auto cl = classify(g);
  CHECK(cl.verdict == Verdict::ContainsFreeSubgroup);
  REQUIRE(cl.witness.has_value());
  CHECK(!cl.theorem_only);
  const auto& w = *cl.witness;
  REQUIRE(w.cycles.size() == 4);

  PieceIndex idx(g);
  std::set<int> comps;
  for (const auto& c : w.cycles) {
    comps.insert(g.component_of(c.x));
    auto d = piece_distance(idx, c.x, c.y, false);
    REQUIRE(d.distance.has_value());
    CHECK(*d.distance == 4);
    CHECK(!c.arc_word.empty());
    // The arc is readable from x and ends at y.
    auto p = read_path(g, c.x, c.arc_word);
    REQUIRE(p.has_value());
    CHECK(g.path_end(*p) == c.y);
  }
  CHECK(comps.size() == 4);  // pairwise vertex-disjoint (distinct components)
  Word alpha = w.cycles[0].arc_word;
  alpha.insert(alpha.end(), w.cycles[1].arc_word.begin(),
               w.cycles[1].arc_word.end());
  CHECK(w.alpha == alpha);
  Word beta = w.cycles[2].arc_word;
  beta.insert(beta.end(), w.cycles[3].arc_word.begin(),
              w.cycles[3].arc_word.end());
  CHECK(w.beta == beta);
}

TEST_CASE("free subgroup witness preconditions") {
  auto g = gen_figure1();
  PieceIndex idx(g);
  CHECK(!free_subgroup_witness(idx).has_value());  // one disjoint cycle only

  GraphBuilder b{Alphabet({"a"})};
  b.begin_component("e");
  int u = b.add_vertex(), v = b.add_vertex();
  b.add_edge(u, v, 0);
  auto single = b.build();
  PieceIndex is(single);
  CHECK_THROWS_AS(free_subgroup_witness(is), PreconditionFailed);
}

TEST_CASE("pi1 and simple cycle relators generate the same normal closure") {
  auto g = gen_figure1();
  auto p1 = relators_pi1(g);
  auto ps = relators_simple_cycles(g);
  for (const auto& r : p1.relators)
    CHECK(solve(r, ps, CondTag::Gr7).kind == WordVerdict::Kind::Trivial);
  for (const auto& r : ps.relators)
    CHECK(solve(r, p1, CondTag::Gr7).kind == WordVerdict::Kind::Trivial);
}

TEST_CASE("trivial verdict implies solver-trivial generators") {
  auto g = loop_bouquet({"a", "b"});
  REQUIRE(classify(g).verdict == Verdict::Trivial);
  auto p = relators_simple_cycles(g);
  for (const char* l : {"a", "b"})
    CHECK(solve(W(p.alphabet, l), p, CondTag::Gr7).kind ==
          WordVerdict::Kind::Trivial);
}
