#include "grsc/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grsc {

namespace {

void add_relator(Presentation& p, const Word& raw, int component,
                 const std::string& kind, std::set<Word>& seen) {
  Word w = free_reduce(raw);
  if (w.empty()) return;
  Word core = cyclic_reduce(w).core;
  if (core.empty()) return;
  Word canon = canonical_cyclic(core);
  if (!seen.insert(canon).second) return;
  p.relators.push_back(std::move(canon));
  p.provenance.push_back({component, kind});
}

}  // namespace

Presentation relators_simple_cycles(const LabelledGraph& g, std::int64_t budget) {
  Presentation p;
  p.alphabet = g.alphabet();
  std::set<Word> seen;
  for (const auto& c : simple_cycles(g, budget))
    add_relator(p, c.canonical_word, g.component_of(c.path.start),
                "simple-cycle", seen);
  return p;
}

Presentation relators_pi1(const LabelledGraph& g) {
  Presentation p;
  p.alphabet = g.alphabet();
  std::set<Word> seen;
  for (int c = 0; c < g.num_components(); ++c) {
    int base = g.component_vertices(c).front();
    for (const auto& gen : spanning_tree_generators(g, c, base))
      add_relator(p, gen.generator, c, "pi1", seen);
  }
  return p;
}

ConcisenessReport conciseness_and_powers(const std::vector<Word>& relators) {
  ConcisenessReport rep;
  std::vector<Word> canon;
  for (const auto& r : relators) {
    if (!is_cyclically_reduced(r))
      throw PreconditionFailed("conciseness: relator not cyclically reduced");
    canon.push_back(canonical_cyclic(r));
  }
  for (size_t i = 0; i < canon.size(); ++i)
    for (size_t j = i + 1; j < canon.size(); ++j)
      if (canon[i] == canon[j]) {
        rep.concise = false;
        rep.conjugate_pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
  for (size_t i = 0; i < relators.size(); ++i) {
    int p = minimal_period(relators[i]);
    int n = static_cast<int>(relators[i].size());
    if (n > 0 && p < n) {
      rep.concise = false;
      Word root(relators[i].begin(), relators[i].begin() + p);
      rep.proper_powers.push_back({static_cast<int>(i), std::move(root), n / p});
    }
  }
  return rep;
}

TietzeResult tietze_reduce(const LabelledGraph& g, std::int64_t budget) {
  // Working copy as token-labelled edge list; letters are dropped as their
  // unique edges go.
  std::vector<std::string> letters = g.alphabet().tokens();
  struct E {
    int src, dst;
    std::string letter;
  };
  std::vector<E> edges;
  for (const auto& e : g.edges())
    edges.push_back({e.src, e.dst, g.alphabet().token(e.letter)});
  int nv = g.num_vertices();
  std::vector<TietzeRemoval> audit;

  for (;;) {
    Alphabet a(letters);
    std::vector<Edge> es;
    for (const auto& e : edges) es.push_back({e.src, e.dst, a.index(e.letter)});
    LabelledGraph cur(a, nv, es);
    auto cycles = simple_cycles(cur, budget);

    // An edge is a piece iff its letter labels >= 2 edges (a single edge
    // admits one map per occurrence of its letter).
    std::map<std::string, int> letter_count;
    for (const auto& e : edges) ++letter_count[e.letter];
    std::set<int> on_cycle;
    for (const auto& c : cycles)
      for (int e : c.edges) on_cycle.insert(e);

    int victim = -1;
    Word evidence;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (!on_cycle.count(e) || letter_count[edges[e].letter] >= 2) continue;
      victim = e;
      for (const auto& c : cycles)
        if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end()) {
          evidence = c.canonical_word;
          break;
        }
      break;
    }
    if (victim < 0) {
      TietzeResult r{std::move(cur), std::move(audit)};
      return r;
    }
    audit.push_back({edges[victim].src, edges[victim].dst,
                     edges[victim].letter, evidence});
    std::string gone = edges[victim].letter;
    edges.erase(edges.begin() + victim);
    letters.erase(std::find(letters.begin(), letters.end(), gone));
  }
}

std::optional<FreeSubgroupWitness> free_subgroup_witness(const PieceIndex& idx,
                                                         std::int64_t budget) {
  const LabelledGraph& g = idx.graph();
  for (int e = 0; e < g.num_edges(); ++e)
    if (!is_piece(idx, {SignedLetter{g.edge(e).letter, 1}}).piece)
      throw PreconditionFailed(
          "free_subgroup_witness: edge is not a piece; reduce the graph first");
  auto cycles = disjoint_simple_cycles(g, budget);
  if (cycles.empty())
    throw PreconditionFailed("free_subgroup_witness: graph has no cycles");

  std::vector<FreeWitnessCycle> picked;
  for (const auto& c : cycles) {
    if (picked.size() == 4) break;
    std::vector<int> verts;
    int at = c.path.start;
    for (Step s : c.path.steps) {
      verts.push_back(at);
      at = g.step_target(s);
    }
    bool found = false;
    int L = static_cast<int>(verts.size());
    for (int i = 0; i < L && !found; ++i)
      for (int j = 0; j < L && !found; ++j) {
        if (i == j) continue;
        auto d = piece_distance(idx, verts[i], verts[j], false);
        if (d.distance && *d.distance == 4) {
          // Word read along the cycle orientation from x to y.
          Word arc;
          for (int m = i; m % L != j; ++m)
            arc.push_back(g.step_letter(c.path.steps[m % L]));
          picked.push_back({c.canonical_word, verts[i], verts[j], arc});
          found = true;
        }
      }
  }
  if (picked.size() < 4) return std::nullopt;

  FreeSubgroupWitness w;
  w.alpha = picked[0].arc_word;
  w.alpha.insert(w.alpha.end(), picked[1].arc_word.begin(),
                 picked[1].arc_word.end());
  w.beta = picked[2].arc_word;
  w.beta.insert(w.beta.end(), picked[3].arc_word.begin(),
                picked[3].arc_word.end());
  w.cycles = std::move(picked);
  return w;
}

Classification classify(const LabelledGraph& g, std::int64_t budget) {
  Classification cl;
  // Trivial iff every letter labels a length-1 loop.
  {
    std::set<int> loop_letters;
    for (const auto& e : g.edges())
      if (e.src == e.dst) loop_letters.insert(e.letter);
    if (static_cast<int>(loop_letters.size()) == g.alphabet().size()) {
      cl.verdict = Verdict::Trivial;
      cl.reason = "length-1 loop for every letter";
      return cl;
    }
  }

  TietzeResult red = tietze_reduce(g, budget);
  const LabelledGraph& gr = red.reduced;
  bool forest = simple_cycles(gr, budget).empty();
  int sprime = gr.alphabet().size();
  if (forest) {
    cl.verdict = Verdict::FreeOfRank;
    cl.rank = sprime;
    cl.reason = "reduced graph is a forest";
  } else if (sprime == 1) {
    cl.verdict = Verdict::InfiniteCyclic;
    cl.reason = "one surviving letter";
  } else {
    PieceIndex idx(gr);
    ConditionReport c7 = check_Cn(idx, 7, budget);
    if (c7.holds) {
      cl.verdict = Verdict::ContainsFreeSubgroup;
      cl.reason = "C(7) verified; neither trivial nor infinite cyclic";
      cl.witness = free_subgroup_witness(idx, budget);
      cl.theorem_only = !cl.witness.has_value();
    } else {
      cl.verdict = Verdict::Inconclusive;
      cl.reason = "C(7) not verified on the reduced graph";
    }
  }
  cl.reduction = std::move(red);
  return cl;
}

}  // namespace grsc
