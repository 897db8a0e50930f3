#ifndef GRSC_CORPUS_HPP
#define GRSC_CORPUS_HPP

#include <functional>
#include <vector>

#include "grsc/graph.hpp"

namespace grsc {

/// The 11-vertex C'(1/6) example graph over {a,b,c}: two cells glued along a
/// length-2 path, relators a a -c -b -b -a -b and a a -b -c -c -a -c.
LabelledGraph gen_figure1();

/// Disjoint union of cycle graphs, one per relator class (deduplicated up to
/// rotation and inversion). Relators must be cyclically reduced and nonempty.
LabelledGraph gen_classical(const Alphabet& alphabet,
                            const std::vector<Word>& relators);

/// Directed k-cycle, all edges carrying one letter: the Cayley graph of the
/// cyclic group of order k. k = 1 gives a loop.
LabelledGraph gen_cayley_cycle(int k, const std::string& letter = "a");

struct Figure5Graph {
  LabelledGraph graph;
  int eta;      // marked vertex eta_n
  int nu;       // marked vertex nu_n
  Word x, y, p;  // the three attaching words (p = b^{f(n)})
};

/// The distortion family: for each n, two theta cells over {a,b,s,t,u,v}.
/// Cell one joins A to eta by parallel arcs reading p_n = b^{f(n)} and
/// x_n = w_{(p-1)n+1} a ... a w_{pn} a; cell two joins eta to nu by arcs
/// reading p_n and y_n = v_{(p-1)n+1} a ... a v_{pn} a^{f(n)}.
/// Seeds w_k, v_k are Gray-code words over {s,t} and {u,v}.
std::vector<Figure5Graph> gen_figure5(int p, int n_max,
                                      std::function<int(int)> f = nullptr);

/// Four disjoint forward-oriented 14-cycles over 28 letters, each letter used
/// exactly twice with all cyclic bigrams distinct: a C(7) graph whose maximal
/// pieces are single edges, built as a free-subgroup witness fixture.
LabelledGraph gen_four_cycles();

}  // namespace grsc

#endif
