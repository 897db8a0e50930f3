#ifndef GRSC_PRESENTATION_HPP
#define GRSC_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grsc/conditions.hpp"
#include "grsc/pieces.hpp"

namespace grsc {

struct RelatorProvenance {
  int component = 0;
  std::string kind;  // "simple-cycle" or "pi1"
};

/// A group presentation over the graph's alphabet. Relators are cyclically
/// reduced, canonicalized (lex-least over rotations and inversion) and
/// deduplicated.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  std::vector<RelatorProvenance> provenance;
};

/// One canonical relator per simple cycle class.
Presentation relators_simple_cycles(const LabelledGraph& g,
                                    std::int64_t budget = 1000000);

/// Relators read on spanning-tree free generating sets of the fundamental
/// group of each component, cyclically reduced and canonicalized.
Presentation relators_pi1(const LabelledGraph& g);

struct ConcisenessReport {
  bool concise = true;
  std::vector<std::pair<int, int>> conjugate_pairs;  // indices into input
  struct ProperPower {
    int index;
    Word root;
    int exponent;
  };
  std::vector<ProperPower> proper_powers;
};

/// Flags relator pairs conjugate up to inversion and relators that are
/// proper powers. Inputs must be cyclically reduced.
ConcisenessReport conciseness_and_powers(const std::vector<Word>& relators);

struct TietzeRemoval {
  int src, dst;
  std::string letter;
  Word cycle_word;  // simple cycle containing the removed non-piece edge
};

struct TietzeResult {
  LabelledGraph reduced;
  std::vector<TietzeRemoval> audit;
};

/// Fixpoint of the reduction rule: repeatedly remove the least edge that
/// lies on a simple cycle and is not a piece, together with its letter.
/// The defined group is unchanged (the removals are Tietze transformations).
TietzeResult tietze_reduce(const LabelledGraph& g,
                           std::int64_t budget = 1000000);

enum class Verdict {
  Trivial,
  InfiniteCyclic,
  FreeOfRank,
  ContainsFreeSubgroup,
  Inconclusive,
};

struct FreeWitnessCycle {
  Word cycle_word;
  int x, y;       // vertex pair at piece distance 4
  Word arc_word;  // word read along the cycle from x to y
};

struct FreeSubgroupWitness {
  Word alpha, beta;
  std::vector<FreeWitnessCycle> cycles;  // four pairwise disjoint cycles
};

struct Classification {
  Verdict verdict = Verdict::Inconclusive;
  int rank = 0;  // FreeOfRank only
  std::optional<FreeSubgroupWitness> witness;
  bool theorem_only = false;  // free subgroup guaranteed, witness not found
  std::string reason;
  std::optional<TietzeResult> reduction;
};

/// Searches for four pairwise vertex-disjoint simple cycles, each carrying a
/// vertex pair at piece distance 4; alpha and beta are products of the arc
/// words. Requires every edge to be a piece. Absent when no configuration
/// exists in the graph.
std::optional<FreeSubgroupWitness> free_subgroup_witness(
    const PieceIndex& idx, std::int64_t budget = 1000000);

/// The decision procedure: per-letter loops give Trivial; otherwise reduce,
/// then a forest gives FreeOfRank, a single surviving letter gives
/// InfiniteCyclic, and a verified C(7) graph contains a free subgroup.
Classification classify(const LabelledGraph& g, std::int64_t budget = 1000000);

}  // namespace grsc

#endif
