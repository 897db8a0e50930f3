#ifndef GRSC_PIECES_HPP
#define GRSC_PIECES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "grsc/graph.hpp"

namespace grsc {

/// Piece and automorphism queries over one graph. Holds a reference to the
/// graph; the graph must outlive the index. Immutable once built.
class PieceIndex {
 public:
  explicit PieceIndex(const LabelledGraph& g);

  const LabelledGraph& graph() const { return *g_; }

  /// The full automorphism group of the labelled directed graph, each
  /// element a vertex permutation. Identity first.
  const std::vector<std::vector<int>>& automorphisms() const { return autos_; }
  int orbit_of(int v) const { return orbit_.at(v); }
  int num_orbits() const { return num_orbits_; }

  /// All vertices from which w is readable. Under a reduced labelling a map
  /// of the labelled path into the graph is determined by this start vertex.
  std::vector<int> witness_starts(const Word& w) const;

  /// Vertices reachable from u by a nonempty path whose label is a piece
  /// (essential piece if flagged), together with flags recording whether the
  /// path passed through each vertex of `track` (including endpoints).
  struct PieceStep {
    int target;
    std::vector<char> passed;  // parallel to track
  };
  std::vector<PieceStep> single_piece_steps(int u, bool essential,
                                            const std::vector<int>& track = {}) const;

 private:
  const LabelledGraph* g_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> orbit_;
  int num_orbits_ = 0;
};

struct PieceReport {
  Word word;
  std::vector<int> witness_starts;
  bool piece = false;
  bool essential = false;
};

/// Requires w reduced; the empty word is not a piece by convention.
PieceReport is_piece(const PieceIndex& idx, const Word& w);

/// Length of the longest prefix of `along` whose label is a (essential)
/// piece. Monotone by downward closure of pieces.
int max_piece_prefix(const PieceIndex& idx, const PathRef& along, bool essential);

struct PieceDistance {
  std::optional<int> distance;       // absent when undefined or unreachable
  std::optional<int> non_piece_edge; // set when the precondition fails
};

/// Least number of pieces whose concatenation is a path x -> y. Undefined
/// (with the offending edge) unless every edge of the graph is a piece
/// (essential piece, if flagged).
PieceDistance piece_distance(const PieceIndex& idx, int x, int y, bool essential);

enum class OppositeKind { EvenVertex, OddVertex, OddEdge };

struct OppositeEdgeResult {
  OppositeKind kind;
  int y = -1;
  int z = -1;  // OddEdge only
};

/// The opposite-vertex/edge structure on a simple cycle of a C(n) graph:
/// even n yields y with d_p(x,y) = n/2; odd n yields either y at distance
/// (n+1)/2 or a cycle edge {y,z} with both ends at distance (n-1)/2 such
/// that every path from x through both y and z needs >= (n+1)/2 pieces.
/// Throws LemmaViolation when no branch holds.
OppositeEdgeResult opposite_edge(const PieceIndex& idx, const PathRef& cycle,
                                 int x, int n);

/// Greedy inclusion-maximal set of pairwise vertex-disjoint simple cycles,
/// shortest first with canonical tie-break.
std::vector<SimpleCycle> disjoint_simple_cycles(const LabelledGraph& g,
                                                std::int64_t budget = 1000000);

}  // namespace grsc

#endif
