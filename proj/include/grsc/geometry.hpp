#ifndef GRSC_GEOMETRY_HPP
#define GRSC_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grsc/solver.hpp"

namespace grsc {

struct BallTooSmall : Error {
  using Error::Error;
};

/// A materialized ball in the Cayley graph: canonical shortest words up to
/// solver-certified equality, with generator adjacency. `approximate` is set
/// when some equality question came back Unknown (such pairs are kept
/// distinct, so sizes are upper bounds).
struct CayleyBall {
  int radius = 0;
  std::vector<Word> elements;  // canonical (first-found shortest) words
  std::vector<int> depth;
  // adjacency[i][c]: element reached from i by signed letter c
  // (c = 2*letter + (sign>0)), or -1 when outside the ball.
  std::vector<std::vector<int>> adjacency;
  bool approximate = false;
};

CayleyBall cayley_ball(const Presentation& p, int radius, CondTag cond,
                       const SolveOptions& opts = {});

struct EmbeddingPair {
  int u, v;             // component vertices
  int d_graph;          // distance in the defining graph
  int d_cayley;         // distance between the images
  bool certified;       // lower bound proved, not just searched
};

struct EmbeddingReport {
  bool injective = false;
  bool isometric = false;
  bool certified = true;  // false when Unknown equality taints the report
  std::vector<EmbeddingPair> pairs;
  std::vector<std::pair<int, int>> distortion;  // pairs with d_cayley < d_graph
};

/// Embedding of one component into a materialized ball: each vertex maps to
/// the element of its tree-path word. Requires ball radius >= component
/// diameter + max relator length; throws BallTooSmall otherwise.
EmbeddingReport embed_component(const LabelledGraph& g, int component,
                                const Presentation& p, const CayleyBall& ball);

/// Certified embedding without materializing a ball: upper bounds come from
/// graph paths; lower bounds from refuting every shorter word with the
/// nontriviality certifier. `radius` only gates the stated precondition.
EmbeddingReport embed_component_certified(const LabelledGraph& g, int component,
                                          const Presentation& p,
                                          const NontrivialityCertifier& cert,
                                          int radius);

/// The coarse-union metric: graph distance inside a component, and
/// diam(X_m) + diam(X_n) + m + n across components (1-based indices).
int coarse_union_metric(const LabelledGraph& g, int x, int y);

struct SparseCheckResult {
  bool gap_found = false;
  int gap_index = -1;  // i with l[i+1]/l[i] > K
  Rational max_ratio;
  std::optional<Rational> witness_a;  // [a, aK] misses L
  int prefix_size = 0;
};

/// Gap search in a sorted finite girth list: sparseness can be witnessed on
/// a prefix, never refuted.
SparseCheckResult sparse_check(const std::vector<std::int64_t>& girths,
                               Rational K);

struct LacunarySelection {
  int index;
  std::int64_t girth;
  std::string inequality;  // the satisfied selection inequality
};

struct LacunaryReport {
  std::string mode;
  std::vector<std::int64_t> girths;
  std::vector<Rational> diameter_girth_ratios;
  Rational C;  // max diameter/girth over the prefix
  std::vector<LacunarySelection> selected;
  std::string status;  // "all-selected" or "insufficient-data"
};

/// Greedy subsequence selection: accept the next component when its girth g
/// exceeds N * 2C * (max prior girth), N = number of graphs already picked
/// plus one. In word-search mode the girth threshold is replaced by a
/// solver-checked injectivity-radius lower bound for the next projection.
LacunaryReport lacunary_select(const LabelledGraph& g, const std::string& mode,
                               std::optional<Rational> C_override = {},
                               const SolveOptions& opts = {});

}  // namespace grsc

#endif
