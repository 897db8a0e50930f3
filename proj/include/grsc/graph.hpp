#ifndef GRSC_GRAPH_HPP
#define GRSC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grsc/word.hpp"

namespace grsc {

struct Edge {
  int src = 0;
  int dst = 0;
  int letter = 0;
};

/// A traversal step: an edge taken forward (src to dst) or backward.
struct Step {
  int edge = 0;
  bool forward = true;

  friend bool operator==(Step a, Step b) {
    return a.edge == b.edge && a.forward == b.forward;
  }
  friend bool operator!=(Step a, Step b) { return !(a == b); }
};

/// A concrete edge path in a graph. The empty path at a vertex is valid.
struct PathRef {
  int start = 0;
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }
};

/// Finite S-labelled directed multigraph. Immutable after construction;
/// loops and multi-edges are permitted. Vertices carry dense global ids,
/// grouped into connected components in vertex-id order.
class LabelledGraph {
 public:
  LabelledGraph(Alphabet alphabet, int num_vertices, std::vector<Edge> edges,
                std::vector<int> declared_component_of = {},
                std::vector<std::string> component_names = {});

  const Alphabet& alphabet() const { return alphabet_; }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  int num_components() const { return static_cast<int>(component_vertices_.size()); }
  int component_of(int v) const { return component_of_.at(v); }
  const std::vector<int>& component_vertices(int c) const {
    return component_vertices_.at(c);
  }
  const std::string& component_name(int c) const { return component_names_.at(c); }
  int component_index(const std::string& name) const;

  /// Incident steps leaving v, sorted by (edge id, forward first). A loop
  /// contributes both directions.
  const std::vector<Step>& steps_at(int v) const { return incident_.at(v); }
  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }

  int step_source(Step s) const { return s.forward ? edges_[s.edge].src : edges_[s.edge].dst; }
  int step_target(Step s) const { return s.forward ? edges_[s.edge].dst : edges_[s.edge].src; }
  SignedLetter step_letter(Step s) const {
    return {edges_[s.edge].letter, s.forward ? 1 : -1};
  }

  /// The unique step leaving v that reads l, if any. Only meaningful under
  /// a reduced labelling, where uniqueness holds.
  std::optional<Step> step_reading(int v, SignedLetter l) const;

  Word label(const PathRef& p) const;
  PathRef inverse_path(const PathRef& p) const;
  int path_end(const PathRef& p) const;
  bool is_path(const PathRef& p) const;

 private:
  Alphabet alphabet_;
  int num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Step>> incident_;
  std::vector<int> component_of_;
  std::vector<std::vector<int>> component_vertices_;
  std::vector<std::string> component_names_;
};

/// Incremental construction helper used by the corpus generators and the
/// file reader. Vertices are created inside the current component block.
class GraphBuilder {
 public:
  explicit GraphBuilder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  void begin_component(const std::string& name = "");
  int add_vertex();
  void add_edge(int u, int v, int letter);
  void add_edge(int u, int v, const std::string& letter_token);

  LabelledGraph build() const;

 private:
  Alphabet alphabet_;
  std::vector<Edge> edges_;
  std::vector<int> component_of_vertex_;
  std::vector<std::string> component_names_;
};

struct LabellingViolation {
  int vertex;
  SignedLetter letter;  // sign +1: two out-edges share it; -1: two in-edges
};

struct LabellingReport {
  bool reduced = true;
  std::vector<LabellingViolation> violations;
};

LabellingReport is_reduced_labelling(const LabelledGraph& g);

/// The unique path from start labelled w, or absent. Requires a reduced
/// labelling; throws PreconditionFailed otherwise.
std::optional<PathRef> read_path(const LabelledGraph& g, int start, const Word& w);

struct SimpleCycle {
  PathRef path;            // canonical traversal
  Word canonical_word;     // label of the canonical traversal
  std::vector<int> edges;  // sorted edge ids
};

/// All simple cycles of the underlying undirected multigraph, one canonical
/// representative per cycle up to rotation and inversion, sorted by
/// (length, canonical word, edge list). Throws BudgetExceeded when the
/// cycle count passes the budget.
std::vector<SimpleCycle> simple_cycles(const LabelledGraph& g,
                                       std::int64_t budget = 1000000);

struct GirthDiameter {
  int girth = 0;  // 0 for forests
  int diameter = 0;
};

GirthDiameter girth_and_diameter(const LabelledGraph& g, int component);

/// Undirected graph distance within one component; -1 if disconnected.
int graph_distance(const LabelledGraph& g, int u, int v);

/// BFS tree path u -> v inside u's component (deterministic, edge-id order).
std::optional<PathRef> shortest_path(const LabelledGraph& g, int u, int v);

struct TreeGenerator {
  int extra_edge;
  Word generator;
};

/// Free generating set of pi1 of a component: one generator per non-tree
/// edge of the BFS spanning tree rooted at base.
std::vector<TreeGenerator> spanning_tree_generators(const LabelledGraph& g,
                                                    int component, int base);

}  // namespace grsc

#endif
