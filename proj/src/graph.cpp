#include "grsc/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace grsc {

namespace {

std::vector<int> actual_components(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : adj[v])
        if (comp[u] < 0) {
          comp[u] = c;
          q.push_back(u);
        }
    }
    ++c;
  }
  return comp;
}

}  // namespace

LabelledGraph::LabelledGraph(Alphabet alphabet, int num_vertices,
                             std::vector<Edge> edges,
                             std::vector<int> declared_component_of,
                             std::vector<std::string> component_names)
    : alphabet_(std::move(alphabet)),
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw InputError("negative vertex count");
  for (const auto& e : edges_) {
    if (e.src < 0 || e.src >= num_vertices_ || e.dst < 0 || e.dst >= num_vertices_)
      throw InputError("edge endpoint out of range");
    if (e.letter < 0 || e.letter >= alphabet_.size())
      throw InputError("edge letter out of range");
  }

  component_of_ = actual_components(num_vertices_, edges_);
  if (!declared_component_of.empty()) {
    if (static_cast<int>(declared_component_of.size()) != num_vertices_)
      throw InputError("component declaration size mismatch");
    // The declared partition must match actual connectivity: two vertices are
    // declared together iff they are connected.
    for (int v = 0; v < num_vertices_; ++v)
      for (int u = 0; u < v; ++u)
        if ((declared_component_of[u] == declared_component_of[v]) !=
            (component_of_[u] == component_of_[v]))
          throw InputError("declared components disagree with connectivity");
  }

  int nc = 0;
  for (int v = 0; v < num_vertices_; ++v) nc = std::max(nc, component_of_[v] + 1);
  component_vertices_.resize(nc);
  for (int v = 0; v < num_vertices_; ++v)
    component_vertices_[component_of_[v]].push_back(v);

  component_names_.assign(nc, "");
  if (!component_names.empty()) {
    // Map declared names onto actual components via the declared partition.
    for (int v = 0; v < num_vertices_; ++v) {
      int d = declared_component_of.empty() ? component_of_[v]
                                            : declared_component_of[v];
      if (d >= 0 && d < static_cast<int>(component_names.size()))
        component_names_[component_of_[v]] = component_names[d];
    }
  }
  for (int c = 0; c < nc; ++c)
    if (component_names_[c].empty())
      component_names_[c] = "g" + std::to_string(c);
  std::set<std::string> seen;
  for (const auto& n : component_names_)
    if (!seen.insert(n).second)
      throw InputError("duplicate component name: " + n);

  incident_.resize(num_vertices_);
  for (int e = 0; e < num_edges(); ++e) {
    incident_[edges_[e].src].push_back({e, true});
    incident_[edges_[e].dst].push_back({e, false});
  }
  for (auto& steps : incident_)
    std::sort(steps.begin(), steps.end(), [](Step a, Step b) {
      if (a.edge != b.edge) return a.edge < b.edge;
      return a.forward && !b.forward;
    });
}

int LabelledGraph::component_index(const std::string& name) const {
  for (int c = 0; c < num_components(); ++c)
    if (component_names_[c] == name) return c;
  throw InputError("unknown component: " + name);
}

std::optional<Step> LabelledGraph::step_reading(int v, SignedLetter l) const {
  for (Step s : incident_.at(v))
    if (step_letter(s) == l) return s;
  return std::nullopt;
}

Word LabelledGraph::label(const PathRef& p) const {
  Word w;
  w.reserve(p.steps.size());
  for (Step s : p.steps) w.push_back(step_letter(s));
  return w;
}

PathRef LabelledGraph::inverse_path(const PathRef& p) const {
  PathRef r;
  r.start = path_end(p);
  r.steps.reserve(p.steps.size());
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it)
    r.steps.push_back({it->edge, !it->forward});
  return r;
}

int LabelledGraph::path_end(const PathRef& p) const {
  return p.steps.empty() ? p.start : step_target(p.steps.back());
}

bool LabelledGraph::is_path(const PathRef& p) const {
  if (p.start < 0 || p.start >= num_vertices_) return false;
  int at = p.start;
  for (Step s : p.steps) {
    if (s.edge < 0 || s.edge >= num_edges()) return false;
    if (step_source(s) != at) return false;
    at = step_target(s);
  }
  return true;
}

void GraphBuilder::begin_component(const std::string& name) {
  component_names_.push_back(
      name.empty() ? "g" + std::to_string(component_names_.size()) : name);
}

int GraphBuilder::add_vertex() {
  if (component_names_.empty()) begin_component();
  component_of_vertex_.push_back(static_cast<int>(component_names_.size()) - 1);
  return static_cast<int>(component_of_vertex_.size()) - 1;
}

void GraphBuilder::add_edge(int u, int v, int letter) {
  edges_.push_back({u, v, letter});
}

void GraphBuilder::add_edge(int u, int v, const std::string& letter_token) {
  int idx = alphabet_.index(letter_token);
  if (idx < 0) throw InputError("unknown letter: " + letter_token);
  add_edge(u, v, idx);
}

LabelledGraph GraphBuilder::build() const {
  return LabelledGraph(alphabet_, static_cast<int>(component_of_vertex_.size()),
                       edges_, component_of_vertex_, component_names_);
}

LabellingReport is_reduced_labelling(const LabelledGraph& g) {
  LabellingReport rep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::set<std::pair<int, int>> seen;  // (letter idx, sign)
    for (Step s : g.steps_at(v)) {
      SignedLetter l = g.step_letter(s);
      if (!seen.insert({l.idx, l.sign}).second) {
        rep.reduced = false;
        // Report the out/in clash once per (vertex, letter, direction).
        LabellingViolation viol{v, l};
        bool dup = false;
        for (const auto& w : rep.violations)
          if (w.vertex == v && w.letter == l) dup = true;
        if (!dup) rep.violations.push_back(viol);
      }
    }
  }
  return rep;
}

std::optional<PathRef> read_path(const LabelledGraph& g, int start, const Word& w) {
  if (!is_reduced_labelling(g).reduced)
    throw PreconditionFailed("read_path: labelling not reduced");
  PathRef p;
  p.start = start;
  int at = start;
  for (SignedLetter l : w) {
    auto s = g.step_reading(at, l);
    if (!s) return std::nullopt;
    p.steps.push_back(*s);
    at = g.step_target(*s);
  }
  return p;
}

namespace {

// Canonical representative of a simple cycle: among all rotations and both
// orientations, the traversal with lex-least label, ties broken by the
// smallest start vertex then smallest first edge id.
PathRef canonical_cycle_path(const LabelledGraph& g, const PathRef& cyc) {
  auto candidates = [&](const PathRef& p) {
    std::vector<PathRef> out;
    int n = p.length();
    for (int k = 0; k < n; ++k) {
      PathRef r;
      r.start = g.step_source(p.steps[k]);
      for (int i = 0; i < n; ++i) r.steps.push_back(p.steps[(k + i) % n]);
      out.push_back(std::move(r));
    }
    return out;
  };
  std::vector<PathRef> all = candidates(cyc);
  for (auto& c : candidates(g.inverse_path(cyc))) all.push_back(std::move(c));

  auto better = [&](const PathRef& a, const PathRef& b) {
    Word la = g.label(a), lb = g.label(b);
    if (la != lb) return word_less(la, lb);
    if (a.start != b.start) return a.start < b.start;
    for (int i = 0; i < a.length(); ++i) {
      if (a.steps[i].edge != b.steps[i].edge)
        return a.steps[i].edge < b.steps[i].edge;
      if (a.steps[i].forward != b.steps[i].forward) return a.steps[i].forward;
    }
    return false;
  };
  return *std::min_element(all.begin(), all.end(), better);
}

}  // namespace

std::vector<SimpleCycle> simple_cycles(const LabelledGraph& g, std::int64_t budget) {
  std::vector<SimpleCycle> out;
  std::set<std::vector<int>> seen_edge_sets;

  // Loops are simple cycles of length 1; a pair of parallel edges gives a
  // 2-cycle. The general DFS below handles those too, as it bans edge reuse
  // but not vertex revisits at the root.
  std::vector<char> edge_used(g.num_edges(), 0);
  std::vector<char> vertex_used(g.num_vertices(), 0);
  std::vector<Step> stack;

  auto record = [&](int /*root*/) {
    std::vector<int> es;
    for (Step s : stack) es.push_back(s.edge);
    std::sort(es.begin(), es.end());
    if (!seen_edge_sets.insert(es).second) return;
    if (static_cast<std::int64_t>(seen_edge_sets.size()) > budget)
      throw BudgetExceeded("simple_cycles: cycle budget exceeded");
    PathRef p;
    p.start = g.step_source(stack.front());
    p.steps = stack;
    PathRef canon = canonical_cycle_path(g, p);
    out.push_back({canon, g.label(canon), es});
  };

  std::function<void(int, int)> dfs = [&](int root, int at) {
    for (Step s : g.steps_at(at)) {
      if (edge_used[s.edge]) continue;
      int t = g.step_target(s);
      if (t == root) {
        stack.push_back(s);
        record(root);
        stack.pop_back();
        continue;
      }
      // Only extend through vertices >= root so each cycle is found from its
      // minimal vertex; skip revisits to keep the cycle simple.
      if (t < root || vertex_used[t]) continue;
      edge_used[s.edge] = 1;
      vertex_used[t] = 1;
      stack.push_back(s);
      dfs(root, t);
      stack.pop_back();
      vertex_used[t] = 0;
      edge_used[s.edge] = 0;
    }
  };

  for (int root = 0; root < g.num_vertices(); ++root) {
    vertex_used[root] = 1;
    dfs(root, root);
    vertex_used[root] = 0;
  }

  std::sort(out.begin(), out.end(), [](const SimpleCycle& a, const SimpleCycle& b) {
    if (a.canonical_word.size() != b.canonical_word.size())
      return a.canonical_word.size() < b.canonical_word.size();
    if (a.canonical_word != b.canonical_word)
      return word_less(a.canonical_word, b.canonical_word);
    return a.edges < b.edges;
  });
  return out;
}

namespace {

// Undirected BFS distances from s, optionally skipping one edge.
std::vector<int> bfs_dist(const LabelledGraph& g, int s, int skip_edge = -1) {
  std::vector<int> d(g.num_vertices(), -1);
  d[s] = 0;
  std::deque<int> q{s};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (Step e : g.steps_at(v)) {
      if (e.edge == skip_edge) continue;
      int u = g.step_target(e);
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
    }
  }
  return d;
}

}  // namespace

GirthDiameter girth_and_diameter(const LabelledGraph& g, int component) {
  GirthDiameter r;
  const auto& verts = g.component_vertices(component);
  int best = -1;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.component_of(ed.src) != component) continue;
    if (ed.src == ed.dst) {
      best = 1;
      break;
    }
    auto d = bfs_dist(g, ed.src, e);
    if (d[ed.dst] >= 0) {
      int c = d[ed.dst] + 1;
      if (best < 0 || c < best) best = c;
    }
  }
  r.girth = best < 0 ? 0 : best;
  for (int v : verts) {
    auto d = bfs_dist(g, v);
    for (int u : verts) r.diameter = std::max(r.diameter, d[u]);
  }
  return r;
}

int graph_distance(const LabelledGraph& g, int u, int v) {
  return bfs_dist(g, u)[v];
}

std::optional<PathRef> shortest_path(const LabelledGraph& g, int u, int v) {
  std::vector<Step> parent(g.num_vertices(), {-1, true});
  std::vector<int> d(g.num_vertices(), -1);
  d[u] = 0;
  std::deque<int> q{u};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (Step e : g.steps_at(x)) {
      int t = g.step_target(e);
      if (d[t] < 0) {
        d[t] = d[x] + 1;
        parent[t] = e;
        q.push_back(t);
      }
    }
  }
  if (d[v] < 0) return std::nullopt;
  PathRef p;
  p.start = u;
  std::vector<Step> rev;
  for (int at = v; at != u; at = g.step_source(parent[at]))
    rev.push_back(parent[at]);
  p.steps.assign(rev.rbegin(), rev.rend());
  return p;
}

std::vector<TreeGenerator> spanning_tree_generators(const LabelledGraph& g,
                                                    int component, int base) {
  if (g.component_of(base) != component)
    throw PreconditionFailed("spanning_tree_generators: base outside component");
  // Deterministic BFS tree: vertices discovered in (distance, edge id) order.
  std::vector<int> d(g.num_vertices(), -1);
  std::vector<Step> parent(g.num_vertices(), {-1, true});
  std::vector<char> tree_edge(g.num_edges(), 0);
  d[base] = 0;
  std::deque<int> q{base};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (Step e : g.steps_at(v)) {
      int t = g.step_target(e);
      if (d[t] < 0) {
        d[t] = d[v] + 1;
        parent[t] = e;
        tree_edge[e.edge] = 1;
        q.push_back(t);
      }
    }
  }

  auto word_to = [&](int v) {
    Word w;
    for (int at = v; at != base; at = g.step_source(parent[at]))
      w.push_back(g.step_letter(parent[at]));
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::vector<TreeGenerator> gens;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.component_of(ed.src) != component || tree_edge[e]) continue;
    Word w = word_to(ed.src);
    w.push_back({ed.letter, 1});
    Word back = inverse(word_to(ed.dst));
    w.insert(w.end(), back.begin(), back.end());
    gens.push_back({e, free_reduce(w)});
  }
  return gens;
}

}  // namespace grsc
