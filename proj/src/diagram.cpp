#include "grsc/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "json.hpp"

namespace grsc {

namespace {

// Successor map phi: each dart to the next dart of its walk, where the walks
// are the face walks plus the reversed boundary (the outer face). Every dart
// must occur exactly once.
std::map<Dart, Dart> successor_map(const Diagram& d) {
  std::map<Dart, Dart> phi;
  auto add_walk = [&](const std::vector<Dart>& w) {
    for (size_t i = 0; i < w.size(); ++i) {
      auto [it, fresh] = phi.try_emplace(w[i], w[(i + 1) % w.size()]);
      if (!fresh)
        throw InputError("dart used twice: edge " + std::to_string(w[i].edge));
    }
  };
  for (const auto& f : d.faces) {
    if (f.empty()) throw InputError("empty face walk");
    add_walk(f);
  }
  std::vector<Dart> outer;
  for (auto it = d.boundary.rbegin(); it != d.boundary.rend(); ++it)
    outer.push_back(it->reverse());
  if (!outer.empty()) add_walk(outer);
  if (phi.size() != 2 * d.edges.size())
    throw InputError("dart not covered by any walk");
  return phi;
}

void check_walk_closed(const Diagram& d, const std::vector<Dart>& w,
                       const char* what) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].edge < 0 || w[i].edge >= static_cast<int>(d.edges.size()))
      throw InputError(std::string(what) + ": dart out of range");
    if (d.dart_dst(w[i]) != d.dart_src(w[(i + 1) % w.size()]))
      throw InputError(std::string(what) + ": walk not closed");
  }
}

std::vector<int> vertex_degrees(const Diagram& d) {
  std::vector<int> deg(d.num_vertices, 0);
  for (const auto& e : d.edges) {
    ++deg[e.src];
    ++deg[e.dst];
  }
  return deg;
}

std::set<int> boundary_edge_set(const Diagram& d) {
  std::set<int> s;
  for (Dart b : d.boundary) s.insert(b.edge);
  return s;
}

std::set<int> boundary_vertex_set(const Diagram& d) {
  std::set<int> s;
  if (d.boundary.empty()) {
    s.insert(d.base);
    return s;
  }
  for (Dart b : d.boundary) {
    s.insert(d.dart_src(b));
    s.insert(d.dart_dst(b));
  }
  return s;
}

}  // namespace

Word Diagram::walk_word(const std::vector<Dart>& walk) const {
  Word w;
  for (Dart d : walk) w.push_back(dart_letter(d));
  return w;
}

DiagramReport validate(const Diagram& d) {
  if (d.num_vertices <= 0) throw InputError("diagram needs a vertex");
  for (const auto& e : d.edges)
    if (e.src < 0 || e.src >= d.num_vertices || e.dst < 0 ||
        e.dst >= d.num_vertices)
      throw InputError("edge endpoint out of range");
  if (d.base < 0 || d.base >= d.num_vertices)
    throw InputError("base out of range");
  for (const auto& f : d.faces) check_walk_closed(d, f, "face");
  if (!d.boundary.empty()) {
    check_walk_closed(d, d.boundary, "boundary");
    if (d.dart_src(d.boundary.front()) != d.base)
      throw InputError("boundary walk does not start at base");
  } else if (!d.edges.empty()) {
    throw InputError("nonempty diagram needs a boundary walk");
  }

  // Connectivity of the underlying graph.
  {
    std::vector<int> uf(d.num_vertices);
    for (int v = 0; v < d.num_vertices; ++v) uf[v] = v;
    std::function<int(int)> find = [&](int v) {
      return uf[v] == v ? v : uf[v] = find(uf[v]);
    };
    for (const auto& e : d.edges) uf[find(e.src)] = find(e.dst);
    for (int v = 0; v < d.num_vertices; ++v)
      if (find(v) != find(d.base))
        throw NotSimplyConnected("disconnected: vertex " + std::to_string(v));
  }

  std::map<Dart, Dart> phi = successor_map(d);

  // sigma = phi o reverse rotates darts around their source vertex; each
  // orbit must stay at one vertex and each vertex must have one orbit.
  {
    std::set<Dart> seen;
    int orbits = 0;
    std::vector<int> orbits_at(d.num_vertices, 0);
    for (const auto& [dart, _] : phi) {
      if (seen.count(dart)) continue;
      ++orbits;
      int v = d.dart_src(dart);
      ++orbits_at[v];
      Dart cur = dart;
      do {
        if (d.dart_src(cur) != v)
          throw NotPlanar("vertex orbit leaves vertex " + std::to_string(v));
        seen.insert(cur);
        cur = phi.at(cur.reverse());
      } while (cur != dart);
    }
    for (int v = 0; v < d.num_vertices; ++v)
      if (!d.edges.empty() && orbits_at[v] != 1)
        throw NotPlanar("vertex " + std::to_string(v) + " has " +
                        std::to_string(orbits_at[v]) + " rotation orbits");
    (void)orbits;
  }

  // Euler characteristic of the sphere map (outer face included).
  {
    int V = d.num_vertices;
    int E = static_cast<int>(d.edges.size());
    int F = static_cast<int>(d.faces.size()) + (d.boundary.empty() ? 1 : 1);
    if (V - E + F != 2)
      throw NotPlanar("Euler characteristic " + std::to_string(V - E + F) +
                      " != 2");
  }

  DiagramReport rep;
  rep.area = static_cast<int>(d.faces.size());
  rep.boundary_length = static_cast<int>(d.boundary.size());
  std::set<int> bedges = boundary_edge_set(d);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    if (!bedges.count(e)) rep.interior_edges.push_back(e);
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    bool on_boundary = false;
    for (Dart dt : d.faces[f])
      if (bedges.count(dt.edge)) on_boundary = true;
    (on_boundary ? rep.boundary_faces : rep.interior_faces).push_back(f);
  }

  std::vector<int> deg = vertex_degrees(d);
  for (int e : bedges) {
    if (deg[d.edges[e].src] == 1 || deg[d.edges[e].dst] == 1)
      rep.spurs.push_back(e);
  }

  // Maximal interior arcs: chains of interior edges through degree-2
  // vertices.
  {
    std::set<int> interior(rep.interior_edges.begin(), rep.interior_edges.end());
    std::vector<std::vector<int>> at(d.num_vertices);
    for (int e : interior) {
      at[d.edges[e].src].push_back(e);
      at[d.edges[e].dst].push_back(e);
    }
    std::set<int> used;
    for (int e : interior) {
      if (used.count(e)) continue;
      std::vector<int> arc{e};
      used.insert(e);
      for (int dir = 0; dir < 2; ++dir) {
        int v = dir == 0 ? d.edges[e].src : d.edges[e].dst;
        int cur = e;
        while (deg[v] == 2 && at[v].size() == 2) {
          int nxt = at[v][0] == cur ? at[v][1] : at[v][0];
          if (used.count(nxt)) break;
          used.insert(nxt);
          if (dir == 0)
            arc.insert(arc.begin(), nxt);
          else
            arc.push_back(nxt);
          v = d.edges[nxt].src == v ? d.edges[nxt].dst : d.edges[nxt].src;
          cur = nxt;
        }
      }
      rep.arcs.push_back(std::move(arc));
    }
  }
  return rep;
}

Diagram forget_degree2(const Diagram& d) {
  Diagram cur = d;
  // Labels and orientations play no further role.
  cur.alphabet = Alphabet({"e"});
  for (auto& e : cur.edges) e.letter = 0;

  for (;;) {
    std::vector<int> deg = vertex_degrees(cur);
    int victim = -1;  // a contractible non-loop edge at a degree-2 vertex
    for (int e = 0; e < static_cast<int>(cur.edges.size()) && victim < 0; ++e) {
      const DEdge& ed = cur.edges[e];
      if (ed.src == ed.dst) continue;
      for (int v : {ed.src, ed.dst}) {
        if (v == cur.base || deg[v] != 2) continue;
        // Never empty out a face: a face consisting of this edge's two darts
        // alone would vanish.
        bool kills_face = false;
        for (const auto& f : cur.faces) {
          bool all = true;
          for (Dart dt : f)
            if (dt.edge != e) all = false;
          if (all) kills_face = true;
        }
        if (!kills_face) {
          victim = e;
          break;
        }
      }
    }
    if (victim < 0) return cur;

    int keep = cur.edges[victim].src, gone = cur.edges[victim].dst;
    if (gone == cur.base || (vertex_degrees(cur)[gone] != 2))
      std::swap(keep, gone);
    // Contract victim: merge `gone` into `keep`, drop the edge.
    auto fix_walk = [&](std::vector<Dart>& w) {
      std::vector<Dart> out;
      for (Dart dt : w)
        if (dt.edge != victim) out.push_back(dt);
      w = std::move(out);
    };
    for (auto& f : cur.faces) fix_walk(f);
    fix_walk(cur.boundary);
    cur.edges.erase(cur.edges.begin() + victim);
    for (auto& f : cur.faces)
      for (auto& dt : f)
        if (dt.edge > victim) --dt.edge;
    for (auto& dt : cur.boundary)
      if (dt.edge > victim) --dt.edge;
    for (auto& e : cur.edges) {
      if (e.src == gone) e.src = keep;
      if (e.dst == gone) e.dst = keep;
    }
    if (cur.base == gone) cur.base = keep;
    if (cur.base > gone) --cur.base;
    for (auto& e : cur.edges) {
      if (e.src > gone) --e.src;
      if (e.dst > gone) --e.dst;
    }
    --cur.num_vertices;
    // Empty faces cannot arise (guarded above); empty boundary only if the
    // whole diagram collapsed, which the base guard prevents.
  }
}

PqResult is_pq_diagram(const Diagram& d, int p, int q, bool bracket) {
  PqResult r;
  std::set<int> bverts = boundary_vertex_set(d);
  std::vector<int> deg(d.num_vertices, 0);
  for (const auto& e : d.edges) {
    ++deg[e.src];
    ++deg[e.dst];
  }
  for (int v = 0; v < d.num_vertices; ++v)
    if (!bverts.count(v) && deg[v] < p) {
      r.ok = false;
      r.bad_vertex = v;
      return r;
    }
  std::set<int> bedges = boundary_edge_set(d);
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    bool interior = true;
    for (Dart dt : d.faces[f])
      if (bedges.count(dt.edge)) interior = false;
    if (!bracket && !interior) continue;
    if (static_cast<int>(d.faces[f].size()) < q) {
      r.ok = false;
      r.bad_face = f;
      return r;
    }
  }
  return r;
}

CurvatureResult curvature_I(const Diagram& d) {
  if (d.faces.size() < 2)
    throw PreconditionFailed("curvature_I: needs at least two faces");
  if (!is_pq_diagram(d, 3, 6, false).ok)
    throw PreconditionFailed("curvature_I: not a (3,6) diagram");
  std::set<int> bedges = boundary_edge_set(d);
  CurvatureResult r;
  for (const auto& f : d.faces) {
    std::set<int> fedges;
    bool on_boundary = false;
    for (Dart dt : f) {
      fedges.insert(dt.edge);
      if (bedges.count(dt.edge)) on_boundary = true;
    }
    if (!on_boundary) continue;
    int interior = 0;
    for (int e : fedges)
      if (!bedges.count(e)) ++interior;
    r.sum = r.sum + Rational(4 - interior);
  }
  r.satisfied = r.sum >= Rational(6);
  return r;
}

CurvatureResult curvature_II(const Diagram& d) {
  if (!is_pq_diagram(d, 3, 6, true).ok)
    throw PreconditionFailed("curvature_II: not a [3,6] diagram");
  std::vector<int> deg(d.num_vertices, 0);
  for (const auto& e : d.edges) {
    ++deg[e.src];
    ++deg[e.dst];
  }
  CurvatureResult r;
  for (int v : boundary_vertex_set(d))
    r.sum = r.sum + (Rational(5, 2) - Rational(deg[v]));
  r.satisfied = r.sum >= Rational(3);
  return r;
}

AreaBoundReport area_bounds(const Diagram& d) {
  AreaBoundReport rep;
  rep.area = static_cast<int>(d.faces.size());
  rep.boundary = static_cast<int>(d.boundary.size());
  if (is_pq_diagram(d, 3, 7, false).ok)
    rep.linear_ok = rep.area <= 8 * rep.boundary;
  if (is_pq_diagram(d, 3, 6, false).ok)
    rep.quadratic_ok = rep.area <= 3 * rep.boundary * rep.boundary;
  return rep;
}

namespace {

// All lifts of a face walk: start vertices whose reading of the walk word
// returns to the start.
std::vector<FaceLift> all_lifts(const Diagram& d, const LabelledGraph& g,
                                int face) {
  std::vector<FaceLift> lifts;
  Word w = d.walk_word(d.faces[face]);
  for (int v = 0; v < g.num_vertices(); ++v) {
    FaceLift fl;
    fl.face = face;
    fl.start = v;
    int at = v;
    bool ok = true;
    for (SignedLetter l : w) {
      fl.vertex_map.push_back(at);
      auto s = g.step_reading(at, l);
      if (!s) {
        ok = false;
        break;
      }
      fl.edge_map.push_back(s->edge);
      at = g.step_target(*s);
    }
    if (!ok || at != v) continue;
    fl.component = g.component_of(v);
    lifts.push_back(std::move(fl));
  }
  return lifts;
}

bool lifts_equivalent(const Diagram& d, const PieceIndex& idx, int face,
                      const FaceLift& a, const FaceLift& b, bool gr_mode) {
  const Word w = d.walk_word(d.faces[face]);
  int L = static_cast<int>(w.size());
  for (int k = 0; k < L; ++k) {
    if (rotate(w, k) != w) continue;  // only the walk's own cyclic symmetry
    bool plain = true;
    for (int i = 0; i < L && plain; ++i)
      if (a.vertex_map[(i + k) % L] != b.vertex_map[i]) plain = false;
    if (plain) return true;
    if (gr_mode) {
      for (const auto& psi : idx.automorphisms()) {
        bool ok = true;
        for (int i = 0; i < L && ok; ++i)
          if (psi[a.vertex_map[(i + k) % L]] != b.vertex_map[i]) ok = false;
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<FaceLift> lift_faces(const Diagram& d, const PieceIndex& idx,
                                 bool gr_mode) {
  const LabelledGraph& g = idx.graph();
  std::vector<FaceLift> out;
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    std::vector<FaceLift> lifts = all_lifts(d, g, f);
    if (lifts.empty())
      throw NoLift("face " + std::to_string(f) + ": label " +
                   word_str(d.alphabet, d.walk_word(d.faces[f])) +
                   " is not a cycle word of the graph");
    for (size_t i = 1; i < lifts.size(); ++i)
      if (!lifts_equivalent(d, idx, f, lifts[0], lifts[i], gr_mode))
        throw AmbiguousLift("face " + std::to_string(f) +
                            ": multiple essentially distinct lifts");
    out.push_back(std::move(lifts[0]));
  }
  return out;
}

namespace {

// The two (face, position) occurrences of an interior edge's darts.
std::vector<std::pair<int, int>> face_occurrences(const Diagram& d, int e) {
  std::vector<std::pair<int, int>> occ;
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f)
    for (int i = 0; i < static_cast<int>(d.faces[f].size()); ++i)
      if (d.faces[f][i].edge == e) occ.push_back({f, i});
  return occ;
}

}  // namespace

bool originates_from(const Diagram& d, const PieceIndex& idx, int e,
                     bool gr_mode) {
  const LabelledGraph& g = idx.graph();
  auto occ = face_occurrences(d, e);
  if (occ.size() != 2)
    throw PreconditionFailed("originates_from: edge not interior");
  std::vector<FaceLift> lifts = lift_faces(d, idx, gr_mode);
  int e1 = lifts[occ[0].first].edge_map[occ[0].second];
  int e2 = lifts[occ[1].first].edge_map[occ[1].second];
  if (e1 == e2) return true;
  if (!gr_mode) return false;
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  if (a.letter != b.letter) return false;
  for (const auto& psi : idx.automorphisms())
    if (psi[a.src] == b.src && psi[a.dst] == b.dst) return true;
  return false;
}

namespace {

// Union-find over edges carrying a relative orientation bit.
struct EdgeUF {
  std::vector<int> parent;
  std::vector<char> rel;  // orientation relative to parent

  explicit EdgeUF(int n) : parent(n), rel(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, char> find(int e) {
    if (parent[e] == e) return {e, 0};
    auto [r, f] = find(parent[e]);
    parent[e] = r;
    rel[e] ^= f;
    return {r, rel[e]};
  }
  // Declare: dart (a, da) is the same oriented edge as dart (b, db).
  void unite(int a, bool da, int b, bool db) {
    auto [ra, fa] = find(a);
    auto [rb, fb] = find(b);
    if (ra == rb) return;
    // orientation of b relative to a: flip iff da != db
    char flip = (da != db) ? 1 : 0;
    parent[rb] = ra;
    rel[rb] = fa ^ flip ^ fb;
  }
};

struct VertexUF {
  std::vector<int> parent;
  explicit VertexUF(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Rebuilds the diagram after vertex/edge identifications, dropping the
// listed faces and any edges whose class representative is dead.
Diagram quotient_diagram(const Diagram& d, VertexUF& vuf, EdgeUF& euf,
                         const std::set<int>& drop_faces) {
  Diagram out;
  out.alphabet = d.alphabet;
  std::map<int, int> vmap;
  for (int v = 0; v < d.num_vertices; ++v) {
    int r = vuf.find(v);
    if (!vmap.count(r)) vmap[r] = static_cast<int>(vmap.size());
  }
  out.num_vertices = static_cast<int>(vmap.size());
  out.base = vmap[vuf.find(d.base)];

  std::map<int, int> emap;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    auto [r, flip] = euf.find(e);
    if (emap.count(r)) continue;
    emap[r] = static_cast<int>(out.edges.size());
    const DEdge& src_edge = d.edges[r];
    out.edges.push_back({vmap[vuf.find(src_edge.src)],
                         vmap[vuf.find(src_edge.dst)], src_edge.letter});
  }
  auto map_dart = [&](Dart dt) {
    auto [r, flip] = euf.find(dt.edge);
    return Dart{emap[r], static_cast<bool>(dt.forward ^ flip)};
  };
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    if (drop_faces.count(f)) continue;
    std::vector<Dart> w;
    for (Dart dt : d.faces[f]) w.push_back(map_dart(dt));
    out.faces.push_back(std::move(w));
  }
  for (Dart dt : d.boundary) out.boundary.push_back(map_dart(dt));
  return out;
}

}  // namespace

Diagram fold_trivial_face(const Diagram& d, int face) {
  if (face < 0 || face >= static_cast<int>(d.faces.size()))
    throw PreconditionFailed("fold_trivial_face: no such face");
  const std::vector<Dart>& W = d.faces[face];
  if (!free_reduce(d.walk_word(W)).empty())
    throw PreconditionFailed("fold_trivial_face: boundary word not freely trivial");

  VertexUF vuf(d.num_vertices);
  EdgeUF euf(static_cast<int>(d.edges.size()));
  // Stallings folding of the face walk from its stored start: cancelling
  // dart pairs get identified; the quotient of the face boundary is a tree.
  std::vector<Dart> stack;
  for (Dart dt : W) {
    if (!stack.empty() &&
        d.dart_letter(stack.back()) == d.dart_letter(dt).inverse()) {
      Dart t = stack.back();
      stack.pop_back();
      // t runs a->b, dt runs b->c with cancelling labels: identify the
      // oriented edges (t as-is with dt reversed) and the far endpoints.
      euf.unite(t.edge, t.forward, dt.edge, !dt.forward);
      vuf.unite(d.dart_src(t), d.dart_dst(dt));
    } else {
      stack.push_back(dt);
    }
  }
  if (!stack.empty())
    throw LemmaViolation("fold_trivial_face: folding left a nonempty stack");
  return quotient_diagram(d, vuf, euf, {face});
}

Diagram pinch_vertices(const Diagram& d, const PieceIndex& idx, int face,
                       int v1, int v2) {
  if (v1 == v2) throw PreconditionFailed("pinch_vertices: vertices equal");
  const std::vector<Dart>& W = d.faces.at(face);
  int L = static_cast<int>(W.size());
  int i = -1, j = -1;
  for (int k = 0; k < L; ++k) {
    int v = d.dart_src(W[k]);
    if (v == v1 && i < 0) i = k;
    if (v == v2 && j < 0) j = k;
  }
  if (i < 0 || j < 0)
    throw PreconditionFailed("pinch_vertices: vertex not on the face");

  // The face's unique lift must take the same value at both positions.
  std::vector<FaceLift> lifts = all_lifts(d, idx.graph(), face);
  if (lifts.empty()) throw NoLift("pinch_vertices: face has no lift");
  for (const auto& fl : lifts)
    if (fl.vertex_map[i] != fl.vertex_map[j])
      throw PreconditionFailed("pinch_vertices: lifts differ at the vertices");

  Diagram out = d;
  out.faces.erase(out.faces.begin() + face);
  std::vector<Dart> f1, f2;
  for (int k = i; k != j; k = (k + 1) % L) f1.push_back(W[k]);
  for (int k = j; k != i; k = (k + 1) % L) f2.push_back(W[k]);
  out.faces.push_back(std::move(f1));
  out.faces.push_back(std::move(f2));

  // Merge v2 into v1.
  int gone = std::max(v1, v2), keep = std::min(v1, v2);
  for (auto& e : out.edges) {
    if (e.src == gone) e.src = keep;
    if (e.dst == gone) e.dst = keep;
    if (e.src > gone) --e.src;
    if (e.dst > gone) --e.dst;
  }
  if (out.base == gone) out.base = keep;
  if (out.base > gone) --out.base;
  --out.num_vertices;
  return out;
}

RemoveOriginatingResult remove_originating_edges(const Diagram& d,
                                                 const PieceIndex& idx,
                                                 const ConditionReport& cn,
                                                 bool gr_mode) {
  if (!cn.holds)
    throw PreconditionFailed("remove_originating_edges: condition not verified");
  {
    const std::string& c = cn.condition;
    size_t open = c.find('('), close = c.find(')');
    int n = 0;
    if (open != std::string::npos && close != std::string::npos)
      n = std::atoi(c.substr(open + 1, close - open - 1).c_str());
    if (n < 6)
      throw PreconditionFailed("remove_originating_edges: needs C(n), n >= 6");
  }

  std::vector<FaceLift> lifts = lift_faces(d, idx, gr_mode);
  std::set<int> bedges = boundary_edge_set(d);
  std::vector<int> originating;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    if (bedges.count(e)) continue;
    if (face_occurrences(d, e).size() != 2) continue;
    if (originates_from(d, idx, e, gr_mode)) originating.push_back(e);
  }

  RemoveOriginatingResult res;
  if (originating.empty()) {
    res.diagram = d;
    return res;
  }

  // Merge face walks by splicing out each originating edge.
  std::vector<std::vector<Dart>> faces = d.faces;
  std::vector<char> alive(faces.size(), 1);
  for (int e : originating) {
    int f1 = -1, p1 = -1, f2 = -1, p2 = -1;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!alive[f]) continue;
      for (int i = 0; i < static_cast<int>(faces[f].size()); ++i)
        if (faces[f][i].edge == e) {
          if (f1 < 0) {
            f1 = f;
            p1 = i;
          } else {
            f2 = f;
            p2 = i;
          }
        }
    }
    if (f1 < 0 || f2 < 0) continue;
    if (f1 == f2) {
      // Both darts in one face: removing the edge opens a hole; this is the
      // Lemma's second branch.
      res.merged = false;
      res.offending_faces.push_back(f1);
      std::vector<Dart> inner;
      for (int k = (p1 + 1) % faces[f1].size(); k != p2;
           k = (k + 1) % faces[f1].size())
        inner.push_back(faces[f1][k]);
      res.trivial_boundary = d.walk_word(inner);
      return res;
    }
    // faces[f1] = A . dart(e), faces[f2] = reverse-dart(e) . B; merge = A.B
    std::rotate(faces[f1].begin(), faces[f1].begin() + p1 + 1, faces[f1].end());
    faces[f1].pop_back();
    std::rotate(faces[f2].begin(), faces[f2].begin() + p2 + 1, faces[f2].end());
    faces[f2].pop_back();
    faces[f1].insert(faces[f1].end(), faces[f2].begin(), faces[f2].end());
    alive[f2] = 0;
  }

  // A merged face with freely trivial boundary word is the second branch.
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (!alive[f]) continue;
    Word w = d.walk_word(faces[f]);
    if (!w.empty() && free_reduce(w).empty()) {
      res.merged = false;
      res.offending_faces.push_back(f);
      res.trivial_boundary = w;
      return res;
    }
  }

  Diagram out;
  out.alphabet = d.alphabet;
  std::set<int> gone(originating.begin(), originating.end());
  std::map<int, int> emap;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    if (!gone.count(e)) {
      emap[e] = static_cast<int>(out.edges.size());
      out.edges.push_back(d.edges[e]);
    }
  // Keep only vertices still meeting an edge (or the base).
  std::set<int> keep{d.base};
  for (const auto& e : out.edges) {
    keep.insert(e.src);
    keep.insert(e.dst);
  }
  std::map<int, int> vmap;
  for (int v : keep) vmap[v] = static_cast<int>(vmap.size());
  for (auto& e : out.edges) {
    e.src = vmap[e.src];
    e.dst = vmap[e.dst];
  }
  out.num_vertices = static_cast<int>(vmap.size());
  out.base = vmap[d.base];
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (!alive[f]) continue;
    std::vector<Dart> w;
    for (Dart dt : faces[f]) w.push_back({emap[dt.edge], dt.forward});
    out.faces.push_back(std::move(w));
  }
  for (Dart dt : d.boundary) out.boundary.push_back({emap[dt.edge], dt.forward});
  res.diagram = std::move(out);
  return res;
}

std::string diagram_to_json(const Diagram& d) {
  nlohmann::ordered_json j;
  j["alphabet"] = d.alphabet.tokens();
  j["num_vertices"] = d.num_vertices;
  j["base"] = d.base;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : d.edges)
    j["edges"].push_back({{"src", e.src},
                          {"dst", e.dst},
                          {"letter", d.alphabet.token(e.letter)}});
  auto walk_json = [&](const std::vector<Dart>& w) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (Dart dt : w)
      a.push_back({{"edge", dt.edge}, {"forward", dt.forward}});
    return a;
  };
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& f : d.faces) j["faces"].push_back(walk_json(f));
  j["boundary"] = walk_json(d.boundary);

  // Rotation system, derived from the walks: per vertex the cyclic dart
  // order. Interchange-only; revalidated on load.
  std::map<Dart, Dart> phi = successor_map(d);
  std::map<int, std::vector<Dart>> rot;
  std::set<Dart> seen;
  for (const auto& [dart, _] : phi) {
    if (seen.count(dart)) continue;
    int v = d.dart_src(dart);
    if (rot.count(v)) continue;
    Dart cur = dart;
    do {
      seen.insert(cur);
      rot[v].push_back(cur);
      cur = phi.at(cur.reverse());
    } while (cur != dart);
  }
  j["rotation"] = nlohmann::ordered_json::array();
  for (int v = 0; v < d.num_vertices; ++v)
    j["rotation"].push_back(rot.count(v) ? walk_json(rot[v])
                                         : nlohmann::ordered_json::array());
  return j.dump(2);
}

Diagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw InputError(std::string("bad diagram JSON: ") + ex.what());
  }
  Diagram d;
  try {
    d.alphabet = Alphabet(j.at("alphabet").get<std::vector<std::string>>());
    d.num_vertices = j.at("num_vertices").get<int>();
    d.base = j.at("base").get<int>();
    for (const auto& e : j.at("edges")) {
      int letter = d.alphabet.index(e.at("letter").get<std::string>());
      if (letter < 0) throw InputError("unknown letter in diagram edge");
      d.edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>(), letter});
    }
    auto walk = [&](const nlohmann::json& a) {
      std::vector<Dart> w;
      for (const auto& dt : a)
        w.push_back({dt.at("edge").get<int>(), dt.at("forward").get<bool>()});
      return w;
    };
    for (const auto& f : j.at("faces")) d.faces.push_back(walk(f));
    d.boundary = walk(j.at("boundary"));

    if (j.count("rotation")) {
      // The stored rotation must agree with the derived one up to rotation
      // of each cyclic order.
      std::map<Dart, Dart> phi = successor_map(d);
      for (int v = 0; v < d.num_vertices; ++v) {
        std::vector<Dart> stored = walk(j.at("rotation").at(v));
        if (stored.empty()) continue;
        for (size_t i = 0; i < stored.size(); ++i) {
          Dart cur = stored[i], nxt = stored[(i + 1) % stored.size()];
          if (phi.at(cur.reverse()) != nxt)
            throw InputError("stored rotation system disagrees with walks at vertex " +
                             std::to_string(v));
        }
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad diagram JSON: ") + ex.what());
  }
  return d;
}

}  // namespace grsc
