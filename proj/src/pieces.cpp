#include "grsc/pieces.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace grsc {

namespace {

// Iterated neighborhood refinement: vertices get integer classes, refined by
// the multiset of (letter, sign, target class) over incident steps until the
// partition stabilizes.
std::vector<int> refine_signatures(const LabelledGraph& g) {
  int n = g.num_vertices();
  std::vector<int> sig(n, 0);
  {
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      for (Step s : g.steps_at(v)) {
        SignedLetter l = g.step_letter(s);
        key.push_back(l.idx * 2 + (l.sign > 0));
      }
      std::sort(key.begin(), key.end());
      auto [it, _] = ids.try_emplace(key, static_cast<int>(ids.size()));
      sig[v] = it->second;
    }
  }
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{sig[v]};
      std::vector<int> nb;
      for (Step s : g.steps_at(v)) {
        SignedLetter l = g.step_letter(s);
        nb.push_back((l.idx * 2 + (l.sign > 0)) * (n + 1) + sig[g.step_target(s)]);
      }
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      auto [it, _] = ids.try_emplace(key, static_cast<int>(ids.size()));
      next[v] = it->second;
    }
    bool same = std::set<int>(sig.begin(), sig.end()).size() == ids.size() &&
                [&] {
                  // Same partition iff class labels are in bijection.
                  std::map<int, int> m;
                  for (int v = 0; v < n; ++v) {
                    auto [it, fresh] = m.try_emplace(sig[v], next[v]);
                    if (!fresh && it->second != next[v]) return false;
                  }
                  return true;
                }();
    sig = std::move(next);
    if (same) return sig;
  }
}

// Extends perm by the forced map of root's whole component onto cand's.
// Under a reduced labelling the image of each incident step is unique, so
// propagation either fails or determines the component map.
bool propagate(const LabelledGraph& g, std::vector<int>& perm,
               std::vector<char>& used, int root, int cand,
               std::vector<int>& placed) {
  std::deque<int> q;
  auto assign = [&](int v, int w) {
    if (perm[v] >= 0) return perm[v] == w;
    if (used[w]) return false;
    perm[v] = w;
    used[w] = 1;
    placed.push_back(v);
    q.push_back(v);
    return true;
  };
  if (!assign(root, cand)) return false;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    int w = perm[v];
    if (g.degree(v) != g.degree(w)) return false;
    for (Step s : g.steps_at(v)) {
      auto img = g.step_reading(w, g.step_letter(s));
      if (!img) return false;
      if (!assign(g.step_target(s), g.step_target(*img))) return false;
    }
  }
  return true;
}

}  // namespace

PieceIndex::PieceIndex(const LabelledGraph& g) : g_(&g) {
  if (!is_reduced_labelling(g).reduced)
    throw PreconditionFailed("PieceIndex: labelling not reduced");

  int n = g.num_vertices();
  std::vector<int> sig = refine_signatures(g);
  std::vector<int> roots;
  for (int c = 0; c < g.num_components(); ++c)
    roots.push_back(g.component_vertices(c).front());

  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int ci) {
    if (ci == static_cast<int>(roots.size())) {
      autos_.push_back(perm);
      return;
    }
    int root = roots[ci];
    for (int cand = 0; cand < n; ++cand) {
      if (sig[cand] != sig[root] || used[cand]) continue;
      std::vector<int> placed;
      if (propagate(g, perm, used, root, cand, placed)) rec(ci + 1);
      for (int v : placed) {
        used[perm[v]] = 0;
        perm[v] = -1;
      }
    }
  };
  rec(0);

  // Identity first, then lexicographic.
  std::sort(autos_.begin(), autos_.end());
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v) id[v] = v;
  auto it = std::find(autos_.begin(), autos_.end(), id);
  if (it == autos_.end())
    throw LemmaViolation("automorphism search lost the identity");
  std::rotate(autos_.begin(), autos_.begin() + (it - autos_.begin()), it + 1);

  // Orbit partition under the full group.
  std::vector<int> uf(n);
  for (int v = 0; v < n; ++v) uf[v] = v;
  std::function<int(int)> find = [&](int v) {
    return uf[v] == v ? v : uf[v] = find(uf[v]);
  };
  for (const auto& a : autos_)
    for (int v = 0; v < n; ++v) uf[find(v)] = find(a[v]);
  orbit_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (orbit_[r] < 0) orbit_[r] = num_orbits_++;
    orbit_[v] = orbit_[r];
  }
}

std::vector<int> PieceIndex::witness_starts(const Word& w) const {
  const LabelledGraph& g = *g_;
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int at = v;
    bool ok = true;
    for (SignedLetter l : w) {
      auto s = g.step_reading(at, l);
      if (!s) {
        ok = false;
        break;
      }
      at = g.step_target(*s);
    }
    if (ok) out.push_back(v);
  }
  return out;
}

std::vector<PieceIndex::PieceStep> PieceIndex::single_piece_steps(
    int u, bool essential, const std::vector<int>& track) const {
  const LabelledGraph& g = *g_;
  int nt = static_cast<int>(track.size());
  auto mask_of = [&](int v, int prev_mask) {
    int m = prev_mask;
    for (int i = 0; i < nt; ++i)
      if (track[i] == v) m |= 1 << i;
    return m;
  };

  // A witness walk starts anywhere but u (essential: anywhere outside u's
  // orbit); under the reduced labelling distinct starts stay distinct, so a
  // set of current positions faithfully represents the surviving witnesses.
  std::vector<int> w0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == u) continue;
    if (essential && orbit_[v] == orbit_[u]) continue;
    w0.push_back(v);
  }

  struct State {
    int at;
    int mask;
    std::vector<int> witnesses;
  };
  std::set<std::tuple<int, int, std::vector<int>>> seen;
  std::deque<State> q;
  State init{u, mask_of(u, 0), w0};
  seen.insert({init.at, init.mask, init.witnesses});
  q.push_back(init);

  std::set<std::pair<int, int>> results;  // (target, mask), >= 1 step taken
  while (!q.empty()) {
    State st = q.front();
    q.pop_front();
    for (Step s : g.steps_at(st.at)) {
      SignedLetter l = g.step_letter(s);
      std::vector<int> nw;
      for (int w : st.witnesses) {
        auto ws = g.step_reading(w, l);
        if (ws) nw.push_back(g.step_target(*ws));
      }
      if (nw.empty()) continue;
      int t = g.step_target(s);
      int m = mask_of(t, st.mask);
      results.insert({t, m});
      State ns{t, m, std::move(nw)};
      if (seen.insert({ns.at, ns.mask, ns.witnesses}).second)
        q.push_back(std::move(ns));
    }
  }

  std::vector<PieceStep> out;
  for (auto [t, m] : results) {
    PieceStep ps{t, std::vector<char>(nt, 0)};
    for (int i = 0; i < nt; ++i) ps.passed[i] = (m >> i) & 1;
    out.push_back(std::move(ps));
  }
  return out;
}

PieceReport is_piece(const PieceIndex& idx, const Word& w) {
  if (!is_reduced(w))
    throw PreconditionFailed("is_piece: word not reduced; query its reduction");
  PieceReport rep;
  rep.word = w;
  if (w.empty()) return rep;  // degenerate: not a piece by convention
  rep.witness_starts = idx.witness_starts(w);
  rep.piece = rep.witness_starts.size() >= 2;
  std::set<int> orbits;
  for (int v : rep.witness_starts) orbits.insert(idx.orbit_of(v));
  rep.essential = rep.piece && orbits.size() >= 2;
  return rep;
}

int max_piece_prefix(const PieceIndex& idx, const PathRef& along, bool essential) {
  const LabelledGraph& g = idx.graph();
  if (!g.is_path(along)) throw PreconditionFailed("max_piece_prefix: not a path");
  // Walk all candidate witness starts letter by letter; distinct starts stay
  // at distinct positions, so survivors count witnesses exactly.
  std::vector<std::pair<int, int>> walks;  // (original start, current)
  for (int v = 0; v < g.num_vertices(); ++v) walks.push_back({v, v});
  int best = 0;
  for (int m = 0; m < along.length(); ++m) {
    SignedLetter l = g.step_letter(along.steps[m]);
    std::vector<std::pair<int, int>> next;
    for (auto [o, c] : walks) {
      auto s = g.step_reading(c, l);
      if (s) next.push_back({o, g.step_target(*s)});
    }
    walks = std::move(next);
    bool piece;
    if (essential) {
      std::set<int> orbits;
      for (auto [o, c] : walks) orbits.insert(idx.orbit_of(o));
      piece = walks.size() >= 2 && orbits.size() >= 2;
    } else {
      piece = walks.size() >= 2;
    }
    if (piece)
      best = m + 1;
    else
      break;  // downward closure: no longer prefix can be a piece
  }
  return best;
}

PieceDistance piece_distance(const PieceIndex& idx, int x, int y, bool essential) {
  const LabelledGraph& g = idx.graph();
  for (int e = 0; e < g.num_edges(); ++e) {
    PieceReport rep = is_piece(idx, {SignedLetter{g.edge(e).letter, 1}});
    bool ok = essential ? rep.essential : rep.piece;
    // The single-letter check covers the edge: its witnesses include src.
    if (!ok || std::find(rep.witness_starts.begin(), rep.witness_starts.end(),
                         g.edge(e).src) == rep.witness_starts.end())
      return {std::nullopt, e};
  }
  std::vector<int> dist(g.num_vertices(), -1);
  dist[x] = 0;
  std::deque<int> q{x};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == y) break;
    for (const auto& ps : idx.single_piece_steps(v, essential))
      if (dist[ps.target] < 0) {
        dist[ps.target] = dist[v] + 1;
        q.push_back(ps.target);
      }
  }
  if (dist[y] < 0) return {std::nullopt, std::nullopt};
  return {dist[y], std::nullopt};
}

OppositeEdgeResult opposite_edge(const PieceIndex& idx, const PathRef& cycle,
                                 int x, int n) {
  const LabelledGraph& g = idx.graph();
  if (!g.is_path(cycle) || cycle.length() == 0 || g.path_end(cycle) != cycle.start)
    throw PreconditionFailed("opposite_edge: not a closed path");
  std::vector<int> cyc_verts;
  {
    std::set<int> seen;
    int at = cycle.start;
    for (Step s : cycle.steps) {
      if (!seen.insert(at).second)
        throw PreconditionFailed("opposite_edge: cycle not simple");
      cyc_verts.push_back(at);
      at = g.step_target(s);
    }
  }
  if (std::find(cyc_verts.begin(), cyc_verts.end(), x) == cyc_verts.end())
    throw PreconditionFailed("opposite_edge: x not on cycle");

  // Piece distances from x over the whole graph.
  std::vector<int> dist(g.num_vertices(), -1);
  dist[x] = 0;
  std::deque<int> q{x};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& ps : idx.single_piece_steps(v, false))
      if (dist[ps.target] < 0) {
        dist[ps.target] = dist[v] + 1;
        q.push_back(ps.target);
      }
  }

  auto least_at = [&](int d) {
    int best = -1;
    for (int v : cyc_verts)
      if (dist[v] == d && (best < 0 || v < best)) best = v;
    return best;
  };

  if (n % 2 == 0) {
    int y = least_at(n / 2);
    if (y >= 0) return {OppositeKind::EvenVertex, y, -1};
  } else {
    int y = least_at((n + 1) / 2);
    if (y >= 0) return {OppositeKind::OddVertex, y, -1};
    int L = static_cast<int>(cyc_verts.size());
    for (int i = 0; i < L; ++i) {
      int a = cyc_verts[i], b = cyc_verts[(i + 1) % L];
      if (dist[a] != (n - 1) / 2 || dist[b] != (n - 1) / 2) continue;
      // Min pieces over paths from x that visit both a and b.
      std::map<std::pair<int, int>, int> d2;
      std::deque<std::pair<int, int>> q2;
      int m0 = (x == a ? 1 : 0) | (x == b ? 2 : 0);
      d2[{x, m0}] = 0;
      q2.push_back({x, m0});
      int both = -1;
      while (!q2.empty()) {
        auto [v, m] = q2.front();
        q2.pop_front();
        int dv = d2[{v, m}];
        if (m == 3) {
          both = dv;
          break;
        }
        for (const auto& ps : idx.single_piece_steps(v, false, {a, b})) {
          int nm = m | (ps.passed[0] ? 1 : 0) | (ps.passed[1] ? 2 : 0);
          if (!d2.count({ps.target, nm})) {
            d2[{ps.target, nm}] = dv + 1;
            q2.push_back({ps.target, nm});
          }
        }
      }
      if (both < 0 || both >= (n + 1) / 2)
        return {OppositeKind::OddEdge, a, b};
    }
  }
  throw LemmaViolation("opposite_edge: no branch holds at x=" +
                       std::to_string(x) + " on cycle " +
                       word_str(g.alphabet(), g.label(cycle)));
}

std::vector<SimpleCycle> disjoint_simple_cycles(const LabelledGraph& g,
                                                std::int64_t budget) {
  std::vector<SimpleCycle> all = simple_cycles(g, budget);
  std::vector<SimpleCycle> out;
  std::set<int> used;
  for (auto& c : all) {
    bool ok = true;
    std::vector<int> verts;
    int at = c.path.start;
    for (Step s : c.path.steps) {
      verts.push_back(at);
      at = g.step_target(s);
    }
    for (int v : verts)
      if (used.count(v)) ok = false;
    if (!ok) continue;
    used.insert(verts.begin(), verts.end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace grsc
