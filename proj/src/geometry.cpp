#include "grsc/geometry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace grsc {

namespace {

int letter_code(SignedLetter l) { return 2 * l.idx + (l.sign > 0 ? 1 : 0); }

std::int64_t max_relator_length(const Presentation& p) {
  std::int64_t m = 0;
  for (const auto& r : p.relators)
    m = std::max<std::int64_t>(m, static_cast<std::int64_t>(r.size()));
  return m;
}

}  // namespace

CayleyBall cayley_ball(const Presentation& p, int radius, CondTag cond,
                       const SolveOptions& opts) {
  if (radius < 0) throw PreconditionFailed("cayley_ball: negative radius");
  CayleyBall ball;
  ball.radius = radius;
  int k = p.alphabet.size();
  auto add = [&](const Word& w, int d) {
    ball.elements.push_back(w);
    ball.depth.push_back(d);
    ball.adjacency.push_back(std::vector<int>(2 * k, -1));
    return static_cast<int>(ball.elements.size()) - 1;
  };
  add({}, 0);

  for (int i = 0; i < static_cast<int>(ball.elements.size()); ++i) {
    for (int idx = 0; idx < k; ++idx)
      for (int sign : {-1, 1}) {
        SignedLetter l{idx, sign};
        int c = letter_code(l);
        if (ball.adjacency[i][c] >= 0) continue;
        Word w = ball.elements[i];
        w.push_back(l);
        w = free_reduce(w);
        // Match against every known element, solver-certified.
        int target = -1;
        for (int j = 0; j < static_cast<int>(ball.elements.size()) && target < 0;
             ++j) {
          Word diff = w;
          Word ji = inverse(ball.elements[j]);
          diff.insert(diff.end(), ji.begin(), ji.end());
          diff = free_reduce(diff);
          if (diff.empty()) {
            target = j;
            continue;
          }
          WordVerdict v = solve(diff, p, cond, opts);
          if (v.kind == WordVerdict::Kind::Trivial) target = j;
          if (v.kind == WordVerdict::Kind::Unknown) ball.approximate = true;
        }
        if (target < 0) {
          if (ball.depth[i] + 1 > radius) continue;  // outside the ball
          target = add(w, ball.depth[i] + 1);
        }
        ball.adjacency[i][c] = target;
        ball.adjacency[target][letter_code(l.inverse())] = i;
      }
  }
  return ball;
}

namespace {

Word tree_word(const LabelledGraph& g, int base, int v) {
  auto path = shortest_path(g, base, v);
  if (!path) throw PreconditionFailed("vertex outside the component");
  return free_reduce(g.label(*path));
}

int ball_locate(const CayleyBall& ball, const Word& w) {
  int at = 0;
  for (SignedLetter l : w) {
    at = ball.adjacency[at][letter_code(l)];
    if (at < 0) throw BallTooSmall("word leaves the ball: its path is cut off");
  }
  return at;
}

std::vector<int> ball_distances(const CayleyBall& ball, int from) {
  std::vector<int> d(ball.elements.size(), -1);
  d[from] = 0;
  std::deque<int> q{from};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int t : ball.adjacency[v])
      if (t >= 0 && d[t] < 0) {
        d[t] = d[v] + 1;
        q.push_back(t);
      }
  }
  return d;
}

}  // namespace

EmbeddingReport embed_component(const LabelledGraph& g, int component,
                                const Presentation& p, const CayleyBall& ball) {
  int diam = girth_and_diameter(g, component).diameter;
  if (ball.radius < diam + max_relator_length(p))
    throw BallTooSmall("ball radius below component diameter + max relator");

  const auto& verts = g.component_vertices(component);
  int base = verts.front();
  std::map<int, int> image;
  for (int v : verts) image[v] = ball_locate(ball, tree_word(g, base, v));

  EmbeddingReport rep;
  rep.certified = !ball.approximate;
  std::set<int> images;
  for (auto [v, e] : image) images.insert(e);
  rep.injective = images.size() == verts.size();
  rep.isometric = true;
  for (size_t a = 0; a < verts.size(); ++a) {
    auto d = ball_distances(ball, image[verts[a]]);
    for (size_t b = a + 1; b < verts.size(); ++b) {
      int dg = graph_distance(g, verts[a], verts[b]);
      int dc = d[image[verts[b]]];
      if (dc < 0 || dc > dg)
        throw LemmaViolation("embedding increased a distance: d_cay > d_graph");
      rep.pairs.push_back({verts[a], verts[b], dg, dc, rep.certified});
      if (dc != dg) {
        rep.isometric = false;
        rep.distortion.push_back({verts[a], verts[b]});
      }
    }
  }
  return rep;
}

namespace {

// All reduced words of length exactly len, lexicographic.
void enumerate_reduced(const Alphabet& a, int len, Word& cur,
                       const std::function<void(const Word&)>& fn) {
  if (len == 0) {
    fn(cur);
    return;
  }
  for (int idx = 0; idx < a.size(); ++idx)
    for (int sign : {-1, 1}) {
      SignedLetter l{idx, sign};
      if (!cur.empty() && cur.back() == l.inverse()) continue;
      cur.push_back(l);
      enumerate_reduced(a, len - 1, cur, fn);
      cur.pop_back();
    }
}

}  // namespace

EmbeddingReport embed_component_certified(const LabelledGraph& g, int component,
                                          const Presentation& p,
                                          const NontrivialityCertifier& cert,
                                          int radius) {
  int diam = girth_and_diameter(g, component).diameter;
  if (radius < diam + max_relator_length(p))
    throw BallTooSmall("ball radius below component diameter + max relator");

  const auto& verts = g.component_vertices(component);
  EmbeddingReport rep;
  rep.injective = true;
  rep.isometric = true;
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b) {
      int dg = graph_distance(g, verts[a], verts[b]);
      Word guv = g.label(*shortest_path(g, verts[a], verts[b]));
      // Upper bound d_cay <= dg via the graph geodesic; the lower bound
      // needs every shorter word refuted.
      bool pair_certified = true;
      for (int len = 0; len < dg && pair_certified; ++len) {
        Word cur;
        enumerate_reduced(p.alphabet, len, cur, [&](const Word& cand) {
          if (!pair_certified) return;
          Word diff = guv;
          Word ci = inverse(cand);
          diff.insert(diff.end(), ci.begin(), ci.end());
          diff = free_reduce(diff);
          if (diff.empty())
            throw LemmaViolation("geodesic word freely equal to shorter word");
          if (!cert.certify(diff)) pair_certified = false;
        });
      }
      rep.pairs.push_back({verts[a], verts[b], dg, dg, pair_certified});
      if (!pair_certified) {
        rep.certified = false;
        rep.injective = false;  // no longer proved
        rep.isometric = false;
      }
    }
  // Injectivity/isometry are claimed only when every pair is certified.
  if (rep.certified) {
    rep.injective = true;
    rep.isometric = true;
  }
  return rep;
}

int coarse_union_metric(const LabelledGraph& g, int x, int y) {
  int cm = g.component_of(x), cn = g.component_of(y);
  if (cm == cn) return graph_distance(g, x, y);
  int dm = girth_and_diameter(g, cm).diameter;
  int dn = girth_and_diameter(g, cn).diameter;
  return dm + dn + (cm + 1) + (cn + 1);
}

SparseCheckResult sparse_check(const std::vector<std::int64_t>& girths,
                               Rational K) {
  if (girths.empty()) throw PreconditionFailed("sparse_check: empty list");
  if (!(K > Rational(1))) throw PreconditionFailed("sparse_check: K must be > 1");
  std::vector<std::int64_t> L = girths;
  std::sort(L.begin(), L.end());
  SparseCheckResult r;
  r.prefix_size = static_cast<int>(L.size());
  for (size_t i = 0; i + 1 < L.size(); ++i) {
    Rational ratio(L[i + 1], L[i]);
    if (ratio > r.max_ratio) r.max_ratio = ratio;
    if (!r.gap_found && ratio > K) {
      r.gap_found = true;
      r.gap_index = static_cast<int>(i);
      // a = (K*l_i + l_{i+1}) / (2K): then l_i < a and a*K < l_{i+1}.
      Rational a = (K * Rational(L[i]) + Rational(L[i + 1])) / (Rational(2) * K);
      if (!(Rational(L[i]) < a) || !(a * K < Rational(L[i + 1])))
        throw LemmaViolation("sparse_check: gap witness fails its inequalities");
      r.witness_a = a;
    }
  }
  if (!r.gap_found) r.witness_a = Rational(L.back() + 1);  // vacuous, beyond max
  return r;
}

namespace {

LabelledGraph subgraph_of_components(const LabelledGraph& g,
                                     const std::vector<int>& comps) {
  GraphBuilder b{g.alphabet()};
  std::map<int, int> vmap;
  for (int c : comps) {
    b.begin_component(g.component_name(c));
    for (int v : g.component_vertices(c)) vmap[v] = b.add_vertex();
  }
  std::set<int> cset(comps.begin(), comps.end());
  for (const auto& e : g.edges())
    if (cset.count(g.component_of(e.src)))
      b.add_edge(vmap.at(e.src), vmap.at(e.dst), e.letter);
  return b.build();
}

}  // namespace

LacunaryReport lacunary_select(const LabelledGraph& g, const std::string& mode,
                               std::optional<Rational> C_override,
                               const SolveOptions& opts) {
  if (mode != "girth-arith" && mode != "word-search")
    throw InputError("lacunary_select: unknown mode " + mode);
  LacunaryReport rep;
  rep.mode = mode;
  int nc = g.num_components();
  std::vector<std::int64_t> girth(nc);
  for (int c = 0; c < nc; ++c) {
    GirthDiameter gd = girth_and_diameter(g, c);
    if (gd.girth < 1)
      throw PreconditionFailed("lacunary_select: component " +
                               g.component_name(c) + " is a forest");
    girth[c] = gd.girth;
    rep.girths.push_back(gd.girth);
    rep.diameter_girth_ratios.push_back(Rational(gd.diameter, gd.girth));
    if (rep.diameter_girth_ratios.back() > rep.C)
      rep.C = rep.diameter_girth_ratios.back();
  }
  if (C_override) rep.C = *C_override;
  if (rep.C == Rational(0)) rep.C = Rational(1);

  std::vector<int> chosen;
  std::int64_t max_girth = 0;
  for (int c = 0; c < nc; ++c) {
    if (chosen.empty()) {
      chosen.push_back(c);
      max_girth = girth[c];
      rep.selected.push_back({c, girth[c], "first pick"});
      continue;
    }
    Rational N(static_cast<std::int64_t>(chosen.size()) + 1);
    Rational threshold = N * Rational(2) * rep.C * Rational(max_girth);
    std::int64_t bound = girth[c];
    std::string bound_desc = "girth " + std::to_string(bound);
    if (mode == "word-search") {
      // Lower bound for the injectivity radius of the next projection: the
      // shortest cycle word of the candidate, checked to be not already
      // trivial over the prefix ("> =" semantics on Unknown).
      LabelledGraph prefix = subgraph_of_components(g, chosen);
      Presentation pp = relators_pi1(prefix);
      LabelledGraph cand = subgraph_of_components(g, {c});
      auto cycles = simple_cycles(cand);
      Word shortest = cycles.front().canonical_word;
      WordVerdict v = solve(shortest, pp, CondTag::Gr7, opts);
      if (v.kind == WordVerdict::Kind::Trivial) continue;  // nothing new
      bound_desc = "injectivity radius >= " + std::to_string(shortest.size()) +
                   " (shortest new cycle word, " +
                   (v.kind == WordVerdict::Kind::Nontrivial
                        ? "solver-nontrivial over prefix"
                        : "not found trivial within budget") +
                   ")";
      bound = static_cast<std::int64_t>(shortest.size());
    }
    if (Rational(bound) > threshold) {
      chosen.push_back(c);
      max_girth = std::max(max_girth, girth[c]);
      rep.selected.push_back(
          {c, girth[c],
           bound_desc + " > " + N.str() + " * 2C * max-prior-girth = " +
               threshold.str()});
    }
  }
  rep.status = static_cast<int>(chosen.size()) == nc ? "all-selected"
                                                     : "insufficient-data";
  return rep;
}

}  // namespace grsc
