#include "grsc/solver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace grsc {

Word relator_variant(const Presentation& p, const DerivationStep& s) {
  if (s.relator < 0 || s.relator >= static_cast<int>(p.relators.size()))
    throw ReplayFailed("derivation step references missing relator");
  Word base = p.relators[s.relator];
  if (s.inverted) base = inverse(base);
  return rotate(base, s.rotation);
}

Word replay_derivation(const Word& w, const Presentation& p,
                       const std::vector<DerivationStep>& steps) {
  Word cur = w;
  for (const auto& s : steps) {
    if (s.position < 0 || s.position > static_cast<int>(cur.size()))
      throw ReplayFailed("derivation step position out of range");
    Word variant = relator_variant(p, s);
    Word next(cur.begin(), cur.begin() + s.position);
    next.insert(next.end(), variant.begin(), variant.end());
    next.insert(next.end(), cur.begin() + s.position, cur.end());
    cur = free_reduce(next);
  }
  return cur;
}

namespace {

std::vector<std::pair<DerivationStep, Word>> all_variants(const Presentation& p) {
  std::vector<std::pair<DerivationStep, Word>> out;
  std::set<Word> seen;
  for (int r = 0; r < static_cast<int>(p.relators.size()); ++r)
    for (int inv = 0; inv < 2; ++inv)
      for (int k = 0; k < static_cast<int>(p.relators[r].size()); ++k) {
        DerivationStep s{0, r, k, inv == 1};
        Word v = relator_variant(p, s);
        if (seen.insert(v).second) out.push_back({s, std::move(v)});
      }
  return out;
}

std::string cond_name(CondTag c) {
  switch (c) {
    case CondTag::Gr7:
      return "Gr(7)";
    case CondTag::Gr6:
      return "Gr(6)";
    case CondTag::Grp16:
      return "Gr'(1/6)";
  }
  return "?";
}

}  // namespace

WordVerdict solve(const Word& w0, const Presentation& p, CondTag cond,
                  const SolveOptions& opts) {
  if (!is_reduced(w0)) throw PreconditionFailed("solve: word not reduced");
  const std::int64_t n = static_cast<std::int64_t>(w0.size());
  const std::int64_t A =
      cond == CondTag::Gr6 ? 3 * n * n : 8 * n;  // theorem-backed area bound
  std::int64_t M = 0;
  for (const auto& r : p.relators)
    M = std::max<std::int64_t>(M, static_cast<std::int64_t>(r.size()));
  const std::int64_t max_len = n + A * M;

  WordVerdict v;
  if (w0.empty()) {
    v.kind = WordVerdict::Kind::Trivial;
    return v;
  }

  if (opts.certifier) {
    if (auto cert = opts.certifier->certify(w0)) {
      v.kind = WordVerdict::Kind::Nontrivial;
      SearchCertificate sc;
      sc.kind = "quotient";
      sc.condition = cond_name(cond);
      sc.area_bound = A;
      sc.length_bound = max_len;
      sc.detail = cert->kind + ": " + cert->detail;
      v.certificate = std::move(sc);
      return v;
    }
  }

  auto variants = all_variants(p);
  std::map<Word, std::pair<Word, DerivationStep>> parent;
  std::set<Word> seen{w0};
  std::deque<std::pair<Word, std::int64_t>> frontier{{w0, 0}};
  bool exhausted = true;

  while (!frontier.empty()) {
    auto [cur, splices] = frontier.front();
    frontier.pop_front();
    if (splices >= A) continue;
    for (const auto& [step0, variant] : variants) {
      for (int pos = 0; pos <= static_cast<int>(cur.size()); ++pos) {
        Word next(cur.begin(), cur.begin() + pos);
        next.insert(next.end(), variant.begin(), variant.end());
        next.insert(next.end(), cur.begin() + pos, cur.end());
        next = free_reduce(next);
        if (static_cast<std::int64_t>(next.size()) > max_len) continue;
        if (!seen.insert(next).second) continue;
        ++v.nodes_expanded;
        DerivationStep step = step0;
        step.position = pos;
        parent[next] = {cur, step};
        if (next.empty()) {
          v.kind = WordVerdict::Kind::Trivial;
          Word at;
          while (!(at == w0)) {
            auto& [prev, st] = parent.at(at);
            v.derivation.push_back(st);
            at = prev;
          }
          std::reverse(v.derivation.begin(), v.derivation.end());
          if (replay_derivation(w0, p, v.derivation) != Word{})
            throw LemmaViolation("solve: derivation does not replay");
          return v;
        }
        frontier.push_back({std::move(next), splices + 1});
        if (v.nodes_expanded >= opts.node_budget) {
          exhausted = false;
          frontier.clear();
          break;
        }
      }
      if (!exhausted) break;
    }
    if (!exhausted) break;
  }

  SearchCertificate sc;
  sc.condition = cond_name(cond);
  sc.area_bound = A;
  sc.length_bound = max_len;
  sc.nodes = v.nodes_expanded;
  if (exhausted) {
    v.kind = WordVerdict::Kind::Nontrivial;
    sc.kind = "exhaustive";
    sc.detail = "state space within the bounds exhausted";
  } else {
    v.kind = WordVerdict::Kind::Unknown;
    sc.kind = "budget";
    sc.detail = "node budget exceeded";
  }
  v.certificate = std::move(sc);
  return v;
}

DehnResult dehn_greedy(const Word& w0, const Presentation& p) {
  DehnResult res;
  res.word = free_reduce(w0);
  auto variants = all_variants(p);
  for (bool changed = true; changed;) {
    changed = false;
    // Longest match first so each replacement shortens maximally.
    int best_m = -1, best_pos = -1;
    DehnStep best_step;
    Word best_complement;
    for (const auto& [step0, variant] : variants) {
      int L = static_cast<int>(variant.size());
      for (int m = L; 2 * m > L; --m) {
        if (m <= best_m) break;
        Word head(variant.begin(), variant.begin() + m);
        for (int pos = 0; pos + m <= static_cast<int>(res.word.size()); ++pos) {
          if (!std::equal(head.begin(), head.end(), res.word.begin() + pos))
            continue;
          best_m = m;
          best_pos = pos;
          best_step = {pos, step0.relator, step0.rotation, step0.inverted, m};
          best_complement = inverse(Word(variant.begin() + m, variant.end()));
          break;
        }
        if (best_m == m) break;
      }
    }
    if (best_m > 0) {
      Word next(res.word.begin(), res.word.begin() + best_pos);
      next.insert(next.end(), best_complement.begin(), best_complement.end());
      next.insert(next.end(), res.word.begin() + best_pos + best_m,
                  res.word.end());
      res.word = free_reduce(next);
      res.steps.push_back(best_step);
      changed = true;
    }
  }
  return res;
}

namespace {

// One boundary folding pass: glue or trim the first adjacent cancelling
// dart pair of the boundary walk. Returns false at a fixed point.
bool fold_boundary_once(Diagram& d) {
  for (size_t i = 0; i + 1 < d.boundary.size(); ++i) {
    Dart a = d.boundary[i], b = d.boundary[i + 1];
    if (d.dart_letter(a) != d.dart_letter(b).inverse()) continue;
    if (a.edge == b.edge) {
      // Spur: the same edge traversed out and back; drop it and its tip.
      int tip = d.dart_dst(a);
      Diagram out;
      out.alphabet = d.alphabet;
      std::map<int, int> vmap;
      for (int v = 0; v < d.num_vertices; ++v)
        if (v != tip) vmap[v] = static_cast<int>(vmap.size());
      out.num_vertices = static_cast<int>(vmap.size());
      out.base = vmap.at(d.base);
      std::map<int, int> emap;
      for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        if (e == a.edge) continue;
        emap[e] = static_cast<int>(out.edges.size());
        out.edges.push_back({vmap.at(d.edges[e].src), vmap.at(d.edges[e].dst),
                             d.edges[e].letter});
      }
      for (const auto& f : d.faces) {
        std::vector<Dart> w;
        for (Dart dt : f) w.push_back({emap.at(dt.edge), dt.forward});
        out.faces.push_back(std::move(w));
      }
      for (size_t k = 0; k < d.boundary.size(); ++k) {
        if (k == i || k == i + 1) continue;
        out.boundary.push_back({emap.at(d.boundary[k].edge),
                                d.boundary[k].forward});
      }
      d = std::move(out);
      return true;
    }
    // Glue b backwards onto a: identify the oriented edges and far ends.
    std::vector<int> vparent(d.num_vertices);
    for (int v = 0; v < d.num_vertices; ++v) vparent[v] = v;
    std::function<int(int)> vfind = [&](int v) {
      return vparent[v] == v ? v : vparent[v] = vfind(vparent[v]);
    };
    vparent[vfind(d.dart_src(a))] = vfind(d.dart_dst(b));

    // Edge identification: a as-is with b reversed.
    int keep = a.edge, gone = b.edge;
    bool flip = (a.forward == b.forward);

    Diagram out;
    out.alphabet = d.alphabet;
    std::map<int, int> vmap;
    for (int v = 0; v < d.num_vertices; ++v) {
      int r = vfind(v);
      if (!vmap.count(r)) vmap[r] = static_cast<int>(vmap.size());
    }
    out.num_vertices = static_cast<int>(vmap.size());
    out.base = vmap.at(vfind(d.base));
    std::map<int, int> emap;
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
      if (e == gone) continue;
      emap[e] = static_cast<int>(out.edges.size());
      out.edges.push_back({vmap.at(vfind(d.edges[e].src)),
                           vmap.at(vfind(d.edges[e].dst)), d.edges[e].letter});
    }
    auto map_dart = [&](Dart dt) {
      if (dt.edge == gone)
        return Dart{emap.at(keep), static_cast<bool>(dt.forward ^ flip)};
      return Dart{emap.at(dt.edge), dt.forward};
    };
    for (const auto& f : d.faces) {
      std::vector<Dart> w;
      for (Dart dt : f) w.push_back(map_dart(dt));
      out.faces.push_back(std::move(w));
    }
    for (size_t k = 0; k < d.boundary.size(); ++k) {
      if (k == i || k == i + 1) continue;
      out.boundary.push_back(map_dart(d.boundary[k]));
    }
    d = std::move(out);
    return true;
  }
  return false;
}

}  // namespace

Diagram derivation_to_diagram(const Word& w,
                              const std::vector<DerivationStep>& steps,
                              const Presentation& p) {
  if (replay_derivation(w, p, steps) != Word{})
    throw ReplayFailed("derivation does not reduce the word to empty");

  // w = prod_k (u_k . rho_k . u_k^-1) in the free group, where u_k is the
  // prefix before splice k and rho_k the inverse of the spliced variant.
  struct Lollipop {
    Word conjugator;
    Word relator;
  };
  std::vector<Lollipop> lolli;
  Word cur = w;
  for (const auto& s : steps) {
    Word variant = relator_variant(p, s);
    Word prefix(cur.begin(), cur.begin() + s.position);
    lolli.push_back({prefix, inverse(variant)});
    Word next(cur.begin(), cur.begin() + s.position);
    next.insert(next.end(), variant.begin(), variant.end());
    next.insert(next.end(), cur.begin() + s.position, cur.end());
    cur = free_reduce(next);
  }

  Diagram d;
  d.alphabet = p.alphabet;
  d.num_vertices = 1;
  d.base = 0;
  for (const auto& lp : lolli) {
    // Arc out from base reading the conjugator...
    int at = d.base;
    std::vector<Dart> path;
    for (SignedLetter l : lp.conjugator) {
      int next = d.num_vertices++;
      int e = static_cast<int>(d.edges.size());
      if (l.sign > 0)
        d.edges.push_back({at, next, l.idx});
      else
        d.edges.push_back({next, at, l.idx});
      path.push_back({e, l.sign > 0});
      at = next;
    }
    // ...a face loop reading the relator...
    std::vector<Dart> loop;
    int loop_start = at;
    for (size_t i = 0; i < lp.relator.size(); ++i) {
      SignedLetter l = lp.relator[i];
      int next = (i + 1 == lp.relator.size()) ? loop_start : d.num_vertices++;
      int e = static_cast<int>(d.edges.size());
      if (l.sign > 0)
        d.edges.push_back({at, next, l.idx});
      else
        d.edges.push_back({next, at, l.idx});
      loop.push_back({e, l.sign > 0});
      at = next;
    }
    // The boundary traverses the loop once, so the face walk carries the
    // same darts: together with the reversed boundary this uses each loop
    // dart exactly once.
    d.faces.push_back(loop);
    // ...and back along the arc.
    d.boundary.insert(d.boundary.end(), path.begin(), path.end());
    d.boundary.insert(d.boundary.end(), loop.begin(), loop.end());
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      d.boundary.push_back(it->reverse());
  }

  while (fold_boundary_once(d)) {
  }

  if (d.boundary_word() != w)
    throw LemmaViolation("derivation_to_diagram: boundary word mismatch");
  return d;
}

}  // namespace grsc
