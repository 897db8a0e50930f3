#include "grsc/conditions.hpp"

#include <algorithm>
#include <set>

namespace grsc {

namespace {

struct CycleAnalysis {
  SimpleCycle cycle;
  std::vector<int> ext;  // ext[i]: max piece extension from offset i, <= L
  CycleStats stats;
  int best_offset = -1;          // offset achieving min_segmentation
  std::vector<int> best_pieces;  // its greedy piece lengths
};

// Max (essential) piece extension around the cycle from each offset,
// capped at the full traversal. Distinct witness starts remain at distinct
// positions under a reduced labelling, so survivor walks count witnesses.
std::vector<int> piece_extents(const PieceIndex& idx, const SimpleCycle& c,
                               bool essential) {
  const LabelledGraph& g = idx.graph();
  int L = c.path.length();
  std::vector<int> ext(L, 0);
  for (int i = 0; i < L; ++i) {
    std::vector<std::pair<int, int>> walks;
    for (int v = 0; v < g.num_vertices(); ++v) walks.push_back({v, v});
    for (int m = 0; m < L; ++m) {
      SignedLetter l = g.step_letter(c.path.steps[(i + m) % L]);
      std::vector<std::pair<int, int>> next;
      for (auto [o, cur] : walks) {
        auto s = g.step_reading(cur, l);
        if (s) next.push_back({o, g.step_target(*s)});
      }
      walks = std::move(next);
      bool piece = walks.size() >= 2;
      if (piece && essential) {
        std::set<int> orbits;
        for (auto [o, cur] : walks) orbits.insert(idx.orbit_of(o));
        piece = orbits.size() >= 2;
      }
      if (!piece) break;
      ext[i] = m + 1;
    }
  }
  return ext;
}

CycleAnalysis analyze_cycle(const PieceIndex& idx, SimpleCycle c, bool essential) {
  CycleAnalysis a;
  a.ext = piece_extents(idx, c, essential);
  int L = c.path.length();
  a.stats.cycle_word = c.canonical_word;
  a.stats.length = L;
  a.stats.max_piece_subpath = *std::max_element(a.ext.begin(), a.ext.end());

  // Greedy farthest-reach from each offset; exact because valid intervals
  // are downward closed (every prefix of a piece is a piece).
  int best = -1;
  for (int i = 0; i < L; ++i) {
    if (a.ext[i] == 0) continue;
    int covered = 0, count = 0;
    std::vector<int> pieces;
    while (covered < L) {
      int step = std::min(a.ext[(i + covered) % L], L - covered);
      if (step == 0) break;
      pieces.push_back(step);
      covered += step;
      ++count;
    }
    if (covered == L && (best < 0 || count < best)) {
      best = count;
      a.best_offset = i;
      a.best_pieces = std::move(pieces);
    }
  }
  a.stats.min_segmentation = best;
  a.stats.unsegmentable = best < 0;
  a.cycle = std::move(c);
  return a;
}

Word subword_around(const LabelledGraph& g, const SimpleCycle& c, int offset,
                    int len) {
  Word w;
  int L = c.path.length();
  for (int m = 0; m < len; ++m)
    w.push_back(g.step_letter(c.path.steps[(offset + m) % L]));
  return w;
}

ConditionReport check_count(const PieceIndex& idx, int n, bool essential,
                            std::int64_t budget) {
  ConditionReport rep;
  rep.condition = (essential ? "Gr(" : "C(") + std::to_string(n) + ")";
  rep.holds = true;
  for (auto& c : simple_cycles(idx.graph(), budget)) {
    CycleAnalysis a = analyze_cycle(idx, std::move(c), essential);
    if (!a.stats.unsegmentable && a.stats.min_segmentation < n && rep.holds) {
      rep.holds = false;
      ConditionWitness w;
      w.cycle_word = a.stats.cycle_word;
      w.offset = a.best_offset;
      w.segmentation = a.best_pieces;
      rep.witness = std::move(w);
    }
    rep.stats.push_back(std::move(a.stats));
  }
  return rep;
}

ConditionReport check_metric(const PieceIndex& idx, Rational lambda,
                             bool essential, std::int64_t budget) {
  ConditionReport rep;
  rep.condition = (essential ? "Gr'(" : "C'(") + lambda.str() + ")";
  rep.holds = true;
  for (auto& c : simple_cycles(idx.graph(), budget)) {
    CycleAnalysis a = analyze_cycle(idx, std::move(c), essential);
    // Strict inequality, exact rationals: |p| < lambda * |gamma|.
    if (!(Rational(a.stats.max_piece_subpath) <
          lambda * Rational(a.stats.length)) &&
        rep.holds) {
      rep.holds = false;
      ConditionWitness w;
      w.cycle_word = a.stats.cycle_word;
      int off = static_cast<int>(std::max_element(a.ext.begin(), a.ext.end()) -
                                 a.ext.begin());
      w.offset = off;
      w.piece = subword_around(idx.graph(), a.cycle, off, a.ext[off]);
      rep.witness = std::move(w);
    }
    rep.stats.push_back(std::move(a.stats));
  }
  return rep;
}

}  // namespace

ConditionReport check_Cn(const PieceIndex& idx, int n, std::int64_t budget) {
  return check_count(idx, n, false, budget);
}

ConditionReport check_Cprime(const PieceIndex& idx, Rational lambda,
                             std::int64_t budget) {
  return check_metric(idx, lambda, false, budget);
}

ConditionReport check_Gr_n(const PieceIndex& idx, int n, std::int64_t budget) {
  return check_count(idx, n, true, budget);
}

ConditionReport check_Gr_prime(const PieceIndex& idx, Rational lambda,
                               std::int64_t budget) {
  return check_metric(idx, lambda, true, budget);
}

ConditionReport cprime_implies_c(const ConditionReport& cprime_report,
                                 Rational lambda) {
  if (!cprime_report.holds)
    throw PreconditionFailed("cprime_implies_c: input report does not hold");
  if (lambda <= Rational(0))
    throw PreconditionFailed("cprime_implies_c: lambda must be positive");
  // n = floor(1/lambda) + 1.
  int n = static_cast<int>(lambda.den() / lambda.num()) + 1;
  ConditionReport rep;
  rep.condition = "C(" + std::to_string(n) + ")";
  rep.holds = true;
  rep.stats = cprime_report.stats;
  // Internal cross-check: a cycle of length L with pieces of length
  // < lambda*L needs more than 1/lambda pieces, hence at least n.
  for (const auto& s : rep.stats)
    if (!s.unsegmentable && s.min_segmentation < n)
      throw LemmaViolation("cprime_implies_c: stats contradict the implication");
  return rep;
}

}  // namespace grsc
