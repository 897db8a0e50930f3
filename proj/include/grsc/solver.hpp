#ifndef GRSC_SOLVER_HPP
#define GRSC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grsc/diagram.hpp"
#include "grsc/presentation.hpp"
#include "grsc/quotient.hpp"

namespace grsc {

/// The verified small cancellation condition backing the solver's area
/// bound: Gr(7) and Gr'(1/6) give area <= 8|w|, Gr(6) gives 3|w|^2.
enum class CondTag { Gr7, Gr6, Grp16 };

struct DerivationStep {
  int position = 0;  // splice position in the current reduced word
  int relator = 0;   // index into the presentation
  int rotation = 0;
  bool inverted = false;
};

/// The relator variant a derivation step splices in.
Word relator_variant(const Presentation& p, const DerivationStep& s);

/// Replays a derivation: returns the final word, starting from w and
/// splicing each step's variant at its position, freely reducing.
/// Throws ReplayFailed on an out-of-range step.
Word replay_derivation(const Word& w, const Presentation& p,
                       const std::vector<DerivationStep>& steps);

struct SearchCertificate {
  std::string kind;  // "exhaustive" or "quotient"
  std::string condition;
  std::int64_t area_bound = 0;
  std::int64_t length_bound = 0;
  std::int64_t nodes = 0;
  std::string detail;
};

struct WordVerdict {
  enum class Kind { Trivial, Nontrivial, Unknown } kind = Kind::Unknown;
  std::vector<DerivationStep> derivation;  // Trivial only
  std::optional<SearchCertificate> certificate;
  std::int64_t nodes_expanded = 0;
};

struct SolveOptions {
  std::int64_t node_budget = 10000000;
  // Optional sound nontriviality oracle consulted before the search; a
  // certificate short-circuits instances whose bounded state space is far
  // beyond enumeration.
  const NontrivialityCertifier* certifier = nullptr;
};

/// Bounded word problem: breadth-first over reduced words reachable by
/// splicing relator conjugates, with at most A splices and intermediate
/// length <= |w| + A*M. Requires w reduced and the condition verified on
/// the underlying graph (caller's obligation, recorded in the certificate).
WordVerdict solve(const Word& w, const Presentation& p, CondTag cond,
                  const SolveOptions& opts = {});

struct DehnStep {
  int position = 0;
  int relator = 0;
  int rotation = 0;
  bool inverted = false;
  int matched = 0;  // length of the replaced subword (> half the relator)
};

struct DehnResult {
  Word word;
  std::vector<DehnStep> steps;
};

/// Greedy Dehn shortening: replace any subword that is more than half of a
/// relator variant by the shorter complement. Empty result proves
/// triviality; a nonempty fixed point proves nothing (heuristic only).
DehnResult dehn_greedy(const Word& w, const Presentation& p);

/// Van Kampen diagram from a trivializing derivation: a bouquet of one face
/// per step joined to the base by conjugator arcs, folded until the
/// boundary word is exactly w. Area equals the derivation length.
Diagram derivation_to_diagram(const Word& w,
                              const std::vector<DerivationStep>& steps,
                              const Presentation& p);

}  // namespace grsc

#endif
