#ifndef GRSC_CONDITIONS_HPP
#define GRSC_CONDITIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grsc/pieces.hpp"
#include "grsc/rational.hpp"

namespace grsc {

struct CycleStats {
  Word cycle_word;
  int length = 0;
  int max_piece_subpath = 0;
  int min_segmentation = -1;  // -1 when unsegmentable into pieces
  bool unsegmentable = false;
};

struct ConditionWitness {
  Word cycle_word;
  // For C(n)/Gr(n): a segmentation into fewer than n pieces, as piece
  // lengths around the cycle from `offset`. For C'/Gr': the long piece.
  int offset = 0;
  std::vector<int> segmentation;
  Word piece;
};

struct ConditionReport {
  std::string condition;
  bool holds = false;
  std::optional<ConditionWitness> witness;
  std::vector<CycleStats> stats;
};

/// C(n): no simple cycle is a concatenation of fewer than n pieces.
/// Cycles containing a non-piece edge cannot be segmented at all and
/// constrain nothing; they are reported as unsegmentable.
ConditionReport check_Cn(const PieceIndex& idx, int n,
                         std::int64_t budget = 1000000);

/// C'(lambda): every piece subpath p of every simple cycle gamma satisfies
/// |p| < lambda * |gamma|, strictly, in exact arithmetic.
ConditionReport check_Cprime(const PieceIndex& idx, Rational lambda,
                             std::int64_t budget = 1000000);

/// Gr(n) / Gr'(lambda): the same checks with essential-piece extents.
ConditionReport check_Gr_n(const PieceIndex& idx, int n,
                           std::int64_t budget = 1000000);
ConditionReport check_Gr_prime(const PieceIndex& idx, Rational lambda,
                               std::int64_t budget = 1000000);

/// From a holding C'(lambda) report, the implied C(floor(1/lambda)+1)
/// report, derived without re-running the cycle search.
ConditionReport cprime_implies_c(const ConditionReport& cprime_report,
                                 Rational lambda);

}  // namespace grsc

#endif
