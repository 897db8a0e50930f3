#ifndef GRSC_QUOTIENT_HPP
#define GRSC_QUOTIENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grsc/presentation.hpp"

namespace grsc {

/// Sound nontriviality certificates for group elements, via quotients: the
/// abelianization (exact integer lattice membership) and randomly found
/// finite symmetric-group quotients. A certificate proves the word maps to
/// a nonidentity element in some quotient, hence is nonidentity; failure to
/// certify proves nothing.
class NontrivialityCertifier {
 public:
  struct Options {
    int max_degree = 7;        // symmetric groups S_3..S_max_degree
    int trials_per_degree = 400000;
    int max_homs = 60;         // capped per degree at max_homs/(max_degree-2)
    std::uint32_t seed = 0x5eed5eed;
  };

  explicit NontrivialityCertifier(const Presentation& p);
  NontrivialityCertifier(const Presentation& p, Options opts);

  struct Certificate {
    std::string kind;  // "abelianization" or "finite-quotient"
    std::string detail;
  };

  /// A certificate that w != 1 in the presented group, if one is found.
  std::optional<Certificate> certify(const Word& w) const;

  int num_finite_quotients() const { return static_cast<int>(homs_.size()); }

 private:
  int letters_;
  // Triangular integer basis of the relator lattice in Z^letters.
  std::vector<std::vector<std::int64_t>> lattice_;  // pivot columns
  std::vector<int> pivot_row_;
  // Finite quotients: for each hom, one permutation image per letter.
  std::vector<std::vector<std::vector<int>>> homs_;
  std::vector<int> hom_degree_;

  bool in_lattice(std::vector<std::int64_t> v) const;
};

inline NontrivialityCertifier::NontrivialityCertifier(const Presentation& p)
    : NontrivialityCertifier(p, Options()) {}

}  // namespace grsc

#endif
