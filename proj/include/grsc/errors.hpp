#ifndef GRSC_ERRORS_HPP
#define GRSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grsc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input could not be parsed or refers to nonexistent entities.
struct InputError : Error {
  using Error::Error;
};

/// An enumeration exceeded its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// A stated precondition of an operation does not hold.
struct PreconditionFailed : Error {
  using Error::Error;
};

/// A theorem-backed invariant failed at runtime. Carries locating data in
/// the message; always indicates a bug or a false premise upstream.
struct LemmaViolation : Error {
  using Error::Error;
};

}  // namespace grsc

#endif
