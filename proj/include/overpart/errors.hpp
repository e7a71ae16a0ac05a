#pragma once

#include <stdexcept>
#include <string>

namespace overpart {

struct NonUnitLeadingCoefficient : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivergentProduct : std::domain_error {
  using std::domain_error::domain_error;
};

/// A comparison or coefficient lookup reached past a series' valid range.
struct InsufficientPrecision : std::range_error {
  using std::range_error::range_error;
};

/// Input lies outside the domain of a map (e.g. phi applied outside G_t).
struct NotInDomain : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonUnitDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonTerminatingWithoutConvergence : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace overpart
