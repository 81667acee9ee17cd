#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

// Input lies outside an operation's mathematical domain (poles, divergent
// regions, empty ranges). Alias so callers can catch one type for both
// library- and std-originated domain failures.
using domain_error = std::domain_error;

// Too few samples to form the requested statistic.
struct insufficient_data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Physical parameters outside the regime an operation is valid in
// (non-adiabatic LLL projection, box smaller than the magnetic length, ...).
struct regime_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested tolerance not reached; carries the error estimate achieved.
struct accuracy_error : std::runtime_error {
  double achieved;
  accuracy_error(const std::string& msg, double got)
      : std::runtime_error(msg), achieved(got) {}
};

}  // namespace rsl
