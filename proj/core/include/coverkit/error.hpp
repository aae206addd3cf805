#pragma once

#include <stdexcept>
#include <string>

namespace coverkit {

// Caller violated a documented precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Requested parameters admit no object (e.g. order below the Moore bound).
struct InfeasibleError : std::domain_error {
  using std::domain_error::domain_error;
};

// A randomized search used up its try budget.
struct ExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A post-condition check on a constructed object failed.
struct VerificationError : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact computation requested beyond the configured radius.
struct OutOfRadius : std::range_error {
  using std::range_error::range_error;
};

}  // namespace coverkit
