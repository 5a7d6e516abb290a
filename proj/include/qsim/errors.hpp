// Copyright 2026 the qsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad parameter values: negative rates, mixed ket/bra kinds, length mismatches.
struct InvalidArgument : Error {
    using Error::Error;
};

/// Index outside the valid range of a basis (e.g. Fock level above the cutoff).
struct OutOfRange : Error {
    using Error::Error;
};

/// Two quantum objects with incompatible bases were combined. The message
/// names the bases on both sides of the failed check.
struct BasisIncompatible : Error {
    using Error::Error;
};

/// A state with (numerically) zero norm where a normalizable one is required.
struct DegenerateState : Error {
    using Error::Error;
};

/// A quantum jump was triggered but every jump channel has zero weight.
struct DegenerateJump : Error {
    using Error::Error;
};

/// Adaptive integration could not continue (step-size underflow).
/// Carries the last time that was reached successfully.
class IntegrationFailure : public Error {
  public:
    IntegrationFailure(const std::string& msg, double last_good_time)
        : Error(msg), last_good_time_(last_good_time) {}

    double last_good_time() const { return last_good_time_; }

  private:
    double last_good_time_;
};

}  // namespace qsim
