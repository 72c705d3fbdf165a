#pragma once

#include <stdexcept>
#include <string>

namespace critline {

// Base class for every error this library throws. `kind()` is the stable
// machine-readable name surfaced by the CLI's failure summaries.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

#define CRITLINE_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                            \
      public:                                                              \
        explicit NAME(const std::string& message) : Error(#NAME, message) {} \
    }

CRITLINE_DEFINE_ERROR(DomainError);       // precondition violated
CRITLINE_DEFINE_ERROR(PoleError);         // evaluation at a pole
CRITLINE_DEFINE_ERROR(AccuracyError);     // internal error bound exceeds tolerance
CRITLINE_DEFINE_ERROR(ConvergenceError);  // iteration failed to stabilize
CRITLINE_DEFINE_ERROR(NearZeroError);     // function value too close to zero to use
CRITLINE_DEFINE_ERROR(StepLimitError);    // adaptive halving exceeded its depth cap
CRITLINE_DEFINE_ERROR(IntegralityError);  // count residual exceeded the hard limit
CRITLINE_DEFINE_ERROR(MissedZeroError);   // scan and count disagree after retries
CRITLINE_DEFINE_ERROR(BracketError);      // root bracket does not straddle a sign change
CRITLINE_DEFINE_ERROR(CatalogGapError);   // zero catalog does not cover the requested range

#undef CRITLINE_DEFINE_ERROR

}  // namespace critline
