#pragma once

#include <stdexcept>
#include <string>

namespace rowmotion {

/// Base class for every error the engine reports.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define ROWMOTION_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
  public:                              \
    using Error::Error;                \
  }

ROWMOTION_DEFINE_ERROR(CycleDetected);
ROWMOTION_DEFINE_ERROR(UnknownLabel);
ROWMOTION_DEFINE_ERROR(DuplicateLabel);
ROWMOTION_DEFINE_ERROR(NotAPartialOrder);
ROWMOTION_DEFINE_ERROR(ForeignElement);
ROWMOTION_DEFINE_ERROR(NotAnAntichain);
ROWMOTION_DEFINE_ERROR(NotAMember);
ROWMOTION_DEFINE_ERROR(HypothesesNotMet);
ROWMOTION_DEFINE_ERROR(SizeLimitExceeded);
ROWMOTION_DEFINE_ERROR(InvalidRank);
ROWMOTION_DEFINE_ERROR(NoShortRoots);
ROWMOTION_DEFINE_ERROR(UnsupportedVariant);
ROWMOTION_DEFINE_ERROR(NonIntegralCount);
ROWMOTION_DEFINE_ERROR(ConventionMismatch);
ROWMOTION_DEFINE_ERROR(NotTypeA);

#undef ROWMOTION_DEFINE_ERROR

/// Malformed textual input; carries the 1-based line number when known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace rowmotion
