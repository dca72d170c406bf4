#pragma once

#include <stdexcept>
#include <string>

namespace supergrading {

struct AmbientMismatch : std::invalid_argument {
  AmbientMismatch() : std::invalid_argument("elements belong to different algebras") {}
};

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotOrthosymplectic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonIntegralGrading : std::domain_error {
  using std::domain_error::domain_error;
};

struct OddGrading : std::domain_error {
  using std::domain_error::domain_error;
};

struct MembershipFailure : std::logic_error {
  using std::logic_error::logic_error;
};

// (e, h) admits no f with [e,f] = h and [h,f] = -2f.
struct NotCompletable : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace supergrading
