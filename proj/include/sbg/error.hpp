#pragma once

#include <stdexcept>

namespace sbg {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table or generator input fails one of the group laws.
struct NotAGroup : Error {
  using Error::Error;
};

// Requested structure exceeds the fixed size caps.
struct TooLarge : Error {
  using Error::Error;
};

struct NotASubgroup : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

// Target element is not reachable as a product of conjugates.
struct NotInClosure : Error {
  using Error::Error;
};

struct GroupIsNilpotent : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

// An internally certified invariant failed; indicates a bug, not bad input.
struct InternalContradiction : Error {
  using Error::Error;
};

struct SearchSpaceTooLarge : Error {
  using Error::Error;
};

struct HypothesisViolated : Error {
  using Error::Error;
};

struct BoundTooLarge : Error {
  using Error::Error;
};

struct StateSpaceTooLarge : Error {
  using Error::Error;
};

struct NotGenerating : Error {
  using Error::Error;
};

struct SizeCap : Error {
  using Error::Error;
};

struct UnknownGroup : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace sbg
