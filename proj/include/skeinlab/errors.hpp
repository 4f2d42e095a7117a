#pragma once
#include <stdexcept>
#include <string>

namespace skeinlab {

// Error taxonomy shared by the whole library.  The CLI maps these to exit
// codes: InputError -> 2 (malformed user input), everything else -> 1
// (a computation that could not be carried out).
struct SkeinError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically invalid request (zero denominator, bad specialization, ...).
struct DomainError : SkeinError {
  using SkeinError::SkeinError;
};

// Malformed external input (PD text, braid words, JSON rings, CSV rows).
struct InputError : SkeinError {
  using SkeinError::SkeinError;
};

// Valid request that this implementation deliberately does not handle
// (size caps, degenerate eigenstructure, ...).
struct UnsupportedError : SkeinError {
  using SkeinError::SkeinError;
};

// "Must never fire" internal consistency assertions (exact divisions that
// are guaranteed by theorems, cross-check mismatches, ...).
struct InternalError : SkeinError {
  using SkeinError::SkeinError;
};

}  // namespace skeinlab
