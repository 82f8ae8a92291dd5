#pragma once

#include <stdexcept>
#include <string>

namespace mfs {

// Library errors all derive from Error so callers can catch the whole family.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidRank : Error { using Error::Error; };
struct LatticeMismatch : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };
struct NegativeMultiplicity : Error { using Error::Error; };
struct ParityMismatch : Error { using Error::Error; };
struct TooManyRows : Error { using Error::Error; };
struct InvalidChain : Error { using Error::Error; };
struct NotInWell : Error { using Error::Error; };
struct UnsupportedPair : Error { using Error::Error; };
struct MultiplicityViolation : Error { using Error::Error; };
struct SliceTooSmall : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct InconsistentData : Error { using Error::Error; };
struct InvalidBottom : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace mfs
