#pragma once
#include <stdexcept>
#include <string>

namespace ncres {

// Base for all engine errors; callers can catch this to separate engine faults from std ones.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct SecondDerivativeError : Error { using Error::Error; };
struct DecayError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct InvariantError : Error { using Error::Error; };

}  // namespace ncres
