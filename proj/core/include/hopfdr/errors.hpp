#pragma once

#include <stdexcept>
#include <string>

namespace hopfdr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct ShapeError : Error {
    using Error::Error;
};

// an identity that should hold exactly failed; the message carries the witness
struct InvariantViolation : Error {
    using Error::Error;
};

// a structure the request needs does not exist (no S^-1, not cleft, braiding defect, ...)
struct Unavailable : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace hopfdr
