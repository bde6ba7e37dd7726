#pragma once

#include <stdexcept>
#include <string>

namespace artic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Registration input is rank-deficient (collinear or coincident points).
struct DegenerateGeometry : Error {
    using Error::Error;
};

struct EmptyCloud : Error {
    using Error::Error;
};

// Malformed on-disk data; message carries file (and line where known).
struct FormatError : Error {
    using Error::Error;
};

// Structurally valid files that disagree with each other.
struct ConsistencyError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Invalid synthetic scene specification.
struct SpecError : Error {
    using Error::Error;
};

// Prediction and ground truth share no labels.
struct MatchError : Error {
    using Error::Error;
};

// Frame pair shows no measurable motion; callers record the part as a
// static-outlier candidate rather than failing.
struct ZeroMotion : Error {
    using Error::Error;
};

}  // namespace artic
