#pragma once

#include <stdexcept>
#include <string>

namespace bilindisc {

// Every error raised by the library derives from Error so that callers (the
// CLI in particular) can tell library failures apart from programming bugs.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};

// Operation called on a system or form whose shape it does not support.
struct WrongShapeError : Error {
    using Error::Error;
};

// Leading coefficient of a binary form vanishes in the requested chart.
struct DegenerateLeadingError : Error {
    using Error::Error;
};

struct InconsistentError : Error {
    using Error::Error;
};

struct IdenticallyZeroError : Error {
    using Error::Error;
};

// A seeded sampler kept drawing degenerate systems.
struct DegenerateSampleError : Error {
    using Error::Error;
};

struct NotSingularError : Error {
    using Error::Error;
};

struct ZeroDenominatorError : Error {
    using Error::Error;
};

// A claimed kernel element or multiple root failed its exact check.
struct CorrespondenceError : Error {
    using Error::Error;
};

struct NoCertificateError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace bilindisc
