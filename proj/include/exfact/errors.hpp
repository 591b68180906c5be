#ifndef EXFACT_ERRORS_HPP
#define EXFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exfact {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- input / shape errors ----------------------------------------------------

struct DimensionMismatch : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct EmptyMatrix : Error {
    using Error::Error;
};

struct RaggedRows : Error {
    using Error::Error;
};

struct MalformedEntry : Error {
    MalformedEntry(const std::string& what, int row, int col)
        : Error(what), row(row), col(col) {}
    int row;  // 1-based locus
    int col;
};

// -- limits of the exact scalar tower ----------------------------------------

struct RadicandTooLarge : Error {
    using Error::Error;
};

struct IncomparableFields : Error {
    using Error::Error;
};

struct ComplexRootsUnsupported : Error {
    using Error::Error;
};

struct Overflow : Error {
    using Error::Error;
};

struct DependentInput : Error {
    using Error::Error;
};

struct ZeroColumn : Error {
    using Error::Error;
};

// Raised when an intermediate value (typically a nullspace over radical
// entries) cannot be represented in the supported scalar tower.
struct FieldEscape : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

// -- numeric module ----------------------------------------------------------

struct NoConvergence : Error {
    using Error::Error;
};

}  // namespace exfact

#endif  // EXFACT_ERRORS_HPP
