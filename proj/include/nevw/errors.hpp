#ifndef NEVW_ERRORS_HPP
#define NEVW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nevw {

/// Base class of all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational literals, JSON descriptors, CLI usage).
struct ParseError : Error {
    using Error::Error;
};

/// Stencil nodes are not strictly increasing.
struct OrderError : Error {
    using Error::Error;
};

/// Node or sample count does not match the declared shape.
struct ArityError : Error {
    using Error::Error;
};

/// Index, subdivision level, or derivative order outside its admissible range.
struct RangeError : Error {
    using Error::Error;
};

/// Evaluation of a rational function at (or, in float mode, too close to) a
/// root of its denominator.
struct PoleError : Error {
    using Error::Error;
};

/// The selected oracle rows are rank-deficient; the caller should resample
/// the evaluation point.
struct SingularSystemError : Error {
    using Error::Error;
};

/// An unused row of the overdetermined oracle system is not satisfied by the
/// solution of the selected rows. Never expected for valid inputs.
struct InconsistentSystemError : Error {
    using Error::Error;
};

} // namespace nevw

#endif
