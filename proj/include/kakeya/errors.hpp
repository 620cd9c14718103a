#pragma once

#include <stdexcept>
#include <string>

namespace kakeya {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ambient dimensions of two objects do not match, or an operation
/// requires a specific dimension.
struct DimensionError : Error {
    using Error::Error;
};

/// A line is (numerically) parallel to a hyperplane it should cross.
struct ParallelError : Error {
    using Error::Error;
};

/// Two slabs/tubes are too close to parallel for the closed-form
/// intersection bound to apply.
struct NearParallelError : Error {
    using Error::Error;
};

/// Invalid polygon input (non-convex, wrong orientation, ...).
struct GeometryError : Error {
    using Error::Error;
};

/// Invalid argument value or range.
struct ArgumentError : Error {
    using Error::Error;
};

/// A configured size cap was exceeded.
struct CapacityError : Error {
    using Error::Error;
};

/// Direction restriction kept no directions.
struct EmptySelectionError : Error {
    using Error::Error;
};

/// A search at the given sampling resolution found no witness.
/// Not a disproof; the result is resolution-bounded.
struct InconclusiveError : Error {
    using Error::Error;
};

/// Malformed config or report file.
struct FormatError : Error {
    using Error::Error;
};

} // namespace kakeya
