#ifndef HDNN_ERRORS_HPP
#define HDNN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hdnn {

/// Non-finite or otherwise out-of-contract argument.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two vectors of different dimension reached a kernel.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric cell failed to parse; message carries row/column location.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally bad input (empty file, ragged rows, bad manifest block).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Missing or unreadable file.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hdnn

#endif
