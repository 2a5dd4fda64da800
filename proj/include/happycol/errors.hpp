#pragma once

#include <stdexcept>
#include <string>

namespace happycol {

/// Invalid model or solver parameters (CLI exit code 1).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Precondition broken by the caller, e.g. querying an uncoloured vertex.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// File read/write failure, message carries the path (CLI exit code 2).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance too large for exhaustive search (CLI exit code 3).
struct OracleRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace happycol
