#pragma once

#include <stdexcept>
#include <string>

namespace vmfb {

/// Thrown when an iterative routine cannot make progress (backtracking cap,
/// line-search cap, non-finite objective, ...).
struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a combination of options is syntactically valid but unsupported.
struct not_implemented : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace vmfb
