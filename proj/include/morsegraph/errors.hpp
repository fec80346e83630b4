#pragma once

#include <stdexcept>
#include <string>

namespace morsegraph {

/// Bad data or parameters supplied by the caller (files, grids, noise params).
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An API was called against its stated preconditions.
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

/// An internal invariant failed; points at a bug upstream of the throw site.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace morsegraph
