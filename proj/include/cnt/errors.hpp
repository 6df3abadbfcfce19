// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cnt {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, JSON documents, CLI site arguments).
struct ParseError : Error {
    using Error::Error;
};

/// A site, direction or probability vector does not match the kernel dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Anchor (t, x) is not a valid boundary anchor (t < 1 or x off the boundary).
struct InvalidAnchor : Error {
    using Error::Error;
};

/// Queried point does not belong to the support set.
struct NotMember : Error {
    using Error::Error;
};

/// A lattice function value violates its declared support region.
struct RegionViolation : Error {
    using Error::Error;
};

/// Killed evolution or hedging started on (or below) the boundary.
struct StartOnBoundary : Error {
    using Error::Error;
};

/// Factorial-cost operation refused; pass force=true to override where supported.
struct TooLarge : Error {
    using Error::Error;
};

/// Perturbation site is not reachable within the requested anchor's support set.
struct UnreachablePerturbation : Error {
    using Error::Error;
};

/// Reflection check requested on a kernel that is not reflection symmetric.
struct NotSymmetric : Error {
    using Error::Error;
};

}  // namespace cnt
