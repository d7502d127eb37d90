// Copyright 2026 The qformc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch between operands (matrix/vector dimensions, wire indices).
struct DimensionError : Error {
    using Error::Error;
};

/// A square GF(2) matrix had no inverse.
struct SingularError : Error {
    using Error::Error;
};

/// An operation exceeded its configured size cap (dense evaluation, branch
/// simulation).
struct SizeLimitError : Error {
    using Error::Error;
};

/// A geometry contained fractional-weight edges where only unit weights are
/// allowed.
struct FractionalEdgeError : Error {
    using Error::Error;
};

/// A flow or gflow handed to a synthesis routine does not certify the
/// geometry it was paired with.
struct InvalidFlowError : Error {
    using Error::Error;
};

/// Circuit contained a gate outside the accepted gate set.
struct UnsupportedGateError : Error {
    using Error::Error;
};

/// Tableau failed validation (singular or not commutation-preserving).
struct TableauError : Error {
    using Error::Error;
};

/// Circuit synthesis could not order the gates; signals an invalid flow.
struct SchedulingError : Error {
    using Error::Error;
};

/// decompose_about_edge could not split the form into three well-formed
/// pieces.
struct DecompositionError : Error {
    using Error::Error;
};

/// Malformed or unrecognized input file.
struct FormatError : Error {
    using Error::Error;
};

/// An operation's stated precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace qf
