// Copyright 2026 The lggm Authors
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

namespace lggm {

/// Bad argument: invalid positions, angles out of range, malformed specs.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested state would exceed the configured qubit cap.
struct DimensionError : std::length_error {
    using std::length_error::length_error;
};

/// An iterative solver ran out of iterations.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A series has no usable structure (e.g. no extremum in a flat series).
struct FlatSeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lggm
