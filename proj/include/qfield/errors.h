// Copyright 2026 The qfield Authors
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

#ifndef QFIELD_ERRORS_H
#define QFIELD_ERRORS_H

#include <stdexcept>
#include <string>

namespace qfield {

/// Operands of a binary operator algebra call have incompatible dimensions.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation could not produce a finite, meaningful result.
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A propagation distance vanished or became non-finite.
struct DegenerateGeometry : ComputationError {
    using ComputationError::ComputationError;
};

struct NonHermitianOperator : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The expression handed to the operator derivative is not a polynomial in
/// the quadrature operators.
struct NonPolynomialExpression : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qfield

#endif
