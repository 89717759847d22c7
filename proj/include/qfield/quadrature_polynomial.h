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

#ifndef QFIELD_QUADRATURE_POLYNOMIAL_H
#define QFIELD_QUADRATURE_POLYNOMIAL_H

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfield/fock.h"

namespace qfield {

enum class Quadrature { x, p_x, y, p_y };

std::string_view quadrature_name(Quadrature q);

/// The four dimensionless quadratures of a two-oscillator system.
struct QuadratureSet {
    OperatorMatrix x;
    OperatorMatrix p_x;
    OperatorMatrix y;
    OperatorMatrix p_y;

    OperatorMatrix &operator[](Quadrature q);
    const OperatorMatrix &operator[](Quadrature q) const;
};

inline constexpr std::array<Quadrature, 4> kAllQuadratures{Quadrature::x, Quadrature::p_x, Quadrature::y,
                                                           Quadrature::p_y};

/// Non-commutative polynomial in x, p_x, y, p_y with complex coefficients.
/// Monomials keep their factor order; x*p_x and p_x*x are distinct terms.
class QuadraturePolynomial {
   public:
    using Monomial = std::vector<Quadrature>;

    QuadraturePolynomial() = default;

    static QuadraturePolynomial constant(Complex value);
    static QuadraturePolynomial symbol(Quadrature q);

    /// Grammar: sums, products, integer powers, parentheses, real literals,
    /// the symbols x, px (p_x), y, py (p_y), the imaginary unit i, and any
    /// named real constants supplied by the caller. Division is only allowed
    /// by constants. Anything else (function calls, symbolic or fractional
    /// exponents, unknown names) throws NonPolynomialExpression.
    static QuadraturePolynomial parse(std::string_view text, const std::map<std::string, double> &constants = {});

    QuadraturePolynomial &operator+=(const QuadraturePolynomial &rhs);
    QuadraturePolynomial &operator-=(const QuadraturePolynomial &rhs);
    QuadraturePolynomial &operator*=(Complex scalar);
    friend QuadraturePolynomial operator+(QuadraturePolynomial a, const QuadraturePolynomial &b) { return a += b; }
    friend QuadraturePolynomial operator-(QuadraturePolynomial a, const QuadraturePolynomial &b) { return a -= b; }
    friend QuadraturePolynomial operator*(const QuadraturePolynomial &a, const QuadraturePolynomial &b);
    friend QuadraturePolynomial operator*(Complex s, QuadraturePolynomial a) { return a *= s; }

    QuadraturePolynomial pow(unsigned exponent) const;

    bool is_constant() const;
    bool depends_on(Quadrature q) const;
    unsigned degree() const;
    const std::map<Monomial, Complex> &terms() const { return terms_; }

    /// Substitutes the matrices of `at`; the empty monomial maps to the identity.
    OperatorMatrix evaluate(const QuadratureSet &at) const;

   private:
    void prune();

    std::map<Monomial, Complex> terms_;
};

/// Derivative of H with respect to one quadrature operator, as the limit of
/// [H(..., q + eps I, ...) - H(..., q - eps I, ...)] / (2 eps) over the given
/// step sizes, Richardson-extrapolated in eps^2. Steps must be positive and
/// distinct; the central difference is exact for quadratic H at any step.
OperatorMatrix operator_derivative(const QuadraturePolynomial &h, Quadrature which, const QuadratureSet &at,
                                   std::span<const double> eps_sequence);

inline constexpr std::array<double, 3> kDefaultDerivativeSteps{1e-2, 5e-3, 2.5e-3};

}  // namespace qfield

#endif
