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

#include "qfield/quadrature_polynomial.h"

#include "gtest/gtest.h"

#include "qfield/errors.h"
#include "qfield/schwinger.h"

using namespace qfield;

namespace {

QuadratureSet small_quadratures() { return quadrature_operators(QubitModelParams{1.0, 3}); }

}  // namespace

TEST(quadrature_polynomial, parse_keeps_factor_order) {
    auto p = QuadraturePolynomial::parse("(x + y)^2");
    ASSERT_EQ(p.terms().size(), 4u);
    ASSERT_EQ(p.terms().at({Quadrature::x, Quadrature::y}), Complex(1.0));
    ASSERT_EQ(p.terms().at({Quadrature::y, Quadrature::x}), Complex(1.0));
    ASSERT_EQ(p.degree(), 2u);

    auto c = QuadraturePolynomial::parse("x*px - px*x");
    auto q = small_quadratures();
    ASSERT_LT(max_abs(c.evaluate(q) - commutator(q.x, q.p_x)), 1e-15);
}

TEST(quadrature_polynomial, constants_and_imaginary_unit) {
    auto p = QuadraturePolynomial::parse("omega/4 * (x^2 + px^2) - 3 + i*y", {{"omega", 2.0}});
    EXPECT_EQ(p.terms().at({Quadrature::x, Quadrature::x}), Complex(0.5));
    EXPECT_EQ(p.terms().at({Quadrature::p_x, Quadrature::p_x}), Complex(0.5));
    EXPECT_EQ(p.terms().at({}), Complex(-3.0));
    EXPECT_EQ(p.terms().at({Quadrature::y}), Complex(0.0, 1.0));
    EXPECT_TRUE(p.depends_on(Quadrature::y));
    EXPECT_FALSE(p.depends_on(Quadrature::p_y));

    auto q = small_quadratures();
    OperatorMatrix expected = 0.5 * (q.x * q.x + q.p_x * q.p_x) + Complex(0.0, 1.0) * q.y;
    expected.diagonal().array() -= 3.0;
    EXPECT_LT(max_abs(p.evaluate(q) - expected), 1e-14);

    EXPECT_TRUE(QuadraturePolynomial::parse("x - x").terms().empty());
    EXPECT_TRUE(QuadraturePolynomial::parse("1.5e-1 * 2").is_constant());
}

TEST(quadrature_polynomial, rejects_non_polynomials) {
    for (const char *bad : {"exp(x)", "sin(px) + 1", "x^0.5", "x^y", "x / px", "1 / (2 - 2)", "z * x", "x +",
                            "(x + y", "x ** 2", "2x"}) {
        EXPECT_THROW(QuadraturePolynomial::parse(bad), NonPolynomialExpression) << bad;
    }
}

TEST(operator_derivative, quadratic_is_exact_for_any_step) {
    auto q = small_quadratures();
    auto h = QuadraturePolynomial::parse("px^2 / 2");
    for (double eps : {1.0, 0.3, 1e-3}) {
        const double steps[] = {eps};
        EXPECT_LT(max_abs(operator_derivative(h, Quadrature::p_x, q, steps) - q.p_x), 1e-14) << eps;
    }
}

TEST(operator_derivative, richardson_recovers_higher_orders) {
    auto q = small_quadratures();
    // d/dp of p^4 is the symmetrized sum of the four single-slot insertions.
    auto h = QuadraturePolynomial::parse("x * px^4 + px^3 * y");
    OperatorMatrix p2 = q.p_x * q.p_x;
    OperatorMatrix expected = q.x * (4.0 * p2 * q.p_x) + 3.0 * p2 * q.y;
    auto got = operator_derivative(h, Quadrature::p_x, q, kDefaultDerivativeSteps);
    EXPECT_LT(max_abs(got - expected), 1e-9);
    const double one_step[] = {1e-2};
    EXPECT_GT(max_abs(operator_derivative(h, Quadrature::p_x, q, one_step) - expected), 1e-6);
}

TEST(operator_derivative, schwinger_hamiltonian_matches_commutator) {
    const QubitModelParams params{1.7, 4};
    const SchwingerModel model(params);
    const auto &q = model.quadratures();
    const auto h = hamiltonian_polynomial(params);
    const Complex i(0.0, 1.0);
    auto dh_dpx = operator_derivative(h, Quadrature::p_x, q, kDefaultDerivativeSteps);
    EXPECT_LT(max_abs(dh_dpx - 0.5 * params.omega * q.p_x), 1e-10);
    EXPECT_LT(max_abs(dh_dpx - i * commutator(model.hamiltonian(), q.x)), 1e-10);
    auto dh_dx = operator_derivative(h, Quadrature::x, q, kDefaultDerivativeSteps);
    EXPECT_LT(max_abs(-dh_dx - i * commutator(model.hamiltonian(), q.p_x)), 1e-10);

    auto x_part = QuadraturePolynomial::parse("omega/4 * (x^2 + px^2)", {{"omega", params.omega}});
    EXPECT_EQ(max_abs(operator_derivative(x_part, Quadrature::p_y, q, kDefaultDerivativeSteps)), 0.0);
}

TEST(operator_derivative, step_validation) {
    auto q = small_quadratures();
    auto h = QuadraturePolynomial::parse("x");
    EXPECT_THROW(operator_derivative(h, Quadrature::x, q, std::span<const double>{}), std::invalid_argument);
    const double dup[] = {1e-2, 1e-2};
    EXPECT_THROW(operator_derivative(h, Quadrature::x, q, dup), std::invalid_argument);
    const double neg[] = {-1e-2};
    EXPECT_THROW(operator_derivative(h, Quadrature::x, q, neg), std::invalid_argument);
}
