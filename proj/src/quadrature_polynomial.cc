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

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qfield/errors.h"

namespace qfield {

std::string_view quadrature_name(Quadrature q) {
    switch (q) {
        case Quadrature::x:
            return "x";
        case Quadrature::p_x:
            return "px";
        case Quadrature::y:
            return "y";
        case Quadrature::p_y:
            return "py";
    }
    return "?";
}

OperatorMatrix &QuadratureSet::operator[](Quadrature q) {
    switch (q) {
        case Quadrature::x:
            return x;
        case Quadrature::p_x:
            return p_x;
        case Quadrature::y:
            return y;
        case Quadrature::p_y:
            return p_y;
    }
    throw std::logic_error("bad quadrature");
}

const OperatorMatrix &QuadratureSet::operator[](Quadrature q) const {
    return const_cast<QuadratureSet &>(*this)[q];
}

QuadraturePolynomial QuadraturePolynomial::constant(Complex value) {
    QuadraturePolynomial p;
    p.terms_[{}] = value;
    p.prune();
    return p;
}

QuadraturePolynomial QuadraturePolynomial::symbol(Quadrature q) {
    QuadraturePolynomial p;
    p.terms_[{q}] = 1.0;
    return p;
}

void QuadraturePolynomial::prune() {
    std::erase_if(terms_, [](const auto &kv) { return kv.second == Complex(0.0); });
}

QuadraturePolynomial &QuadraturePolynomial::operator+=(const QuadraturePolynomial &rhs) {
    for (const auto &[mono, c] : rhs.terms_) {
        terms_[mono] += c;
    }
    prune();
    return *this;
}

QuadraturePolynomial &QuadraturePolynomial::operator-=(const QuadraturePolynomial &rhs) {
    for (const auto &[mono, c] : rhs.terms_) {
        terms_[mono] -= c;
    }
    prune();
    return *this;
}

QuadraturePolynomial &QuadraturePolynomial::operator*=(Complex scalar) {
    for (auto &kv : terms_) {
        kv.second *= scalar;
    }
    prune();
    return *this;
}

QuadraturePolynomial operator*(const QuadraturePolynomial &a, const QuadraturePolynomial &b) {
    QuadraturePolynomial out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            QuadraturePolynomial::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.terms_[m] += ca * cb;
        }
    }
    out.prune();
    return out;
}

QuadraturePolynomial QuadraturePolynomial::pow(unsigned exponent) const {
    QuadraturePolynomial out = constant(1.0);
    for (unsigned e = 0; e < exponent; ++e) {
        out = out * *this;
    }
    return out;
}

bool QuadraturePolynomial::is_constant() const {
    for (const auto &kv : terms_) {
        if (!kv.first.empty()) {
            return false;
        }
    }
    return true;
}

bool QuadraturePolynomial::depends_on(Quadrature q) const {
    for (const auto &kv : terms_) {
        for (Quadrature f : kv.first) {
            if (f == q) {
                return true;
            }
        }
    }
    return false;
}

unsigned QuadraturePolynomial::degree() const {
    std::size_t d = 0;
    for (const auto &kv : terms_) {
        d = std::max(d, kv.first.size());
    }
    return static_cast<unsigned>(d);
}

OperatorMatrix QuadraturePolynomial::evaluate(const QuadratureSet &at) const {
    const Eigen::Index dim = at.x.rows();
    OperatorMatrix out = OperatorMatrix::Zero(dim, dim);
    for (const auto &[mono, c] : terms_) {
        if (mono.empty()) {
            out.diagonal().array() += c;
            continue;
        }
        OperatorMatrix prod = at[mono.front()];
        for (std::size_t i = 1; i < mono.size(); ++i) {
            prod = prod * at[mono[i]];
        }
        out += c * prod;
    }
    return out;
}

namespace {

class Parser {
   public:
    Parser(std::string_view text, const std::map<std::string, double> &constants)
        : text_(text), constants_(constants) {}

    QuadraturePolynomial run() {
        QuadraturePolynomial p = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string &why) const {
        throw NonPolynomialExpression("not a quadrature polynomial at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    QuadraturePolynomial expr() {
        QuadraturePolynomial acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    QuadraturePolynomial term() {
        QuadraturePolynomial acc = unary();
        while (true) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                QuadraturePolynomial d = unary();
                if (!d.is_constant()) {
                    fail("division by an operator");
                }
                const auto it = d.terms().find({});
                if (it == d.terms().end()) {
                    fail("division by zero");
                }
                acc *= 1.0 / it->second;
            } else {
                return acc;
            }
        }
    }

    QuadraturePolynomial unary() {
        if (accept('-')) {
            return Complex(-1.0) * unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    QuadraturePolynomial power() {
        QuadraturePolynomial base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_ || (pos_ < text_.size() && (text_[pos_] == '.' || std::isalpha(text_[pos_])))) {
                fail("exponents must be non-negative integer literals");
            }
            unsigned e = 0;
            std::from_chars(text_.data() + start, text_.data() + pos_, e);
            return base.pow(e);
        }
        return base;
    }

    QuadraturePolynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        if (accept('(')) {
            QuadraturePolynomial inner = expr();
            if (!accept(')')) {
                fail("missing ')'");
            }
            return inner;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                fail("function call '" + name + "(...)'");
            }
            if (name == "x") return QuadraturePolynomial::symbol(Quadrature::x);
            if (name == "px" || name == "p_x") return QuadraturePolynomial::symbol(Quadrature::p_x);
            if (name == "y") return QuadraturePolynomial::symbol(Quadrature::y);
            if (name == "py" || name == "p_y") return QuadraturePolynomial::symbol(Quadrature::p_y);
            if (name == "i") return QuadraturePolynomial::constant(Complex(0.0, 1.0));
            if (auto it = constants_.find(name); it != constants_.end()) {
                return QuadraturePolynomial::constant(it->second);
            }
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    QuadraturePolynomial number() {
        const char *begin = text_.data() + pos_;
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
        if (ec != std::errc()) {
            fail("bad numeric literal");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return QuadraturePolynomial::constant(value);
    }

    std::string_view text_;
    const std::map<std::string, double> &constants_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadraturePolynomial QuadraturePolynomial::parse(std::string_view text, const std::map<std::string, double> &constants) {
    return Parser(text, constants).run();
}

OperatorMatrix operator_derivative(const QuadraturePolynomial &h, Quadrature which, const QuadratureSet &at,
                                   std::span<const double> eps_sequence) {
    if (eps_sequence.empty()) {
        throw std::invalid_argument("operator_derivative needs at least one step size");
    }
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
        if (!(eps_sequence[i] > 0.0) || !std::isfinite(eps_sequence[i])) {
            throw std::invalid_argument("operator_derivative step sizes must be positive and finite");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (eps_sequence[i] == eps_sequence[j]) {
                throw std::invalid_argument("operator_derivative step sizes must be distinct");
            }
        }
    }
    const Eigen::Index dim = at.x.rows();
    const OperatorMatrix id = OperatorMatrix::Identity(dim, dim);

    // Neville tableau in eps^2; row i holds the extrapolants that use steps 0..i.
    std::vector<OperatorMatrix> row;
    for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
        const double eps = eps_sequence[i];
        QuadratureSet plus = at;
        QuadratureSet minus = at;
        plus[which] += eps * id;
        minus[which] -= eps * id;
        std::vector<OperatorMatrix> next;
        next.reserve(i + 1);
        next.push_back((h.evaluate(plus) - h.evaluate(minus)) / (2.0 * eps));
        for (std::size_t j = 1; j <= i; ++j) {
            const double ratio = eps_sequence[i - j] / eps;
            next.push_back(next[j - 1] + (next[j - 1] - row[j - 1]) / (ratio * ratio - 1.0));
        }
        row = std::move(next);
    }
    return row.back();
}

}  // namespace qfield
