// Dense univariate polynomials over Rational. Degrees stay desk-scale
// (at most n*k for the read-count polynomials), so the dense coefficient
// vector keeps differentiation and integration as plain index shifts.
#pragma once

#include "minmax/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace minmax {

class Polynomial {
public:
    Polynomial() = default;  // the zero polynomial
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(Rational value);
    // coefficient * x^power
    static Polynomial monomial(std::size_t power, Rational coefficient = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // 0 beyond the stored degree.
    Rational coeff(std::size_t power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Polynomial derivative() const;
    // Antiderivative with zero constant term, i.e. the integral from 0 to x.
    Polynomial integral() const;
    Rational eval(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(const Rational& scalar, const Polynomial& poly);
    bool operator==(const Polynomial& other) const = default;

    // Ascending powers, e.g. "2 + 2*a - 1/3*a^3".
    std::string to_string(std::string_view variable = "a") const;

private:
    void trim();

    std::vector<Rational> coeffs_;  // coeffs_[i] multiplies x^i; no trailing zeros
};

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace minmax
