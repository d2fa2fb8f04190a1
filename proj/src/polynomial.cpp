#include "minmax/polynomial.hpp"

#include <sstream>
#include <utility>

namespace minmax {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(Rational value) {
    return Polynomial({std::move(value)});
}

Polynomial Polynomial::monomial(std::size_t power, Rational coefficient) {
    std::vector<Rational> coeffs(power + 1, Rational(0));
    coeffs[power] = std::move(coefficient);
    return Polynomial(std::move(coeffs));
}

Rational Polynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> result(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        result[i - 1] = coeffs_[i] * static_cast<int>(i);
    }
    return Polynomial(std::move(result));
}

Polynomial Polynomial::integral() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> result(coeffs_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        result[i + 1] = coeffs_[i] / static_cast<int>(i + 1);
    }
    return Polynomial(std::move(result));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> result(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            result[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(result));
}

Polynomial operator*(const Rational& scalar, const Polynomial& poly) {
    if (scalar == 0) return {};
    std::vector<Rational> result = poly.coeffs_;
    for (auto& c : result) c *= scalar;
    return Polynomial(std::move(result));
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(Rational(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * base;
    return result;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string Polynomial::to_string(std::string_view variable) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t power = 0; power < coeffs_.size(); ++power) {
        const Rational& c = coeffs_[power];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational magnitude = negative ? Rational(-c) : c;
        if (power == 0) {
            out << format_rational(magnitude);
        } else {
            if (magnitude != 1) out << format_rational(magnitude) << '*';
            out << variable;
            if (power > 1) out << '^' << power;
        }
    }
    return out.str();
}

}  // namespace minmax
