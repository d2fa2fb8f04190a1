#include "minmax/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace minmax {

Integer binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (n - r < r) r = n - r;
    Integer result = 1;
    for (unsigned i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;  // exact: result is C(n-r+i, i) at this point
    }
    return result;
}

Integer factorial(unsigned n) {
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("invalid integer literal");
    }
    Integer value(std::string(s));
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(parse_integer(text));
        }
        const Integer num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw std::invalid_argument("denominator must be a positive integer");
        }
        const Integer den = parse_integer(den_text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator");
        }
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
    }
}

std::string format_rational(const Rational& value) {
    return value.str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace minmax
