#include "minmax/expectation.hpp"

#include <stdexcept>

namespace minmax {

namespace {

void require_positive(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("row and column counts must be at least 1");
    }
}

}  // namespace

const char* method_name(Method method) {
    switch (method) {
        case Method::recursion: return "recursion";
        case Method::closed_form: return "closed";
        case Method::binomial_sum: return "sum";
        case Method::product_form: return "product";
    }
    return "unknown";
}

Polynomial row_cost_polynomial(int k) {
    if (k < 1) throw std::invalid_argument("row length must be at least 1");
    return Polynomial(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
}

Polynomial recursion_polynomial(int n, int k) {
    require_positive(n, k);
    const Polynomial row_cost = row_cost_polynomial(k);
    const Polynomial t_to_k = Polynomial::monomial(static_cast<std::size_t>(k));
    Polynomial m;  // M_0 = 0
    for (int step = 0; step < n; ++step) {
        m = row_cost + m - (t_to_k * m.derivative()).integral();
    }
    return m;
}

Polynomial closed_form_polynomial(int n, int k) {
    require_positive(n, k);
    // (1 - (1 - t^k)^n) / t^k = sum_{j=1..n} C(n,j) (-1)^(j-1) t^(k(j-1))
    std::vector<Rational> expansion(static_cast<std::size_t>(k) * (n - 1) + 1, Rational(0));
    for (int j = 1; j <= n; ++j) {
        const Integer coefficient = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
        expansion[static_cast<std::size_t>(k) * (j - 1)] =
            (j % 2 == 1) ? Rational(coefficient) : Rational(-coefficient);
    }
    const Polynomial integrand = Polynomial(std::move(expansion)) * row_cost_polynomial(k).derivative();
    return Polynomial::constant(Rational(n)) + integrand.integral();
}

ExpectedReads expected_reads(int n, int k) {
    require_positive(n, k);
    Rational value(static_cast<long long>(n) * k);
    for (int l = 1; l <= k - 1; ++l) {
        for (int j = 1; j <= n - 1; ++j) {
            const Integer coefficient =
                binomial(static_cast<unsigned>(n), static_cast<unsigned>(j + 1));
            Rational term = Rational(coefficient * l, l + static_cast<long long>(j) * k);
            if (j % 2 == 1) term = -term;
            value += term;
        }
    }
    return {n, k, std::move(value), Method::binomial_sum};
}

ExpectedReads expected_reads_product_form(int n, int k) {
    require_positive(n, k);
    Rational value(n + k - 1);
    for (int l = 1; l <= k - 1; ++l) {
        Rational partial_product(1);
        for (int j = 1; j <= n - 1; ++j) {
            const long long rk = static_cast<long long>(j) * k;
            partial_product *= Rational(rk, rk + l);
            value += partial_product;
        }
    }
    if (n == 1) value = Rational(k);  // the l-sum degenerates: sum_l F_1(l/k) = k
    return {n, k, std::move(value), Method::product_form};
}

Rational f_n_binomial(int n, const Rational& x) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (x < 0) throw std::invalid_argument("x must be nonnegative");
    Rational value(n);
    for (int j = 1; j <= n - 1; ++j) {
        const Integer coefficient = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j + 1));
        Rational term = Rational(coefficient) * x / (x + j);
        if (j % 2 == 1) term = -term;
        value += term;
    }
    return value;
}

Rational f_n_product(int n, const Rational& x) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (x < 0) throw std::invalid_argument("x must be nonnegative");
    Rational value(1);
    Rational term(1);
    for (int m = 1; m <= n - 1; ++m) {
        term *= Rational(m) / (x + m);  // term = m! / ((1+x)...(m+x))
        value += term;
    }
    return value;
}

std::vector<MonotonicityViolation> monotonicity_check(int n_max, int k_max) {
    if (n_max < 2 || k_max < 2) {
        throw std::invalid_argument("monotonicity check needs n_max >= 2 and k_max >= 2");
    }
    std::vector<std::vector<Rational>> table(static_cast<std::size_t>(n_max) + 2);
    for (int n = 1; n <= n_max + 1; ++n) {
        table[n].resize(static_cast<std::size_t>(k_max) + 2);
        for (int k = 1; k <= k_max + 1; ++k) {
            table[n][k] = expected_reads(n, k).value;
        }
    }

    std::vector<MonotonicityViolation> violations;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
            const Rational rows_lhs = table[n][k] / n;
            const Rational rows_rhs = table[n + 1][k] / (n + 1);
            if (!(rows_lhs > rows_rhs)) {
                violations.push_back(
                    {n, k, MonotonicityViolation::Axis::rows, rows_lhs, rows_rhs});
            }
            const Rational cols_lhs = table[n][k] / k;
            const Rational cols_rhs = table[n][k + 1] / (k + 1);
            if (!(cols_lhs > cols_rhs)) {
                violations.push_back(
                    {n, k, MonotonicityViolation::Axis::cols, cols_lhs, cols_rhs});
            }
        }
    }
    return violations;
}

}  // namespace minmax
