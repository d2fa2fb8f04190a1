// Exact expected read counts for the pruned min-max scan on an n x k matrix
// of iid uniforms, as polynomials in the starting bound `a` and as closed-form
// rational sums at a = 1. Four independent routes are provided so they can be
// cross-checked coefficient by coefficient:
//
//   recursion_polynomial       row-by-row recursion, iterated n times
//   closed_form_polynomial     integral of the iterated derivative
//   expected_reads             double sum with signed binomials (a = 1)
//   expected_reads_product_form  double sum of partial products (a = 1)
#pragma once

#include "minmax/polynomial.hpp"
#include "minmax/rational.hpp"

#include <vector>

namespace minmax {

enum class Method { recursion, closed_form, binomial_sum, product_form };

const char* method_name(Method method);

struct ExpectedReads {
    int n = 0;
    int k = 0;
    Rational value;  // always in [n, n*k]
    Method method = Method::binomial_sum;
};

// r_k(a) = 1 + a + ... + a^(k-1): expected reads of a single row scanned
// with bound a.
Polynomial row_cost_polynomial(int k);

// M_nk(a) via M_j = r_k + M_{j-1} - integral_0^a t^k * M'_{j-1}(t) dt,
// starting from M_0 = 0.
Polynomial recursion_polynomial(int n, int k);

// M_nk(a) = n + integral_0^a (1 - (1 - t^k)^n) / t^k * r_k'(t) dt, with the
// first factor expanded binomially so the integrand is a polynomial.
Polynomial closed_form_polynomial(int n, int k);

// M_nk(1) = n*k + sum_{l=1..k-1} sum_{j=1..n-1} C(n, j+1) (-1)^j l/(l+jk).
ExpectedReads expected_reads(int n, int k);

// M_nk(1) = n + k - 1 + sum_{l=1..k-1} sum_{j=1..n-1} prod_{r=1..j} rk/(rk+l).
ExpectedReads expected_reads_product_form(int n, int k);

// F_n(x) = n + sum_{j=1..n-1} C(n, j+1) (-1)^j x/(j+x), for x >= 0.
Rational f_n_binomial(int n, const Rational& x);

// F_n(x) = 1 + sum_{m=1..n-1} m! / ((1+x)(2+x)...(m+x)), for x >= 0.
Rational f_n_product(int n, const Rational& x);

struct MonotonicityViolation {
    enum class Axis { rows, cols };  // rows: grow n; cols: grow k
    int n = 0;
    int k = 0;
    Axis axis = Axis::rows;
    Rational lhs;  // M_nk(1)/n  (or /k)
    Rational rhs;  // M_{n+1,k}(1)/(n+1)  (or column analogue)
};

// Checks M_nk(1)/n > M_{n+1,k}(1)/(n+1) and M_nk(1)/k > M_{n,k+1}(1)/(k+1)
// exactly for all 1 <= n <= n_max, 1 <= k <= k_max, and returns every pair
// that fails. Both inequalities degenerate to equality along n = 1 / k = 1
// (M_n1(1) = n and M_1k(1) = k), so those boundary rows always show up;
// away from the boundary the list is expected to be empty.
std::vector<MonotonicityViolation> monotonicity_check(int n_max, int k_max);

}  // namespace minmax
