#pragma once

// Closed forms for products of two n-cycles: counts by number of cycles with
// [m] separated or fixed, and the probabilities and fixed-point statistics
// that follow from them.

#include <string>
#include <utility>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/error.hpp"
#include "sepcount/stirling.hpp"

namespace sepcount {

namespace detail {

inline void require_n_m_k(const char* who, int n, int m, int k, bool strict_m) {
    if (n < 1)
        throw domain_error(std::string(who) + ": need n >= 1");
    if (m < 0 || (strict_m ? m >= n : m > n))
        throw domain_error(std::string(who) + ": need 0 <= m " + (strict_m ? "< " : "<= ") +
                           "n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    if (k < 1 || k > n)
        throw domain_error(std::string(who) + ": need 1 <= k <= n, got k=" + std::to_string(k));
}

} // namespace detail

/// p^(n)_{m,k}: plane permutations whose diagonal is an n-cycle and whose
/// vertical has k cycles separating [m]. Equivalently, the number of ordered
/// pairs of n-cycles whose product has k cycles with 1..m in distinct
/// cycles. Zero unless n-k is even; otherwise
///     2 (n-1)! C_m(n+1, k) / ((n+m)(n+1-m)).
inline BigInt p_ncycle(int n, int m, int k) {
    detail::require_n_m_k("p_ncycle", n, m, k, false);
    if ((n - k) % 2 != 0)
        return 0;
    BigInt numerator = 2 * factorial(n - 1) * c_sep(n + 1, k, m);
    return exact_div(numerator, BigInt(n + m) * (n + 1 - m), "p_ncycle");
}

/// I^(n)_{m,k}: as p_ncycle but with 1..m fixed points of the product.
///     2 (n-1)! Ĉ_m(n+1, k) / ((n-m)(n+1-m)),   m < n, n-k even.
inline BigInt i_ncycle(int n, int m, int k) {
    detail::require_n_m_k("i_ncycle", n, m, k, true);
    if ((n - k) % 2 != 0)
        return 0;
    BigInt numerator = 2 * factorial(n - 1) * c_fix(n + 1, k, m);
    return exact_div(numerator, BigInt(n - m) * (n + 1 - m), "i_ncycle");
}

/// Probability that 1..m land in distinct cycles of the product of two
/// uniform n-cycles. m <= 1 is vacuous.
inline Rational sep_prob_ncycle(int n, int m) {
    if (n < 1 || m < 0 || m > n)
        throw domain_error("sep_prob_ncycle: need n >= 1 and 0 <= m <= n");
    if (m <= 1)
        return Rational(1);
    Rational base = make_rational(1, factorial(m));
    if ((n - m) % 2 != 0)
        return base;
    return base + make_rational(2, factorial(m - 2) * (n + 1 - m) * (n + m));
}

/// Same probability, as sum_k p^(n)_{m,k} / ((n-1)!)^2.
inline Rational sep_prob_from_counts(int n, int m) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k)
        total += p_ncycle(n, m, k);
    BigInt pairs = factorial(n - 1) * factorial(n - 1);
    return make_rational(total, pairs);
}

/// Probability that the product of two uniform n-cycles fixes 1..m:
///     1 / (m! binom(n-1, m)),  m < n.
inline Rational iso_prob_ncycle(int n, int m) {
    if (n < 1 || m < 0 || m >= n)
        throw domain_error("iso_prob_ncycle: need 0 <= m < n, got m=" + std::to_string(m) +
                           ", n=" + std::to_string(n));
    return make_rational(1, factorial(m) * binomial(n - 1, m));
}

inline Rational iso_prob_from_counts(int n, int m) {
    BigInt total = 0;
    for (int k = 1; k <= n; ++k)
        total += i_ncycle(n, m, k);
    return make_rational(total, factorial(n - 1) * factorial(n - 1));
}

/// Probability that a fixed j-subset is pointwise fixed by the product;
/// j = n forces the product to be the identity, probability 1/(n-1)!.
inline Rational all_fixed_probability(int n, int j) {
    if (j == n)
        return make_rational(1, factorial(n - 1));
    return iso_prob_ncycle(n, j);
}

/// Probability that the product of two uniform n-cycles has no fixed point:
///     sum_{j=0}^{n-1} (-1)^j n / ((n-j) j!) + (-1)^n / (n-1)!.
inline Rational fpf_probability(int n) {
    if (n < 2)
        throw domain_error("fpf_probability: need n >= 2");
    Rational total = 0;
    for (int j = 0; j < n; ++j) {
        Rational term = make_rational(n, BigInt(n - j) * factorial(j));
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    Rational last = make_rational(1, factorial(n - 1));
    total += (n % 2 == 0) ? last : Rational(-last);
    return total;
}

/// P(X = i) for i = 0..n, X the number of fixed points of the product, by
/// inclusion-exclusion over the isolation probabilities:
///     P(X = i) = sum_{j >= i} (-1)^{j-i} binom(j, i) binom(n, j) q_j
/// with q_j the probability that a given j-set is fixed.
inline std::vector<Rational> fixed_point_distribution(int n) {
    if (n < 2)
        throw domain_error("fixed_point_distribution: need n >= 2");
    std::vector<Rational> s(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j)
        s[static_cast<std::size_t>(j)] = Rational(binomial(n, j)) * all_fixed_probability(n, j);
    std::vector<Rational> dist(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        Rational p = 0;
        for (int j = i; j <= n; ++j) {
            Rational term = Rational(binomial(j, i)) * s[static_cast<std::size_t>(j)];
            p += ((j - i) % 2 == 0) ? term : Rational(-term);
        }
        dist[static_cast<std::size_t>(i)] = p;
    }
    return dist;
}

struct moments {
    Rational mean;
    Rational variance;
};

/// Mean n/(n-1) (by linearity over the indicators of each point being fixed)
/// and variance sum_i i^2 P(X = i) - mean^2.
inline moments fixed_point_moments(int n) {
    if (n < 2)
        throw domain_error("fixed_point_moments: need n >= 2");
    Rational mean = Rational(n) * iso_prob_ncycle(n, 1);
    auto dist = fixed_point_distribution(n);
    Rational second = 0;
    for (int i = 0; i <= n; ++i)
        second += Rational(i * i) * dist[static_cast<std::size_t>(i)];
    return {mean, second - mean * mean};
}

} // namespace sepcount
