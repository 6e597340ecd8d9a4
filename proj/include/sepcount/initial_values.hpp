#pragma once

// Counts at the extreme k = n + 1 - l(lambda), where the plane permutations
// with diagonal type lambda and vertical type mu correspond to labelled
// plane trees. These seed the general-lambda recurrences.

#include <string>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/error.hpp"
#include "sepcount/partition.hpp"

namespace sepcount {

/// Offset in the binomial binom(d-m, l1 - b -/+ delta), delta = [r != 1], of
/// the separated initial values. Only `subtract` agrees with exhaustive
/// enumeration (checked by verify_closed_form_bases); `add` is kept so that
/// comparison can be rerun.
enum class sign_reading { subtract, add };

namespace detail {

inline void require_base_shapes(const char* who, const integer_partition& lambda, const integer_partition& mu, int m) {
    const int n = lambda.size();
    if (mu.size() != n)
        throw size_mismatch(std::string(who) + ": lambda and mu partition different integers");
    if (lambda.length() + mu.length() != n + 1)
        throw domain_error(std::string(who) + ": need l(lambda) + l(mu) = n + 1, got " +
                           std::to_string(lambda.length()) + " + " + std::to_string(mu.length()) +
                           " for n=" + std::to_string(n));
    if (m < 0 || m > n)
        throw domain_error(std::string(who) + ": need 0 <= m <= n");
}

inline BigInt multinomial_of_counts(const std::vector<int>& counts) {
    int total = 0;
    BigInt denom = 1;
    for (int c : counts) {
        total += c;
        denom *= factorial(c);
    }
    return factorial(total) / denom;
}

} // namespace detail

/// p^lambda_{m,mu}: plane permutations with diagonal type lambda and vertical
/// type mu separating [m], for l(lambda) + l(mu) = n + 1.
///
/// With d = l(mu), t = l(lambda), l1 = parts of mu above 1, a_i the
/// multiplicities of lambda:
///   (t-1)! (d-1)! (n-m)! / (prod a_i! (d-m)!)
///     * sum over r, b and the size tuples of
///       binom(d-m, l1 - b - delta) binom(m-1, b) r prod_j (r_j + 1)
/// where r runs over the distinct part values of mu (root degree),
/// delta = [r != 1], and the tuples (r_1..r_b), (q_1..) are the distinct
/// orderings of a split of {mu_i - 1 : mu_i > 1} minus one copy of r - 1.
inline BigInt p_base(const integer_partition& lambda, const integer_partition& mu, int m,
                     sign_reading reading = sign_reading::subtract) {
    detail::require_base_shapes("p_base", lambda, mu, m);
    const int n = lambda.size();
    const int d = mu.length();
    const int t = lambda.length();
    const int l1 = mu.nontrivial_length();
    // Separating a single element is no constraint; the sum is written for m >= 1.
    if (m == 0)
        m = 1;
    if (m > d)
        return 0;

    BigInt sum = 0;
    for (auto [r, r_mult] : mu.multiplicities()) {
        const int delta = r != 1 ? 1 : 0;
        // Multiset {mu_i - 1 : mu_i > 1} without one copy of r - 1, as
        // (value, count) pairs.
        std::vector<std::pair<int, int>> pool;
        for (auto [value, count] : mu.multiplicities()) {
            if (value == 1)
                continue;
            int c = count - (value == r ? 1 : 0);
            if (c > 0)
                pool.emplace_back(value - 1, c);
        }
        // Choose how many copies of each value go to the r-tuple.
        std::vector<int> take(pool.size(), 0);
        while (true) {
            int b = 0;
            BigInt weight = 1;
            std::vector<int> taken, left;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                b += take[i];
                taken.push_back(take[i]);
                left.push_back(pool[i].second - take[i]);
                for (int c = 0; c < take[i]; ++c)
                    weight *= pool[i].first + 1;
            }
            const int offset = reading == sign_reading::subtract ? -delta : delta;
            BigInt term = binomial(d - m, l1 - b + offset) * binomial(m - 1, b);
            if (term != 0) {
                term *= r * weight;
                term *= detail::multinomial_of_counts(taken) * detail::multinomial_of_counts(left);
                sum += term;
            }
            std::size_t i = 0;
            while (i < pool.size() && take[i] == pool[i].second)
                take[i++] = 0;
            if (i == pool.size())
                break;
            ++take[i];
        }
    }
    BigInt numerator = factorial(t - 1) * factorial(d - 1) * factorial(n - m) * sum;
    BigInt denominator = lambda.multiplicity_factorial_product() * factorial(d - m);
    return exact_div(numerator, denominator, "p_base");
}

/// I^lambda_{m,mu}: as p_base but with 1..m fixed points of the vertical.
/// With b_i the multiplicities of mu (b_1 unit parts):
///   (t-1)! (d-1)! (n-m)! / (prod a_i! prod_{i>1} b_i! (b_1 - m)!),
/// and 0 when b_1 < m.
inline BigInt i_base(const integer_partition& lambda, const integer_partition& mu, int m) {
    detail::require_base_shapes("i_base", lambda, mu, m);
    const int n = lambda.size();
    const int d = mu.length();
    const int t = lambda.length();
    const int units = mu.multiplicity(1);
    if (units < m)
        return 0;
    BigInt denominator = lambda.multiplicity_factorial_product() * factorial(units - m);
    for (auto [value, count] : mu.multiplicities())
        if (value > 1)
            denominator *= factorial(count);
    return exact_div(factorial(t - 1) * factorial(d - 1) * factorial(n - m), denominator, "i_base");
}

} // namespace sepcount
