#pragma once

// Signless Stirling numbers of the first kind and their separated / fixed
// refinements.

#include <mutex>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/error.hpp"

namespace sepcount {

/// C(n, k): permutations of [n] with exactly k cycles.
inline BigInt stirling_c(int n, int k) {
    if (n < 0 || k < 0)
        throw domain_error("stirling_c: negative argument");
    if (k > n)
        return 0;
    static std::mutex mutex;
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    std::lock_guard lock(mutex);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        const int r = static_cast<int>(rows.size());
        std::vector<BigInt> row(static_cast<std::size_t>(r + 1), 0);
        for (int j = 1; j <= r; ++j) {
            BigInt value = prev[static_cast<std::size_t>(j - 1)];
            if (j <= r - 1)
                value += BigInt(r - 1) * prev[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = std::move(value);
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// C_m(n, k): permutations of [n] with k cycles in which 1..m lie in
/// distinct cycles. Choose the d elements outside [m] that join the m marked
/// cycles (binom(n-m, d)), thread them into those cycles (m rising d ways),
/// and let the remaining n-m-d elements form k-m cycles.
inline BigInt c_sep(int n, int k, int m) {
    if (n < 0 || k < 0)
        throw domain_error("c_sep: negative argument");
    if (m < 0 || m > n)
        throw domain_error("c_sep: need 0 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    if (k < m)
        return 0;
    BigInt total = 0;
    for (int d = 0; d <= n - m; ++d)
        total += binomial(n - m, d) * rising_factorial(m, d) * stirling_c(n - m - d, k - m);
    return total;
}

/// Ĉ_m(n, k) = C(n-m, k-m): k cycles with 1..m all fixed.
inline BigInt c_fix(int n, int k, int m) {
    if (n < 0 || k < 0)
        throw domain_error("c_fix: negative argument");
    if (m < 0 || m > n)
        throw domain_error("c_fix: need 0 <= m <= n, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    if (k < m)
        return 0;
    return stirling_c(n - m, k - m);
}

} // namespace sepcount
