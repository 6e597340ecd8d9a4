#pragma once

// p^lambda_{m,k} and I^lambda_{m,k} for arbitrary diagonal type lambda.
//
// Write defect(lambda, k) = n + 1 - l(lambda) - k. Entries with negative
// defect vanish; defect-0 entries are initial values; for positive defect
//
//   defect * p^lambda_{m,k} =
//       sum_{j>=1} [m binom(k+2j-m, 2j) + binom(k+2j-m, 2j+1)] p^lambda_{m,k+2j}
//     + sum_{j>=1} sum_{mu |>_{2j+1} lambda} kappa_{mu,lambda} p^mu_{m,k}
//
// and the same for I without the m binom(k+2j-m, 2j) term. Both right-hand
// terms have strictly smaller defect (k grows, or l(mu) > l(lambda)), so the
// tables are filled in order of increasing defect.

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/count_table.hpp"
#include "sepcount/error.hpp"
#include "sepcount/initial_values.hpp"
#include "sepcount/oracle.hpp"
#include "sepcount/partition.hpp"

namespace sepcount {

/// Where defect-0 entries come from. `automatic`: for p, the oracle when
/// n <= oracle_default_cap and the closed form beyond; for I, the closed form.
enum class base_source { automatic, oracle, closed_form };

inline const char* to_string(base_source b) {
    switch (b) {
    case base_source::automatic:
        return "automatic";
    case base_source::oracle:
        return "oracle";
    case base_source::closed_form:
        return "closed_form";
    }
    return "?";
}

struct base_check_report {
    int max_n = 0;
    long checked = 0;
    long separated_mismatches = 0;
    long isolated_mismatches = 0;
    long add_reading_mismatches = 0;
    bool ok() const { return separated_mismatches == 0 && isolated_mismatches == 0; }
};

/// Compares p_base (both sign readings) and i_base with the oracle on every
/// (lambda, mu, m) with l(lambda) + l(mu) = n + 1, n <= max_n.
inline base_check_report verify_closed_form_bases(int max_n = 6, oracle& source = default_oracle()) {
    base_check_report report;
    report.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        auto parts = partitions_of(n);
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                if (lambda.length() + mu.length() != n + 1)
                    continue;
                for (int m = 0; m <= n; ++m) {
                    ++report.checked;
                    BigInt expected_p = source.p_by_type(lambda, mu, m);
                    if (p_base(lambda, mu, m, sign_reading::subtract) != expected_p)
                        ++report.separated_mismatches;
                    if (p_base(lambda, mu, m, sign_reading::add) != expected_p)
                        ++report.add_reading_mismatches;
                    if (i_base(lambda, mu, m) != source.i_by_type(lambda, mu, m))
                        ++report.isolated_mismatches;
                }
            }
    }
    return report;
}

namespace detail {

/// Runs the closed-form self-check once per process; throws if it failed.
inline void ensure_closed_form_checked() {
    static std::once_flag flag;
    static bool passed = false;
    std::call_once(flag, [] { passed = verify_closed_form_bases(6).ok(); });
    if (!passed)
        throw invariant_error("closed-form initial values disagree with the oracle for n <= 6");
}

inline BigInt base_entry(quantity kind, const integer_partition& lambda, int m, int k, base_source source,
                         oracle& orc) {
    const int n = lambda.size();
    if (source == base_source::oracle)
        return kind == quantity::separated ? orc.p(lambda, m, k) : orc.i(lambda, m, k);
    BigInt total = 0;
    for (const auto& mu : partitions_into(n, k))
        total += kind == quantity::separated ? p_base(lambda, mu, m) : i_base(lambda, mu, m);
    return total;
}

inline base_source resolve(quantity kind, int n, base_source requested) {
    if (requested != base_source::automatic)
        return requested;
    if (kind == quantity::separated && n <= oracle_default_cap)
        return base_source::oracle;
    return base_source::closed_form;
}

} // namespace detail

/// Full (lambda, k) table for fixed n, m by the recurrence.
inline count_table lambda_table(quantity kind, int n, int m, base_source requested = base_source::automatic,
                                oracle& orc = default_oracle()) {
    if (n < 1)
        throw domain_error("lambda_table: need n >= 1");
    if (m < 0 || m > n)
        throw domain_error("lambda_table: need 0 <= m <= n, got m=" + std::to_string(m));
    const base_source source = detail::resolve(kind, n, requested);
    if (source == base_source::closed_form)
        detail::ensure_closed_form_checked();

    count_table table;
    table.n = n;
    table.m = m;
    table.kind = kind;
    table.source = value_source::recurrence;

    const auto parts = partitions_of(n);
    const bool separated = kind == quantity::separated;
    for (int defect = 0; defect <= n - 1; ++defect) {
        for (const auto& lambda : parts) {
            const int k = n + 1 - lambda.length() - defect;
            if (k < 1)
                continue;
            if (defect == 0) {
                table.set(lambda, k, detail::base_entry(kind, lambda, m, k, source, orc));
                continue;
            }
            BigInt numerator = 0;
            for (int j = 1; k + 2 * j <= n; ++j) {
                BigInt coeff = binomial(k + 2 * j - m, 2 * j + 1);
                if (separated)
                    coeff += m * binomial(k + 2 * j - m, 2 * j);
                if (coeff != 0)
                    numerator += coeff * table.at(lambda, k + 2 * j);
            }
            for (int j = 1; lambda.length() + 2 * j <= n; ++j)
                for (const auto& [mu, kappa] : splits_of(lambda, 2 * j + 1))
                    numerator += kappa * table.at(mu, k);
            table.set(lambda, k,
                      exact_div(numerator, BigInt(defect),
                                separated ? "p_lambda recurrence" : "i_lambda recurrence"));
        }
    }
    return table;
}

namespace detail {

inline const count_table& cached_lambda_table(quantity kind, int n, int m, base_source requested) {
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, count_table> cache;
    const base_source source = resolve(kind, n, requested);
    auto key = std::make_tuple(static_cast<int>(kind), n, m, static_cast<int>(source));
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    count_table table = lambda_table(kind, n, m, source);
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(table)).first->second;
}

inline void require_lambda_args(const char* who, const integer_partition& lambda, int m, int k) {
    const int n = lambda.size();
    if (n < 1)
        throw domain_error(std::string(who) + ": empty partition");
    if (m < 0 || m > n)
        throw domain_error(std::string(who) + ": need 0 <= m <= n");
    if (k < 1 || k > n)
        throw domain_error(std::string(who) + ": need 1 <= k <= n");
}

} // namespace detail

/// p^lambda_{m,k}
inline BigInt p_lambda(const integer_partition& lambda, int m, int k, base_source base = base_source::automatic) {
    detail::require_lambda_args("p_lambda", lambda, m, k);
    return detail::cached_lambda_table(quantity::separated, lambda.size(), m, base).at(lambda, k);
}

/// I^lambda_{m,k}
inline BigInt i_lambda(const integer_partition& lambda, int m, int k, base_source base = base_source::automatic) {
    detail::require_lambda_args("i_lambda", lambda, m, k);
    return detail::cached_lambda_table(quantity::isolated, lambda.size(), m, base).at(lambda, k);
}

} // namespace sepcount
