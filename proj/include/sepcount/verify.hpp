#pragma once

// Formula-versus-oracle verification suites. Each row compares one value
// computed by the library with the exhaustive oracle (or, for identities,
// the two sides of the identity) and records the verdict.

#include <functional>
#include <string>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/composition.hpp"
#include "sepcount/ncycle.hpp"
#include "sepcount/oracle.hpp"
#include "sepcount/plane_permutation.hpp"
#include "sepcount/recurrence.hpp"
#include "sepcount/stirling.hpp"

namespace sepcount {

enum class verify_suite { closed_forms, recurrences, identities, all };

inline verify_suite parse_verify_suite(const std::string& s) {
    if (s == "closed-forms")
        return verify_suite::closed_forms;
    if (s == "recurrences")
        return verify_suite::recurrences;
    if (s == "identities")
        return verify_suite::identities;
    if (s == "all")
        return verify_suite::all;
    throw parse_error("unknown suite '" + s + "'", 0);
}

struct verify_row {
    std::string suite;
    std::string check;
    std::string params;
    std::string formula;
    std::string expected;
    bool ok = false;
};

struct verify_options {
    int max_n = 5;
    verify_suite suite = verify_suite::all;
    // Harness self-test: perturb the first formula value by one.
    bool inject_fault = false;
};

struct verify_report {
    std::vector<verify_row> rows;
    long mismatches() const {
        long count = 0;
        for (const auto& r : rows)
            count += !r.ok;
        return count;
    }
};

namespace detail {

class row_sink {
public:
    row_sink(verify_report& report, bool inject_fault) : report_(report), fault_pending_(inject_fault) {}

    void add(const std::string& suite, const std::string& check, const std::string& params, BigInt formula,
             const BigInt& expected) {
        if (fault_pending_) {
            formula += 1;
            fault_pending_ = false;
        }
        report_.rows.push_back({suite, check, params, formula.str(), expected.str(), formula == expected});
    }

    void add(const std::string& suite, const std::string& check, const std::string& params, Rational formula,
             const Rational& expected) {
        if (fault_pending_) {
            formula += 1;
            fault_pending_ = false;
        }
        report_.rows.push_back(
            {suite, check, params, to_fraction_string(formula), to_fraction_string(expected), formula == expected});
    }

private:
    verify_report& report_;
    bool fault_pending_;
};

inline std::string nmk(int n, int m, int k) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

inline std::string lmk(const integer_partition& lambda, int m, int k) {
    return "lambda=" + lambda.to_string() + " m=" + std::to_string(m) + " k=" + std::to_string(k);
}

inline void run_closed_forms(int max_n, oracle& orc, row_sink& sink) {
    const std::string suite = "closed-forms";
    for (int n = 1; n <= max_n; ++n) {
        const auto single = integer_partition::single(n);
        const BigInt pairs = factorial(n - 1) * factorial(n - 1);
        for (int m = 0; m <= n; ++m) {
            BigInt sep_total = 0, iso_total = 0;
            for (int k = 1; k <= n; ++k) {
                BigInt p = orc.p(single, m, k);
                sep_total += p;
                sink.add(suite, "p_ncycle", nmk(n, m, k), p_ncycle(n, m, k), p);
                if (m < n) {
                    BigInt i = orc.i(single, m, k);
                    iso_total += i;
                    sink.add(suite, "i_ncycle", nmk(n, m, k), i_ncycle(n, m, k), i);
                }
            }
            const std::string nm = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            sink.add(suite, "separation_probability", nm, sep_prob_ncycle(n, m), make_rational(sep_total, pairs));
            if (m < n)
                sink.add(suite, "isolation_probability", nm, iso_prob_ncycle(n, m), make_rational(iso_total, pairs));
        }
        for (const auto& alpha : compositions_of(n))
            sink.add(suite, "alpha_separated_count", "alpha=" + alpha.to_string(), alpha_separated_count(alpha),
                     orc.alpha(alpha));
        if (n >= 2) {
            auto counts = orc.fixed_point_distribution(n);
            auto dist = fixed_point_distribution(n);
            for (int i = 0; i <= n; ++i) {
                auto it = counts.find(i);
                BigInt c = it == counts.end() ? BigInt(0) : it->second;
                sink.add(suite, "fixed_point_distribution", "n=" + std::to_string(n) + " i=" + std::to_string(i),
                         dist[static_cast<std::size_t>(i)], make_rational(c, pairs));
            }
        }
    }
}

inline void run_recurrences(int max_n, oracle& orc, row_sink& sink) {
    const std::string suite = "recurrences";
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& lambda : parts)
            for (const auto& mu : parts) {
                if (lambda.length() + mu.length() != n + 1)
                    continue;
                for (int m = 0; m <= n; ++m) {
                    const std::string params = "lambda=" + lambda.to_string() + " mu=" + mu.to_string() +
                                               " m=" + std::to_string(m);
                    sink.add(suite, "p_base", params, p_base(lambda, mu, m), orc.p_by_type(lambda, mu, m));
                    sink.add(suite, "i_base", params, i_base(lambda, mu, m), orc.i_by_type(lambda, mu, m));
                }
            }
        for (int m = 0; m <= n; ++m) {
            auto p_table = lambda_table(quantity::separated, n, m, base_source::closed_form, orc);
            auto i_table = lambda_table(quantity::isolated, n, m, base_source::closed_form, orc);
            for (const auto& lambda : parts)
                for (int k = 1; k <= n; ++k) {
                    sink.add(suite, "p_lambda", lmk(lambda, m, k), p_table.at(lambda, k), orc.p(lambda, m, k));
                    sink.add(suite, "i_lambda", lmk(lambda, m, k), i_table.at(lambda, k), orc.i(lambda, m, k));
                }
        }
    }
}

inline void run_identities(int max_n, oracle& orc, row_sink& sink) {
    const std::string suite = "identities";
    for (int n = 1; n <= max_n; ++n) {
        // Reflection: Ne(p) + Ne(p') = n + 1 - C(pi) - C(D), every plane
        // permutation on [n]. One row per n: the number of plane
        // permutations satisfying it against the number visited.
        BigInt visited = 0, holding = 0;
        for (auto it = n_cycles(n).begin(); it != n_cycles(n).end(); ++it) {
            const std::vector<int> upper = it.sequence();
            for_each_permutation(n, [&](const permutation& pi) {
                plane_permutation pp(upper, pi);
                const permutation d = diagonal(pp);
                ++visited;
                if (ntae_count(pp) + ntae_count(reflect(pp)) == n + 1 - pi.cycle_count() - d.cycle_count())
                    ++holding;
            });
        }
        sink.add(suite, "reflection", "n=" + std::to_string(n), holding, visited);

        for (int m = 0; m <= n; ++m)
            for (int k = 1; k <= n; ++k) {
                BigInt exceedance_total = 0;
                for (const auto& lambda : partitions_of(n)) {
                    // sum_a (n-k-a) p^{lambda,a}_{m,k} = sum_j w_j p^lambda_{m,k+2j}
                    BigInt lhs = 0;
                    for (const auto& [a, c] : orc.p_stratified(lambda, m, k)) {
                        lhs += (n - k - a) * c;
                        exceedance_total += a * c;
                    }
                    BigInt rhs = 0;
                    for (int j = 1; k + 2 * j <= n; ++j)
                        rhs += (m * binomial(k + 2 * j - m, 2 * j) + binomial(k + 2 * j - m, 2 * j + 1)) *
                               orc.p(lambda, m, k + 2 * j);
                    sink.add(suite, "stratified_exceedances", lmk(lambda, m, k), rhs, lhs);
                }
                if (m <= n - 1) {
                    BigInt direct = factorial(n - 1) * (binomial(n - m, 2) + m * (n - m)) * c_sep(n - 1, k, m);
                    BigInt via_recurrence = (n - k) * factorial(n - 1) * c_sep(n, k, m);
                    for (int j = 1; k + 2 * j <= n; ++j)
                        via_recurrence -= (m * binomial(k + 2 * j - m, 2 * j) + binomial(k + 2 * j - m, 2 * j + 1)) *
                                          factorial(n - 1) * c_sep(n, k + 2 * j, m);
                    sink.add(suite, "exceedance_total", nmk(n, m, k), direct, exceedance_total);
                    sink.add(suite, "exceedance_total_recurrence", nmk(n, m, k), via_recurrence, direct);
                }
            }
    }
}

} // namespace detail

/// Runs the selected suites for n = 1..max_n. Throws cap_exceeded when
/// max_n is above the oracle's cap.
inline verify_report run_verification(const verify_options& options, oracle& orc = default_oracle()) {
    check_oracle_cap(options.max_n, orc.cap());
    verify_report report;
    detail::row_sink sink(report, options.inject_fault);
    const bool all = options.suite == verify_suite::all;
    if (all || options.suite == verify_suite::closed_forms)
        detail::run_closed_forms(options.max_n, orc, sink);
    if (all || options.suite == verify_suite::recurrences)
        detail::run_recurrences(options.max_n, orc, sink);
    if (all || options.suite == verify_suite::identities)
        detail::run_identities(options.max_n, orc, sink);
    return report;
}

} // namespace sepcount
