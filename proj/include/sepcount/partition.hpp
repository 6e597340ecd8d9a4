#pragma once

// Integer partitions, the splitting relation and merge multiplicities.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/error.hpp"

namespace sepcount {

class integer_partition {
public:
    integer_partition() = default;

    /// Parts in any order; stored non-increasing. Parts must be positive.
    explicit integer_partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw domain_error("partition parts must be positive, got " + std::to_string(p));
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    /// n^1
    static integer_partition single(int n) { return integer_partition({n}); }
    /// 1^n
    static integer_partition ones(int n) { return integer_partition(std::vector<int>(n, 1)); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// Number of parts.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// Number of parts greater than one.
    int nontrivial_length() const noexcept {
        return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 1; }));
    }
    /// Number of parts equal to `value`.
    int multiplicity(int value) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    /// Distinct part values with their multiplicities, largest value first.
    std::vector<std::pair<int, int>> multiplicities() const {
        std::vector<std::pair<int, int>> out;
        for (int p : parts_) {
            if (!out.empty() && out.back().first == p)
                ++out.back().second;
            else
                out.emplace_back(p, 1);
        }
        return out;
    }

    /// Product of a_i! over the multiplicities a_i.
    BigInt multiplicity_factorial_product() const {
        BigInt result = 1;
        for (auto [value, count] : multiplicities())
            result *= factorial(count);
        return result;
    }

    /// "3+2+1+1"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += '+';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    /// "1^2 2^1 3^1", values ascending.
    std::string to_multiplicity_string() const {
        auto mult = multiplicities();
        std::string out;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            if (!out.empty())
                out += ' ';
            out += std::to_string(it->first) + "^" + std::to_string(it->second);
        }
        return out;
    }

    bool operator==(const integer_partition&) const = default;

    // Reverse-lexicographic: larger leading parts come first.
    std::strong_ordering operator<=>(const integer_partition& other) const {
        auto cmp = std::lexicographical_compare_three_way(other.parts_.begin(), other.parts_.end(),
                                                          parts_.begin(), parts_.end());
        return cmp;
    }

private:
    std::vector<int> parts_;
};

namespace detail {

inline int parse_positive_int(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000)
            throw parse_error("number too large", start);
        ++pos;
    }
    if (pos == start)
        throw parse_error("expected a number", pos);
    if (value == 0)
        throw parse_error("expected a positive number", start);
    return static_cast<int>(value);
}

inline void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ')
        ++pos;
}

} // namespace detail

/// Accepts "3+2+1+1" or "1^2 2^1 3^1" (the latter may also omit "^1").
inline integer_partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    bool multiplicity_form = text.find('^') != std::string_view::npos ||
                             (text.find('+') == std::string_view::npos &&
                              text.find(' ', pos) != std::string_view::npos);
    if (pos == text.size())
        throw parse_error("empty partition", pos);
    while (pos < text.size()) {
        int value = detail::parse_positive_int(text, pos);
        if (multiplicity_form) {
            int count = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                count = detail::parse_positive_int(text, pos);
            }
            parts.insert(parts.end(), static_cast<std::size_t>(count), value);
            detail::skip_spaces(text, pos);
        } else {
            parts.push_back(value);
            detail::skip_spaces(text, pos);
            if (pos < text.size()) {
                if (text[pos] != '+')
                    throw parse_error("expected '+'", pos);
                ++pos;
                detail::skip_spaces(text, pos);
                if (pos == text.size())
                    throw parse_error("dangling '+'", pos);
            }
        }
    }
    return integer_partition(std::move(parts));
}

/// All partitions of n in reverse-lexicographic order (n^1 first, 1^n last).
inline std::vector<integer_partition> partitions_of(int n) {
    if (n < 1)
        throw domain_error("partitions_of requires n >= 1");
    std::vector<integer_partition> out;
    std::vector<int> current;
    std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            recurse(remaining - p, p);
            current.pop_back();
        }
    };
    recurse(n, n);
    return out;
}

/// Partitions of n into exactly k parts, reverse-lexicographic.
inline std::vector<integer_partition> partitions_into(int n, int k) {
    std::vector<integer_partition> out;
    if (n < 1 || k < 1 || k > n)
        return out;
    for (auto& p : partitions_of(n))
        if (p.length() == k)
            out.push_back(std::move(p));
    return out;
}

/// kappa_{mu,lambda}: the number of k-subsets of the (distinguished) parts of
/// mu whose merger into one part turns mu into lambda. Zero when lambda is
/// not obtained from mu that way.
inline BigInt merge_multiplicity(const integer_partition& mu, const integer_partition& lambda, int k) {
    if (mu.size() != lambda.size())
        throw size_mismatch("merge_multiplicity: partitions of different integers");
    const int len = mu.length();
    if (k < 1 || k > len || lambda.length() != len - k + 1)
        return 0;
    const auto& parts = mu.parts();
    BigInt count = 0;
    // Walk all k-subsets via a selection mask.
    std::vector<char> chosen(static_cast<std::size_t>(len), 0);
    std::fill(chosen.begin(), chosen.begin() + k, 1);
    std::vector<int> merged;
    do {
        merged.clear();
        int block = 0;
        for (int i = 0; i < len; ++i) {
            if (chosen[static_cast<std::size_t>(i)])
                block += parts[static_cast<std::size_t>(i)];
            else
                merged.push_back(parts[static_cast<std::size_t>(i)]);
        }
        merged.push_back(block);
        std::sort(merged.begin(), merged.end(), std::greater<>());
        if (merged == lambda.parts())
            ++count;
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return count;
}

/// mu |>_k lambda
inline bool splits_into(const integer_partition& mu, const integer_partition& lambda, int k) {
    return merge_multiplicity(mu, lambda, k) > 0;
}

struct split_entry {
    integer_partition mu;
    BigInt kappa;
};

/// Every mu obtained from lambda by splitting one part into k parts, with its
/// merge multiplicity kappa_{mu,lambda}. Reverse-lexicographic in mu.
inline std::vector<split_entry> splits_of(const integer_partition& lambda, int k) {
    if (k < 2)
        throw domain_error("splits_of requires k >= 2");
    std::vector<integer_partition> found;
    for (auto [value, count] : lambda.multiplicities()) {
        if (value < k)
            continue;
        std::vector<int> rest = lambda.parts();
        rest.erase(std::find(rest.begin(), rest.end(), value));
        for (const auto& piece : partitions_into(value, k)) {
            std::vector<int> parts = rest;
            parts.insert(parts.end(), piece.parts().begin(), piece.parts().end());
            found.emplace_back(std::move(parts));
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<split_entry> out;
    out.reserve(found.size());
    for (auto& mu : found) {
        BigInt kappa = merge_multiplicity(mu, lambda, k);
        out.push_back({std::move(mu), std::move(kappa)});
    }
    return out;
}

} // namespace sepcount
