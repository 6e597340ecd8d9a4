#pragma once

// Integer compositions and alpha-separated products.

#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/error.hpp"
#include "sepcount/partition.hpp"
#include "sepcount/permutation.hpp"

namespace sepcount {

class composition {
public:
    explicit composition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw domain_error("composition needs at least one part");
        for (int p : parts_)
            if (p < 1)
                throw domain_error("composition parts must be positive");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Block index (0-based) of each element of [n]; B_i are consecutive.
    std::vector<int> block_of() const {
        std::vector<int> out;
        for (int b = 0; b < length(); ++b)
            out.insert(out.end(), static_cast<std::size_t>(parts_[static_cast<std::size_t>(b)]), b);
        return out;
    }

    /// Blocks as 1-based closed intervals [first, last].
    std::vector<std::pair<int, int>> blocks() const {
        std::vector<std::pair<int, int>> out;
        int start = 1;
        for (int p : parts_) {
            out.emplace_back(start, start + p - 1);
            start += p;
        }
        return out;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    bool operator==(const composition&) const = default;

private:
    std::vector<int> parts_;
};

/// "1,3"
inline composition parse_composition(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    while (true) {
        parts.push_back(detail::parse_positive_int(text, pos));
        detail::skip_spaces(text, pos);
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw parse_error("expected ','", pos);
        ++pos;
        detail::skip_spaces(text, pos);
    }
    return composition(std::move(parts));
}

/// All 2^(n-1) compositions of n.
inline std::vector<composition> compositions_of(int n) {
    if (n < 1)
        throw domain_error("compositions_of requires n >= 1");
    std::vector<composition> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(std::move(parts));
    }
    return out;
}

/// Every cycle of p stays inside one block of alpha.
inline bool alpha_separated(const permutation& p, const composition& alpha) {
    if (p.size() != alpha.size())
        throw size_mismatch("alpha_separated: composition and permutation sizes differ");
    auto block = alpha.block_of();
    for (int x = 1; x <= p.size(); ++x)
        if (block[static_cast<std::size_t>(x - 1)] != block[static_cast<std::size_t>(p(x) - 1)])
            return false;
    return true;
}

/// Pairs of n-cycles whose product is alpha-separated:
///     (n-1)! prod alpha_i! / (n+1-k),  k = number of parts.
inline BigInt alpha_separated_count(const composition& alpha) {
    const int n = alpha.size();
    const int k = alpha.length();
    BigInt numerator = factorial(n - 1);
    for (int a : alpha.parts())
        numerator *= factorial(a);
    return exact_div(numerator, BigInt(n + 1 - k), "alpha_separated_count");
}

} // namespace sepcount
