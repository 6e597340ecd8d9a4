#pragma once

#include <map>
#include <string>
#include <utility>

#include "sepcount/arith.hpp"
#include "sepcount/error.hpp"
#include "sepcount/partition.hpp"

namespace sepcount {

/// Which vertical constraint a table counts: [m] separated (p) or fixed (I).
enum class quantity { separated, isolated };

enum class value_source { closed_form, recurrence, oracle };

inline const char* to_string(quantity q) { return q == quantity::separated ? "separated" : "isolated"; }

inline const char* to_string(value_source s) {
    switch (s) {
    case value_source::closed_form:
        return "closed_form";
    case value_source::recurrence:
        return "recurrence";
    case value_source::oracle:
        return "oracle";
    }
    return "?";
}

inline quantity parse_quantity(const std::string& s) {
    if (s == "separated")
        return quantity::separated;
    if (s == "isolated")
        return quantity::isolated;
    throw parse_error("unknown quantity '" + s + "'", 0);
}

inline value_source parse_value_source(const std::string& s) {
    if (s == "closed_form")
        return value_source::closed_form;
    if (s == "recurrence")
        return value_source::recurrence;
    if (s == "oracle")
        return value_source::oracle;
    throw parse_error("unknown source '" + s + "'", 0);
}

/// Counts indexed by (diagonal cycle type lambda, vertical cycle count k) for
/// fixed n and m. Only non-zero entries are stored.
struct count_table {
    int n = 0;
    int m = 0;
    quantity kind = quantity::separated;
    value_source source = value_source::recurrence;
    std::map<std::pair<integer_partition, int>, BigInt> entries;

    BigInt at(const integer_partition& lambda, int k) const {
        auto it = entries.find({lambda, k});
        return it == entries.end() ? BigInt(0) : it->second;
    }

    void set(const integer_partition& lambda, int k, const BigInt& value) {
        if (value < 0)
            throw invariant_error("negative count for " + lambda.to_string() + ", k=" + std::to_string(k));
        if (value == 0)
            entries.erase({lambda, k});
        else
            entries[{lambda, k}] = value;
    }

    bool operator==(const count_table&) const = default;
};

} // namespace sepcount
