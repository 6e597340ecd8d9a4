#pragma once

// JSON form of count tables. Partitions are strings ("2+1+1"); counts are
// decimal strings since they outgrow 64-bit integers.

#include <string>

#include "json.hpp"

#include "sepcount/arith.hpp"
#include "sepcount/count_table.hpp"
#include "sepcount/partition.hpp"

namespace sepcount {

inline nlohmann::json to_json(const count_table& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries)
        entries.push_back({{"lambda", key.first.to_string()}, {"k", key.second}, {"value", value.str()}});
    return {
        {"n", table.n},
        {"m", table.m},
        {"quantity", to_string(table.kind)},
        {"source", to_string(table.source)},
        {"entries", std::move(entries)},
    };
}

inline count_table count_table_from_json(const nlohmann::json& j) {
    count_table table;
    table.n = j.at("n").get<int>();
    table.m = j.at("m").get<int>();
    table.kind = parse_quantity(j.at("quantity").get<std::string>());
    table.source = parse_value_source(j.at("source").get<std::string>());
    for (const auto& e : j.at("entries")) {
        auto lambda = parse_partition(e.at("lambda").get<std::string>());
        if (lambda.size() != table.n)
            throw parse_error("entry partition " + lambda.to_string() + " is not a partition of n", 0);
        table.set(lambda, e.at("k").get<int>(), BigInt(e.at("value").get<std::string>()));
    }
    return table;
}

} // namespace sepcount
