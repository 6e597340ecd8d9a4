#pragma once

// The sepcount command line: count, prob, table and verify. Kept in a
// header so the test suite can drive it in-process.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sepcount/json_io.hpp"
#include "sepcount/sepcount.hpp"
#include "sepcount/verify.hpp"

namespace sepcount::cli {

using nlohmann::ordered_json;

struct output_record {
    std::string command;
    std::string quantity;
    std::vector<std::pair<std::string, ordered_json>> query;
    std::string value;
    std::optional<std::string> decimal;
    std::string source;
    double elapsed_ms = 0;
};

inline ordered_json to_json(const output_record& r) {
    ordered_json q = ordered_json::object();
    for (const auto& [key, value] : r.query)
        q[key] = value;
    ordered_json j = {{"command", r.command}, {"quantity", r.quantity}, {"query", q}, {"value", r.value}};
    if (r.decimal)
        j["decimal"] = *r.decimal;
    j["source"] = r.source;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string plain(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void write_csv(std::ostream& out, const std::vector<output_record>& records) {
    std::vector<std::string> keys;
    bool with_decimal = false;
    for (const auto& r : records) {
        for (const auto& [key, value] : r.query)
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                keys.push_back(key);
        with_decimal = with_decimal || r.decimal.has_value();
    }
    out << "command,quantity";
    for (const auto& k : keys)
        out << ',' << k;
    out << ",value" << (with_decimal ? ",decimal" : "") << ",source,elapsed_ms\n";
    for (const auto& r : records) {
        out << r.command << ',' << r.quantity;
        for (const auto& k : keys) {
            out << ',';
            for (const auto& [key, value] : r.query)
                if (key == k)
                    out << csv_field(plain(value));
        }
        out << ',' << r.value;
        if (with_decimal)
            out << ',' << r.decimal.value_or("");
        out << ',' << r.source << ',' << r.elapsed_ms << '\n';
    }
}

inline void write_records(std::ostream& out, const std::vector<output_record>& records, const std::string& format) {
    if (format == "csv") {
        write_csv(out, records);
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : records)
        arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
}

/// "all" or a single integer; "all" expands to lo..hi.
inline std::vector<int> expand_range(const std::string& text, int lo, int hi, const char* name) {
    if (text == "all") {
        std::vector<int> out;
        for (int v = lo; v <= hi; ++v)
            out.push_back(v);
        return out;
    }
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw parse_error(std::string("--") + name + " expects an integer or 'all', got '" + text + "'", 0);
    }
    if (pos != text.size())
        throw parse_error(std::string("--") + name + " expects an integer or 'all', got '" + text + "'", pos);
    return {value};
}

template <class Fn>
auto timed(Fn&& fn, double& elapsed_ms) {
    auto start = std::chrono::steady_clock::now();
    auto result = fn();
    elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

struct settings {
    std::string format = "json";
    std::string out_file;
    int cap = oracle_default_cap;
};

struct count_args {
    std::string what;
    int n = -1;
    int m = 0;
    std::string k;
    std::string lambda;
    std::string alpha;
    std::string source = "formula";
    std::string base = "automatic";
};

inline base_source parse_base(const std::string& s) {
    if (s == "automatic")
        return base_source::automatic;
    if (s == "oracle")
        return base_source::oracle;
    if (s == "closed-form")
        return base_source::closed_form;
    throw parse_error("unknown base source '" + s + "'", 0);
}

inline std::vector<output_record> run_count(const count_args& a, oracle& orc) {
    std::vector<output_record> out;
    const bool from_oracle = a.source == "oracle";
    auto record = [&](std::vector<std::pair<std::string, ordered_json>> query, auto&& compute, const char* formula_source) {
        output_record r;
        r.command = "count";
        r.quantity = a.what;
        r.query = std::move(query);
        r.query.emplace_back("requested_source", a.source);
        BigInt v = timed(compute, r.elapsed_ms);
        r.value = v.str();
        r.source = from_oracle ? "oracle" : formula_source;
        out.push_back(std::move(r));
    };
    auto need_n = [&] {
        if (a.n < 0)
            throw domain_error(a.what + " needs --n");
    };
    auto need_k = [&] {
        if (a.k.empty())
            throw domain_error(a.what + " needs --k");
    };
    auto no_oracle = [&] {
        if (from_oracle)
            throw domain_error("no oracle for " + a.what);
    };

    if (a.what == "stirling" || a.what == "c-sep" || a.what == "c-fix") {
        need_n();
        need_k();
        no_oracle();
        for (int k : expand_range(a.k, 0, a.n, "k")) {
            if (a.what == "stirling")
                record({{"n", a.n}, {"k", k}}, [&] { return stirling_c(a.n, k); }, "closed_form");
            else if (a.what == "c-sep")
                record({{"n", a.n}, {"m", a.m}, {"k", k}}, [&] { return c_sep(a.n, k, a.m); }, "closed_form");
            else
                record({{"n", a.n}, {"m", a.m}, {"k", k}}, [&] { return c_fix(a.n, k, a.m); }, "closed_form");
        }
    } else if (a.what == "p-ncycle" || a.what == "i-ncycle") {
        need_n();
        need_k();
        const bool separated = a.what == "p-ncycle";
        for (int k : expand_range(a.k, 1, a.n, "k"))
            record({{"n", a.n}, {"m", a.m}, {"k", k}},
                   [&]() -> BigInt {
                       if (from_oracle) {
                           if (separated)
                               return orc.p(integer_partition::single(a.n), a.m, k);
                           if (a.m >= a.n)
                               throw domain_error("i-ncycle needs m < n");
                           return orc.i(integer_partition::single(a.n), a.m, k);
                       }
                       return separated ? p_ncycle(a.n, a.m, k) : i_ncycle(a.n, a.m, k);
                   },
                   "closed_form");
    } else if (a.what == "p-lambda" || a.what == "i-lambda") {
        if (a.lambda.empty())
            throw domain_error(a.what + " needs --lambda");
        need_k();
        const auto lambda = parse_partition(a.lambda);
        const int n = lambda.size();
        const auto kind = a.what == "p-lambda" ? quantity::separated : quantity::isolated;
        const auto base = parse_base(a.base);
        if (a.m < 0 || a.m > n)
            throw domain_error(a.what + ": need 0 <= m <= n");
        std::optional<count_table> table;
        for (int k : expand_range(a.k, 1, n, "k")) {
            if (k < 1 || k > n)
                throw domain_error(a.what + ": need 1 <= k <= n");
            record({{"lambda", lambda.to_string()}, {"m", a.m}, {"k", k}, {"base", a.base}},
                   [&]() -> BigInt {
                       if (from_oracle)
                           return kind == quantity::separated ? orc.p(lambda, a.m, k) : orc.i(lambda, a.m, k);
                       if (!table)
                           table = lambda_table(kind, n, a.m, base, orc);
                       return table->at(lambda, k);
                   },
                   "recurrence");
        }
    } else if (a.what == "alpha") {
        if (a.alpha.empty())
            throw domain_error("alpha needs --alpha");
        const auto alpha = parse_composition(a.alpha);
        record({{"alpha", alpha.to_string()}},
               [&] { return from_oracle ? orc.alpha(alpha) : alpha_separated_count(alpha); }, "closed_form");
    }
    return out;
}

struct prob_args {
    std::string what;
    int n = -1;
    int m = 0;
    std::optional<int> decimal;
    std::string source = "formula";
};

inline std::vector<output_record> run_prob(const prob_args& a, oracle& orc) {
    if (a.n < 0)
        throw domain_error(a.what + " needs --n");
    const bool from_oracle = a.source == "oracle";
    std::vector<output_record> out;
    auto record = [&](const std::string& name, std::vector<std::pair<std::string, ordered_json>> query,
                      const Rational& value, double elapsed) {
        output_record r;
        r.command = "prob";
        r.quantity = name;
        r.query = std::move(query);
        r.query.emplace_back("requested_source", a.source);
        r.value = to_fraction_string(value);
        if (a.decimal)
            r.decimal = to_decimal_string(value, *a.decimal);
        r.source = from_oracle ? "oracle" : "closed_form";
        r.elapsed_ms = elapsed;
        out.push_back(std::move(r));
    };
    auto oracle_pairs = [&] { return factorial(a.n - 1) * factorial(a.n - 1); };
    double elapsed = 0;

    if (a.what == "separation" || a.what == "isolation") {
        const bool separated = a.what == "separation";
        Rational value = timed(
            [&]() -> Rational {
                if (!from_oracle)
                    return separated ? sep_prob_ncycle(a.n, a.m) : iso_prob_ncycle(a.n, a.m);
                if (!separated && a.m >= a.n)
                    throw domain_error("isolation needs m < n");
                BigInt total = 0;
                for (int k = 1; k <= a.n; ++k)
                    total += separated ? orc.p(integer_partition::single(a.n), a.m, k)
                                       : orc.i(integer_partition::single(a.n), a.m, k);
                return make_rational(total, oracle_pairs());
            },
            elapsed);
        record(a.what, {{"n", a.n}, {"m", a.m}}, value, elapsed);
    } else if (a.what == "fpf") {
        Rational value = timed(
            [&]() -> Rational {
                if (!from_oracle)
                    return fpf_probability(a.n);
                auto dist = orc.fixed_point_distribution(a.n);
                auto it = dist.find(0);
                return make_rational(it == dist.end() ? BigInt(0) : it->second, oracle_pairs());
            },
            elapsed);
        record(a.what, {{"n", a.n}}, value, elapsed);
    } else if (a.what == "moments") {
        moments mo = timed(
            [&]() -> moments {
                if (!from_oracle)
                    return fixed_point_moments(a.n);
                Rational mean = 0, second = 0;
                const BigInt pairs = oracle_pairs();
                for (const auto& [i, c] : orc.fixed_point_distribution(a.n)) {
                    mean += make_rational(i * c, pairs);
                    second += make_rational(i * i * c, pairs);
                }
                return {mean, second - mean * mean};
            },
            elapsed);
        record("mean", {{"n", a.n}}, mo.mean, elapsed);
        record("variance", {{"n", a.n}}, mo.variance, elapsed);
    }
    return out;
}

struct table_args {
    int n = -1;
    int m = 0;
    std::string quantity = "separated";
    std::string source = "recurrence";
    std::string base = "automatic";
};

inline count_table run_table(const table_args& a, oracle& orc) {
    if (a.n < 1)
        throw domain_error("table needs --n >= 1");
    if (a.m < 0 || a.m > a.n)
        throw domain_error("table: need 0 <= m <= n");
    const auto kind = parse_quantity(a.quantity);
    if (a.source == "recurrence")
        return lambda_table(kind, a.n, a.m, parse_base(a.base), orc);
    count_table table;
    table.n = a.n;
    table.m = a.m;
    table.kind = kind;
    table.source = value_source::oracle;
    for (const auto& lambda : partitions_of(a.n))
        for (int k = 1; k <= a.n; ++k)
            table.set(lambda, k, kind == quantity::separated ? orc.p(lambda, a.m, k) : orc.i(lambda, a.m, k));
    return table;
}

inline void write_table(std::ostream& out, const count_table& table, const std::string& format) {
    if (format == "csv") {
        out << "lambda,k,value\n";
        for (const auto& [key, value] : table.entries)
            out << key.first.to_string() << ',' << key.second << ',' << value.str() << '\n';
        return;
    }
    out << sepcount::to_json(table).dump(2) << '\n';
}

inline void write_report(std::ostream& out, const verify_report& report, const std::string& format) {
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"suite", r.suite},
                            {"check", r.check},
                            {"params", r.params},
                            {"formula", r.formula},
                            {"oracle", r.expected},
                            {"verdict", r.ok ? "ok" : "MISMATCH"}});
        ordered_json j = {{"rows", rows},
                          {"checked", report.rows.size()},
                          {"mismatches", report.mismatches()}};
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        out << "suite,check,params,formula,oracle,verdict\n";
        for (const auto& r : report.rows)
            out << r.suite << ',' << r.check << ',' << csv_field(r.params) << ',' << r.formula << ',' << r.expected
                << ',' << (r.ok ? "ok" : "MISMATCH") << '\n';
        return;
    }
    for (const auto& r : report.rows)
        out << (r.ok ? "ok       " : "MISMATCH ") << r.suite << ' ' << r.check << ' ' << r.params
            << " formula=" << r.formula << " oracle=" << r.expected << '\n';
    out << "checked " << report.rows.size() << ", mismatches " << report.mismatches() << '\n';
}

/// Parses and runs one command line. Returns the process exit status:
/// 0 success, 1 verification mismatch, 2 usage or domain error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact separation and isolation counts for products of permutations", "sepcount"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file (cap, format); command-line flags take precedence");

    settings s;
    app.add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", s.out_file, "Write output to FILE instead of stdout");
    app.add_option("--cap", s.cap, "Largest n the exhaustive oracle accepts")
        ->check(CLI::Range(1, oracle_hard_max))
        ->capture_default_str();

    count_args ca;
    auto* count = app.add_subcommand("count", "Compute one count, or a range over k");
    count->add_option("quantity", ca.what)
        ->required()
        ->check(CLI::IsMember({"stirling", "c-sep", "c-fix", "p-ncycle", "i-ncycle", "p-lambda", "i-lambda", "alpha"}));
    count->add_option("--n", ca.n, "Ground set size")->check(CLI::NonNegativeNumber);
    count->add_option("--m", ca.m, "Number of marked elements")->check(CLI::NonNegativeNumber);
    count->add_option("--k", ca.k, "Cycle count of the product, or 'all'");
    count->add_option("--lambda", ca.lambda, "Diagonal cycle type, e.g. 2+1+1 or '1^2 2^1'");
    count->add_option("--alpha", ca.alpha, "Composition, e.g. 1,3");
    count->add_option("--source", ca.source, "formula or oracle")->check(CLI::IsMember({"formula", "oracle"}));
    count->add_option("--base", ca.base, "Initial values for the recurrences")
        ->check(CLI::IsMember({"automatic", "oracle", "closed-form"}));

    prob_args pa;
    auto* prob = app.add_subcommand("prob", "Exact probabilities for the product of two uniform n-cycles");
    prob->add_option("quantity", pa.what)
        ->required()
        ->check(CLI::IsMember({"separation", "isolation", "fpf", "moments"}));
    prob->add_option("--n", pa.n, "Ground set size")->check(CLI::NonNegativeNumber);
    prob->add_option("--m", pa.m, "Number of marked elements")->check(CLI::NonNegativeNumber);
    prob->add_option("--decimal", pa.decimal, "Also print a decimal rendering with D digits")
        ->check(CLI::Range(0, 1000));
    prob->add_option("--source", pa.source, "formula or oracle")->check(CLI::IsMember({"formula", "oracle"}));

    table_args ta;
    auto* table = app.add_subcommand("table", "Emit the full (lambda, k) table for given n and m");
    table->add_option("--n", ta.n, "Ground set size")->required();
    table->add_option("--m", ta.m, "Number of marked elements");
    table->add_option("--quantity", ta.quantity)->check(CLI::IsMember({"separated", "isolated"}));
    table->add_option("--source", ta.source)->check(CLI::IsMember({"recurrence", "oracle"}));
    table->add_option("--base", ta.base)->check(CLI::IsMember({"automatic", "oracle", "closed-form"}));

    verify_options va;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Compare every formula with the exhaustive oracle");
    verify->add_option("--max-n", va.max_n, "Largest n to check")->capture_default_str();
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"closed-forms", "recurrences", "identities", "all"}))
        ->capture_default_str();
    verify->add_flag("--inject-fault", va.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    if (!s.out_file.empty()) {
        file.open(s.out_file);
        if (!file) {
            err << "error: cannot open " << s.out_file << " for writing\n";
            return 2;
        }
    }
    std::ostream& sink = s.out_file.empty() ? out : file;

    try {
        oracle orc(s.cap);
        if (count->parsed()) {
            write_records(sink, run_count(ca, orc), s.format);
        } else if (prob->parsed()) {
            write_records(sink, run_prob(pa, orc), s.format);
        } else if (table->parsed()) {
            write_table(sink, run_table(ta, orc), s.format);
        } else if (verify->parsed()) {
            va.suite = parse_verify_suite(suite);
            auto report = run_verification(va, orc);
            // Plain text is the natural report form; json and csv on request.
            const bool explicit_format = app.get_option("--format")->count() > 0;
            write_report(sink, report, explicit_format ? s.format : "text");
            if (report.mismatches() > 0) {
                for (const auto& r : report.rows)
                    if (!r.ok)
                        err << "mismatch: " << r.check << ' ' << r.params << " formula=" << r.formula
                            << " oracle=" << r.expected << '\n';
                return 1;
            }
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const size_mismatch& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace sepcount::cli
