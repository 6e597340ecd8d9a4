#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepcount/error.hpp"

namespace sepcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::atomic<std::uint64_t>& exact_division_counter() {
    static std::atomic<std::uint64_t> counter{0};
    return counter;
}

} // namespace detail

/// Number of exact divisions performed so far (process wide). Every one of
/// them has been checked to leave no remainder.
inline std::uint64_t exact_divisions_performed() {
    return detail::exact_division_counter().load();
}

/// a / b, throwing invariant_error if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what) {
    if (b == 0)
        throw invariant_error(std::string(what) + ": division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    detail::exact_division_counter().fetch_add(1, std::memory_order_relaxed);
    if (r != 0)
        throw invariant_error(std::string(what) + ": " + a.str() + " is not divisible by " +
                              b.str());
    return q;
}

inline BigInt factorial(long n) {
    if (n < 0)
        throw domain_error("factorial of negative number " + std::to_string(n));
    static std::mutex mutex;
    static std::vector<BigInt> cache{BigInt(1)};
    std::lock_guard lock(mutex);
    while (static_cast<long>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<long>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

/// binom(a, b); 0 whenever b < 0, a < 0 or a < b.
inline BigInt binomial(long a, long b) {
    if (b < 0 || a < 0 || a < b)
        return 0;
    if (b > a - b)
        b = a - b;
    BigInt result = 1;
    for (long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

/// x (x+1) ... (x+d-1); equals 1 for d = 0.
inline BigInt rising_factorial(long x, long d) {
    BigInt result = 1;
    for (long i = 0; i < d; ++i)
        result *= x + i;
    return result;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw invariant_error("rational with zero denominator");
    return Rational(num, den);
}

/// "num/den" in lowest terms, denominator always printed.
inline std::string to_fraction_string(const Rational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// Parses "num/den" or a bare integer.
inline Rational parse_rational(std::string_view text) {
    auto digits_ok = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!digits_ok(num))
        throw parse_error("malformed rational '" + std::string(text) + "'", 0);
    if (slash == std::string_view::npos)
        return Rational(BigInt(std::string(num)));
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den))
        throw parse_error("malformed rational '" + std::string(text) + "'", slash + 1);
    return make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
inline std::string to_decimal_string(const Rational& q, int digits) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    bool negative = num < 0;
    if (negative)
        num = -num;
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt scaled = (2 * num * scale + den) / (2 * den);
    std::string body = scaled.str();
    if (digits > 0) {
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<int>(body.size())), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (negative && scaled != 0 ? "-" : "") + body;
}

} // namespace sepcount
