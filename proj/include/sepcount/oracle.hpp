#pragma once

// Brute-force ground truth. Every plane permutation (s, pi) on [n] is
// visited, (n-1)! choices of s times n! choices of pi, and tallied by
//   - the cycle type of the diagonal D = s o pi^-1,
//   - the cycle type of the vertical pi,
//   - the longest prefix [m] that pi separates,
//   - the longest prefix [m] that pi fixes,
//   - the number of exceedances.
// Every count the library computes is a marginal of this census.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/composition.hpp"
#include "sepcount/error.hpp"
#include "sepcount/partition.hpp"
#include "sepcount/permutation.hpp"

namespace sepcount {

inline constexpr int oracle_default_cap = 7;
inline constexpr int oracle_hard_max = 9;

/// Throws cap_exceeded unless 1 <= n <= min(cap, oracle_hard_max).
inline void check_oracle_cap(int n, int cap) {
    if (n < 1)
        throw domain_error("oracle needs n >= 1");
    int effective = std::min(cap, oracle_hard_max);
    if (n > effective)
        throw cap_exceeded(n, effective);
}

namespace detail {

inline std::uint64_t encode_type(std::array<std::uint8_t, 16>& lengths, int count) {
    std::sort(lengths.begin(), lengths.begin() + count, std::greater<>());
    std::uint64_t code = 0;
    for (int i = 0; i < count; ++i)
        code = (code << 4) | lengths[static_cast<std::size_t>(i)];
    return code;
}

inline std::uint64_t encode_type(const integer_partition& p) {
    std::uint64_t code = 0;
    for (int part : p.parts())
        code = (code << 4) | static_cast<std::uint64_t>(part);
    return code;
}

/// The index-th arrangement (lexicographic) of 2..n after the leading 1.
inline std::vector<int> nth_cycle_sequence(int n, std::uint64_t index) {
    std::vector<int> pool(static_cast<std::size_t>(n - 1));
    std::iota(pool.begin(), pool.end(), 2);
    std::vector<int> seq{1};
    std::uint64_t block = 1;  // (n-2)!
    for (int i = 2; i < n - 1; ++i)
        block *= static_cast<std::uint64_t>(i);
    for (int remaining = n - 1; remaining > 0; --remaining) {
        std::uint64_t pick = index / block;
        index %= block;
        seq.push_back(pool[static_cast<std::size_t>(pick)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        if (remaining > 1)
            block /= static_cast<std::uint64_t>(remaining - 1);
    }
    return seq;
}

inline std::uint64_t small_factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

} // namespace detail

class plane_census {
public:
    explicit plane_census(int n) : n_(n), partitions_(partitions_of(n)) {
        for (std::size_t i = 0; i < partitions_.size(); ++i)
            index_.emplace(detail::encode_type(partitions_[i]), static_cast<int>(i));
        const std::size_t l = partitions_.size();
        const std::size_t e = static_cast<std::size_t>(n + 1);
        counts_.assign(l * l * e * e * static_cast<std::size_t>(n), 0);
    }

    int n() const noexcept { return n_; }
    const std::vector<integer_partition>& partitions() const noexcept { return partitions_; }

    int index_of(const integer_partition& p) const {
        if (p.size() != n_)
            throw size_mismatch("partition of " + std::to_string(p.size()) + " queried in census of n=" +
                                std::to_string(n_));
        return index_.at(detail::encode_type(p));
    }

    /// Raw tally; `separated` and `fixed` are prefix lengths, `a` the
    /// exceedance count.
    std::uint64_t& cell(int diag, int vert, int separated, int fixed, int a) {
        return counts_[offset(diag, vert, separated, fixed, a)];
    }
    std::uint64_t cell(int diag, int vert, int separated, int fixed, int a) const {
        return counts_[offset(diag, vert, separated, fixed, a)];
    }

    std::uint64_t total() const { return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0}); }

    /// Sum of cells passing the predicate on (diag, vert, separated, fixed, a).
    template <class Pred>
    BigInt sum_if(Pred&& pred) const {
        BigInt total = 0;
        for (int d = 0; d < static_cast<int>(partitions_.size()); ++d)
            total += sum_if_diagonal(d, [&](int v, int s, int f, int a) { return pred(d, v, s, f, a); });
        return total;
    }

    /// As sum_if, restricted to one diagonal type.
    template <class Pred>
    BigInt sum_if_diagonal(int d, Pred&& pred) const {
        std::uint64_t total = 0;
        const int l = static_cast<int>(partitions_.size());
        for (int v = 0; v < l; ++v)
            for (int s = 0; s <= n_; ++s)
                for (int f = 0; f <= n_; ++f)
                    for (int a = 0; a < n_; ++a) {
                        std::uint64_t c = cell(d, v, s, f, a);
                        if (c && pred(v, s, f, a))
                            total += c;
                    }
        return BigInt(total);
    }

    plane_census& operator+=(const plane_census& other) {
        if (other.n_ != n_)
            throw size_mismatch("merging censuses of different n");
        for (std::size_t i = 0; i < counts_.size(); ++i)
            counts_[i] += other.counts_[i];
        return *this;
    }

    bool operator==(const plane_census& other) const { return n_ == other.n_ && counts_ == other.counts_; }

    /// Tallies the plane permutations whose upper cycle has lexicographic
    /// index in [first, last) among the (n-1)! n-cycles.
    void tally(std::uint64_t first, std::uint64_t last);

private:
    std::size_t offset(int diag, int vert, int separated, int fixed, int a) const {
        const std::size_t l = partitions_.size();
        const std::size_t e = static_cast<std::size_t>(n_ + 1);
        return (((static_cast<std::size_t>(diag) * l + static_cast<std::size_t>(vert)) * e +
                 static_cast<std::size_t>(separated)) * e + static_cast<std::size_t>(fixed)) *
                   static_cast<std::size_t>(n_) + static_cast<std::size_t>(a);
    }

    int n_;
    std::vector<integer_partition> partitions_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<std::uint64_t> counts_;
};

inline void plane_census::tally(std::uint64_t first, std::uint64_t last) {
    const int n = n_;
    if (first >= last)
        return;
    std::vector<int> seq = detail::nth_cycle_sequence(n, first);
    std::array<std::uint8_t, 16> s_next{}, pos{}, pi{}, inv{}, diag{}, mark{}, owner{};
    std::array<std::uint8_t, 16> lengths{};

    auto cycle_code = [&](const std::array<std::uint8_t, 16>& perm, bool record_owner) {
        mark.fill(0);
        int count = 0;
        for (int x = 0; x < n; ++x) {
            if (mark[static_cast<std::size_t>(x)])
                continue;
            int len = 0;
            for (int y = x; !mark[static_cast<std::size_t>(y)]; y = perm[static_cast<std::size_t>(y)]) {
                mark[static_cast<std::size_t>(y)] = 1;
                if (record_owner)
                    owner[static_cast<std::size_t>(y)] = static_cast<std::uint8_t>(count);
                ++len;
            }
            lengths[static_cast<std::size_t>(count++)] = static_cast<std::uint8_t>(len);
        }
        return detail::encode_type(lengths, count);
    };

    for (std::uint64_t idx = first; idx < last; ++idx) {
        for (int i = 0; i < n; ++i) {
            int x = seq[static_cast<std::size_t>(i)] - 1;
            s_next[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(seq[static_cast<std::size_t>((i + 1) % n)] - 1);
            pos[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(i);
        }
        for (int i = 0; i < n; ++i)
            pi[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        do {
            for (int x = 0; x < n; ++x)
                inv[pi[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
            for (int x = 0; x < n; ++x)
                diag[static_cast<std::size_t>(x)] = s_next[inv[static_cast<std::size_t>(x)]];

            int vert = index_.at(cycle_code(pi, true));
            // owner[] now holds the pi-cycle id of each element.
            int separated = 0;
            std::uint32_t used = 0;
            while (separated < n && !(used & (1u << owner[static_cast<std::size_t>(separated)]))) {
                used |= 1u << owner[static_cast<std::size_t>(separated)];
                ++separated;
            }
            int fixed = 0;
            while (fixed < n && pi[static_cast<std::size_t>(fixed)] == fixed)
                ++fixed;
            int a = 0;
            for (int x = 0; x < n; ++x)
                if (pos[static_cast<std::size_t>(x)] < pos[pi[static_cast<std::size_t>(x)]])
                    ++a;
            int d = index_.at(cycle_code(diag, false));
            ++counts_[offset(d, vert, separated, fixed, a)];
        } while (std::next_permutation(pi.begin(), pi.begin() + n));
        std::next_permutation(seq.begin() + 1, seq.end());
    }
}

/// Census over all plane permutations on [n], split into `chunks` disjoint
/// ranges of upper cycles evaluated on up to `threads` threads. The result
/// does not depend on either number.
inline plane_census take_census(int n, int cap = oracle_default_cap, unsigned chunks = 1,
                                unsigned threads = 1) {
    check_oracle_cap(n, cap);
    const std::uint64_t cycles = detail::small_factorial(n - 1);
    chunks = std::max(1u, std::min<unsigned>(chunks, static_cast<unsigned>(cycles)));
    threads = std::max(1u, std::min(threads, chunks));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (unsigned c = 0; c < chunks; ++c)
        ranges.emplace_back(cycles * c / chunks, cycles * (c + 1) / chunks);

    plane_census total(n);
    if (threads == 1) {
        for (auto [first, last] : ranges)
            total.tally(first, last);
        return total;
    }
    std::mutex merge_mutex;
    std::size_t next = 0;
    auto worker = [&] {
        plane_census local(n);
        while (true) {
            std::pair<std::uint64_t, std::uint64_t> range;
            {
                std::lock_guard lock(merge_mutex);
                if (next == ranges.size())
                    break;
                range = ranges[next++];
            }
            local.tally(range.first, range.second);
        }
        std::lock_guard lock(merge_mutex);
        total += local;
    };
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t)
        jobs.push_back(std::async(std::launch::async, worker));
    for (auto& j : jobs)
        j.get();
    return total;
}

/// Calls fn(c1, c2, product) for every ordered pair of n-cycles, product =
/// compose(c1, c2).
template <class Fn>
void for_each_cycle_pair(int n, Fn&& fn) {
    std::vector<permutation> cycles;
    for (auto c : n_cycles(n))
        cycles.push_back(std::move(c));
    for (const auto& c1 : cycles)
        for (const auto& c2 : cycles)
            fn(c1, c2, compose(c1, c2));
}

enum class oracle_mode { separated, isolated, alpha, fixed_point_distribution };

/// One oracle question. Unset filters do not restrict.
struct oracle_query {
    int n = 1;
    oracle_mode mode = oracle_mode::separated;
    int m = 0;
    std::optional<composition> alpha;
    std::optional<integer_partition> diagonal_type;
    std::optional<int> vertical_cycles;
    std::optional<integer_partition> vertical_type;
    std::optional<int> exceedances;
    std::optional<int> fixed_points;
};

/// Exhaustive counts with a per-n census cache. Safe to share across threads.
class oracle {
public:
    explicit oracle(int cap = oracle_default_cap) : cap_(cap) {}

    int cap() const noexcept { return std::min(cap_, oracle_hard_max); }

    const plane_census& census(int n) {
        check_oracle_cap(n, cap_);
        std::lock_guard lock(mutex_);
        auto it = cache_.find(n);
        if (it == cache_.end()) {
            unsigned hw = std::max(1u, std::thread::hardware_concurrency());
            auto census = std::make_unique<plane_census>(take_census(n, cap_, hw * 4, hw));
            it = cache_.emplace(n, std::move(census)).first;
        }
        return *it->second;
    }

    /// Plane permutations with diagonal type lambda whose vertical has k
    /// cycles separating [m].
    BigInt p(const integer_partition& lambda, int m, int k) {
        return count(lambda, m, [&](const plane_census& c, int v, int s, int, int) {
            return c.partitions()[static_cast<std::size_t>(v)].length() == k && s >= m;
        });
    }

    /// Same set, split by exceedance count.
    std::map<int, BigInt> p_stratified(const integer_partition& lambda, int m, int k) {
        std::map<int, BigInt> out;
        const auto& c = census(lambda.size());
        for (int a = 0; a < c.n(); ++a) {
            BigInt v = count(lambda, m, [&](const plane_census& cc, int vert, int s, int, int aa) {
                return aa == a && cc.partitions()[static_cast<std::size_t>(vert)].length() == k && s >= m;
            });
            if (v != 0)
                out[a] = v;
        }
        return out;
    }

    /// Vertical has k cycles and fixes [m].
    BigInt i(const integer_partition& lambda, int m, int k) {
        return count(lambda, m, [&](const plane_census& c, int v, int, int f, int) {
            return c.partitions()[static_cast<std::size_t>(v)].length() == k && f >= m;
        });
    }

    /// Vertical of cycle type mu separating [m].
    BigInt p_by_type(const integer_partition& lambda, const integer_partition& mu, int m) {
        const int target = census(lambda.size()).index_of(mu);
        return count(lambda, m, [&](const plane_census&, int v, int s, int, int) { return v == target && s >= m; });
    }

    /// Vertical of cycle type mu fixing [m].
    BigInt i_by_type(const integer_partition& lambda, const integer_partition& mu, int m) {
        const int target = census(lambda.size()).index_of(mu);
        return count(lambda, m, [&](const plane_census&, int v, int, int f, int) { return v == target && f >= m; });
    }

    /// Ordered pairs of n-cycles whose product is alpha-separated.
    BigInt alpha(const composition& alpha) {
        const auto& tally = crossing_tally(alpha.size());
        // Block boundaries of alpha as a bit mask over the n-1 gaps.
        std::uint32_t cuts = 0;
        int position = 0;
        for (int i = 0; i + 1 < alpha.length(); ++i) {
            position += alpha.parts()[static_cast<std::size_t>(i)];
            cuts |= 1u << (position - 1);
        }
        std::uint64_t count = 0;
        for (std::size_t mask = 0; mask < tally.size(); ++mask)
            if ((mask & cuts) == 0)
                count += tally[mask];
        return count;
    }

    /// Number of ordered pairs of n-cycles whose product has exactly i fixed
    /// points, for each i that occurs.
    std::map<int, BigInt> fixed_point_distribution(int n) {
        check_oracle_cap(n, cap_);
        std::map<int, std::uint64_t> tally;
        for_each_cycle_pair(n, [&](const permutation&, const permutation&, const permutation& prod) {
            int fixed = 0;
            for (int x = 1; x <= n; ++x)
                fixed += prod(x) == x;
            ++tally[fixed];
        });
        std::map<int, BigInt> out;
        for (auto [i, c] : tally)
            out[i] = c;
        return out;
    }

    BigInt evaluate(const oracle_query& q) {
        switch (q.mode) {
        case oracle_mode::alpha:
            if (!q.alpha)
                throw domain_error("alpha query without a composition");
            return alpha(*q.alpha);
        case oracle_mode::fixed_point_distribution: {
            BigInt total = 0;
            for (auto& [i, c] : fixed_point_distribution(q.n))
                if (!q.fixed_points || *q.fixed_points == i)
                    total += c;
            return total;
        }
        case oracle_mode::separated:
        case oracle_mode::isolated:
            break;
        }
        const auto& c = census(q.n);
        if (q.m < 0 || q.m > q.n)
            throw domain_error("oracle query: need 0 <= m <= n");
        std::optional<int> diag, vert;
        if (q.diagonal_type)
            diag = c.index_of(*q.diagonal_type);
        if (q.vertical_type)
            vert = c.index_of(*q.vertical_type);
        const bool isolated = q.mode == oracle_mode::isolated;
        return c.sum_if([&](int d, int v, int s, int f, int a) {
            if (diag && d != *diag)
                return false;
            if (vert && v != *vert)
                return false;
            if (q.vertical_cycles && c.partitions()[static_cast<std::size_t>(v)].length() != *q.vertical_cycles)
                return false;
            if (q.exceedances && a != *q.exceedances)
                return false;
            return isolated ? f >= q.m : s >= q.m;
        });
    }

private:
    // For every ordered pair of n-cycles, the set of gaps c (between c and
    // c+1) that some cycle of the product crosses; tallied by that set. A
    // product is alpha-separated iff it crosses none of alpha's boundaries.
    const std::vector<std::uint64_t>& crossing_tally(int n) {
        check_oracle_cap(n, cap_);
        std::lock_guard lock(mutex_);
        auto it = crossings_.find(n);
        if (it != crossings_.end())
            return it->second;
        std::vector<std::uint64_t> tally(std::size_t{1} << (n - 1), 0);
        for_each_cycle_pair(n, [&](const permutation&, const permutation&, const permutation& prod) {
            std::uint32_t crossed = 0;
            for (int x = 1; x <= n; ++x) {
                // The arc x -> prod(x) crosses every gap between them.
                int lo = std::min(x, prod(x)), hi = std::max(x, prod(x));
                for (int c = lo; c < hi; ++c)
                    crossed |= 1u << (c - 1);
            }
            ++tally[crossed];
        });
        return crossings_.emplace(n, std::move(tally)).first->second;
    }

    template <class Pred>
    BigInt count(const integer_partition& lambda, int m, Pred&& pred) {
        const auto& c = census(lambda.size());
        if (m < 0 || m > c.n())
            throw domain_error("oracle: need 0 <= m <= n");
        return c.sum_if_diagonal(c.index_of(lambda), [&](int v, int s, int f, int a) { return pred(c, v, s, f, a); });
    }

    int cap_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<plane_census>> cache_;
    std::map<int, std::vector<std::uint64_t>> crossings_;
};

/// Process-wide oracle with the default cap.
inline oracle& default_oracle() {
    static oracle instance;
    return instance;
}

inline BigInt oracle_p(const integer_partition& lambda, int m, int k) { return default_oracle().p(lambda, m, k); }
inline std::map<int, BigInt> oracle_p_stratified(const integer_partition& lambda, int m, int k) {
    return default_oracle().p_stratified(lambda, m, k);
}
inline BigInt oracle_i(const integer_partition& lambda, int m, int k) { return default_oracle().i(lambda, m, k); }
inline BigInt oracle_alpha(const composition& alpha) { return default_oracle().alpha(alpha); }
inline std::map<int, BigInt> oracle_fixed_point_distribution(int n) {
    return default_oracle().fixed_point_distribution(n);
}

} // namespace sepcount
