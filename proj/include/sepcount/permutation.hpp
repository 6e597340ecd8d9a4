#pragma once

// Permutations of the 1-based ground set [n] = {1..n}.
//
// Composition convention, used everywhere in the library:
//     compose(p, q)(x) = p(q(x)).

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepcount/error.hpp"
#include "sepcount/partition.hpp"

namespace sepcount {

using cycle_form = std::vector<std::vector<int>>;

class permutation {
public:
    permutation() = default;

    /// One-line form: images[i-1] = p(i). Must be a bijection on [n], n >= 1.
    explicit permutation(std::vector<int> images) : images_(std::move(images)) {
        const int n = size();
        if (n < 1)
            throw domain_error("permutation on empty ground set");
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw domain_error("images do not form a bijection on [" + std::to_string(n) + "]");
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }

    static permutation identity(int n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        return permutation(std::move(images));
    }

    /// Builds from disjoint cycles; elements of [n] not mentioned are fixed.
    static permutation from_cycles(const cycle_form& cycles, int n) {
        std::vector<int> images(static_cast<std::size_t>(n), 0);
        for (const auto& cycle : cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                int x = cycle[i];
                if (x < 1 || x > n)
                    throw domain_error("cycle element " + std::to_string(x) + " outside [" +
                                       std::to_string(n) + "]");
                if (images[static_cast<std::size_t>(x - 1)] != 0)
                    throw domain_error("element " + std::to_string(x) + " appears twice in cycle form");
                images[static_cast<std::size_t>(x - 1)] = cycle[(i + 1) % cycle.size()];
            }
        }
        for (int x = 1; x <= n; ++x)
            if (images[static_cast<std::size_t>(x - 1)] == 0)
                images[static_cast<std::size_t>(x - 1)] = x;
        return permutation(std::move(images));
    }

    /// The n-cycle s_0 -> s_1 -> ... -> s_{n-1} -> s_0.
    static permutation from_sequence_cycle(const std::vector<int>& sequence) {
        return from_cycles({sequence}, static_cast<int>(sequence.size()));
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int x = 1; x <= size(); ++x)
            inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
        return permutation(std::move(inv));
    }

    /// Canonical cycle form: each cycle starts at its minimum, cycles sorted
    /// by minimum, fixed points included.
    cycle_form cycles() const {
        cycle_form out;
        std::vector<char> seen(images_.size(), 0);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start - 1)])
                continue;
            std::vector<int> cycle;
            for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
                seen[static_cast<std::size_t>(x - 1)] = 1;
                cycle.push_back(x);
            }
            out.push_back(std::move(cycle));
        }
        return out;
    }

    /// C(p)
    int cycle_count() const {
        int count = 0;
        std::vector<char> seen(images_.size(), 0);
        for (int start = 1; start <= size(); ++start) {
            if (seen[static_cast<std::size_t>(start - 1)])
                continue;
            ++count;
            for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x))
                seen[static_cast<std::size_t>(x - 1)] = 1;
        }
        return count;
    }

    /// (-1)^(n - C(p)) as 0 for even, 1 for odd.
    int parity() const { return (size() - cycle_count()) % 2; }

    bool operator==(const permutation&) const = default;
    auto operator<=>(const permutation&) const = default;

private:
    std::vector<int> images_;
};

inline permutation compose(const permutation& p, const permutation& q) {
    if (p.size() != q.size())
        throw size_mismatch("compose: ground sets [" + std::to_string(p.size()) + "] and [" +
                            std::to_string(q.size()) + "] differ");
    std::vector<int> images(static_cast<std::size_t>(p.size()));
    for (int x = 1; x <= p.size(); ++x)
        images[static_cast<std::size_t>(x - 1)] = p(q(x));
    return permutation(std::move(images));
}

inline permutation operator*(const permutation& p, const permutation& q) { return compose(p, q); }

inline permutation inverse(const permutation& p) { return p.inverse(); }

inline int cycle_count(const permutation& p) { return p.cycle_count(); }

inline integer_partition cycle_type(const permutation& p) {
    std::vector<int> lengths;
    for (const auto& c : p.cycles())
        lengths.push_back(static_cast<int>(c.size()));
    return integer_partition(std::move(lengths));
}

/// True iff 1..m lie in pairwise distinct cycles of p (vacuous for m <= 1).
inline bool separates(const permutation& p, int m) {
    if (m < 0 || m > p.size())
        throw domain_error("separates: m=" + std::to_string(m) + " outside [0, " +
                           std::to_string(p.size()) + "]");
    std::vector<int> owner(static_cast<std::size_t>(p.size()), 0);
    for (int i = 1; i <= m; ++i) {
        // Walk i's cycle; meeting a smaller marked element means a shared cycle.
        for (int x = p(i); x != i; x = p(x))
            if (x < i && x <= m)
                return false;
    }
    return true;
}

/// True iff p(i) = i for every i in [m].
inline bool isolates(const permutation& p, int m) {
    if (m < 0 || m > p.size())
        throw domain_error("isolates: m=" + std::to_string(m) + " outside [0, " +
                           std::to_string(p.size()) + "]");
    for (int i = 1; i <= m; ++i)
        if (p(i) != i)
            return false;
    return true;
}

/// "(1 3 6)(2 5 4)"; fixed points are written as singletons.
inline std::string to_cycle_string(const permutation& p) {
    std::string out;
    for (const auto& cycle : p.cycles()) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i)
                out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

/// "2,3,1"
inline std::string to_one_line_string(const permutation& p) {
    std::string out;
    for (int x = 1; x <= p.size(); ++x) {
        if (x > 1)
            out += ',';
        out += std::to_string(p(x));
    }
    return out;
}

/// Parses cycle notation. With n = 0 the ground set is [max element].
inline permutation parse_cycles(std::string_view text, int n = 0) {
    cycle_form cycles;
    std::size_t pos = 0;
    int max_element = 0;
    detail::skip_spaces(text, pos);
    if (pos == text.size())
        throw parse_error("empty cycle form", pos);
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw parse_error("expected '('", pos);
        ++pos;
        std::vector<int> cycle;
        detail::skip_spaces(text, pos);
        while (pos < text.size() && text[pos] != ')') {
            int x = detail::parse_positive_int(text, pos);
            max_element = std::max(max_element, x);
            cycle.push_back(x);
            detail::skip_spaces(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                detail::skip_spaces(text, pos);
            }
        }
        if (pos == text.size())
            throw parse_error("unterminated cycle", pos);
        if (cycle.empty())
            throw parse_error("empty cycle", pos);
        ++pos;
        cycles.push_back(std::move(cycle));
        detail::skip_spaces(text, pos);
    }
    int size = n == 0 ? max_element : n;
    if (max_element > size)
        throw parse_error("element " + std::to_string(max_element) + " exceeds n=" + std::to_string(size), 0);
    return permutation::from_cycles(cycles, size);
}

/// Parses "2,3,1".
inline permutation parse_one_line(std::string_view text) {
    std::vector<int> images;
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    while (true) {
        images.push_back(detail::parse_positive_int(text, pos));
        detail::skip_spaces(text, pos);
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw parse_error("expected ','", pos);
        ++pos;
        detail::skip_spaces(text, pos);
    }
    try {
        return permutation(std::move(images));
    } catch (const domain_error& e) {
        throw parse_error(e.what(), 0);
    }
}

/// Either notation: a leading '(' selects cycle form.
inline permutation parse_permutation(std::string_view text, int n = 0) {
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '(')
        return parse_cycles(text, n);
    return parse_one_line(text);
}

/// Input range over the (n-1)! n-cycles on [n]: each is written starting at
/// 1 and the remaining n-1 elements run through their orderings in
/// lexicographic sequence.
class n_cycles {
public:
    explicit n_cycles(int n) : n_(n) {
        if (n < 1)
            throw domain_error("n_cycles requires n >= 1");
    }

    class iterator {
    public:
        using value_type = permutation;
        using reference = permutation;
        using pointer = void;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        explicit iterator(int n) : sequence_(static_cast<std::size_t>(n)), done_(false) {
            std::iota(sequence_.begin(), sequence_.end(), 1);
        }

        permutation operator*() const { return permutation::from_sequence_cycle(sequence_); }
        /// The cycle as its sequence s_0 = 1, s_1, ..., s_{n-1}.
        const std::vector<int>& sequence() const noexcept { return sequence_; }

        iterator& operator++() {
            done_ = !std::next_permutation(sequence_.begin() + 1, sequence_.end());
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }

        bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || sequence_ == other.sequence_); }

    private:
        std::vector<int> sequence_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_); }
    iterator end() const { return iterator(); }

private:
    int n_;
};

inline n_cycles enumerate_n_cycles(int n) { return n_cycles(n); }

/// Calls fn(const permutation&) for every permutation of [n] in
/// lexicographic order of one-line form.
template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        fn(permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

} // namespace sepcount
