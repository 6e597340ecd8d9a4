#pragma once

// Plane permutations: a pair (s, pi) where s is an n-cycle kept as a linear
// sequence s_0 ... s_{n-1} and pi is any permutation of [n]. Drawn as a
// two-row array with s on top and pi(s_i) under s_i. The diagonal D sends
// pi(s_{i-1}) to s_i (indices cyclic), i.e. D = s o pi^-1.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sepcount/error.hpp"
#include "sepcount/permutation.hpp"

namespace sepcount {

class plane_permutation {
public:
    /// `upper` is the sequence s_0 ... s_{n-1}; it need not start at 1.
    plane_permutation(std::vector<int> upper, permutation vertical)
        : upper_(std::move(upper)), vertical_(std::move(vertical)) {
        if (static_cast<int>(upper_.size()) != vertical_.size())
            throw size_mismatch("plane_permutation: upper horizontal and vertical sizes differ");
        position_.assign(upper_.size(), -1);
        for (std::size_t i = 0; i < upper_.size(); ++i) {
            int x = upper_[i];
            if (x < 1 || x > size() || position_[static_cast<std::size_t>(x - 1)] != -1)
                throw domain_error("upper horizontal is not an arrangement of [n]");
            position_[static_cast<std::size_t>(x - 1)] = static_cast<int>(i);
        }
    }

    /// Anchors the n-cycle `s` at 1.
    static plane_permutation from_cycle(const permutation& s, permutation vertical) {
        if (s.cycle_count() != 1)
            throw domain_error("upper horizontal must be an n-cycle");
        std::vector<int> sequence;
        int x = 1;
        do {
            sequence.push_back(x);
            x = s(x);
        } while (x != 1);
        return plane_permutation(std::move(sequence), std::move(vertical));
    }

    int size() const noexcept { return vertical_.size(); }
    const std::vector<int>& upper() const noexcept { return upper_; }
    const permutation& vertical() const noexcept { return vertical_; }
    permutation upper_cycle() const { return permutation::from_sequence_cycle(upper_); }

    /// Index of x in the upper sequence; a <_s b iff position(a) < position(b).
    int position(int x) const { return position_[static_cast<std::size_t>(x - 1)]; }

    /// Rotated so the leftmost element is 1.
    plane_permutation anchored() const {
        std::vector<int> rotated = upper_;
        std::rotate(rotated.begin(), rotated.begin() + position(1), rotated.end());
        return plane_permutation(std::move(rotated), vertical_);
    }

    bool operator==(const plane_permutation& other) const {
        return upper_ == other.upper_ && vertical_ == other.vertical_;
    }

private:
    std::vector<int> upper_;
    permutation vertical_;
    std::vector<int> position_;
};

/// D = s o pi^-1.
inline permutation diagonal(const plane_permutation& pp) {
    const int n = pp.size();
    const auto& s = pp.upper();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int prev = s[static_cast<std::size_t>((i + n - 1) % n)];
        images[static_cast<std::size_t>(pp.vertical()(prev) - 1)] = s[static_cast<std::size_t>(i)];
    }
    return permutation(std::move(images));
}

struct element_classes {
    std::vector<int> exceedances;
    std::vector<int> trivial_anti_exceedances;
    std::vector<int> nontrivial_anti_exceedances;
};

/// Exceedances are the x with x <_s pi(x); the rest are anti-exceedances.
/// In each pi-cycle, the preimage of the cycle's <_s-minimum is the trivial
/// anti-exceedance; the remaining anti-exceedances are NTAEs. Each list is
/// sorted ascending.
inline element_classes classify_elements(const plane_permutation& pp) {
    const auto& pi = pp.vertical();
    element_classes out;
    std::vector<char> trivial(static_cast<std::size_t>(pp.size()), 0);
    for (const auto& cycle : pi.cycles()) {
        int minimum = *std::min_element(cycle.begin(), cycle.end(),
                                        [&](int a, int b) { return pp.position(a) < pp.position(b); });
        // The preimage of the minimum precedes it in the cycle listing.
        auto it = std::find(cycle.begin(), cycle.end(), minimum);
        int preimage = it == cycle.begin() ? cycle.back() : *(it - 1);
        trivial[static_cast<std::size_t>(preimage - 1)] = 1;
    }
    for (int x = 1; x <= pp.size(); ++x) {
        if (pp.position(x) < pp.position(pi(x)))
            out.exceedances.push_back(x);
        else if (trivial[static_cast<std::size_t>(x - 1)])
            out.trivial_anti_exceedances.push_back(x);
        else
            out.nontrivial_anti_exceedances.push_back(x);
    }
    return out;
}

inline int exceedance_count(const plane_permutation& pp) {
    int count = 0;
    for (int x = 1; x <= pp.size(); ++x)
        if (pp.position(x) < pp.position(pp.vertical()(x)))
            ++count;
    return count;
}

/// Ne(pp): number of non-trivial anti-exceedances, n - a - C(pi).
inline int ntae_count(const plane_permutation& pp) {
    return pp.size() - exceedance_count(pp) - pp.vertical().cycle_count();
}

/// Indices into the upper sequence with 1 <= i <= j < k <= n-1.
struct block_transposition {
    int i;
    int j;
    int k;
};

/// Swaps the diagonal blocks over [s_i..s_j] and [s_{j+1}..s_k]. The diagonal
/// is unchanged; pi changes only at s_{i-1}, s_j and s_k.
inline plane_permutation transpose_blocks(const plane_permutation& pp, block_transposition h) {
    const int n = pp.size();
    if (!(1 <= h.i && h.i <= h.j && h.j < h.k && h.k <= n - 1))
        throw domain_error("transpose_blocks: need 1 <= i <= j < k <= n-1, got (" + std::to_string(h.i) +
                           "," + std::to_string(h.j) + "," + std::to_string(h.k) + ") for n=" +
                           std::to_string(n));
    const auto& s = pp.upper();
    auto at = [&](int idx) { return s[static_cast<std::size_t>(idx)]; };
    std::vector<int> upper;
    upper.reserve(s.size());
    upper.insert(upper.end(), s.begin(), s.begin() + h.i);
    upper.insert(upper.end(), s.begin() + h.j + 1, s.begin() + h.k + 1);
    upper.insert(upper.end(), s.begin() + h.i, s.begin() + h.j + 1);
    upper.insert(upper.end(), s.begin() + h.k + 1, s.end());

    const auto& pi = pp.vertical();
    std::vector<int> images = pi.images();
    images[static_cast<std::size_t>(at(h.i - 1) - 1)] = pi(at(h.j));
    images[static_cast<std::size_t>(at(h.k) - 1)] = pi(at(h.i - 1));
    images[static_cast<std::size_t>(at(h.j) - 1)] = pi(at(h.k));
    return plane_permutation(std::move(upper), permutation(std::move(images)));
}

/// (s^-1, D^-1), anchored at 1. Satisfies
///     Ne(pp) + Ne(reflect(pp)) = n + 1 - C(pi) - C(D).
inline plane_permutation reflect(const plane_permutation& pp) {
    std::vector<int> reversed(pp.upper().rbegin(), pp.upper().rend());
    // Reversing the sequence inverts the cycle; rotate s_0 back to the front.
    std::rotate(reversed.rbegin(), reversed.rbegin() + 1, reversed.rend());
    return plane_permutation(std::move(reversed), diagonal(pp).inverse()).anchored();
}

/// Doubles the ground set: barred element i' is encoded as n + i and placed
/// right behind i in the upper sequence. The new vertical agrees with pi on
/// [n] and is filled on the barred elements so that the new diagonal is a
/// fixed-point-free involution pairing each element with a barred one. Its
/// restriction to the barred elements has the cycle type of D.
inline plane_permutation hat(const plane_permutation& pp) {
    const int n = pp.size();
    const auto& s = pp.upper();
    const auto& pi = pp.vertical();
    const permutation pi_inv = pi.inverse();
    std::vector<int> upper;
    upper.reserve(static_cast<std::size_t>(2 * n));
    for (int x : s) {
        upper.push_back(x);
        upper.push_back(n + x);
    }
    std::vector<int> images(static_cast<std::size_t>(2 * n));
    for (int x = 1; x <= n; ++x)
        images[static_cast<std::size_t>(x - 1)] = pi(x);
    for (int i = 0; i < n; ++i) {
        int next = s[static_cast<std::size_t>((i + 1) % n)];
        images[static_cast<std::size_t>(n + s[static_cast<std::size_t>(i)] - 1)] = n + pi_inv(next);
    }
    return plane_permutation(std::move(upper), permutation(std::move(images)));
}

/// Two-row rendering. Elements above `barred_from` (when positive) are shown
/// as (x - barred_from) followed by a prime, e.g. 7 -> 1' for barred_from = 6.
inline std::string render_two_row(const plane_permutation& pp, int barred_from = 0) {
    auto label = [&](int x) {
        if (barred_from > 0 && x > barred_from)
            return std::to_string(x - barred_from) + "'";
        return std::to_string(x);
    };
    std::vector<std::string> top, bottom;
    std::size_t width = 1;
    for (int x : pp.upper()) {
        top.push_back(label(x));
        bottom.push_back(label(pp.vertical()(x)));
        width = std::max({width, top.back().size(), bottom.back().size()});
    }
    auto row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                line += ' ';
            line += std::string(width - cells[i].size(), ' ') + cells[i];
        }
        return line;
    };
    return row(top) + "\n" + row(bottom) + "\n";
}

} // namespace sepcount
