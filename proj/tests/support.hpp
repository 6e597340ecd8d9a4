#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sepcount/plane_permutation.hpp"

namespace testing_support {

// Every plane permutation on [n]: upper sequences anchored at 1 in
// lexicographic order, verticals in lexicographic one-line order.
template <class Fn>
void for_each_plane_permutation(int n, Fn&& fn) {
    for (auto it = sepcount::n_cycles(n).begin(); it != sepcount::n_cycles(n).end(); ++it) {
        const std::vector<int> upper = it.sequence();
        sepcount::for_each_permutation(n, [&](const sepcount::permutation& pi) {
            fn(sepcount::plane_permutation(upper, pi));
        });
    }
}

inline sepcount::plane_permutation random_plane_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> upper(static_cast<std::size_t>(n));
    std::iota(upper.begin(), upper.end(), 1);
    std::shuffle(upper.begin() + 1, upper.end(), rng);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return sepcount::plane_permutation(std::move(upper), sepcount::permutation(std::move(images)));
}

} // namespace testing_support
