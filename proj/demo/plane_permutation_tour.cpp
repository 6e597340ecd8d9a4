// Walks through one plane permutation: its diagonal, the exceedance
// classes, a block transposition and the reflected pair.

#include <iostream>
#include <string>
#include <vector>

#include "sepcount/plane_permutation.hpp"

using namespace sepcount;

namespace {

std::string list(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + std::to_string(xs[i]);
    return out + "}";
}

void describe(const std::string& title, const plane_permutation& pp) {
    const auto classes = classify_elements(pp);
    std::cout << title << '\n'
              << render_two_row(pp) << '\n'
              << "  vertical  " << to_cycle_string(pp.vertical()) << '\n'
              << "  diagonal  " << to_cycle_string(diagonal(pp)) << '\n'
              << "  exceedances " << list(classes.exceedances) << ", trivial " << list(classes.trivial_anti_exceedances)
              << ", non-trivial " << list(classes.nontrivial_anti_exceedances) << "\n\n";
}

} // namespace

int main() {
    // Upper row 1 3 6 2 5 4, lower row 5 4 1 3 6 2.
    const std::vector<int> upper{1, 3, 6, 2, 5, 4};
    const std::vector<int> lower{5, 4, 1, 3, 6, 2};
    std::vector<int> images(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i)
        images[static_cast<std::size_t>(upper[i] - 1)] = lower[i];
    const plane_permutation pp(upper, permutation(images));
    describe("plane permutation", pp);

    // Swapping two adjacent blocks of the upper row keeps the diagonal.
    const block_transposition h{1, 2, 4};
    describe("after swapping upper positions 1-2 with 3-4", transpose_blocks(pp, h));

    const plane_permutation other = reflect(pp);
    describe("reflected", other);
    std::cout << "non-trivial anti-exceedances: " << ntae_count(pp) << " + " << ntae_count(other)
              << " = n + 1 - C(vertical) - C(diagonal) = "
              << pp.size() + 1 - pp.vertical().cycle_count() - diagonal(pp).cycle_count() << '\n';
}
