// Prints, for the product of two uniform n-cycles, the probability that
// 1..m lie in distinct cycles and the probability that 1..m are all fixed.
// Usage: separation_table [n]   (default 8)

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "sepcount/ncycle.hpp"

using namespace sepcount;

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 8;
    if (n < 2) {
        std::cerr << "need n >= 2\n";
        return 2;
    }
    std::cout << "n = " << n << '\n'
              << std::left << std::setw(4) << "m" << std::setw(22) << "separated" << std::setw(14) << "~"
              << "all fixed" << '\n';
    for (int m = 0; m <= n; ++m) {
        const Rational sep = sep_prob_ncycle(n, m);
        std::cout << std::setw(4) << m << std::setw(22) << to_fraction_string(sep) << std::setw(14)
                  << to_decimal_string(sep, 8);
        if (m < n)
            std::cout << to_fraction_string(iso_prob_ncycle(n, m));
        std::cout << '\n';
    }
    const auto mom = fixed_point_moments(n);
    std::cout << "\nfixed points: mean " << to_fraction_string(mom.mean) << ", variance "
              << to_fraction_string(mom.variance) << ", none at all with probability "
              << to_fraction_string(fpf_probability(n)) << '\n';
}
