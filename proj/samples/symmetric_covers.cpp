// Prints the minimum class cover of the nonlinear characters of S_n for small n,
// together with the classes that realise it.

#include <iostream>

#include "charzero/charzero.hpp"

int main(int argc, char** argv) {
    using namespace charzero;
    const int max_n = argc > 1 ? std::stoi(argv[1]) : 9;
    for (int n = 1; n <= max_n; ++n) {
        const CharacterTable t = build_symmetric(n);
        const ZeroPattern p = zero_pattern(t);
        if (p.rows() == 0) {
            std::cout << "S" << n << ": no nonlinear characters\n";
            continue;
        }
        const CoverResult r = min_cover(p);
        std::cout << "S" << n << ": k_min = " << r.k_min << ", cover:";
        for (std::size_t c : r.witness) std::cout << ' ' << t.classes[c].name;
        std::cout << '\n';
    }
}
