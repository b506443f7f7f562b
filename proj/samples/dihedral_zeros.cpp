// Shows where the nonlinear characters of a dihedral group vanish and prints
// its zero graph in DOT form.

#include <iostream>

#include "charzero/charzero.hpp"

int main(int argc, char** argv) {
    using namespace charzero;
    const int m = argc > 1 ? std::stoi(argv[1]) : 8;
    const CharacterTable t = build_dihedral(m);
    const ZeroPattern p = zero_pattern(t);

    std::cout << t.group_name << " (order " << t.order << ")\n";
    for (std::size_t r = 0; r < p.rows(); ++r) {
        std::cout << "  " << t.characters[p.nonlinear_idx[r]].name << " vanishes on:";
        for (std::size_t c = 0; c < p.cols(); ++c)
            if (p.zeros[r][c]) std::cout << ' ' << t.classes[p.class_idx[c]].name;
        std::cout << '\n';
    }
    std::cout << "vanishing classes:";
    for (std::size_t c : vanishing_classes(p)) std::cout << ' ' << t.classes[c].name;
    std::cout << "\n\n" << to_dot(gamma_v(t, p));
}
