// Walks through G_2(C^4): the products of its Schubert classes, the overlap
// picture behind each vanishing product, and the F_2 point counts of its cells.

#include <iostream>

#include "schubert/oracle.hpp"
#include "schubert/ring.hpp"
#include "schubert/young.hpp"

int main() {
    using namespace schubert;
    const RectangleContext ctx(2, 4);
    const auto basis = enumerate_diagrams(ctx);

    std::cout << "Products in A*(2,4):\n";
    for (const auto& a : basis)
        for (const auto& b : basis) {
            if (b > a) continue;
            std::cout << "  " << bracketed(a) << " x " << bracketed(b) << " = " << to_string(cup(a, b, ctx)) << '\n';
        }

    const YoungDiagram two{2}, one_one{1, 1};
    std::cout << "\n(2) against rotated (1,1):\n" << render_overlap(two, one_one, ctx);

    std::cout << "\nSchubert cells of G_2(F_2^4):\n";
    for (const auto& [d, count] : schubert_cell_census(2, 4, 2)) std::cout << "  " << to_string(d) << ": " << count << '\n';
}
