// Lift a coprime split of the first edge to a factorisation modulo a high
// extended valuation.

#include <aproot/aproot.hpp>

#include <iostream>

using namespace aproot;

int main() {
    BiPoly<Rational> f = parse_poly("(y - x + x^3)*(y + x + 2*x^2)*(y^2 - x^3)");
    auto split = first_edge_split(f);
    std::cout << "G0 = " << to_expr_string(split.G0) << "\nH0 = " << to_expr_string(split.H0) << "\n";
    auto st = init_cofactors(f, split.G0, split.H0, split.ev, 12);
    std::cout << "val F = " << st.valF << ", initial gain " << st.n << "\n";
    while (st.n < 12) {
        StepCheck c{};
        st = hensel_step(st, f, split.ev, &c);
        std::cout << "step: defect " << c.defect << ", Bezout " << c.bezout << ", gain now " << st.n << "\n";
    }
    // only terms below the certified value are meaningful
    std::cout << "G = " << to_string(truncate_value(st.G, split.ev, st.valG + st.n)) << "\n";
    std::cout << "H = " << to_string(truncate_value(st.H, split.ev, st.valH + st.n)) << "\n";
}
