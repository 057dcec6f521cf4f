// Decide irreducibility of a few curves and print their invariants.

#include <aproot/aproot.hpp>

#include <iostream>

using namespace aproot;

int main() {
    for (const char* s : {"(y^2 - x^3)^2 - x^7", "y^6 - 3*x^3*y^4 - 2*x^2*y^4 + 3*x^6*y^2 + x^4*y^2 - x^9 + 2*x^8 - x^7",
                          "y^2 - 2*x^2"}) {
        BiPoly<Rational> f = parse_poly(s);
        auto r = irreducible(f);
        std::cout << s << "\n  over Q: " << to_string(r.verdict) << "\n";
        if (!r.pseudo.accepted) continue;
        for (const auto& d : r.pseudo.data)
            std::cout << "  edge q=" << d.q << " m=" << d.m << " P=" << d.P.to_string("Z") << " N=" << d.N << "\n";
        auto inv = compute_invariants(r.pseudo.data);
        std::cout << "  e=" << inv.e << " f=" << inv.f << " vF=" << inv.vF << "\n";
    }
    // the same line pair over Q(sqrt 2)
    BiPoly<Rational> f = parse_poly("y^2 - 2*x^2");
    auto r = irreducible(f, Options{}, UPoly<Rational>(RationalField{}, {Rational(-2), Rational(0), Rational(1)}));
    std::cout << "y^2 - 2*x^2 over Q(sqrt 2): " << to_string(r.verdict) << "\n";
    // reduction to a prime field
    auto g = reduce_mod(parse_poly("(y^2 - x^3)^2 - x^7"), PrimeField{101});
    std::cout << "Kuo over F_101: " << to_string(irreducible(g).verdict) << "\n";
}
