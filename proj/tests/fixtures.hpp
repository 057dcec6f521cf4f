#ifndef APROOT_TEST_FIXTURES_HPP
#define APROOT_TEST_FIXTURES_HPP

// Named polynomials shared by the unit, property and acceptance tests.

#include <aproot/aproot.hpp>

namespace fixtures {

using aproot::BiPoly;
using aproot::Rational;

inline const char* kKuo = "(y^2 - x^3)^2 - x^7";
inline const char* kOctic = "((y^2 - x^3)^2 + 4*x^8)^2 + x^14*(y^2 - x^3)";
inline const char* kSplitting = "(y^4 - x^2)^4 + y^6*x^11 - y^4*x^12 - y^2*x^13 + x^14 + x^16";
inline const char* kBalanced = "y^6 - 3*x^3*y^4 - 2*x^2*y^4 + 3*x^6*y^2 + x^4*y^2 - x^9 + 2*x^8 - x^7";
inline const char* kNonBalanced =
    "y^6 - x^6*y^4 - 2*x^4*y^4 - 2*x^2*y^4 + 2*x^10*y^2 + 3*x^8*y^2 - 2*x^6*y^2 + x^4*y^2"
    " - x^14 + 2*x^12 - x^10";
inline const char* kNonWeierstrass =
    "(y+1)^6 - 3*x^3*(y+1)^4 - 2*(y+1)^4 + 3*x^6*(y+1)^2 + (y+1)^2 - x^9 + 2*x^6 - x^3";
// psi^3 + y^2 x^3 psi + x^6 y with psi = y^3 - x^2
inline const char* kHenselExample = "(y^3 - x^2)^3 + y^2*x^3*(y^3 - x^2) + x^6*y";

inline BiPoly<Rational> q(const char* s) { return aproot::parse_poly(s); }

template <class K>
BiPoly<K> as(const char* s, const typename K::ring_type& k) {
    return aproot::parse_poly_as<K>(s, k);
}

} // namespace fixtures

#endif
