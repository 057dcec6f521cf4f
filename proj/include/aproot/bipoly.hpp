#ifndef APROOT_BIPOLY_HPP
#define APROOT_BIPOLY_HPP

#include <aproot/series.hpp>

#include <climits>
#include <tuple>

namespace aproot {

// exact polynomial in y whose coefficients are polynomials in x
template <class K>
using BiPoly = UPoly<UPoly<K>>;

// polynomial in y over K[x]/(x^prec)
template <class K>
using YPoly = UPoly<Series<K>>;

template <class K>
BiPoly<K> bipoly_zero(const typename K::ring_type& k) {
    return BiPoly<K>(PolyRing<K>{k});
}

// build from (coefficient, y-exponent, x-exponent) triples
template <class K>
BiPoly<K> bipoly_from_terms(const typename K::ring_type& k, const std::vector<std::tuple<K, int, int>>& terms) {
    BiPoly<K> f = bipoly_zero<K>(k);
    for (const auto& [c, i, j] : terms) {
        UPoly<K> coef = f.coeff(i) + UPoly<K>::monomial(c, j);
        f.set_coeff(i, coef);
    }
    return f;
}

template <class K>
BiPoly<K> bipoly_x(const typename K::ring_type& k) {
    return BiPoly<K>::constant(UPoly<K>::variable(k));
}

template <class K>
BiPoly<K> bipoly_y(const typename K::ring_type& k) {
    return BiPoly<K>::variable(PolyRing<K>{k});
}

template <class K>
int deg_x(const BiPoly<K>& f) {
    int d = -1;
    for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

// largest power of x dividing every coefficient
template <class K>
int x_content_valuation(const BiPoly<K>& f) {
    int v = INT_MAX;
    for (const auto& c : f.coeffs())
        if (!c.is_zero()) v = std::min(v, x_valuation(c));
    return v;
}

template <class K>
YPoly<K> truncate(const BiPoly<K>& f, int prec) {
    const auto k = f.base().base;
    std::vector<Series<K>> c;
    for (const auto& a : f.coeffs()) c.push_back(Series<K>::from_poly(a, prec));
    return YPoly<K>(SeriesRing<K>{k, prec}, std::move(c));
}

template <class K>
BiPoly<K> to_exact(const YPoly<K>& f) {
    const auto k = f.base().base;
    std::vector<UPoly<K>> c;
    for (const auto& a : f.coeffs()) c.push_back(a.to_poly());
    return BiPoly<K>(PolyRing<K>{k}, std::move(c));
}

// y^d F(1/y)
template <class R>
UPoly<R> reciprocal(const UPoly<R>& f, int d) {
    std::vector<R> c(d + 1, f.base().zero());
    for (int i = 0; i <= f.degree(); ++i) c[d - i] = f.coeff(i);
    return UPoly<R>(f.base(), std::move(c));
}

// y^d F((z*y + 1)/y) for a constant z
template <class K>
BiPoly<K> mobius_shift(const BiPoly<K>& f, long long z) {
    const auto k = f.base().base;
    const int d = f.degree();
    const PolyRing<K> r{k};
    // (z*y + 1)
    BiPoly<K> lin(r, {r.one(), r.from_int(z)});
    BiPoly<K> y = BiPoly<K>::variable(r);
    BiPoly<K> out(r);
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i).is_zero()) continue;
        out += pow(lin, i) * pow(y, d - i) * BiPoly<K>::constant(f.coeff(i));
    }
    return out;
}

template <class K>
BiPoly<K> y_derivative(const BiPoly<K>& f) {
    return f.derivative();
}

template <class K>
BiPoly<K> x_derivative(const BiPoly<K>& f) {
    std::vector<UPoly<K>> c;
    for (const auto& a : f.coeffs()) c.push_back(a.derivative());
    return BiPoly<K>(f.base(), std::move(c));
}

template <class K>
std::string coeff_string(const K& c) {
    return c.to_string();
}

// parseable text, terms by decreasing y then x degree
template <class K>
std::string to_expr_string(const BiPoly<K>& f) {
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const UPoly<K>& a = f.coeff(i);
        for (int j = a.degree(); j >= 0; --j) {
            const K& c = a.coeff(j);
            if (c.is_zero()) continue;
            std::string cs = coeff_string(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            std::string mono;
            if (j > 0) mono = j == 1 ? "x" : "x^" + std::to_string(j);
            if (i > 0) {
                std::string ys = i == 1 ? "y" : "y^" + std::to_string(i);
                mono = mono.empty() ? ys : mono + "*" + ys;
            }
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else term = cs + "*" + mono;
            if (out.empty()) out = neg ? "-" + term : term;
            else out += neg ? " - " + term : " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace aproot

#endif
