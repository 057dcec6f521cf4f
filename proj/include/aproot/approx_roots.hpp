#ifndef APROOT_APPROX_ROOTS_HPP
#define APROOT_APPROX_ROOTS_HPP

#include <aproot/bipoly.hpp>

#include <stdexcept>

namespace aproot {

// a*b keeping only y-degrees < n
template <class C>
UPoly<C> mul_trunc(const UPoly<C>& a, const UPoly<C>& b, int n) {
    if (a.is_zero() || b.is_zero() || n <= 0) return UPoly<C>(a.base());
    int len = std::min(n, a.degree() + b.degree() + 1);
    std::vector<C> out(len, a.base().zero());
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (int i = 0; i < static_cast<int>(ac.size()) && i < len; ++i) {
        if (ac[i].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(bc.size()) && i + j < len; ++j) {
            if (bc[j].is_zero()) continue;
            out[i + j] += ac[i] * bc[j];
        }
    }
    return UPoly<C>(a.base(), std::move(out));
}

template <class C>
UPoly<C> pow_trunc(UPoly<C> b, int e, int n) {
    UPoly<C> r = UPoly<C>::constant(b.base().one());
    while (e) {
        if (e & 1) r = mul_trunc(r, b, n);
        e >>= 1;
        if (e) b = mul_trunc(b, b, n);
    }
    return r;
}

// inverse of a power series in y whose constant term is a unit
template <class C>
UPoly<C> inverse_trunc(const UPoly<C>& a, int n) {
    const auto& ring = a.base();
    C inv0 = a.coeff(0).inverse();
    std::vector<C> b(n, ring.zero());
    b[0] = inv0;
    for (int k = 1; k < n; ++k) {
        C acc = ring.zero();
        for (int j = 1; j <= k && j <= a.degree(); ++j) {
            if (a.coeffs()[j].is_zero()) continue;
            acc += a.coeffs()[j] * b[k - j];
        }
        b[k] = -(acc * inv0);
    }
    return UPoly<C>(ring, std::move(b));
}

// N-th approximate root of a monic F of degree d, N | d.  The reciprocal
// G = y^d F(1/y) has G(0) = 1; its N-th root S with S(0) = 1 is obtained by
// Newton iteration to y-precision d/N + 1 and reversed.
template <class C>
UPoly<C> app_root(const UPoly<C>& f, int n_root) {
    const int d = f.degree();
    if (n_root <= 0 || d < 0 || d % n_root != 0) throw std::invalid_argument("app_root: N must divide deg F");
    if (!f.is_monic()) throw NotMonic("app_root: input must be monic");
    if (n_root == 1) return f;
    const auto& ring = f.base();
    const int n = d / n_root;
    const int target = n + 1;
    UPoly<C> g = reciprocal(f, d).truncated(target);
    C inv_n = ring.from_int(n_root).inverse();
    UPoly<C> s = UPoly<C>::constant(ring.one());
    int prec = 1;
    while (prec < target) {
        prec = std::min(2 * prec, target);
        UPoly<C> s_n1 = pow_trunc(s, n_root - 1, prec);
        UPoly<C> diff = mul_trunc(s_n1, s, prec) - g.truncated(prec);
        UPoly<C> corr = mul_trunc(diff, inverse_trunc(s_n1, prec), prec);
        s = s - corr.scaled(inv_n);
    }
    return reciprocal(s, n);
}

// deg(F - psi^N) < d - d/N
template <class C>
bool satisfies_root_contract(const UPoly<C>& f, const UPoly<C>& psi, int n_root) {
    const int d = f.degree();
    UPoly<C> r = f - pow(psi, static_cast<unsigned>(n_root));
    return psi.is_monic() && psi.degree() * n_root == d && r.degree() < d - d / n_root;
}

// One monomial of a Psi-adic expansion: coefficient times
// x^B[0] * psi_0^B[1] * ... * psi_k^B[k+1].
template <class K>
struct PsiTerm {
    std::vector<int> B;
    K c;
};

namespace detail {

template <class C, class K>
void expand_rec(const UPoly<C>& g, const std::vector<UPoly<C>>& psi, int level, std::vector<int>& B,
                std::vector<PsiTerm<K>>& out) {
    if (level < 0) {
        if (g.degree() > 0) throw InconsistentState("expansion left a positive-degree remainder");
        if (g.is_zero()) return;
        const C& c = g.coeffs()[0];
        for (int j = 0; j <= c.degree(); ++j) {
            if (c.coeff(j).is_zero()) continue;
            B[0] = j;
            out.push_back({B, c.coeff(j)});
        }
        B[0] = 0;
        return;
    }
    UPoly<C> cur = g;
    for (int i = 0; !cur.is_zero(); ++i) {
        auto [q, r] = divrem(cur, psi[level]);
        B[level + 1] = i;
        expand_rec(r, psi, level - 1, B, out);
        cur = std::move(q);
    }
    B[level + 1] = 0;
}

} // namespace detail

// Psi-adic expansion of g over (x, psi_0, ..., psi_k); every psi_i monic.
template <class C>
std::vector<PsiTerm<typename C::coeff_type>> expand(const UPoly<C>& g, const std::vector<UPoly<C>>& psi) {
    using K = typename C::coeff_type;
    std::vector<PsiTerm<K>> out;
    std::vector<int> B(psi.size() + 1, 0);
    detail::expand_rec(g, psi, static_cast<int>(psi.size()) - 1, B, out);
    return out;
}

// build a coefficient (series or polynomial in x) from its x-coefficients
template <class C>
C from_x_coeffs(const typename C::ring_type& ring, std::vector<typename C::coeff_type> v);

template <>
inline UPoly<Rational> from_x_coeffs<UPoly<Rational>>(const PolyRing<Rational>& r, std::vector<Rational> v) {
    return UPoly<Rational>(r.base, std::move(v));
}
template <>
inline UPoly<Fp> from_x_coeffs<UPoly<Fp>>(const PolyRing<Fp>& r, std::vector<Fp> v) {
    return UPoly<Fp>(r.base, std::move(v));
}
template <>
inline Series<Rational> from_x_coeffs<Series<Rational>>(const SeriesRing<Rational>& r, std::vector<Rational> v) {
    return Series<Rational>(r.base, r.prec, std::move(v));
}
template <>
inline Series<Fp> from_x_coeffs<Series<Fp>>(const SeriesRing<Fp>& r, std::vector<Fp> v) {
    return Series<Fp>(r.base, r.prec, std::move(v));
}

// inverse of expand: rebuild the polynomial from its terms
template <class C>
UPoly<C> recompose(const std::vector<PsiTerm<typename C::coeff_type>>& terms, const std::vector<UPoly<C>>& psi,
                   const typename C::ring_type& ring) {
    UPoly<C> acc(ring);
    for (const auto& t : terms) {
        std::vector<typename C::coeff_type> v(t.B[0] + 1, t.c.ring().zero());
        v[t.B[0]] = t.c;
        UPoly<C> m = UPoly<C>::constant(from_x_coeffs<C>(ring, std::move(v)));
        for (std::size_t i = 0; i < psi.size(); ++i)
            if (t.B[i + 1] > 0) m = m * pow(psi[i], static_cast<unsigned>(t.B[i + 1]));
        acc += m;
    }
    return acc;
}

// Oracle-style fixed point: psi <- psi + a_{N-1}/N where a_{N-1} is the
// psi^(N-1) coefficient of the psi-adic expansion of F.
template <class C>
UPoly<C> tschirnhausen_root(const UPoly<C>& f, int n_root) {
    const int d = f.degree();
    const int n = d / n_root;
    const auto& ring = f.base();
    // start from the leading part y^n
    UPoly<C> psi = UPoly<C>::monomial(ring.one(), n);
    C inv_n = ring.from_int(n_root).inverse();
    for (int it = 0; it <= d + 1; ++it) {
        // psi-adic digit of index N-1
        UPoly<C> cur = f;
        UPoly<C> digit(ring);
        for (int i = 0; i < n_root; ++i) {
            auto [q, r] = divrem(cur, psi);
            if (i == n_root - 1) digit = r;
            cur = std::move(q);
        }
        if (digit.is_zero()) return psi;
        psi = psi + digit.scaled(inv_n);
    }
    return psi;
}

} // namespace aproot

#endif
