#ifndef APROOT_PRIMITIVE_HPP
#define APROOT_PRIMITIVE_HPP

#include <aproot/dynamic.hpp>

#include <random>

namespace aproot {

namespace detail {

// Solve M x = b over a field; M given by columns.  Returns nullopt when M is
// singular.
template <class K>
std::optional<std::vector<std::vector<K>>> solve_columns(const std::vector<std::vector<K>>& cols,
                                                        const std::vector<std::vector<K>>& rhs) {
    const int n = static_cast<int>(cols.size());
    const int r = static_cast<int>(rhs.size());
    const auto k = cols[0][0].ring();
    // augmented row-major matrix
    std::vector<std::vector<K>> a(n, std::vector<K>(n + r, k.zero()));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) a[i][j] = cols[j][i];
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) a[i][n + j] = rhs[j][i];
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        std::swap(a[c], a[piv]);
        K inv = a[c][c].inverse();
        for (int j = c; j < n + r; ++j) a[c][j] = a[c][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            K f = a[i][c];
            for (int j = c; j < n + r; ++j)
                if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<K>> out(r, std::vector<K>(n, k.zero()));
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < n; ++i) out[j][i] = a[i][n + j];
    return out;
}

template <class K>
K random_scalar(const typename K::ring_type& k, std::mt19937_64& rng, long long bound);

template <>
inline Rational random_scalar<Rational>(const RationalField&, std::mt19937_64& rng, long long bound) {
    return Rational(static_cast<long long>(rng() % static_cast<std::uint64_t>(bound)) + 1);
}

template <>
inline Fp random_scalar<Fp>(const PrimeField& f, std::mt19937_64& rng, long long) {
    return Fp(1 + rng() % (f.p - 1), f.p);
}

} // namespace detail

// Isomorphism between the tower K[T]/(Q)[Z]/(P) and K[W]/(Q1), where
// W = Z + c*T.  Elements of the tower are polynomials in Z of degree < deg P
// with coefficients in the inner algebra.
template <class K>
struct TowerIso {
    Algebra<K> inner;
    AlgPoly<K> P;
    Algebra<K> flat;
    AlgElem<K> t_image;  // image of T
    AlgElem<K> z_image;  // image of Z
    K c;

    AlgElem<K> embed(const AlgElem<K>& a) const {
        return eval_at(a.rep(), t_image, [&](const K& v) { return flat.from_base(v); });
    }

    AlgElem<K> forward(const AlgPoly<K>& tower) const {
        return eval_at(tower, z_image, [&](const AlgElem<K>& v) { return embed(v); });
    }

    // W -> Z + c*T, reduced modulo P
    AlgPoly<K> backward(const AlgElem<K>& w) const {
        if (P.degree() == 1) return AlgPoly<K>::constant(inner.elem(w.rep()));
        AlgPoly<K> gamma(inner, {inner.gen() * inner.from_base(c), inner.one()});
        AlgPoly<K> acc(inner);
        for (int i = w.rep().degree(); i >= 0; --i)
            acc = rem(acc * gamma + AlgPoly<K>::constant(inner.from_base(w.rep().coeff(i))), P);
        return acc;
    }
};

// Flatten K[T]/(Q)[Z]/(P), P monic and square-free over every component.
// Las Vegas: random c until the powers of W span the tower.
template <class K>
TowerIso<K> primitive_element(const Algebra<K>& inner, const AlgPoly<K>& p_in, std::mt19937_64& rng,
                              int max_tries = 64) {
    AlgPoly<K> p = make_monic(p_in);
    const auto k = inner.base();
    const int dq = inner.degree();
    const int dp = p.degree();
    if (dp < 1) throw InvalidModulus("primitive_element: P must have positive degree");

    if (dp == 1) {
        // Z = -P(0) already lives in the inner algebra
        return TowerIso<K>{inner, p, inner, inner.gen(), -p.coeff(0), k.zero()};
    }
    if (dq == 1) {
        // inner algebra is K; P has constant coefficients
        K t0 = -inner.modulus().coeff(0);
        std::vector<K> c;
        for (const auto& a : p.coeffs()) c.push_back(a.rep().eval(t0));
        Algebra<K> flat(UPoly<K>(k, std::move(c)));
        return TowerIso<K>{inner, p, flat, flat.from_base(t0), flat.gen(), k.zero()};
    }

    const int n = dq * dp;
    auto coords = [&](const AlgPoly<K>& e) {
        std::vector<K> v(n, k.zero());
        for (int b = 0; b <= e.degree() && b < dp; ++b) {
            const UPoly<K> rep = e.coeff(b).rep();
            for (int a = 0; a <= rep.degree(); ++a) v[a + dq * b] = rep.coeff(a);
        }
        return v;
    };
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        K c = detail::random_scalar<K>(k, rng, 2LL * n * n + 16);
        AlgPoly<K> gamma(inner, {inner.gen() * inner.from_base(c), inner.one()});
        std::vector<std::vector<K>> cols;
        AlgPoly<K> pw = AlgPoly<K>::constant(inner.one());
        for (int j = 0; j < n; ++j) {
            cols.push_back(coords(pw));
            pw = rem(pw * gamma, p);
        }
        AlgPoly<K> t_tower = AlgPoly<K>::constant(inner.gen());
        AlgPoly<K> z_tower(inner, {inner.zero(), inner.one()});
        auto sol = detail::solve_columns(cols, {coords(pw), coords(t_tower), coords(z_tower)});
        if (!sol) continue;
        // W^n = sum sol[0][j] W^j
        std::vector<K> q1(n + 1, k.zero());
        for (int j = 0; j < n; ++j) q1[j] = -(*sol)[0][j];
        q1[n] = k.one();
        UPoly<K> mod(k, std::move(q1));
        if (gcd(mod, mod.derivative()).degree() != 0) continue;
        Algebra<K> flat(mod);
        AlgElem<K> ti = flat.elem(UPoly<K>(k, (*sol)[1]));
        AlgElem<K> zi = flat.elem(UPoly<K>(k, (*sol)[2]));
        return TowerIso<K>{inner, p, flat, ti, zi, c};
    }
    throw RandomnessExhausted("no primitive element found after " + std::to_string(max_tries) + " draws");
}

} // namespace aproot

#endif
