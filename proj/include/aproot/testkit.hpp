#ifndef APROOT_TESTKIT_HPP
#define APROOT_TESTKIT_HPP

// Ground truth built from explicit branches (T^e, S(T)).  Nothing here
// calls the driver: minimal polynomials come from power sums, intersection
// numbers from substituting one parametrization into another branch.

#include <aproot/hensel.hpp>
#include <aproot/resultant.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace aproot::testkit {

// Coefficients live in L = K[W]/(W^2 - c), or in K itself when no c is
// given.  All branches of one product share L.
template <class K>
struct Coefficients {
    typename K::ring_type k;
    std::optional<K> c;

    Algebra<K> algebra() const {
        if (!c) return Algebra<K>::trivial(k);
        return Algebra<K>(UPoly<K>(k, {-*c, k.zero(), k.one()}));
    }
};

// S(T) = sum (a + b W) T^i
template <class K>
struct BranchSpec {
    int e = 1;
    std::map<int, std::pair<K, K>> terms;

    bool rational() const {
        for (const auto& [i, ab] : terms)
            if (!ab.second.is_zero()) return false;
        return true;
    }
};

// "(T^e, S(T))" with coefficients written a + b*W
template <class K>
std::string to_string(const BranchSpec<K>& b) {
    std::string s;
    for (const auto& [i, ab] : b.terms) {
        const auto& [a, w] = ab;
        std::string c;
        if (!a.is_zero()) c = a.to_string();
        if (!w.is_zero()) c += (c.empty() ? "" : " + ") + w.to_string() + "*W";
        if (c.empty()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c + ")*T^" + std::to_string(i);
    }
    return "(T^" + std::to_string(b.e) + ", " + (s.empty() ? "0" : s) + ")";
}

template <class K>
using LPoly = UPoly<AlgElem<K>>;  // polynomial in T (or x) over L
template <class K>
using LBiPoly = UPoly<LPoly<K>>;  // polynomial in y over L[x]

template <class K>
AlgElem<K> conj(const AlgElem<K>& a) {
    const auto& r = a.rep();
    if (r.degree() < 1) return a;
    return a.ring().elem(UPoly<K>(r.base(), {r.coeff(0), -r.coeff(1)}));
}

template <class K>
BranchSpec<K> conj(const BranchSpec<K>& b) {
    BranchSpec<K> out = b;
    for (auto& [i, ab] : out.terms) ab.second = -ab.second;
    return out;
}

template <class K>
LPoly<K> branch_series(const BranchSpec<K>& b, const Algebra<K>& l) {
    LPoly<K> s(l);
    for (const auto& [i, ab] : b.terms)
        s.set_coeff(i, s.coeff(i) + l.from_base(ab.first) + l.gen() * l.from_base(ab.second));
    return s;
}

inline bool primitive(int e, const std::vector<int>& exps) {
    int g = e;
    for (int i : exps) g = std::gcd(g, i);
    return g == 1;
}

template <class K>
void check_primitive(const BranchSpec<K>& b) {
    std::vector<int> ex;
    for (const auto& [i, ab] : b.terms)
        if (!ab.first.is_zero() || !ab.second.is_zero()) ex.push_back(i);
    if (b.e < 1 || !primitive(b.e, ex)) throw InvalidModulus("branch parametrization is not primitive");
}

// prod over e-th roots of unity of (y - S(zeta T)), with x = T^e, from the
// power sums e * (terms of S^j with exponent divisible by e)
template <class K>
LBiPoly<K> branch_minpoly_ext(const BranchSpec<K>& b, const Algebra<K>& l) {
    check_primitive(b);
    const int e = b.e;
    const LPoly<K> s = branch_series(b, l);
    const PolyRing<AlgElem<K>> lx{l};
    std::vector<LPoly<K>> p(e + 1, LPoly<K>(l));
    LPoly<K> sj = LPoly<K>::constant(l.one());
    for (int j = 1; j <= e; ++j) {
        sj = sj * s;
        LPoly<K> pj(l);
        for (int i = 0; i <= sj.degree(); i += e)
            if (!sj.coeff(i).is_zero()) pj.set_coeff(i / e, sj.coeff(i) * l.from_int(e));
        p[j] = pj;
    }
    // Newton identities: k el_k = sum_{i=1..k} (-1)^{i-1} el_{k-i} p_i
    std::vector<LPoly<K>> el(e + 1, LPoly<K>(l));
    el[0] = LPoly<K>::constant(l.one());
    for (int k = 1; k <= e; ++k) {
        LPoly<K> acc(l);
        for (int i = 1; i <= k; ++i) {
            LPoly<K> t = el[k - i] * p[i];
            if (i % 2 == 1) acc += t;
            else acc -= t;
        }
        el[k] = acc * l.from_int(k).inverse();
    }
    std::vector<LPoly<K>> c(e + 1, LPoly<K>(l));
    for (int k = 0; k <= e; ++k) c[e - k] = k % 2 == 0 ? el[k] : -el[k];
    return LBiPoly<K>(lx, std::move(c));
}

template <class K>
BiPoly<K> to_base(const LBiPoly<K>& f, const typename K::ring_type& k) {
    return map_coeffs<UPoly<K>>(f, PolyRing<K>{k}, [&](const LPoly<K>& c) {
        auto r = constant_coeffs(c);
        if (!r) throw InconsistentState("coefficient outside the base field");
        return *r;
    });
}

template <class K>
LBiPoly<K> conj(const LBiPoly<K>& f) {
    return map_coeffs<LPoly<K>>(f, f.base(), [&](const LPoly<K>& c) {
        return map_coeffs<AlgElem<K>>(c, c.base(), [&](const AlgElem<K>& a) { return conj(a); });
    });
}

// Minimal polynomial over K: the branch polynomial itself when S has
// coefficients in K, otherwise its product with the conjugate.
template <class K>
BiPoly<K> branch_minpoly(const BranchSpec<K>& b, const Coefficients<K>& cf) {
    Algebra<K> l = cf.algebra();
    LBiPoly<K> phi = branch_minpoly_ext(b, l);
    if (b.rational()) return to_base(phi, cf.k);
    return to_base(phi * conj(phi), cf.k);
}

// (e; beta_1, ...) from the gcd chain of exponents
template <class K>
std::vector<long long> charexp_direct(const BranchSpec<K>& b) {
    check_primitive(b);
    std::vector<long long> out{b.e};
    int g = b.e;
    for (const auto& [i, ab] : b.terms) {
        if (g == 1) break;
        if (i == 0 || (ab.first.is_zero() && ab.second.is_zero())) continue;
        int ng = std::gcd(g, i);
        if (ng < g) {
            out.push_back(i);
            g = ng;
        }
    }
    return out;
}

// ord_T phi_B(T^{e_A}, S_A(T))
template <class K>
long long branch_intersection(const BranchSpec<K>& a, const BranchSpec<K>& b, const Algebra<K>& l) {
    LBiPoly<K> phi = branch_minpoly_ext(b, l);
    LPoly<K> s = branch_series(a, l);
    LPoly<K> acc(l);
    LPoly<K> sp = LPoly<K>::constant(l.one());
    for (int i = 0; i <= phi.degree(); ++i) {
        const LPoly<K> ci = phi.coeff(i);
        LPoly<K> sub(l);
        for (int j = 0; j <= ci.degree(); ++j)
            if (!ci.coeff(j).is_zero()) sub.set_coeff(j * a.e, ci.coeff(j));
        acc += sub * sp;
        sp = sp * s;
    }
    for (int i = 0; i <= acc.degree(); ++i)
        if (!acc.coeff(i).is_zero()) return i;
    throw InconsistentState("the two branches coincide");
}

// (F, G)_0 as the x-valuation of the resultant
template <class K>
long long intersection_direct(const BiPoly<K>& f, const BiPoly<K>& g) {
    return resultant_x_valuation(f, g);
}

// A product of branches over K: each non-rational spec contributes its
// conjugate too.
template <class K>
struct Product {
    Coefficients<K> cf;
    std::vector<BranchSpec<K>> specs;

    std::vector<BranchSpec<K>> absolute_branches() const {
        std::vector<BranchSpec<K>> out;
        for (const auto& b : specs) {
            out.push_back(b);
            if (!b.rational()) out.push_back(conj(b));
        }
        return out;
    }
    int orbits() const { return static_cast<int>(specs.size()); }

    BiPoly<K> polynomial() const {
        BiPoly<K> f = BiPoly<K>::constant(UPoly<K>::constant(cf.k.one()));
        for (const auto& b : specs) f = f * branch_minpoly(b, cf);
        return f;
    }
};

struct OracleReport {
    bool balanced = false;
    std::vector<std::vector<long long>> charexps;
    std::vector<std::vector<long long>> gammas;  // sorted, per absolute branch
    int branches = 0;
};

template <class K>
OracleReport balanced_oracle(const Product<K>& prod) {
    Algebra<K> l = prod.cf.algebra();
    auto br = prod.absolute_branches();
    OracleReport r;
    r.branches = static_cast<int>(br.size());
    for (std::size_t i = 0; i < br.size(); ++i) {
        r.charexps.push_back(charexp_direct(br[i]));
        std::vector<long long> g;
        for (std::size_t j = 0; j < br.size(); ++j)
            if (i != j) g.push_back(branch_intersection(br[i], br[j], l));
        std::sort(g.begin(), g.end());
        r.gammas.push_back(g);
    }
    r.balanced = true;
    for (std::size_t i = 1; i < br.size(); ++i)
        if (r.charexps[i] != r.charexps[0] || r.gammas[i] != r.gammas[0]) r.balanced = false;
    return r;
}

// ---- random products

template <class K>
K small_scalar(const typename K::ring_type& k, std::mt19937_64& rng, bool allow_zero = false) {
    for (;;) {
        long long v = static_cast<long long>(rng() % 7) - 3;
        if (v != 0 || allow_zero) return k.from_int(v);
    }
}

template <class K>
K non_square(const typename K::ring_type& k);

template <>
inline Rational non_square<Rational>(const RationalField&) { return Rational(-1); }

template <>
inline Fp non_square<Fp>(const PrimeField& f) {
    for (std::uint64_t c = 2; c < f.p; ++c)
        if (detail::powmod(c, (f.p - 1) / 2, f.p) == f.p - 1) return Fp(c, f.p);
    throw InvalidModulus("no quadratic non-residue");
}

struct GenOptions {
    int max_branches = 4;  // absolute branches
    int max_e = 4;
    int max_terms = 5;
    bool allow_extension = true;
    bool allow_constant = true;  // non-Weierstrass branches
    double family_bias = 0.6;    // chance of a balanced-by-construction family
};

namespace detail {

template <class K>
BranchSpec<K> random_spec(const typename K::ring_type& k, int e, int terms, bool ext, bool constant,
                          std::mt19937_64& rng) {
    for (;;) {
        BranchSpec<K> b;
        b.e = e;
        std::vector<int> ex;
        if (constant && rng() % 4 == 0) ex.push_back(0);
        int top = 3 * e + 4;
        while (static_cast<int>(ex.size()) < terms) {
            int i = 1 + static_cast<int>(rng() % top);
            if (std::find(ex.begin(), ex.end(), i) == ex.end()) ex.push_back(i);
        }
        if (!primitive(e, ex)) continue;
        for (int i : ex) {
            K a = small_scalar<K>(k, rng);
            K w = ext && rng() % 2 == 0 ? small_scalar<K>(k, rng) : k.zero();
            b.terms[i] = {a, w};
        }
        if (ext && b.rational()) b.terms.begin()->second.second = k.one();
        return b;
    }
}

} // namespace detail

// Products of explicit branches.  About family_bias of them come from one
// template with a single coefficient varied, which makes them balanced
// unless accidental coincidences intervene; the oracle decides either way.
template <class K>
Product<K> random_product(const typename K::ring_type& k, std::mt19937_64& rng, const GenOptions& opt = {}) {
    Product<K> prod;
    prod.cf.k = k;
    const bool use_ext = opt.allow_extension && rng() % 4 == 0;
    if (use_ext) prod.cf.c = non_square<K>(k);
    int absolute = 0;
    auto room = [&](const BranchSpec<K>& b) { return absolute + (b.rational() ? 1 : 2) <= opt.max_branches; };
    const bool family = std::uniform_real_distribution<double>(0, 1)(rng) < opt.family_bias;
    const int e = 1 + static_cast<int>(rng() % opt.max_e);
    const int want = 1 + static_cast<int>(rng() % opt.max_branches);
    if (family) {
        const int terms = 1 + static_cast<int>(rng() % opt.max_terms);
        BranchSpec<K> base = detail::random_spec<K>(k, e, terms, false, opt.allow_constant, rng);
        // vary at one exponent that keeps every member primitive
        int pos = base.terms.begin()->first;
        if (rng() % 2 == 0) pos = std::next(base.terms.begin(), rng() % base.terms.size())->first;
        std::vector<std::pair<K, K>> used;
        for (int tries = 0; tries < 40 && absolute < want; ++tries) {
            BranchSpec<K> b = base;
            K a = small_scalar<K>(k, rng, true);
            K w = use_ext && rng() % 2 == 0 ? small_scalar<K>(k, rng) : k.zero();
            std::pair<K, K> key{a, w};
            bool dup = false;
            for (const auto& u : used)
                if (u.first == a && (u.second == w || u.second == -w)) dup = true;
            if (dup) continue;
            b.terms[pos] = key;
            if (a.is_zero() && w.is_zero()) b.terms.erase(pos);
            std::vector<int> ex;
            for (const auto& [i, ab] : b.terms) ex.push_back(i);
            if (!primitive(e, ex) || !room(b)) continue;
            used.push_back(key);
            prod.specs.push_back(b);
            absolute += b.rational() ? 1 : 2;
        }
    } else {
        for (int tries = 0; tries < 40 && absolute < want; ++tries) {
            int be = 1 + static_cast<int>(rng() % opt.max_e);
            int terms = 1 + static_cast<int>(rng() % opt.max_terms);
            BranchSpec<K> b = detail::random_spec<K>(k, be, terms, use_ext && rng() % 2 == 0, opt.allow_constant, rng);
            if (!room(b)) continue;
            prod.specs.push_back(b);
            absolute += b.rational() ? 1 : 2;
        }
    }
    if (prod.specs.empty()) prod.specs.push_back(detail::random_spec<K>(k, e, 1, false, false, rng));
    return prod;
}

// random product of pairwise distinct branches, hence square-free
template <class K>
Product<K> random_squarefree_product(const typename K::ring_type& k, std::mt19937_64& rng, const GenOptions& opt = {}) {
    for (;;) {
        Product<K> p = random_product<K>(k, rng, opt);
        Algebra<K> l = p.cf.algebra();
        auto br = p.absolute_branches();
        try {
            for (std::size_t i = 0; i < br.size(); ++i)
                for (std::size_t j = i + 1; j < br.size(); ++j) branch_intersection(br[i], br[j], l);
            return p;
        } catch (const InconsistentState&) {
        }
    }
}

// ---- split seeds for the Hensel step

// F = Gt * Ht exactly, with G0, H0 the initial forms of Gt, Ht
template <class K>
struct SplitCase {
    BiPoly<K> F, G0, H0, Gt, Ht;
    ExtendedValuation<K> ev;
};

namespace detail {

// random terms x^a y^b psi^c of value > floor and y-degree < maxdeg
template <class K>
BiPoly<K> random_tail(const typename K::ring_type& k, const ExtendedValuation<K>& ev, long long floor, int maxdeg,
                      std::mt19937_64& rng) {
    BiPoly<K> x = bipoly_x<K>(k), y = bipoly_y<K>(k);
    BiPoly<K> out = BiPoly<K>::constant(UPoly<K>::constant(k.zero()));
    const int delta = ev.psi.degree();
    const int terms = static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        int b = static_cast<int>(rng() % delta);
        int c = maxdeg > delta ? static_cast<int>(rng() % ((maxdeg - b + delta - 1) / delta)) : 0;
        if (b + c * delta >= maxdeg) continue;
        long long rest = floor + 1 - b * ev.wy - c * ev.wpsi;
        long long a = std::max<long long>(0, (rest + ev.wx - 1) / ev.wx) + static_cast<long long>(rng() % 3);
        BiPoly<K> m = BiPoly<K>::constant(UPoly<K>::constant(small_scalar<K>(k, rng)));
        for (long long i = 0; i < a; ++i) m = m * x;
        for (int i = 0; i < b; ++i) m = m * y;
        for (int i = 0; i < c; ++i) m = m * ev.psi;
        out = out + m;
    }
    return out;
}

template <class K>
UPoly<K> random_residual(const typename K::ring_type& k, int deg, std::mt19937_64& rng) {
    std::vector<K> c;
    c.push_back(small_scalar<K>(k, rng));
    for (int i = 1; i < deg; ++i) c.push_back(small_scalar<K>(k, rng, true));
    c.push_back(k.one());
    return UPoly<K>(k, std::move(c));
}

// x^(m deg P) P(y^q / x^m)
template <class K>
BiPoly<K> edge_form(const UPoly<K>& p, int q, int m) {
    const auto k = p.base();
    BiPoly<K> x = bipoly_x<K>(k), y = bipoly_y<K>(k);
    BiPoly<K> out = BiPoly<K>::constant(UPoly<K>::constant(k.zero()));
    for (int i = 0; i <= p.degree(); ++i) {
        BiPoly<K> t = BiPoly<K>::constant(UPoly<K>::constant(p.coeff(i)));
        for (int j = 0; j < q * i; ++j) t = t * y;
        for (int j = 0; j < m * (p.degree() - i); ++j) t = t * x;
        out = out + t;
    }
    return out;
}

} // namespace detail

// Two families: psi = y with a random edge whose residual polynomial splits
// into coprime P1 P2, and psi = y^3 - x^2 with weights (6, 4, 13) and
// factors psi^2 + c x^3 y^2, psi in either order.
template <class K>
SplitCase<K> random_split(const typename K::ring_type& k, std::mt19937_64& rng) {
    BiPoly<K> x = bipoly_x<K>(k), y = bipoly_y<K>(k);
    SplitCase<K> sc;
    if (rng() % 2 == 0) {
        int q = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 4);
        while (std::gcd(q, m) != 1) m = 1 + static_cast<int>(rng() % 4);
        UPoly<K> p1, p2;
        do {
            p1 = detail::random_residual<K>(k, 1 + static_cast<int>(rng() % 2), rng);
            p2 = detail::random_residual<K>(k, 1 + static_cast<int>(rng() % 2), rng);
        } while (gcd(p1, p2).degree() > 0);
        sc.ev = ExtendedValuation<K>{y, q, m, m};
        sc.G0 = detail::edge_form(p1, q, m);
        sc.H0 = detail::edge_form(p2, q, m);
    } else {
        BiPoly<K> psi = y * y * y - x * x;
        sc.ev = ExtendedValuation<K>{psi, 6, 4, 13};
        BiPoly<K> big = psi * psi + BiPoly<K>::constant(UPoly<K>::constant(small_scalar<K>(k, rng))) * x * x * x * y * y;
        if (rng() % 2 == 0) {
            sc.G0 = big;
            sc.H0 = psi;
        } else {
            sc.G0 = psi;
            sc.H0 = big;
        }
    }
    const long long vg = extended_val(sc.G0, sc.ev), vh = extended_val(sc.H0, sc.ev);
    sc.Gt = sc.G0 + detail::random_tail<K>(k, sc.ev, vg, sc.G0.degree(), rng);
    sc.Ht = sc.H0 + detail::random_tail<K>(k, sc.ev, vh, sc.H0.degree(), rng);
    sc.F = sc.Gt * sc.Ht;
    return sc;
}

} // namespace aproot::testkit

#endif
