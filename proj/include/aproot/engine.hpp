#ifndef APROOT_ENGINE_HPP
#define APROOT_ENGINE_HPP

#include <aproot/approx_roots.hpp>
#include <aproot/polygon.hpp>
#include <aproot/primitive.hpp>

#include <map>

namespace aproot {

// State at stage k: valuation vector V = (v_{k,-1}, ..., v_{k,k}), the
// matching Lambda, the current N, ramification e and the flattened residue
// algebra K_k together with the images of z_1..z_k in it.
template <class K>
struct EngineState {
    int k = 0;
    std::vector<long long> V;
    std::vector<AlgElem<K>> Lambda;
    int N = 1;
    long long e = 1;
    Algebra<K> A;
    std::vector<AlgElem<K>> gens;

    long long vF() const { return N * V.back(); }
};

template <class K>
EngineState<K> init_state(int d, const typename K::ring_type& k) {
    EngineState<K> s;
    s.A = Algebra<K>::trivial(k);
    s.V = {1, 0};
    s.Lambda = {s.A.one(), s.A.one()};
    s.N = d;
    return s;
}

// w_i = min{<B,V> : b_k = i} - v_k(F)
template <class K>
Heights compute_heights(const std::vector<PsiTerm<K>>& terms, const EngineState<K>& st) {
    Heights w(st.N + 1);
    const long long vf = st.vF();
    for (const auto& t : terms) {
        if (t.B.size() != st.V.size()) throw InconsistentState("expansion length does not match V");
        int i = t.B.back();
        if (i > st.N) throw InconsistentState("psi-adic exponent exceeds N");
        long long val = 0;
        for (std::size_t j = 0; j < t.B.size(); ++j) val += t.B[j] * st.V[j];
        val -= vf;
        if (!w[i] || val < *w[i]) w[i] = val;
    }
    if (!w[st.N] || *w[st.N] != 0) throw InconsistentState("w_N must vanish");
    return w;
}

// sum of f_B Lambda^B over the monomials reaching the edge, divided by
// Lambda^{B0} = lambda_{k,k}^N so that the result is monic
template <class K>
BoundaryPoly<K> boundary_poly(const std::vector<PsiTerm<K>>& terms, const EngineState<K>& st, const LowerEdge& edge,
                              const Heights& w) {
    const Algebra<K>& a = st.A;
    const long long vf = st.vF();
    std::vector<std::map<int, AlgElem<K>>> cache(st.V.size());
    auto lam_pow = [&](std::size_t j, int e) -> AlgElem<K> {
        auto it = cache[j].find(e);
        if (it != cache[j].end()) return it->second;
        AlgElem<K> v = power(st.Lambda[j], e);
        cache[j].emplace(e, v);
        return v;
    };
    std::vector<AlgElem<K>> c(st.N + 1, a.zero());
    std::vector<bool> on(st.N + 1, false);
    for (int i : edge.on_edge) on[i] = true;
    for (const auto& t : terms) {
        int i = t.B.back();
        if (!on[i]) continue;
        long long val = 0;
        for (std::size_t j = 0; j < t.B.size(); ++j) val += t.B[j] * st.V[j];
        if (val - vf != *w[i]) continue;
        AlgElem<K> m = a.from_base(t.c);
        for (std::size_t j = 0; j < t.B.size(); ++j)
            if (t.B[j] > 0) m *= lam_pow(j, t.B[j]);
        c[i] += m;
    }
    AlgElem<K> lead = lam_pow(st.V.size() - 1, st.N);
    if (!(c[st.N] == lead)) throw InconsistentState("leading boundary coefficient is not Lambda^B0");
    AlgElem<K> inv = lead.inverse();
    BoundaryPoly<K> h;
    h.N = st.N;
    h.edge = edge;
    for (int i : edge.on_edge) {
        c[i] *= inv;
        if (c[i].is_zero()) throw InconsistentState("edge monomial cancelled");
        h.heights.push_back(*w[i]);
    }
    h.coeffs = AlgPoly<K>(a, std::move(c));
    return h;
}

// (s, t) with q*s - m*t = 1 and 0 <= t < q
inline std::pair<long long, long long> bezout_st(int q, long long m) {
    for (long long t = 0; t < q; ++t)
        if ((1 + m * t) % q == 0) return {(1 + m * t) / q, t};
    throw InconsistentState("gcd(q, m) != 1");
}

// Advance to stage k+1 after an accepted edge; `iso` flattens
// K_k[Z]/(P) onto the new residue algebra.
template <class K>
EngineState<K> update_state(const EngineState<K>& st, const EdgeData<K>& ed, const TowerIso<K>& iso) {
    const int q = ed.q;
    const long long m = ed.m;
    const int ell = ed.ell();
    auto [s, t] = bezout_st(q, m);
    const int k = st.k;
    EngineState<K> nx;
    nx.k = k + 1;
    nx.N = ed.N;
    nx.e = st.e * q;
    nx.A = iso.flat;
    const AlgElem<K> z = iso.z_image;
    for (const auto& g : st.gens) nx.gens.push_back(iso.embed(g));
    nx.gens.push_back(z);

    // entries -1..k of the old vectors live at positions 0..k+1
    const std::size_t last = st.V.size() - 1;
    for (std::size_t j = 0; j < last; ++j) {
        nx.V.push_back(q * st.V[j]);
        nx.Lambda.push_back(iso.embed(st.Lambda[j]) * power(z, t * st.V[j]));
    }
    nx.V.push_back(q * st.V[last] + m);
    AlgElem<K> lam_kk = iso.embed(st.Lambda[last]);
    nx.Lambda.push_back(lam_kk * power(z, t * st.V[last] + s));
    nx.V.push_back(static_cast<long long>(q) * ell * nx.V.back());

    AlgPoly<K> pf = map_coeffs<AlgElem<K>>(ed.P, nx.A, [&](const AlgElem<K>& c) { return iso.embed(c); });
    AlgElem<K> dp = pf.derivative().eval(z);
    AlgElem<K> lam_new = q == 1 ? dp * power(lam_kk, ell)
                                : nx.A.from_int(q) * power(z, 1 - s - ell) * dp * power(nx.Lambda.back(), q * ell);
    if (!lam_new.is_unit()) throw NonUnitLambda("lambda_{k,k} is not a unit at stage " + std::to_string(k + 1));
    nx.Lambda.push_back(lam_new);
    return nx;
}

} // namespace aproot

#endif
