#ifndef APROOT_INVARIANTS_HPP
#define APROOT_INVARIANTS_HPP

#include <aproot/polygon.hpp>

#include <map>
#include <vector>

namespace aproot {

// Discrete invariants derived from the edge data of a pseudo-irreducible F.
struct Invariants {
    long long e = 1;
    long long f = 1;
    std::vector<long long> q, m, ell;
    std::vector<long long> B;  // B_0 .. B_g
    std::vector<long long> M;  // M_1 .. M_g
    std::vector<long long> C;  // B_0 followed by B_k for q_k > 1
    std::vector<std::pair<long long, long long>> Gamma;  // (value, multiplicity)
    long long vF = 0;
    long long per_factor_vF = 0;
    bool tangent_flag = false;
};

struct EdgeShape {
    long long q, m, ell;
};

inline Invariants invariants_from_shape(const std::vector<EdgeShape>& data) {
    Invariants inv;
    const std::size_t g = data.size();
    for (const auto& d : data) {
        inv.q.push_back(d.q);
        inv.m.push_back(d.m);
        inv.ell.push_back(d.ell);
        inv.e *= d.q;
        inv.f *= d.ell;
    }
    // e_k, f_k cumulative; hat versions are the complements
    std::vector<long long> ek(g + 1, 1), fk(g + 1, 1);
    for (std::size_t k = 1; k <= g; ++k) {
        ek[k] = ek[k - 1] * inv.q[k - 1];
        fk[k] = fk[k - 1] * inv.ell[k - 1];
    }
    auto ehat = [&](std::size_t k) { return inv.e / ek[k]; };
    auto fhat = [&](std::size_t k) { return inv.f / fk[k]; };

    inv.B.push_back(inv.e);
    inv.C.push_back(inv.e);
    long long b = 0, mm = 0;
    for (std::size_t k = 1; k <= g; ++k) {
        b += inv.m[k - 1] * ehat(k);
        mm += inv.m[k - 1] * ehat(k - 1) * ehat(k);
        inv.B.push_back(b);
        inv.M.push_back(mm);
        if (inv.q[k - 1] > 1) inv.C.push_back(b);
    }
    std::map<long long, long long> gamma;
    long long bar = 0, cross = 0;
    for (std::size_t k = 1; k <= g; ++k) {
        if (inv.ell[k - 1] > 1) {
            long long mult = fhat(k - 1) - fhat(k);
            gamma[inv.M[k - 1]] += mult;
            cross += mult * inv.M[k - 1];
        }
        if (inv.q[k - 1] > 1) bar += (ehat(k - 1) - ehat(k)) * inv.B[k];
    }
    for (const auto& [v, mult] : gamma) inv.Gamma.emplace_back(v, mult);
    inv.per_factor_vF = bar;
    inv.vF = inv.f * (cross + bar);
    inv.tangent_flag = g >= 1 && (inv.B[1] < inv.B[0] || inv.m[0] == 0);
    return inv;
}

template <class K>
Invariants compute_invariants(const std::vector<EdgeData<K>>& data) {
    std::vector<EdgeShape> shape;
    for (const auto& d : data) shape.push_back({d.q, d.m, d.ell()});
    return invariants_from_shape(shape);
}

} // namespace aproot

#endif
