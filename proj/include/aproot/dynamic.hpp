#ifndef APROOT_DYNAMIC_HPP
#define APROOT_DYNAMIC_HPP

#include <aproot/algebra.hpp>

#include <variant>
#include <vector>

namespace aproot {

// Run `fn(component)` over K[T]/(Q).  Whenever an inversion inside `fn`
// meets a zero divisor the modulus is split and `fn` is replayed on both
// parts, so every result below was computed over a component where all
// needed inversions succeeded.  `fn` must project its own inputs.
template <class K, class Fn>
auto split_map(const Algebra<K>& a, Fn&& fn) {
    using Result = decltype(fn(a));
    std::vector<std::pair<Algebra<K>, Result>> out;
    std::vector<Algebra<K>> work{a};
    while (!work.empty()) {
        Algebra<K> comp = work.back();
        work.pop_back();
        try {
            out.emplace_back(comp, fn(comp));
        } catch (const ZeroDivisorFound<K>& z) {
            UPoly<K> g = make_monic(z.factor);
            auto [h, r] = divrem(comp.modulus(), g);
            if (!r.is_zero() || g.degree() < 1 || h.degree() < 1) throw;
            work.push_back(Algebra<K>(h));
            work.push_back(Algebra<K>(g));
        }
    }
    return out;
}

template <class K>
using AlgPoly = UPoly<AlgElem<K>>;

template <class K>
std::vector<std::pair<Algebra<K>, AlgPoly<K>>> dynamic_gcd(const AlgPoly<K>& a, const AlgPoly<K>& b) {
    return split_map(a.base(), [&](const Algebra<K>& comp) {
        return gcd(project(a, comp), project(b, comp));
    });
}

// Yun's square-free decomposition over a field (or raising on zero
// divisors over an algebra); returns the non-trivial (S_i, i).
template <class R>
std::vector<std::pair<UPoly<R>, int>> squarefree_decomposition(const UPoly<R>& f0) {
    std::vector<std::pair<UPoly<R>, int>> out;
    UPoly<R> f = make_monic(f0);
    if (f.degree() < 1) return out;
    UPoly<R> df = f.derivative();
    UPoly<R> a = gcd(f, df);
    UPoly<R> b = quo(f, a);
    UPoly<R> c = quo(df, a);
    UPoly<R> d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UPoly<R> ai = gcd(b, d);
        b = quo(b, ai);
        c = quo(d, ai);
        d = c - b.derivative();
        if (ai.degree() > 0) out.emplace_back(ai, i);
    }
    return out;
}

template <class K>
struct PowerDecomposition {
    AlgPoly<K> base;  // square-free, monic
    int exponent = 0;
};

struct NotAPower {
    bool mixed = false;  // each component is a power, exponents differ
    std::string detail;
};

// Decide P0 = P^N with P square-free over a product of fields.  Components
// with equal exponents are recombined by CRT.
template <class K>
std::variant<PowerDecomposition<K>, NotAPower> squarefree_power_decompose(const AlgPoly<K>& p0) {
    const Algebra<K>& a = p0.base();
    auto parts = split_map(a, [&](const Algebra<K>& comp) {
        return squarefree_decomposition(project(p0, comp));
    });
    int n = 0;
    for (const auto& [comp, dec] : parts) {
        if (dec.size() != 1)
            return NotAPower{false, std::to_string(dec.size()) + " distinct multiplicities"};
        if (n == 0) n = dec[0].second;
        else if (n != dec[0].second)
            return NotAPower{true, "exponents " + std::to_string(n) + " and " +
                                       std::to_string(dec[0].second) + " on different components"};
    }
    if (parts.size() == 1) return PowerDecomposition<K>{project(parts[0].second[0].first, a), n};
    int deg = parts[0].second[0].first.degree();
    std::vector<AlgElem<K>> coeffs;
    for (int j = 0; j <= deg; ++j) {
        std::vector<std::pair<UPoly<K>, UPoly<K>>> rm;
        for (const auto& [comp, dec] : parts) rm.emplace_back(dec[0].first.coeff(j).rep(), comp.modulus());
        coeffs.push_back(a.elem(crt(rm)));
    }
    return PowerDecomposition<K>{AlgPoly<K>(a, std::move(coeffs)), n};
}

// square-free over every component of the algebra
template <class K>
bool is_squarefree(const AlgPoly<K>& p) {
    auto parts = split_map(p.base(), [&](const Algebra<K>& comp) {
        auto q = project(p, comp);
        return gcd(q, q.derivative()).degree() == 0;
    });
    for (const auto& [comp, ok] : parts)
        if (!ok) return false;
    return true;
}

} // namespace aproot

#endif
