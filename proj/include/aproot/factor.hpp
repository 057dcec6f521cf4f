#ifndef APROOT_FACTOR_HPP
#define APROOT_FACTOR_HPP

#include <aproot/algebra.hpp>
#include <aproot/dynamic.hpp>

#include <algorithm>
#include <random>

namespace aproot {

namespace detail {

// ---- F_p: distinct-degree then equal-degree splitting

inline UPoly<Fp> random_poly(const PrimeField& f, int deg, std::mt19937_64& rng) {
    std::vector<Fp> c;
    for (int i = 0; i < deg; ++i) c.push_back(Fp(rng() % f.p, f.p));
    return UPoly<Fp>(f, std::move(c));
}

inline void equal_degree(const UPoly<Fp>& g, int d, std::mt19937_64& rng, std::vector<UPoly<Fp>>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const PrimeField f = g.base();
    for (;;) {
        UPoly<Fp> a = random_poly(f, g.degree(), rng);
        if (a.degree() < 1) continue;
        UPoly<Fp> b(f);
        if (f.p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            UPoly<Fp> t = rem(a, g);
            b = t;
            for (int i = 1; i < d; ++i) {
                t = rem(t * t, g);
                b += t;
            }
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), f.p, d);
            e = (e - 1) / 2;
            b = powmod(a, e, g) - UPoly<Fp>::constant(f.one());
        }
        UPoly<Fp> u = gcd(b, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(quo(g, u), d, rng, out);
            return;
        }
    }
}

inline std::vector<UPoly<Fp>> factor_squarefree_fp(UPoly<Fp> f, std::uint64_t seed) {
    std::vector<UPoly<Fp>> out;
    f = make_monic(f);
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed);
    const PrimeField k = f.base();
    const UPoly<Fp> x = UPoly<Fp>::variable(k);
    UPoly<Fp> h = rem(x, f);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, mpz_class(static_cast<unsigned long>(k.p)), f);
        UPoly<Fp> g = gcd(h - x, f);
        if (g.degree() > 0) {
            equal_degree(g, d, rng, out);
            f = quo(f, g);
            h = rem(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

// ---- Z[x] helpers for the Zassenhaus lifting

using ZPoly = std::vector<mpz_class>;  // low degree first

inline void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly z_mod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    z_trim(a);
    return a;
}

inline ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    z_trim(r);
    return r;
}

inline ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    z_trim(r);
    return r;
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return z_mod(r, m);
}

// division by a monic polynomial modulo m
inline std::pair<ZPoly, ZPoly> z_divrem_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
    a = z_mod(a, m);
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    if (da < db) return {{}, a};
    ZPoly q(da - db + 1);
    for (int i = da - db; i >= 0; --i) {
        mpz_class c = a[i + db] % m;
        if (c < 0) c += m;
        q[i] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i + j] -= c * b[j];
    }
    a.resize(db);
    return {z_mod(q, m), z_mod(a, m)};
}

inline ZPoly from_fp(const UPoly<Fp>& a) {
    ZPoly r;
    for (const auto& c : a.coeffs()) r.push_back(mpz_class(static_cast<unsigned long>(c.value())));
    return r;
}

inline UPoly<Fp> to_fp(const ZPoly& a, const PrimeField& f) {
    std::vector<Fp> c;
    for (const auto& z : a) {
        mpz_class r = z % static_cast<unsigned long>(f.p);
        if (r < 0) r += static_cast<unsigned long>(f.p);
        c.push_back(Fp(r.get_ui(), f.p));
    }
    return UPoly<Fp>(f, std::move(c));
}

// One quadratic lifting step: f = g*h mod m with s*g + t*h = 1 mod m and h
// monic; returns the same data modulo m^2.
inline void hensel_step_z(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m2) {
    ZPoly e = z_mod(z_sub(f, z_mul(g, h, m2)), m2);
    auto [q, r] = z_divrem_monic(z_mul(s, e, m2), h, m2);
    ZPoly g2 = z_mod(z_add(z_add(g, z_mul(t, e, m2)), z_mul(q, g, m2)), m2);
    ZPoly h2 = z_mod(z_add(h, r), m2);
    ZPoly one{mpz_class(1)};
    ZPoly b = z_mod(z_sub(z_add(z_mul(s, g2, m2), z_mul(t, h2, m2)), one), m2);
    auto [c, d] = z_divrem_monic(z_mul(s, b, m2), h2, m2);
    ZPoly s2 = z_mod(z_sub(s, d), m2);
    ZPoly t2 = z_mod(z_sub(z_sub(t, z_mul(t, b, m2)), z_mul(c, g2, m2)), m2);
    g = g2;
    h = h2;
    s = s2;
    t = t2;
}

inline mpz_class z_symmetric(const mpz_class& c, const mpz_class& m) {
    mpz_class r = c % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

inline std::vector<UPoly<Rational>> factor_squarefree_q(const UPoly<Rational>& f0, std::uint64_t seed) {
    std::vector<UPoly<Rational>> out;
    UPoly<Rational> f = make_monic(f0);
    const int n = f.degree();
    if (n < 1) return out;
    if (n == 1) return {f};
    // primitive integer multiple
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    ZPoly F;
    for (const auto& c : f.coeffs()) F.push_back(c.num() * (den / c.den()));
    mpz_class cont = 0;
    for (const auto& c : F) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
    for (auto& c : F) c /= cont;

    // pick the prime with the fewest modular factors among a few candidates
    std::uint64_t best_p = 0;
    std::vector<UPoly<Fp>> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 6; p += 2) {
        if (!is_prime_u64(p)) continue;
        if (F.back() % static_cast<unsigned long>(p) == 0) continue;
        PrimeField k{p};
        UPoly<Fp> fp = to_fp(F, k);
        if (fp.degree() != n) continue;
        if (gcd(fp, fp.derivative()).degree() != 0) continue;
        auto fs = factor_squarefree_fp(fp, seed + p);
        ++tried;
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {f};

    // coefficient bound for factors, scaled by the leading coefficient
    mpz_class norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    mpz_class lcF = abs(F.back());
    mpz_class bound = 2 * lcF * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);

    const PrimeField k{best_p};
    mpz_class pm(static_cast<unsigned long>(best_p));
    mpz_class modulus = pm;
    int rounds = 0;
    while (modulus <= bound) {
        modulus *= modulus;
        ++rounds;
    }

    // lift one factor off at a time
    std::vector<ZPoly> lifted;
    ZPoly rest = F;
    std::vector<UPoly<Fp>> remaining = best;
    while (remaining.size() > 1) {
        UPoly<Fp> g1 = remaining.front();
        remaining.erase(remaining.begin());
        UPoly<Fp> h1 = UPoly<Fp>::constant(k.one());
        for (const auto& r : remaining) h1 = h1 * r;
        // rest = lc * g1 * h1 mod p; g carries the leading coefficient
        Fp lc = to_fp(ZPoly{rest.back()}, k).coeff(0);
        UPoly<Fp> gl = g1.scaled(lc);
        auto [gg, s0, t0] = xgcd(gl, h1);
        ZPoly g = from_fp(gl), h = from_fp(h1), s = from_fp(s0), t = from_fp(t0);
        mpz_class m = pm;
        for (int i = 0; i < rounds; ++i) {
            m *= m;
            hensel_step_z(rest, g, h, s, t, m);
        }
        // normalise g to monic modulo p^a
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), g.back().get_mpz_t(), modulus.get_mpz_t());
        for (auto& c : g) c = (c * inv) % modulus;
        lifted.push_back(g);
        // continue with h times the leading coefficient
        rest = z_mod(h, modulus);
        for (auto& c : rest) c = (c * F.back()) % modulus;
    }
    {
        ZPoly last = rest;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), last.back().get_mpz_t(), modulus.get_mpz_t());
        for (auto& c : last) c = (c * inv) % modulus;
        lifted.push_back(last);
    }

    // recombination by subset search
    UPoly<Rational> cur = f;
    ZPoly Fcur = F;
    std::vector<ZPoly> pool = lifted;
    auto to_rat = [&](const ZPoly& z) {
        std::vector<Rational> c;
        for (const auto& v : z) c.push_back(Rational(mpq_class(v)));
        return UPoly<Rational>(RationalField{}, std::move(c));
    };
    for (std::size_t size = 1; 2 * size <= pool.size(); ++size) {
        bool found = true;
        while (found && 2 * size <= pool.size()) {
            found = false;
            std::vector<std::size_t> idx(size);
            for (std::size_t i = 0; i < size; ++i) idx[i] = i;
            for (;;) {
                mpz_class lc = Fcur.back();
                ZPoly cand{lc};
                for (auto i : idx) cand = z_mul(cand, pool[i], modulus);
                for (auto& c : cand) c = z_symmetric(c, modulus);
                z_trim(cand);
                mpz_class ct = 0;
                for (const auto& c : cand) mpz_gcd(ct.get_mpz_t(), ct.get_mpz_t(), c.get_mpz_t());
                for (auto& c : cand) c /= ct;
                UPoly<Rational> cq = to_rat(cand);
                auto [qq, rr] = divrem(to_rat(Fcur), cq);
                if (rr.is_zero()) {
                    out.push_back(make_monic(cq));
                    // primitive integer quotient
                    mpz_class dd = 1;
                    for (const auto& c : qq.coeffs()) mpz_lcm(dd.get_mpz_t(), dd.get_mpz_t(), c.den().get_mpz_t());
                    ZPoly nq;
                    for (const auto& c : qq.coeffs()) nq.push_back(c.num() * (dd / c.den()));
                    mpz_class cc = 0;
                    for (const auto& c : nq) mpz_gcd(cc.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
                    for (auto& c : nq) c /= cc;
                    if (nq.back() < 0)
                        for (auto& c : nq) c = -c;
                    Fcur = nq;
                    std::vector<ZPoly> np;
                    for (std::size_t i = 0; i < pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
                    pool = std::move(np);
                    found = true;
                    break;
                }
                // next combination
                int i = static_cast<int>(size) - 1;
                while (i >= 0 && idx[i] == pool.size() - size + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (Fcur.size() > 1) out.push_back(make_monic(to_rat(Fcur)));
    return out;
}

} // namespace detail

// monic irreducible factors of a square-free polynomial over the base field
inline std::vector<UPoly<Fp>> factor_squarefree(const UPoly<Fp>& f, std::uint64_t seed = 1) {
    return detail::factor_squarefree_fp(f, seed);
}

inline std::vector<UPoly<Rational>> factor_squarefree(const UPoly<Rational>& f, std::uint64_t seed = 1) {
    return detail::factor_squarefree_q(f, seed);
}

// Full factorisation with multiplicities, via Yun then the square-free
// routine.  Returns monic factors.
template <class K>
std::vector<std::pair<UPoly<K>, int>> factor_univariate(const UPoly<K>& f, std::uint64_t seed = 1) {
    std::vector<std::pair<UPoly<K>, int>> out;
    for (const auto& [s, mult] : squarefree_decomposition(f))
        for (auto& g : factor_squarefree(s, seed)) out.emplace_back(std::move(g), mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.degree() < b.first.degree();
    });
    return out;
}

template <class K>
bool is_irreducible(const UPoly<K>& f, std::uint64_t seed = 1) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    auto sq = squarefree_decomposition(f);
    if (sq.size() != 1 || sq[0].second != 1) return false;
    return factor_squarefree(f, seed).size() == 1;
}

template <class K>
bool is_field(const Algebra<K>& a, std::uint64_t seed = 1) {
    return is_irreducible(a.modulus(), seed);
}

} // namespace aproot

#endif
