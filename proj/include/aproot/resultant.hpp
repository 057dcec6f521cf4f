#ifndef APROOT_RESULTANT_HPP
#define APROOT_RESULTANT_HPP

#include <aproot/bipoly.hpp>

namespace aproot {

namespace detail {

// s / x^v for v <= val(s); the result is known to prec - v
template <class K>
Series<K> unshift(const Series<K>& s, int v) {
    std::vector<K> c;
    for (int i = v; i <= s.degree(); ++i) c.push_back(s.coeff(i));
    return Series<K>(s.base(), s.prec() - v, std::move(c));
}

enum class DetStatus { Ok, NeedPrecision, Zero };

// x-adic valuation of det(a) over K[[x]] by elimination with pivots of
// least valuation.  Each entry carries its own precision.
template <class K>
std::pair<DetStatus, long long> det_valuation(std::vector<std::vector<Series<K>>> a, long long bound) {
    const int n = static_cast<int>(a.size());
    long long total = 0;
    for (int c = 0; c < n; ++c) {
        int piv = -1, best = 0, minprec = INT_MAX;
        for (int r = c; r < n; ++r) {
            minprec = std::min(minprec, a[r][c].prec());
            if (a[r][c].is_zero()) continue;
            int v = a[r][c].valuation();
            if (piv < 0 || v < best) {
                piv = r;
                best = v;
            }
        }
        if (piv < 0) {
            // the remaining minor vanishes to order minprec
            if (total + minprec > bound) return {DetStatus::Zero, 0};
            return {DetStatus::NeedPrecision, 0};
        }
        std::swap(a[c], a[piv]);
        total += best;
        Series<K> uinv = unshift(a[c][c], best).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Series<K> t = unshift(a[r][c], best) * uinv;
            for (int j = c + 1; j < n; ++j)
                if (!a[c][j].is_zero()) a[r][j] -= t * a[c][j];
                else a[r][j] = a[r][j].with_prec(std::min(a[r][j].prec(), t.prec()));
        }
    }
    return {DetStatus::Ok, total};
}

template <class K>
std::vector<std::vector<Series<K>>> resultant_matrix(const BiPoly<K>& f, const BiPoly<K>& g, int prec) {
    const auto k = f.base().base;
    const SeriesRing<K> sr{k, prec};
    const int m = f.degree(), n = g.degree();
    if (!f.lc().coeff(0).is_zero()) {
        // multiplication by G on K[[x]][y]/(F), F made monic
        YPoly<K> ft = truncate(f, prec);
        Series<K> inv = ft.lc().inverse();
        std::vector<Series<K>> fc;
        for (int i = 0; i < m; ++i) fc.push_back(ft.coeff(i) * inv);
        fc.push_back(sr.one());
        YPoly<K> fm(sr, std::move(fc));
        YPoly<K> r = rem(truncate(g, prec), fm);
        std::vector<std::vector<Series<K>>> a(m, std::vector<Series<K>>(m, sr.zero()));
        YPoly<K> y = YPoly<K>::variable(sr);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) a[i][j] = r.coeff(i);
            if (j + 1 < m) r = rem(r * y, fm);
        }
        return a;
    }
    // Sylvester matrix, rows are shifted copies of F then G
    std::vector<std::vector<Series<K>>> a(m + n, std::vector<Series<K>>(m + n, sr.zero()));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + m - i] = Series<K>::from_poly(f.coeff(i), prec);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + n - i] = Series<K>::from_poly(g.coeff(i), prec);
    return a;
}

} // namespace detail

// x-valuation of Res_y(F, G), computed over K[[x]] with doubling precision.
// Throws ZeroResultant when the resultant vanishes.
template <class K>
long long resultant_x_valuation_direct(BiPoly<K> f, BiPoly<K> g) {
    if (f.is_zero() || g.is_zero()) throw ZeroResultant();
    if (f.degree() == 0 && g.degree() == 0) return 0;
    if (f.degree() == 0) return static_cast<long long>(g.degree()) * x_valuation(f.coeff(0));
    if (g.degree() == 0) return static_cast<long long>(f.degree()) * x_valuation(g.coeff(0));
    if (f.lc().coeff(0).is_zero() && !g.lc().coeff(0).is_zero()) std::swap(f, g);
    const long long bound = static_cast<long long>(f.degree()) * std::max(0, deg_x(g)) +
                            static_cast<long long>(g.degree()) * std::max(0, deg_x(f));
    for (int prec = 16;; prec *= 2) {
        auto [st, v] = detail::det_valuation(detail::resultant_matrix(f, g, prec), bound);
        if (st == detail::DetStatus::Ok) return v;
        if (st == detail::DetStatus::Zero) throw ZeroResultant();
        if (prec > 4 * (bound + 1)) throw InconsistentState("resultant precision did not converge");
    }
}

template <class K>
long long resultant_x_valuation(const BiPoly<K>& f, const BiPoly<K>& g) {
    return resultant_x_valuation_direct(f, g);
}

namespace detail {

inline const std::vector<std::uint64_t>& oracle_primes() {
    static const std::vector<std::uint64_t> ps = [] {
        std::vector<std::uint64_t> out;
        for (std::uint64_t p = (1ULL << 62) - 1; out.size() < 8; p -= 2)
            if (is_prime_u64(p)) out.push_back(p);
        return out;
    }();
    return ps;
}

} // namespace detail

// Over Q: the valuation can only go up modulo p, so the minimum over
// several large primes is the true value unless every prime divides the
// lowest coefficient of the resultant.
template <>
inline long long resultant_x_valuation<Rational>(const BiPoly<Rational>& f, const BiPoly<Rational>& g) {
    constexpr int wanted = 3;
    int used = 0;
    std::optional<long long> best;
    for (std::uint64_t p : detail::oracle_primes()) {
        PrimeField fp{p};
        auto red = [&](const BiPoly<Rational>& a) {
            return map_coeffs<UPoly<Fp>>(a, PolyRing<Fp>{fp}, [&](const UPoly<Rational>& c) {
                return map_coeffs<Fp>(c, fp, [&](const Rational& r) { return fp.from_rational(r.value()); });
            });
        };
        BiPoly<Fp> fr, gr;
        try {
            fr = red(f);
            gr = red(g);
        } catch (const CharacteristicError&) {
            continue;
        }
        if (fr.degree() != f.degree() || gr.degree() != g.degree()) continue;
        ++used;
        try {
            long long v = resultant_x_valuation_direct(fr, gr);
            if (!best || v < *best) best = v;
        } catch (const ZeroResultant&) {
        }
        if (used == wanted) break;
    }
    if (used == 0) return resultant_x_valuation_direct(f, g);
    if (!best) throw ZeroResultant();
    return *best;
}

} // namespace aproot

#endif
