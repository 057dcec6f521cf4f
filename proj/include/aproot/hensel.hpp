#ifndef APROOT_HENSEL_HPP
#define APROOT_HENSEL_HPP

// One quadratic Hensel step at a split edge, measured by a valuation that
// weighs x, y and an approximate root psi.

#include <aproot/bipoly.hpp>
#include <aproot/factor.hpp>
#include <aproot/polygon.hpp>
#include <aproot/primitive.hpp>

#include <climits>
#include <map>

namespace aproot {

struct NotCoprime : Error {
    using Error::Error;
};

template <class K>
class Laurent;

template <class K>
struct LaurentRing {
    typename K::ring_type base;
    Laurent<K> zero() const;
    Laurent<K> one() const;
    Laurent<K> from_int(long long n) const;
    std::uint64_t characteristic() const { return base.characteristic(); }
    bool operator==(const LaurentRing& o) const { return base == o.base; }
};

// Laurent polynomial in x: sum c[i] x^(low + i)
template <class K>
class Laurent {
public:
    using ring_type = LaurentRing<K>;
    using base_ring = typename K::ring_type;

    Laurent() = default;
    explicit Laurent(base_ring r) : r_(std::move(r)) {}
    Laurent(base_ring r, int low, std::vector<K> c) : r_(std::move(r)), low_(low), c_(std::move(c)) { normalize(); }
    static Laurent from_poly(const UPoly<K>& p) { return Laurent(p.base(), 0, p.coeffs()); }
    static Laurent monomial(const K& c, int e) { return Laurent(c.ring(), e, {c}); }

    ring_type ring() const { return {r_}; }
    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    K coeff(int e) const {
        int i = e - low_;
        if (i < 0 || i >= static_cast<int>(c_.size())) return r_.zero();
        return c_[i];
    }

    Laurent& operator+=(const Laurent& o) { return add(o, false); }
    Laurent& operator-=(const Laurent& o) { return add(o, true); }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent(a.r_);
        std::vector<K> out(a.c_.size() + b.c_.size() - 1, a.r_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Laurent(a.r_, a.low_ + b.low_, std::move(out));
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.c_.size() == b.c_.size() && (a.c_.empty() || (a.low_ == b.low_ && a.c_ == b.c_));
    }

    // only monomials are units
    Laurent inverse() const {
        if (c_.size() != 1) throw NotInvertible("Laurent polynomial is not a monomial");
        return Laurent(r_, -low_, {c_[0].inverse()});
    }

    // drop exponents >= bound
    Laurent truncated(int bound) const {
        if (is_zero() || high() < bound) return *this;
        if (low_ >= bound) return Laurent(r_);
        return Laurent(r_, low_, std::vector<K>(c_.begin(), c_.begin() + (bound - low_)));
    }

    std::string to_string() const {
        std::string out;
        for (int e = high(); e >= low_ && !c_.empty(); --e) {
            K c = coeff(e);
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            bool neg = cs[0] == '-';
            if (neg) cs = cs.substr(1);
            std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
            std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
            if (out.empty()) out = neg ? "-" + term : term;
            else out += neg ? " - " + term : " + " + term;
        }
        return out.empty() ? "0" : out;
    }

private:
    Laurent& add(const Laurent& o, bool sub) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            low_ = o.low_;
            c_.clear();
        }
        int lo = std::min(low_, o.low_);
        int hi = std::max(high(), o.high());
        std::vector<K> out(hi - lo + 1, r_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[low_ - lo + i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            auto& d = out[o.low_ - lo + i];
            d = sub ? d - o.c_[i] : d + o.c_[i];
        }
        low_ = lo;
        c_ = std::move(out);
        normalize();
        return *this;
    }
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        std::size_t k = 0;
        while (k < c_.size() && c_[k].is_zero()) ++k;
        if (k) {
            c_.erase(c_.begin(), c_.begin() + k);
            low_ += static_cast<int>(k);
        }
        if (c_.empty()) low_ = 0;
    }

    base_ring r_;
    int low_ = 0;
    std::vector<K> c_;
};

template <class K>
Laurent<K> LaurentRing<K>::zero() const { return Laurent<K>(base); }
template <class K>
Laurent<K> LaurentRing<K>::one() const { return Laurent<K>(base, 0, {base.one()}); }
template <class K>
Laurent<K> LaurentRing<K>::from_int(long long n) const { return Laurent<K>(base, 0, {base.from_int(n)}); }

// polynomial in y with Laurent coefficients in x
template <class K>
using LYPoly = UPoly<Laurent<K>>;

template <class K>
LYPoly<K> to_laurent(const BiPoly<K>& f) {
    LaurentRing<K> lr{f.base().base};
    return map_coeffs<Laurent<K>>(f, lr, [](const UPoly<K>& c) { return Laurent<K>::from_poly(c); });
}

// back to K[x][y]; throws on negative exponents
template <class K>
BiPoly<K> from_laurent(const LYPoly<K>& f) {
    const auto k = f.base().base;
    return map_coeffs<UPoly<K>>(f, PolyRing<K>{k}, [&](const Laurent<K>& c) {
        if (!c.is_zero() && c.low() < 0) throw InconsistentState("negative power of x");
        std::vector<K> v;
        for (int e = 0; !c.is_zero() && e <= c.high(); ++e) v.push_back(c.coeff(e));
        return UPoly<K>(k, std::move(v));
    });
}

template <class K>
LYPoly<K> truncate_x(const LYPoly<K>& f, int bound) {
    return map_coeffs<Laurent<K>>(f, f.base(), [&](const Laurent<K>& c) { return c.truncated(bound); });
}

template <class K>
std::string to_string(const LYPoly<K>& f) {
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Laurent<K> c = f.coeff(i);
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "*y" : "*y^" + std::to_string(i));
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")" + mono;
    }
    return out.empty() ? "0" : out;
}

constexpr long long kValInfinity = LLONG_MAX / 4;

// val(x) = wx, val(y) = wy, val(psi) = wpsi, extended to polynomials through
// the psi-adic expansion with y-reduced coefficients
template <class K>
struct ExtendedValuation {
    BiPoly<K> psi;
    long long wx = 1, wy = 0, wpsi = 1;

    int delta() const { return psi.degree(); }
    LYPoly<K> psi_l() const { return to_laurent(psi); }
};

// coefficients a_c with A = sum a_c psi^c and deg_y a_c < deg psi
template <class K>
std::vector<LYPoly<K>> psi_expand(LYPoly<K> a, const LYPoly<K>& psi) {
    std::vector<LYPoly<K>> out;
    while (!a.is_zero()) {
        auto [q, r] = divrem(a, psi);
        out.push_back(r);
        a = q;
    }
    return out;
}

template <class K>
long long extended_val(const LYPoly<K>& a, const ExtendedValuation<K>& ev) {
    long long best = kValInfinity;
    auto parts = psi_expand(a, ev.psi_l());
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (int b = 0; b <= parts[c].degree(); ++b) {
            const Laurent<K> co = parts[c].coeff(b);
            if (co.is_zero()) continue;
            best = std::min(best, co.low() * ev.wx + b * ev.wy + static_cast<long long>(c) * ev.wpsi);
        }
    return best;
}

template <class K>
long long extended_val(const BiPoly<K>& a, const ExtendedValuation<K>& ev) {
    return extended_val(to_laurent(a), ev);
}

// the terms of least value, as a polynomial
template <class K>
LYPoly<K> initial_form(const LYPoly<K>& a, const ExtendedValuation<K>& ev) {
    const long long v = extended_val(a, ev);
    const LYPoly<K> psi = ev.psi_l();
    auto parts = psi_expand(a, psi);
    LYPoly<K> out(a.base());
    LYPoly<K> pw = LYPoly<K>::constant(a.base().one());
    for (std::size_t c = 0; c < parts.size(); ++c) {
        LYPoly<K> keep(a.base());
        for (int b = 0; b <= parts[c].degree(); ++b) {
            const Laurent<K> co = parts[c].coeff(b);
            for (int e = co.low(); !co.is_zero() && e <= co.high(); ++e) {
                if (co.coeff(e).is_zero()) continue;
                if (e * ev.wx + b * ev.wy + static_cast<long long>(c) * ev.wpsi == v)
                    keep.set_coeff(b, keep.coeff(b) + Laurent<K>::monomial(co.coeff(e), e));
            }
        }
        out += keep * pw;
        pw = pw * psi;
    }
    return out;
}

// drop the psi-adic terms of value >= bound
template <class K>
LYPoly<K> truncate_value(const LYPoly<K>& a, const ExtendedValuation<K>& ev, long long bound) {
    const LYPoly<K> psi = ev.psi_l();
    auto parts = psi_expand(a, psi);
    LYPoly<K> out(a.base());
    for (std::size_t i = parts.size(); i-- > 0;) {
        const long long c = static_cast<long long>(i);
        LYPoly<K> keep(a.base());
        for (int b = 0; b <= parts[i].degree(); ++b) {
            const Laurent<K> co = parts[i].coeff(b);
            if (co.is_zero()) continue;
            long long rest = bound - b * ev.wy - c * ev.wpsi;
            // e * wx < rest
            long long e = rest > 0 ? (rest + ev.wx - 1) / ev.wx : -((-rest) / ev.wx);
            keep.set_coeff(b, co.truncated(static_cast<int>(std::clamp<long long>(e, INT_MIN / 2, INT_MAX / 2))));
        }
        out = out * psi + keep;
    }
    return out;
}

// psi-degree of a polynomial monic in y whose degree is a multiple of deg psi
template <class K>
int psi_degree(const LYPoly<K>& a, const ExtendedValuation<K>& ev) {
    return a.degree() / ev.delta();
}

// y-division by a monic B whose coefficients carry no negative powers of x,
// dropping x^e for e >= xbound as it goes
template <class K>
std::pair<LYPoly<K>, LYPoly<K>> divrem_trunc(const LYPoly<K>& a, const LYPoly<K>& b, int xbound) {
    if (!b.is_monic()) throw NotMonic("divrem_trunc: divisor must be monic");
    const int db = b.degree();
    std::vector<Laurent<K>> r = a.coeffs();
    for (auto& c : r) c = c.truncated(xbound);
    if (static_cast<int>(r.size()) <= db) return {LYPoly<K>(a.base()), LYPoly<K>(a.base(), std::move(r))};
    std::vector<Laurent<K>> q(r.size() - db, a.base().zero());
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        const Laurent<K> t = r[i];
        if (t.is_zero()) continue;
        q[i - db] = t;
        for (int j = 0; j < db; ++j)
            if (!b.coeff(j).is_zero()) r[i - db + j] = (r[i - db + j] - t * b.coeff(j)).truncated(xbound);
        r[i] = a.base().zero();
    }
    r.resize(db, a.base().zero());
    return {LYPoly<K>(a.base(), std::move(q)), LYPoly<K>(a.base(), std::move(r))};
}

// Euclidean division by B monic in psi with val(B) = deg_psi(B) val(psi);
// both valuation bounds are checked.
template <class K>
std::pair<LYPoly<K>, LYPoly<K>> quorem_ext(const LYPoly<K>& a, const LYPoly<K>& b, const ExtendedValuation<K>& ev,
                                           std::optional<int> xbound = std::nullopt) {
    if (!b.is_monic()) throw NotMonic("quorem_ext: divisor must be monic");
    auto [q, r] = xbound ? divrem_trunc(a, b, *xbound) : divrem(a, b);
    const long long va = extended_val(a, ev);
    const long long vb = extended_val(b, ev);
    if (vb == static_cast<long long>(psi_degree(b, ev)) * ev.wpsi && va < kValInfinity) {
        if (extended_val(r, ev) < va) throw InconsistentState("quorem_ext: remainder lost valuation");
        if (!q.is_zero() && extended_val(q, ev) < va - vb) throw InconsistentState("quorem_ext: quotient lost valuation");
    }
    return {q, r};
}

template <class K>
struct LiftState {
    LYPoly<K> G, H, S, T;
    long long n = 0;
    long long valF = 0, valG = 0, valH = 0;
    int xbound = 0;  // cap on the x-truncation, set from the target gain
};

namespace detail {

// x-truncation under which gains up to g stay certified; every dropped term
// has value >= xbound * wx
template <class K>
int xbound_for(const LiftState<K>& st, const ExtendedValuation<K>& ev, long long g) {
    long long need = 2 * (std::abs(st.valF) + std::abs(st.valG) + std::abs(st.valH)) + 2 * g + 1;
    return static_cast<int>(need / ev.wx + 1);
}

} // namespace detail

// S, T with val S = -val G, val T = -val H, deg S < deg H, deg T < deg G and
// val(SG + TH - 1) > 0: solve for the value-0 part of SG + TH.
template <class K>
LiftState<K> init_cofactors(const BiPoly<K>& f, const BiPoly<K>& g0, const BiPoly<K>& h0, const ExtendedValuation<K>& ev,
                            long long target = 64) {
    const auto k = f.base().base;
    const LaurentRing<K> lr{k};
    LiftState<K> st;
    st.G = to_laurent(g0);
    st.H = to_laurent(h0);
    if (!st.H.is_monic() || st.H.degree() % ev.delta() != 0) throw NotMonic("H must be monic in psi");
    const LYPoly<K> fl = to_laurent(f);
    st.valF = extended_val(fl, ev);
    st.valG = extended_val(st.G, ev);
    st.valH = extended_val(st.H, ev);
    if (st.valG + st.valH != st.valF) throw InconsistentState("val G + val H != val F");
    const long long defect = extended_val(fl - st.G * st.H, ev) - st.valF;
    if (defect <= 0) throw InconsistentState("initial factors do not approximate F");

    const LYPoly<K> psi = ev.psi_l();
    const int delta = ev.delta();
    // monomials x^a y^b psi^c of a prescribed value with c < cmax
    auto candidates = [&](long long value, int cmax) {
        std::vector<LYPoly<K>> out;
        LYPoly<K> pw = LYPoly<K>::constant(lr.one());
        for (int c = 0; c < cmax; ++c) {
            for (int b = 0; b < delta; ++b) {
                long long rest = value - b * ev.wy - static_cast<long long>(c) * ev.wpsi;
                if (rest % ev.wx != 0) continue;
                int a = static_cast<int>(rest / ev.wx);
                LYPoly<K> m(lr);
                m.set_coeff(b, Laurent<K>::monomial(k.one(), a));
                out.push_back(m * pw);
            }
            pw = pw * psi;
        }
        return out;
    };
    const int hdeg = psi_degree(st.H, ev);
    const int gdeg = (st.G.degree() + delta - 1) / delta;
    auto sc = candidates(-st.valG, hdeg);
    auto tc = candidates(-st.valH, std::max(gdeg, 1));
    // filter by y-degree
    std::erase_if(sc, [&](const LYPoly<K>& m) { return m.degree() >= st.H.degree(); });
    std::erase_if(tc, [&](const LYPoly<K>& m) { return m.degree() >= st.G.degree(); });

    // value-0 part of each product, flattened to (c, b, a) coordinates
    using Key = std::tuple<int, int, int>;
    std::map<Key, int> index;
    auto value0 = [&](const LYPoly<K>& p) {
        std::map<Key, K> out;
        auto parts = psi_expand(p, psi);
        for (std::size_t c = 0; c < parts.size(); ++c)
            for (int b = 0; b <= parts[c].degree(); ++b) {
                const Laurent<K> co = parts[c].coeff(b);
                for (int e = co.low(); !co.is_zero() && e <= co.high(); ++e)
                    if (!co.coeff(e).is_zero() && e * ev.wx + b * ev.wy + static_cast<long long>(c) * ev.wpsi == 0)
                        out.emplace(Key{static_cast<int>(c), b, e}, co.coeff(e));
            }
        return out;
    };
    std::vector<std::map<Key, K>> cols;
    for (const auto& m : sc) cols.push_back(value0(m * st.G));
    for (const auto& m : tc) cols.push_back(value0(m * st.H));
    index.emplace(Key{0, 0, 0}, 0);
    for (const auto& col : cols)
        for (const auto& [key, v] : col) index.emplace(key, static_cast<int>(index.size()));
    const int rows = static_cast<int>(index.size());
    const int ncols = static_cast<int>(cols.size());
    if (ncols == 0) throw NotCoprime("no cofactor candidates");
    // least squares is not needed: Gauss on the augmented system
    std::vector<std::vector<K>> a(rows, std::vector<K>(ncols + 1, k.zero()));
    for (int j = 0; j < ncols; ++j)
        for (const auto& [key, v] : cols[j]) a[index.at(key)][j] = v;
    a[index.at(Key{0, 0, 0})][ncols] = k.one();
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        K inv = a[r][c].inverse();
        for (auto& v : a[r]) v = v * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            K m = a[i][c];
            for (int j = c; j <= ncols; ++j) a[i][j] -= m * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!a[i][ncols].is_zero()) throw NotCoprime("initial factors are not coprime on the edge");
    // free unknowns are tried at 0 first, then at small nonzero values until
    // both cofactors reach their prescribed valuations
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivcol) is_pivot[c] = true;
    long long bez = 0;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 16) throw NotCoprime("no cofactors with the prescribed valuations");
        std::vector<K> sol(ncols, k.zero());
        for (int j = 0; j < ncols; ++j)
            if (!is_pivot[j] && attempt > 0) sol[j] = k.from_int(1 + (j * 7 + attempt * 3) % 11);
        for (int i = 0; i < r; ++i) {
            K v = a[i][ncols];
            for (int j = 0; j < ncols; ++j)
                if (!is_pivot[j]) v -= a[i][j] * sol[j];
            sol[pivcol[i]] = v;
        }
        st.S = LYPoly<K>(lr);
        st.T = LYPoly<K>(lr);
        for (std::size_t j = 0; j < sc.size(); ++j)
            if (!sol[j].is_zero()) st.S += sc[j] * Laurent<K>::monomial(sol[j], 0);
        for (std::size_t j = 0; j < tc.size(); ++j)
            if (!sol[sc.size() + j].is_zero()) st.T += tc[j] * Laurent<K>::monomial(sol[sc.size() + j], 0);
        if (extended_val(st.S, ev) != -st.valG || extended_val(st.T, ev) != -st.valH) continue;
        bez = extended_val(st.S * st.G + st.T * st.H - LYPoly<K>::constant(lr.one()), ev);
        if (bez <= 0) throw NotCoprime("cofactor equation has no solution of positive gain");
        break;
    }
    // an exact factorization or identity certifies any gain; the target is
    // all that is asked for
    st.n = std::min({defect, bez, std::max<long long>(target, 1)});
    st.xbound = detail::xbound_for(st, ev, 2 * target);
    return st;
}

// postconditions of one step, all checked
struct StepCheck {
    long long defect;     // val(F - G~H~) - val F
    long long bezout;     // val(S~G~ + T~H~ - 1)
    long long dG, dH;     // val(G~ - G), val(H~ - H)
};

template <class K>
LiftState<K> hensel_step(const LiftState<K>& st, const BiPoly<K>& f, const ExtendedValuation<K>& ev,
                         StepCheck* check = nullptr) {
    const LYPoly<K> fl = to_laurent(f);
    const LaurentRing<K> lr = fl.base();
    const LYPoly<K> one = LYPoly<K>::constant(lr.one());
    // enough for the doubled gain and no more: coefficients over Q grow fast
    const int xb = std::min(st.xbound, detail::xbound_for(st, ev, 4 * st.n));
    auto tr = [&](const LYPoly<K>& p) { return truncate_x(p, xb); };

    // terms far above the certified range only inflate coefficients; by the
    // quotient bounds, cutting alpha and beta there moves every output only
    // beyond the same relative cut
    const long long keep = 4 * st.n + 1;
    LYPoly<K> alpha = truncate_value(tr(fl - st.G * st.H), ev, st.valF + keep);
    auto [q, r] = quorem_ext(tr(st.S * alpha), st.H, ev, xb);
    LYPoly<K> g2 = tr(st.G + alpha * st.T + q * st.G);
    LYPoly<K> h2 = tr(st.H + r);
    // exact arithmetic keeps high y-degree terms that vanish modulo the
    // squared ideal; folding them back through H~ restores the degree bound
    // without lowering any valuation
    g2 = tr(g2 + divrem_trunc(fl - g2 * h2, h2, xb).first);
    LYPoly<K> beta = truncate_value(tr(st.S * g2 + st.T * h2 - one), ev, keep);
    auto [aq, br] = quorem_ext(tr(st.S * beta), h2, ev, xb);
    LYPoly<K> s2 = tr(st.S - br);
    LYPoly<K> t2 = tr(st.T - beta * st.T - aq * g2);
    t2 = tr(t2 - divrem_trunc(s2 * g2 + t2 * h2 - one, h2, xb).first);

    g2 = truncate_value(g2, ev, st.valG + keep);
    h2 = truncate_value(h2, ev, st.valH + keep);
    s2 = truncate_value(s2, ev, -st.valG + keep);
    t2 = truncate_value(t2, ev, -st.valH + keep);

    StepCheck c;
    c.defect = extended_val(fl - g2 * h2, ev);
    c.defect = c.defect >= kValInfinity ? kValInfinity : c.defect - st.valF;
    c.bezout = extended_val(s2 * g2 + t2 * h2 - one, ev);
    c.dG = extended_val(g2 - st.G, ev);
    c.dH = extended_val(h2 - st.H, ev);
    if (check) *check = c;
    // beyond the x-truncation nothing is certified
    const long long horizon = static_cast<long long>(xb) * ev.wx - std::abs(st.valF) - std::abs(st.valG) - std::abs(st.valH);
    if (2 * st.n >= horizon) throw PrecisionExhausted(xb);
    auto fail = [](const char* what) { throw InconsistentState(std::string("hensel_step: ") + what); };
    // the provable bounds are >= 2n; equality does occur
    if (c.defect < 2 * st.n) fail("val(F - GH) < val F + 2n");
    if (c.bezout < 2 * st.n) fail("Bezout gain < 2n");
    if (c.dG < st.n + st.valG) fail("val(G~ - G) < n + val G");
    if (c.dH < st.n + st.valH) fail("val(H~ - H) < n + val H");
    if (!h2.is_monic() || h2.degree() != st.H.degree()) fail("H~ is not monic of the same degree");
    if (!s2.is_zero() && s2.degree() >= h2.degree()) fail("deg S~ >= deg H~");
    if (!t2.is_zero() && t2.degree() >= g2.degree()) fail("deg T~ >= deg G~");
    if (extended_val(s2, ev) != -st.valG) fail("val S~ != -val G");
    if (extended_val(t2, ev) != -st.valH) fail("val T~ != -val H");

    LiftState<K> out = st;
    out.G = g2;
    out.H = h2;
    out.S = s2;
    out.T = t2;
    out.n = std::min(std::min(c.defect, c.bezout), horizon);
    return out;
}

template <class K>
LiftState<K> lift_to(LiftState<K> st, const BiPoly<K>& f, const ExtendedValuation<K>& ev, long long target) {
    while (st.n < target) st = hensel_step(st, f, ev);
    return st;
}

// Initial factors at the lower edge of N(F), psi = y, F monic in y.  When
// the edge starts at i > 0 the split is y^i against the edge part; otherwise
// the residual polynomial R = prod Q_j^j is split into its piece of least
// multiplicity and the coprime rest, or, when R = Q^j, into P^j and the rest
// for an irreducible factor P of Q.
template <class K>
struct EdgeSplit {
    BiPoly<K> G0, H0;
    ExtendedValuation<K> ev;
};

template <class K>
EdgeSplit<K> first_edge_split(const BiPoly<K>& f) {
    if (!f.is_monic() || f.degree() < 2) throw NotMonic("first_edge_split: F must be monic of degree >= 2");
    const auto k = f.base().base;
    Heights w(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        if (!f.coeff(i).is_zero()) w[i] = x_valuation(f.coeff(i));
    auto e = lower_edge(w);
    if (!e) throw DegenerateInput("F is a power of y");
    const int q = e->q;
    const long long m = e->m;
    const int left = e->left();
    const int d = f.degree();
    std::vector<K> rc((d - left) / q + 1, k.zero());
    for (int i : e->on_edge) rc[(i - left) / q] = f.coeff(i).coeff(static_cast<int>(*w[i]));
    const UPoly<K> r(k, std::move(rc));

    auto form = [&](const UPoly<K>& p) {
        BiPoly<K> out(PolyRing<K>{k});
        const int dp = p.degree();
        for (int j = 0; j <= dp; ++j)
            if (!p.coeff(j).is_zero())
                out.set_coeff(q * j, UPoly<K>::monomial(p.coeff(j), static_cast<int>(m * (dp - j))));
        return out;
    };
    EdgeSplit<K> out;
    out.ev = ExtendedValuation<K>{bipoly_y<K>(k), q, m, m};
    if (left > 0) {
        out.G0 = BiPoly<K>::monomial(UPoly<K>::constant(k.one()), left);
        out.H0 = form(r);
        return out;
    }
    auto parts = squarefree_decomposition(r);
    UPoly<K> base = parts.front().first;
    if (parts.size() < 2) {
        // R = Q^j: split Q itself when it is reducible over K
        auto irr = factor_squarefree(base);
        if (irr.size() < 2) throw NotCoprime("boundary polynomial is a power of an irreducible; no coprime split");
        base = irr.front();
    }
    UPoly<K> a = base;
    for (int j = 1; j < parts.front().second; ++j) a = a * base;
    out.G0 = form(a);
    out.H0 = form(quo(r, a));
    return out;
}

} // namespace aproot

#endif
