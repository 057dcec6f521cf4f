#ifndef APROOT_UPOLY_HPP
#define APROOT_UPOLY_HPP

#include <aproot/scalar.hpp>

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace aproot {

template <class R>
class UPoly;

template <class R>
struct PolyRing {
    typename R::ring_type base;
    UPoly<R> zero() const;
    UPoly<R> one() const;
    UPoly<R> from_int(long long n) const;
    std::uint64_t characteristic() const { return base.characteristic(); }
    bool operator==(const PolyRing& o) const { return base == o.base; }
};

template <class R>
bool is_one(const R& a) {
    return a == a.ring().one();
}

// Dense univariate polynomial, coefficients stored low degree first.
// The zero polynomial has an empty coefficient vector.
template <class R>
class UPoly {
public:
    using coeff_type = R;
    using base_ring = typename R::ring_type;
    using ring_type = PolyRing<R>;

    UPoly() = default;
    explicit UPoly(base_ring r) : ring_(std::move(r)) {}
    UPoly(base_ring r, std::vector<R> c) : ring_(std::move(r)), c_(std::move(c)) { normalize(); }

    static UPoly constant(const R& c) { return UPoly(c.ring(), {c}); }
    static UPoly monomial(const R& c, int k) {
        std::vector<R> v(k + 1, c.ring().zero());
        v[k] = c;
        return UPoly(c.ring(), std::move(v));
    }
    static UPoly variable(const base_ring& r) { return monomial(r.one(), 1); }

    const base_ring& base() const { return ring_; }
    ring_type ring() const { return {ring_}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<R>& coeffs() const { return c_; }
    std::vector<R>& mutable_coeffs() { return c_; }

    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return ring_.zero();
        return c_[i];
    }
    R lc() const { return c_.empty() ? ring_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && is_one(c_.back()); }

    void set_coeff(int i, const R& v) {
        if (i >= static_cast<int>(c_.size())) {
            if (v.is_zero()) return;
            c_.resize(i + 1, ring_.zero());
        }
        c_[i] = v;
        normalize();
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    UPoly operator-() const {
        UPoly r(ring_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly(a.ring_);
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return UPoly(a.ring_, std::move(out));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly scaled(const R& s) const {
        UPoly r(ring_);
        if (s.is_zero()) return r;
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(a * s);
        r.normalize();
        return r;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    // multiply by X^k
    UPoly shifted(int k) const {
        if (is_zero()) return *this;
        std::vector<R> v(k, ring_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return UPoly(ring_, std::move(v));
    }

    // drop every term of degree >= n
    UPoly truncated(int n) const {
        if (n <= 0) return UPoly(ring_);
        if (static_cast<int>(c_.size()) <= n) return *this;
        return UPoly(ring_, std::vector<R>(c_.begin(), c_.begin() + n));
    }

    UPoly derivative() const {
        UPoly r(ring_);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(c_[i] * ring_.from_int(static_cast<long long>(i)));
        r.normalize();
        return r;
    }

    R eval(const R& pt) const {
        R acc = ring_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * pt + c_[i];
        return acc;
    }

    // only constants with invertible value are units
    UPoly inverse() const {
        if (degree() != 0) {
            if (is_zero()) throw DivisionByZero();
            throw NotInvertible("polynomial of positive degree is not a unit");
        }
        return constant(c_[0].inverse());
    }

    std::string to_string() const { return to_string("x"); }
    std::string to_string(const std::string& var) const;

private:
    base_ring ring_;
    std::vector<R> c_;
};

template <class R>
UPoly<R> PolyRing<R>::zero() const { return UPoly<R>(base); }
template <class R>
UPoly<R> PolyRing<R>::one() const { return UPoly<R>::constant(base.one()); }
template <class R>
UPoly<R> PolyRing<R>::from_int(long long n) const { return UPoly<R>::constant(base.from_int(n)); }

namespace detail {

inline bool needs_parens(const std::string& s) {
    // anything other than a plain signed atom gets wrapped
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-' || s[i] == ' ') return true;
    return false;
}

} // namespace detail

template <class R>
std::string UPoly<R>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const R& a = c_[i];
        if (a.is_zero()) continue;
        std::string cs = a.to_string();
        bool neg = false;
        if (!detail::needs_parens(cs) && !cs.empty() && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        } else if (detail::needs_parens(cs)) {
            cs = "(" + cs + ")";
        }
        std::string mono;
        if (i > 0) mono = i == 1 ? var : var + "^" + std::to_string(i);
        std::string term;
        if (i == 0) term = cs;
        else if (cs == "1") term = mono;
        else term = cs + "*" + mono;
        if (out.empty()) out = neg ? "-" + term : term;
        else out += neg ? " - " + term : " + " + term;
    }
    return out;
}

template <class R>
UPoly<R> operator*(const UPoly<R>& a, const R& s) {
    return a.scaled(s);
}

template <class R>
UPoly<R> pow(UPoly<R> base, unsigned e) {
    UPoly<R> r = base.ring().one();
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// Euclidean division; the leading coefficient of b must be invertible.
// Over a residue algebra that inversion may raise a zero-divisor split.
template <class R>
std::pair<UPoly<R>, UPoly<R>> divrem(const UPoly<R>& a, const UPoly<R>& b) {
    if (b.is_zero()) throw DivisionByZero();
    const auto& ring = a.base();
    if (a.degree() < b.degree()) return {UPoly<R>(ring), a};
    bool monic = b.is_monic();
    R inv = monic ? ring.one() : b.lc().inverse();
    std::vector<R> r = a.coeffs();
    int db = b.degree();
    std::vector<R> q(a.degree() - db + 1, ring.zero());
    const auto& bc = b.coeffs();
    for (int i = a.degree() - db; i >= 0; --i) {
        R c = monic ? r[i + db] : r[i + db] * inv;
        if (c.is_zero()) continue;
        q[i] = c;
        for (int j = 0; j <= db; ++j) {
            if (bc[j].is_zero()) continue;
            r[i + j] -= c * bc[j];
        }
    }
    r.resize(db, ring.zero());
    return {UPoly<R>(ring, std::move(q)), UPoly<R>(ring, std::move(r))};
}

template <class R>
UPoly<R> rem(const UPoly<R>& a, const UPoly<R>& b) {
    return divrem(a, b).second;
}

template <class R>
UPoly<R> quo(const UPoly<R>& a, const UPoly<R>& b) {
    return divrem(a, b).first;
}

template <class R>
UPoly<R> make_monic(const UPoly<R>& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return a.scaled(a.lc().inverse());
}

// monic gcd over a field (or over an algebra, raising on zero divisors)
template <class R>
UPoly<R> gcd(UPoly<R> a, UPoly<R> b) {
    while (!b.is_zero()) {
        b = make_monic(b);
        auto r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// returns (g, s, t) with s*a + t*b = g, g monic
template <class R>
std::tuple<UPoly<R>, UPoly<R>, UPoly<R>> xgcd(const UPoly<R>& a, const UPoly<R>& b) {
    const auto& ring = a.base();
    UPoly<R> r0 = a, r1 = b;
    UPoly<R> s0 = UPoly<R>::constant(ring.one()), s1(ring);
    UPoly<R> t0(ring), t1 = UPoly<R>::constant(ring.one());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R inv = r0.lc().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class R>
UPoly<R> powmod(UPoly<R> base, mpz_class e, const UPoly<R>& mod) {
    UPoly<R> r = rem(base.ring().one(), mod);
    base = rem(base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(r * base, mod);
        e >>= 1;
        if (e > 0) base = rem(base * base, mod);
    }
    return r;
}

// a(b(X))
template <class R>
UPoly<R> compose(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> acc(a.base());
    for (int i = a.degree(); i >= 0; --i) acc = acc * b + UPoly<R>::constant(a.coeff(i));
    return acc;
}

template <class S, class R, class F>
UPoly<S> map_coeffs(const UPoly<R>& a, const typename S::ring_type& target, F&& f) {
    std::vector<S> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(f(c));
    return UPoly<S>(target, std::move(out));
}

// Horner evaluation of a polynomial over R at a point of a ring S into which
// R embeds through `embed`.
template <class S, class R, class F>
S eval_at(const UPoly<R>& a, const S& pt, F&& embed) {
    S acc = pt.ring().zero();
    for (int i = a.degree(); i >= 0; --i) acc = acc * pt + embed(a.coeff(i));
    return acc;
}

} // namespace aproot

#endif
