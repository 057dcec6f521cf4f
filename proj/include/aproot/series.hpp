#ifndef APROOT_SERIES_HPP
#define APROOT_SERIES_HPP

#include <aproot/upoly.hpp>

#include <algorithm>
#include <climits>

namespace aproot {

template <class K>
class Series;

template <class K>
struct SeriesRing {
    typename K::ring_type base;
    int prec = 1;
    Series<K> zero() const;
    Series<K> one() const;
    Series<K> from_int(long long n) const;
    std::uint64_t characteristic() const { return base.characteristic(); }
    bool operator==(const SeriesRing& o) const { return base == o.base && prec == o.prec; }
};

// Element of K[x]/(x^prec).  Coefficients of degree >= prec are unknown and
// never stored.
template <class K>
class Series {
public:
    using ring_type = SeriesRing<K>;
    using base_ring = typename K::ring_type;
    using coeff_type = K;

    Series(base_ring r, int prec) : ring_(std::move(r)), prec_(prec) {}
    Series(base_ring r, int prec, std::vector<K> c) : ring_(std::move(r)), prec_(prec), c_(std::move(c)) {
        if (static_cast<int>(c_.size()) > prec_) c_.resize(prec_, ring_.zero());
        normalize();
    }
    static Series from_poly(const UPoly<K>& p, int prec) {
        return Series(p.base(), prec, p.coeffs());
    }

    int prec() const { return prec_; }
    ring_type ring() const { return {ring_, prec_}; }
    const base_ring& base() const { return ring_; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return ring_.zero();
        return c_[i];
    }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // x-adic order; prec when the element is zero to the known precision
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return prec_;
    }

    UPoly<K> to_poly() const { return UPoly<K>(ring_, c_); }

    Series with_prec(int p) const { return Series(ring_, p, c_); }

    Series& operator+=(const Series& o) {
        prec_ = std::min(prec_, o.prec_);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        if (static_cast<int>(c_.size()) > prec_) c_.resize(prec_, ring_.zero());
        normalize();
        return *this;
    }
    Series& operator-=(const Series& o) {
        prec_ = std::min(prec_, o.prec_);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        if (static_cast<int>(c_.size()) > prec_) c_.resize(prec_, ring_.zero());
        normalize();
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series r(ring_, prec_);
        for (const auto& a : c_) r.c_.push_back(-a);
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int p = std::min(a.prec_, b.prec_);
        Series r(a.ring_, p);
        if (a.c_.empty() || b.c_.empty()) return r;
        int n = std::min<int>(p, static_cast<int>(a.c_.size() + b.c_.size()) - 1);
        std::vector<K> out(n, a.ring_.zero());
        for (int i = 0; i < static_cast<int>(a.c_.size()) && i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < static_cast<int>(b.c_.size()) && i + j < n; ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        r.c_ = std::move(out);
        r.normalize();
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b) {
        int p = std::min(a.prec_, b.prec_);
        for (int i = 0; i < p; ++i)
            if (!(a.coeff(i) == b.coeff(i))) return false;
        return true;
    }

    Series scaled(const K& s) const {
        Series r(ring_, prec_);
        for (const auto& a : c_) r.c_.push_back(a * s);
        r.normalize();
        return r;
    }

    // multiply by x^k (k >= 0)
    Series shifted(int k) const {
        Series r(ring_, prec_);
        if (c_.empty() || k >= prec_) return r;
        r.c_.assign(k, ring_.zero());
        r.c_.insert(r.c_.end(), c_.begin(), c_.begin() + std::min<int>(c_.size(), prec_ - k));
        r.normalize();
        return r;
    }

    // units are the series with non-zero constant term
    Series inverse() const {
        if (c_.empty() || c_[0].is_zero()) throw NotInvertible("series with zero constant term");
        K inv0 = c_[0].inverse();
        std::vector<K> b(prec_, ring_.zero());
        b[0] = inv0;
        for (int k = 1; k < prec_; ++k) {
            K acc = ring_.zero();
            for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) acc += c_[j] * b[k - j];
            b[k] = -(acc * inv0);
        }
        return Series(ring_, prec_, std::move(b));
    }

    std::string to_string() const {
        std::string s = to_poly().to_string("x");
        return s + " + O(x^" + std::to_string(prec_) + ")";
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    base_ring ring_;
    int prec_;
    std::vector<K> c_;
};

template <class K>
Series<K> SeriesRing<K>::zero() const { return Series<K>(base, prec); }
template <class K>
Series<K> SeriesRing<K>::one() const { return Series<K>(base, prec, {base.one()}); }
template <class K>
Series<K> SeriesRing<K>::from_int(long long n) const { return Series<K>(base, prec, {base.from_int(n)}); }

// x-adic order of an exact polynomial in x
template <class K>
int x_valuation(const UPoly<K>& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (!p.coeff(i).is_zero()) return i;
    return INT_MAX;
}

template <class K>
int x_valuation(const Series<K>& s) {
    return s.valuation();
}

} // namespace aproot

#endif
