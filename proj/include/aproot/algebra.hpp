#ifndef APROOT_ALGEBRA_HPP
#define APROOT_ALGEBRA_HPP

#include <aproot/upoly.hpp>

#include <memory>
#include <optional>
#include <variant>

namespace aproot {

// Raised when an inversion meets a non-trivial zero divisor.  `factor` is a
// proper monic factor of the modulus; the caller splits on it.
template <class K>
struct ZeroDivisorFound : Error {
    UPoly<K> factor;
    explicit ZeroDivisorFound(UPoly<K> g)
        : Error("zero divisor in residue algebra"), factor(std::move(g)) {}
};

template <class K>
class AlgElem;

// K[T]/(Q) with Q monic and square-free, so the algebra is a product of
// fields.  Handles are shared and compare by modulus.
template <class K>
class Algebra {
public:
    using base_field = typename K::ring_type;

    Algebra() = default;
    explicit Algebra(UPoly<K> modulus) {
        if (modulus.degree() < 1) throw InvalidModulus("modulus must have positive degree");
        if (!modulus.is_monic()) modulus = make_monic(modulus);
        if (gcd(modulus, modulus.derivative()).degree() != 0) throw InvalidModulus("modulus must be square-free");
        d_ = std::make_shared<const Data>(Data{std::move(modulus)});
    }

    // K itself, presented as K[T]/(T)
    static Algebra trivial(const base_field& k) {
        return Algebra(UPoly<K>::variable(k));
    }

    const UPoly<K>& modulus() const { return d_->modulus; }
    int degree() const { return d_->modulus.degree(); }
    base_field base() const { return d_->modulus.base(); }
    bool valid() const { return static_cast<bool>(d_); }

    AlgElem<K> zero() const;
    AlgElem<K> one() const;
    AlgElem<K> from_int(long long n) const;
    AlgElem<K> from_base(const K& c) const;
    AlgElem<K> gen() const;
    AlgElem<K> elem(const UPoly<K>& rep) const;
    std::uint64_t characteristic() const { return base().characteristic(); }

    bool operator==(const Algebra& o) const {
        return d_ == o.d_ || (d_ && o.d_ && d_->modulus == o.d_->modulus);
    }

private:
    struct Data {
        UPoly<K> modulus;
    };
    std::shared_ptr<const Data> d_;
};

template <class K>
class AlgElem {
public:
    using ring_type = Algebra<K>;

    AlgElem() = default;
    AlgElem(Algebra<K> a, UPoly<K> rep) : a_(std::move(a)), rep_(std::move(rep)) {
        if (rep_.degree() >= a_.degree()) rep_ = rem(rep_, a_.modulus());
    }

    const Algebra<K>& ring() const { return a_; }
    const UPoly<K>& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    AlgElem& operator+=(const AlgElem& o) { rep_ += o.rep_; return *this; }
    AlgElem& operator-=(const AlgElem& o) { rep_ -= o.rep_; return *this; }
    AlgElem& operator*=(const AlgElem& o) {
        rep_ = rep_ * o.rep_;
        if (rep_.degree() >= a_.degree()) rep_ = rem(rep_, a_.modulus());
        return *this;
    }
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
    friend AlgElem operator*(AlgElem a, const AlgElem& b) { return a *= b; }
    AlgElem operator-() const { return AlgElem(a_, -rep_); }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.rep_ == b.rep_; }

    // unit: returns the inverse; non-trivial zero divisor: returns the
    // proper factor gcd(rep, Q); zero: throws
    std::variant<AlgElem, UPoly<K>> try_invert() const {
        if (rep_.is_zero()) throw DivisionByZero();
        auto [g, s, t] = xgcd(rep_, a_.modulus());
        if (g.degree() == 0) return AlgElem(a_, s);
        return g;
    }

    bool is_unit() const {
        if (rep_.is_zero()) return false;
        return gcd(rep_, a_.modulus()).degree() == 0;
    }

    AlgElem inverse() const {
        auto r = try_invert();
        if (auto* inv = std::get_if<AlgElem>(&r)) return *inv;
        throw ZeroDivisorFound<K>(std::get<UPoly<K>>(r));
    }

    // polynomial expression in the generator, named by `var`
    std::string to_string() const { return to_string("t"); }
    std::string to_string(const std::string& var) const {
        return rep_.to_string(var);
    }

private:
    Algebra<K> a_;
    UPoly<K> rep_;
};

template <class K>
AlgElem<K> Algebra<K>::zero() const { return AlgElem<K>(*this, UPoly<K>(base())); }
template <class K>
AlgElem<K> Algebra<K>::one() const { return from_base(base().one()); }
template <class K>
AlgElem<K> Algebra<K>::from_int(long long n) const { return from_base(base().from_int(n)); }
template <class K>
AlgElem<K> Algebra<K>::from_base(const K& c) const { return AlgElem<K>(*this, UPoly<K>::constant(c)); }
template <class K>
AlgElem<K> Algebra<K>::gen() const { return AlgElem<K>(*this, UPoly<K>::variable(base())); }
template <class K>
AlgElem<K> Algebra<K>::elem(const UPoly<K>& rep) const { return AlgElem<K>(*this, rep); }

template <class K>
AlgElem<K> power(AlgElem<K> b, long long e) {
    if (e < 0) {
        b = b.inverse();
        e = -e;
    }
    AlgElem<K> r = b.ring().one();
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

// reduce an element (or polynomial over the algebra) onto a component whose
// modulus divides the current one
template <class K>
AlgElem<K> project(const AlgElem<K>& a, const Algebra<K>& comp) {
    return comp.elem(a.rep());
}

template <class K>
UPoly<AlgElem<K>> project(const UPoly<AlgElem<K>>& p, const Algebra<K>& comp) {
    return map_coeffs<AlgElem<K>>(p, comp, [&](const AlgElem<K>& c) { return project(c, comp); });
}

// embed a polynomial over K into polynomials over the algebra
template <class K>
UPoly<AlgElem<K>> lift_poly(const UPoly<K>& p, const Algebra<K>& a) {
    return map_coeffs<AlgElem<K>>(p, a, [&](const K& c) { return a.from_base(c); });
}

// the polynomial has all coefficients in K (constants of the algebra)
template <class K>
std::optional<UPoly<K>> constant_coeffs(const UPoly<AlgElem<K>>& p) {
    std::vector<K> out;
    for (const auto& c : p.coeffs()) {
        if (c.rep().degree() > 0) return std::nullopt;
        out.push_back(c.rep().coeff(0));
    }
    return UPoly<K>(p.base().base(), std::move(out));
}

// Chinese remaindering over pairwise coprime moduli
template <class K>
UPoly<K> crt(const std::vector<std::pair<UPoly<K>, UPoly<K>>>& residues_and_moduli) {
    UPoly<K> acc = residues_and_moduli.at(0).first;
    UPoly<K> mod = residues_and_moduli.at(0).second;
    for (std::size_t i = 1; i < residues_and_moduli.size(); ++i) {
        const auto& [r, m] = residues_and_moduli[i];
        auto [g, s, t] = xgcd(mod, m);
        if (g.degree() != 0) throw InvalidModulus("CRT moduli are not coprime");
        // acc + mod * s * (r - acc) reduced mod (mod*m)
        UPoly<K> nm = mod * m;
        acc = rem(acc + mod * rem(s * (r - acc), m), nm);
        mod = nm;
    }
    return acc;
}

} // namespace aproot

#endif
