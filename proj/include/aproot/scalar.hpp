#ifndef APROOT_SCALAR_HPP
#define APROOT_SCALAR_HPP

#include <aproot/errors.hpp>

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

namespace aproot {

// Every coefficient type T exposes T::ring_type, whose value builds
// constants; T itself carries enough context to do arithmetic.
template <class T>
concept Scalar = requires(const T& a, const T& b) {
    typename T::ring_type;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.ring() };
    { a.to_string() } -> std::convertible_to<std::string>;
};

class Rational;

struct RationalField {
    Rational zero() const;
    Rational one() const;
    Rational from_int(long long n) const;
    std::uint64_t characteristic() const { return 0; }
    bool operator==(const RationalField&) const { return true; }
    std::string name() const { return "Q"; }
};

class Rational {
public:
    using ring_type = RationalField;

    Rational() = default;
    Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw DivisionByZero();
        v_.canonicalize();
    }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    RationalField ring() const { return {}; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

    std::string to_string() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_int(long long n) const { return Rational(n); }

class Fp;

struct PrimeField {
    std::uint64_t p = 2;
    Fp zero() const;
    Fp one() const;
    Fp from_int(long long n) const;
    Fp from_rational(const mpq_class& q) const;
    std::uint64_t characteristic() const { return p; }
    bool operator==(const PrimeField& o) const { return p == o.p; }
    std::string name() const { return "Fp:" + std::to_string(p); }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

} // namespace detail

class Fp {
public:
    using ring_type = PrimeField;

    Fp() = default;
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    PrimeField ring() const { return {p_}; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp inverse() const {
        if (v_ == 0) throw DivisionByZero();
        return Fp(detail::powmod(v_, p_ - 2, p_), p_);
    }

    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= p_ || v_ < o.v_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
        return *this;
    }
    Fp& operator*=(const Fp& o) { v_ = detail::mulmod(v_, o.v_, p_); return *this; }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    // symmetric representative, used for printing
    long long signed_value() const {
        return v_ > p_ / 2 ? -static_cast<long long>(p_ - v_) : static_cast<long long>(v_);
    }
    std::string to_string() const { return std::to_string(signed_value()); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_string(); }

private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

inline Fp PrimeField::zero() const { return Fp(0, p); }
inline Fp PrimeField::one() const { return Fp(1, p); }
inline Fp PrimeField::from_int(long long n) const {
    if (n >= 0) return Fp(static_cast<std::uint64_t>(n) % p, p);
    // |n| fits in uint64 even for LLONG_MIN
    std::uint64_t a = (static_cast<std::uint64_t>(-(n + 1)) + 1) % p;
    return Fp(a == 0 ? 0 : p - a, p);
}

inline Fp PrimeField::from_rational(const mpq_class& q) const {
    mpz_class m;
    mpz_import(m.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_class num = q.get_num() % m;
    if (num < 0) num += m;
    mpz_class den = q.get_den() % m;
    if (den == 0) throw CharacteristicError("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
    auto to_u64 = [](const mpz_class& z) {
        std::uint64_t v = 0;
        if (z != 0) mpz_export(&v, nullptr, 1, sizeof(v), 0, 0, z.get_mpz_t());
        return v;
    };
    return Fp(to_u64(num), p) * Fp(to_u64(den), p).inverse();
}

// convert an exact rational into any base field
template <class K>
K from_rational(const typename K::ring_type& ring, const mpq_class& q);

template <>
inline Rational from_rational<Rational>(const RationalField&, const mpq_class& q) {
    return Rational(q);
}

template <>
inline Fp from_rational<Fp>(const PrimeField& f, const mpq_class& q) {
    return f.from_rational(q);
}

} // namespace aproot

#endif
