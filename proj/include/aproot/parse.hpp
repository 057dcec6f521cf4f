#ifndef APROOT_PARSE_HPP
#define APROOT_PARSE_HPP

// Text and JSON input.  Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
// No implicit multiplication; '/' only forms rational literals.

#include <aproot/bipoly.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <string_view>

namespace aproot {

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    BiPoly<Rational> parse() {
        BiPoly<Rational> f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    static constexpr unsigned long kMaxExponent = 1u << 14;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    static BiPoly<Rational> constant(const Rational& c) {
        return BiPoly<Rational>::constant(UPoly<Rational>::constant(c));
    }

    mpz_class integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    BiPoly<Rational> expr() {
        BiPoly<Rational> acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    BiPoly<Rational> term() {
        BiPoly<Rational> acc = unary();
        while (eat('*')) acc = acc * unary();
        return acc;
    }

    BiPoly<Rational> unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    BiPoly<Rational> power() {
        BiPoly<Rational> base = primary();
        if (!eat('^')) return base;
        mpz_class e = integer();
        if (e > kMaxExponent) fail("exponent too large");
        BiPoly<Rational> out = constant(Rational(1));
        for (unsigned long i = e.get_ui(); i > 0; i >>= 1) {
            if (i & 1) out = out * base;
            if (i > 1) base = base * base;
        }
        return out;
    }

    BiPoly<Rational> primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly<Rational> inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            return bipoly_x<Rational>(RationalField{});
        }
        if (c == 'y') {
            ++pos_;
            return bipoly_y<Rational>(RationalField{});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            if (!eat('/')) return constant(Rational(num, mpz_class(1)));
            std::size_t at = pos_;
            mpz_class den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            return constant(Rational(num, den));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline BiPoly<Rational> parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// [[coef, yexp, xexp], ...] with coef an integer or a string "a" or "a/b"
inline BiPoly<Rational> parse_poly_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array of [coef, yexp, xexp] triples", 0);
    RationalField k;
    BiPoly<Rational> f(PolyRing<Rational>{k});
    std::size_t idx = 0;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[1].is_number_unsigned() || !t[2].is_number_unsigned())
            throw ParseError("malformed triple", idx);
        BiPoly<Rational> c;
        if (t[0].is_string()) c = parse_poly(t[0].get<std::string>());
        else if (t[0].is_number_integer()) c = BiPoly<Rational>::constant(UPoly<Rational>::constant(Rational(t[0].get<long long>())));
        else throw ParseError("coefficient must be an integer or a string", idx);
        if (c.degree() > 0 || (!c.is_zero() && c.coeff(0).degree() > 0)) throw ParseError("coefficient must be a number", idx);
        const Rational v = c.is_zero() ? Rational(0) : c.coeff(0).coeff(0);
        const auto yi = t[1].get<unsigned>(), xi = t[2].get<unsigned>();
        if (yi > (1u << 14) || xi > (1u << 14)) throw ParseError("exponent too large", idx);
        f = f + BiPoly<Rational>::monomial(UPoly<Rational>::monomial(v, static_cast<int>(xi)), static_cast<int>(yi));
        ++idx;
    }
    return f;
}

// reduction to F_p; p must exceed deg_y and divide no denominator
inline BiPoly<Fp> reduce_mod(const BiPoly<Rational>& f, const PrimeField& fp) {
    if (f.degree() >= 0 && fp.p <= static_cast<std::uint64_t>(f.degree()))
        throw CharacteristicError("p = " + std::to_string(fp.p) + " does not exceed deg_y = " + std::to_string(f.degree()));
    return map_coeffs<UPoly<Fp>>(f, PolyRing<Fp>{fp}, [&](const UPoly<Rational>& c) {
        return map_coeffs<Fp>(c, fp, [&](const Rational& r) { return fp.from_rational(r.value()); });
    });
}

template <class K>
BiPoly<K> parse_poly_as(std::string_view text, const typename K::ring_type& k);

template <>
inline BiPoly<Rational> parse_poly_as<Rational>(std::string_view text, const RationalField&) { return parse_poly(text); }

template <>
inline BiPoly<Fp> parse_poly_as<Fp>(std::string_view text, const PrimeField& fp) { return reduce_mod(parse_poly(text), fp); }

} // namespace aproot

#endif
