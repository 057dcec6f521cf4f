// Coefficient domains, residue algebras, series, resultants and parsing.

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace aproot;

namespace {

const RationalField QQ;

UPoly<Rational> uq(std::vector<Rational> c) { return UPoly<Rational>(QQ, std::move(c)); }

UPoly<Fp> uf(const PrimeField& f, std::vector<long long> c) {
    std::vector<Fp> v;
    for (long long a : c) v.push_back(f.from_int(a));
    return UPoly<Fp>(f, std::move(v));
}

Rational frac(long a, long b) { return Rational(mpz_class(a), mpz_class(b)); }

} // namespace

// ---- residue algebras

TEST(AlgebraArith, SquareOfGeneratorIsOne) {
    Algebra<Rational> a(uq({-1, 0, 1}));
    EXPECT_EQ(a.gen() * a.gen(), a.one());
}

TEST(AlgebraArith, ReductionOverF5) {
    PrimeField f5{5};
    Algebra<Fp> a(uf(f5, {1, 0, 1}));
    auto w = a.gen();
    EXPECT_EQ((w + a.one()) * (w - a.one()), a.from_int(3));
}

TEST(AlgebraArith, ZeroDivisorsMultiplyToZero) {
    Algebra<Rational> a(uq({0, -1, 0, 1}));
    auto w = a.gen();
    auto prod = w * (w * w - a.one());
    EXPECT_FALSE(w.is_zero());
    EXPECT_TRUE(prod.is_zero());
}

TEST(AlgebraArith, NonSquarefreeModulusRejected) {
    EXPECT_THROW(Algebra<Rational>(uq({1, -2, 1})), InvalidModulus);
}

TEST(TryInvert, UnitInDegreeOneAlgebra) {
    Algebra<Rational> a(uq({-1, 1}));
    auto r = a.elem(uq({0, 32})).try_invert();
    ASSERT_TRUE(std::holds_alternative<AlgElem<Rational>>(r));
    EXPECT_EQ(std::get<AlgElem<Rational>>(r), a.from_base(frac(1, 32)));
}

TEST(TryInvert, ZeroDivisorWitness) {
    Algebra<Rational> a(uq({0, -1, 0, 1}));
    auto r = a.gen().try_invert();
    ASSERT_TRUE(std::holds_alternative<UPoly<Rational>>(r));
    EXPECT_EQ(make_monic(std::get<UPoly<Rational>>(r)), uq({0, 1}));
}

TEST(TryInvert, SqrtTwo) {
    Algebra<Rational> a(uq({-2, 0, 1}));
    auto r = a.gen().try_invert();
    ASSERT_TRUE(std::holds_alternative<AlgElem<Rational>>(r));
    EXPECT_EQ(std::get<AlgElem<Rational>>(r), a.elem(uq({0, frac(1, 2)})));
}

TEST(TryInvert, ZeroInputThrows) {
    Algebra<Rational> a(uq({-2, 0, 1}));
    EXPECT_THROW(a.zero().try_invert(), DivisionByZero);
}

// ---- dynamic evaluation

TEST(DynamicGcd, SplittingExampleModulus) {
    Algebra<Rational> a(uq({-1, 0, 1}));
    auto z1 = a.gen();
    AlgPoly<Rational> Q(a, {a.one(), z1 - a.one(), a.zero(), a.zero(), a.one()});
    auto parts = dynamic_gcd(Q, Q.derivative());
    ASSERT_EQ(parts.size(), 2u);
    std::vector<UPoly<Rational>> mods;
    for (const auto& [comp, g] : parts) {
        EXPECT_EQ(comp.degree(), 1);
        EXPECT_EQ(g.degree(), 0);
        mods.push_back(comp.modulus());
    }
    EXPECT_EQ(mods[0] * mods[1], a.modulus());
}

TEST(DynamicGcd, WithZeroIsMonicInput) {
    Algebra<Rational> a(uq({-1, 0, 1}));
    AlgPoly<Rational> A(a, {a.one(), a.from_int(2)});
    auto parts = dynamic_gcd(A, AlgPoly<Rational>(a));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].second, make_monic(A));
}

TEST(DynamicGcd, CoprimeOnBothComponents) {
    Algebra<Rational> a(uq({-1, 0, 1}));
    auto w = a.gen();
    AlgPoly<Rational> A(a, {-w, a.one()}), B(a, {w, a.one()});
    for (const auto& [comp, g] : dynamic_gcd(A, B)) EXPECT_EQ(g.degree(), 0);
}

TEST(PowerDecompose, FourthPower) {
    Algebra<Rational> a = Algebra<Rational>::trivial(QQ);
    AlgPoly<Rational> p = pow(AlgPoly<Rational>(a, {-a.one(), a.one()}), 4);
    auto r = squarefree_power_decompose(p);
    ASSERT_TRUE(std::holds_alternative<PowerDecomposition<Rational>>(r));
    auto pd = std::get<PowerDecomposition<Rational>>(r);
    EXPECT_EQ(pd.exponent, 4);
    EXPECT_EQ(pd.base, AlgPoly<Rational>(a, {-a.one(), a.one()}));
}

TEST(PowerDecompose, SquareOfCubic) {
    Algebra<Rational> a = Algebra<Rational>::trivial(QQ);
    AlgPoly<Rational> p = lift_poly(uq({0, 0, 1, 0, -2, 0, 1}), a);
    auto pd = std::get<PowerDecomposition<Rational>>(squarefree_power_decompose(p));
    EXPECT_EQ(pd.exponent, 2);
    EXPECT_EQ(pd.base, lift_poly(uq({0, -1, 0, 1}), a));
}

TEST(PowerDecompose, MixedMultiplicities) {
    Algebra<Rational> a = Algebra<Rational>::trivial(QQ);
    auto r = squarefree_power_decompose(lift_poly(uq({0, 0, -1, 1}), a));
    EXPECT_TRUE(std::holds_alternative<NotAPower>(r));
}

TEST(PowerDecompose, EqualExponentsRecombineAcrossComponents) {
    // over Q[t]/(t^2 - 1): (Z - t)^2 is a square on both components
    Algebra<Rational> a(uq({-1, 0, 1}));
    AlgPoly<Rational> base(a, {-a.gen(), a.one()});
    auto pd = std::get<PowerDecomposition<Rational>>(squarefree_power_decompose(base * base));
    EXPECT_EQ(pd.exponent, 2);
    EXPECT_EQ(pd.base, base);
}

TEST(PowerDecompose, DifferentExponentsOnComponentsAreRejected) {
    // over Q[t]/(t^2 - t): Z^2 - t is Z^2 at t = 0 and Z^2 - 1 at t = 1
    Algebra<Rational> a(uq({0, -1, 1}));
    AlgPoly<Rational> p(a, {-a.gen(), a.zero(), a.one()});
    auto r = squarefree_power_decompose(p);
    ASSERT_TRUE(std::holds_alternative<NotAPower>(r));
    EXPECT_TRUE(std::get<NotAPower>(r).mixed);
}

// ---- primitive elements

TEST(PrimitiveElement, TrivialInnerAlgebra) {
    std::mt19937_64 rng(7);
    Algebra<Rational> k = Algebra<Rational>::trivial(QQ);
    AlgPoly<Rational> p = lift_poly(uq({1, 0, 1}), k);
    auto iso = primitive_element(k, p, rng);
    EXPECT_EQ(iso.flat.modulus(), uq({1, 0, 1}));
}

TEST(PrimitiveElement, DegreeOneOverQuadratic) {
    std::mt19937_64 rng(7);
    Algebra<Rational> a(uq({-1, 0, 1}));
    AlgPoly<Rational> p(a, {-a.from_int(3), a.one()});
    auto iso = primitive_element(a, p, rng);
    EXPECT_EQ(iso.flat.degree(), 2);
    EXPECT_EQ(iso.z_image, iso.flat.from_int(3));
}

TEST(PrimitiveElement, SquareRootOfI) {
    std::mt19937_64 rng(7);
    Algebra<Rational> a(uq({1, 0, 1}));
    AlgPoly<Rational> p(a, {-a.gen(), a.zero(), a.one()});
    auto iso = primitive_element(a, p, rng);
    EXPECT_EQ(iso.flat.degree(), 4);
    EXPECT_EQ(iso.t_image * iso.t_image, -iso.flat.one());
    EXPECT_EQ(iso.z_image * iso.z_image, iso.t_image);
    auto m = iso.flat.modulus();
    EXPECT_EQ(gcd(m, m.derivative()).degree(), 0);
    // T^4 + 1 is the minimal polynomial of z itself
    EXPECT_TRUE(is_irreducible(m));
}

TEST(PrimitiveElement, RoundTripOnSample) {
    std::mt19937_64 rng(11);
    Algebra<Rational> a(uq({-2, 0, 1}));
    AlgPoly<Rational> p(a, {-a.from_int(3), a.zero(), a.one()});
    auto iso = primitive_element(a, p, rng);
    for (int i = 0; i < 8; ++i) {
        auto w = iso.flat.elem(uq({Rational(i), Rational(1 - i), Rational(2), Rational(i * i - 1)}));
        EXPECT_EQ(iso.forward(iso.backward(w)), w);
    }
}

// ---- fields and factoring

TEST(IsField, GaussianRationals) { EXPECT_TRUE(is_field(Algebra<Rational>(uq({1, 0, 1})))); }

TEST(IsField, KuoResidueSplits) { EXPECT_FALSE(is_field(Algebra<Rational>(uq({frac(-1, 4), 0, 1})))); }

TEST(IsField, TwoIsANonResidueModFive) {
    PrimeField f5{5};
    EXPECT_TRUE(is_field(Algebra<Fp>(uf(f5, {-2, 0, 1}))));
}

TEST(FactorUnivariate, CubicOverQ) {
    auto fs = factor_univariate(uq({0, -1, 0, 1}));
    EXPECT_EQ(fs.size(), 3u);
    for (const auto& [g, e] : fs) EXPECT_EQ(g.degree(), 1);
}

TEST(FactorUnivariate, CyclotomicEightIsIrreducible) {
    EXPECT_EQ(factor_univariate(uq({1, 0, 0, 0, 1})).size(), 1u);
}

TEST(FactorUnivariate, QuarticSplitsOverF17) {
    // 17 = 1 mod 8, so T^4 + 1 splits into linear factors
    PrimeField f17{17};
    auto fs = factor_univariate(uf(f17, {1, 0, 0, 0, 1}));
    EXPECT_EQ(fs.size(), 4u);
}

TEST(FactorUnivariate, ProductOverQRecovered) {
    auto a = uq({1, 1, 0, 1}), b = uq({-5, 0, 1});
    auto fs = factor_univariate(a * b);
    ASSERT_EQ(fs.size(), 2u);
    UPoly<Rational> prod = uq({1});
    for (const auto& [g, e] : fs) prod = prod * g;
    EXPECT_EQ(prod, a * b);
}

// ---- series

TEST(Series, Valuation) {
    Series<Rational> s(QQ, 8, {0, 0, 0, 1, 0, 2});
    EXPECT_EQ(s.valuation(), 3);
}

TEST(Series, GeometricInverse) {
    Series<Rational> s(QQ, 4, {1, -1});
    EXPECT_EQ(s.inverse(), Series<Rational>(QQ, 4, {1, 1, 1, 1}));
}

TEST(Series, ValuationIsAdditive) {
    Series<Rational> u(QQ, 12, {0, 0, 3, 1, 4}), v(QQ, 12, {0, 0, 0, 2, 7});
    EXPECT_EQ((u * v).valuation(), 5);
}

TEST(Series, NonUnitInverseThrows) {
    Series<Rational> s(QQ, 4, {0, 1});
    EXPECT_THROW(s.inverse(), NotInvertible);
}

TEST(Series, PrecisionPropagatesAsMinimum) {
    Series<Rational> a(QQ, 3, {1, 2, 3}), b(QQ, 5, {1, 1, 1, 1, 1});
    EXPECT_EQ((a + b).prec(), 3);
    EXPECT_EQ((a * b).prec(), 3);
}

TEST(YQuorem, SyntheticDivision) {
    auto a = parse_poly("y^3 - x^2"), b = parse_poly("y - x");
    auto [qt, r] = divrem(a, b);
    EXPECT_EQ(qt, parse_poly("y^2 + x*y + x^2"));
    EXPECT_EQ(r, parse_poly("x^3 - x^2"));
}

TEST(YQuorem, ByOne) {
    auto a = parse_poly(fixtures::kKuo);
    auto [qt, r] = divrem(a, parse_poly("1"));
    EXPECT_EQ(qt, a);
    EXPECT_TRUE(r.is_zero());
}

TEST(Reciprocal, CoefficientReversal) {
    auto f = parse_poly("y^2 + x*y + x");
    EXPECT_EQ(reciprocal(f, 2), parse_poly("x*y^2 + x*y + 1"));
}

TEST(Reciprocal, Involution) {
    auto f = parse_poly("y^3 + 2*x*y + 1 + x");
    EXPECT_EQ(reciprocal(reciprocal(f, 3), 3), f);
}

TEST(MobiusShift, LeadingCoefficientBecomesUnit) {
    auto f = parse_poly("x*y^2 + y");
    auto g = mobius_shift(f, 1);
    EXPECT_EQ(g.degree(), 2);
    EXPECT_FALSE(g.lc().coeff(0).is_zero());
}

// ---- resultant oracle

TEST(Resultant, OppositeCusps) {
    EXPECT_EQ(resultant_x_valuation(parse_poly("y^2 - x^3"), parse_poly("y^2 + x^3")), 6);
}

TEST(Resultant, TwoLines) { EXPECT_EQ(resultant_x_valuation(parse_poly("y - x"), parse_poly("y + x")), 1); }

TEST(Resultant, KuoDiscriminant) {
    auto f = parse_poly(fixtures::kKuo);
    EXPECT_EQ(resultant_x_valuation(f, y_derivative(f)), 20);
}

TEST(Resultant, ZeroResultantReported) {
    auto f = parse_poly("y^2 - x^3");
    EXPECT_THROW(resultant_x_valuation(f, f * parse_poly("y + 1")), ZeroResultant);
}

TEST(Resultant, AgreesOverPrimeField) {
    PrimeField f{101};
    auto a = fixtures::as<Fp>("y^2 - x^3", f), b = fixtures::as<Fp>("y^2 + x^3 + x^4", f);
    EXPECT_EQ(resultant_x_valuation(a, b), 6);
}

// ---- parsing

TEST(Parse, KuoExpression) {
    auto f = parse_poly(fixtures::kKuo);
    auto g = bipoly_from_terms<Rational>(QQ, {{1, 4, 0}, {-2, 2, 3}, {1, 0, 6}, {-1, 0, 7}});
    EXPECT_EQ(f, g);
}

TEST(Parse, JsonTriples) {
    auto j = nlohmann::json::parse(R"([["1", 2, 0], ["-1", 0, 3]])");
    EXPECT_EQ(parse_poly_json(j), parse_poly("y^2 - x^3"));
}

TEST(Parse, JsonIntegerAndFraction) {
    auto j = nlohmann::json::parse(R"([[1, 1, 0], ["-3/4", 0, 2]])");
    EXPECT_EQ(parse_poly_json(j), parse_poly("y - 3/4*x^2"));
}

TEST(Parse, RationalLiteral) {
    auto f = parse_poly("y^2 + 1/2*x");
    EXPECT_EQ(f.coeff(0).coeff(1), frac(1, 2));
}

TEST(Parse, CharacteristicTwoRejectsHalf) {
    EXPECT_THROW(reduce_mod(parse_poly("y^2 + 1/2*x"), PrimeField{2}), CharacteristicError);
}

TEST(Parse, CharacteristicBelowDegree) {
    EXPECT_THROW(reduce_mod(parse_poly("y^5 + x"), PrimeField{5}), CharacteristicError);
}

TEST(Parse, ImplicitMultiplicationRejected) {
    try {
        parse_poly("y^2 - 2x");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 7u);
    }
}

TEST(Parse, UnbalancedParenthesis) { EXPECT_THROW(parse_poly("(y - x"), ParseError); }

TEST(Parse, ZeroDenominator) { EXPECT_THROW(parse_poly("1/0*y"), ParseError); }

TEST(Parse, RoundTripOfExamples) {
    for (const char* s : {fixtures::kKuo, fixtures::kOctic, fixtures::kSplitting, fixtures::kBalanced,
                          fixtures::kNonBalanced, fixtures::kNonWeierstrass, "y^2 + 1/3*x - 7/2*x^5*y"}) {
        auto f = parse_poly(s);
        EXPECT_EQ(parse_poly(to_expr_string(f)), f) << s;
    }
}

TEST(Parse, ReductionModP) {
    PrimeField f{7};
    auto g = reduce_mod(parse_poly("y^2 + 1/2*x"), f);
    EXPECT_EQ(g.coeff(0).coeff(1), Fp(4, 7));
}
