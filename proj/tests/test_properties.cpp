// Seeded property tests: oracle equivalence against explicit branches,
// algebraic identities on random inputs, and Hensel lifting on random splits.

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace aproot;

namespace {

template <class K>
UPoly<K> random_upoly(const typename K::ring_type& k, int deg, std::mt19937_64& rng, bool monic = false) {
    std::vector<K> c;
    for (int i = 0; i <= deg; ++i) c.push_back(testkit::small_scalar<K>(k, rng, true));
    if (monic) c.back() = k.one();
    return UPoly<K>(k, std::move(c));
}

template <class K>
BiPoly<K> random_monic(const typename K::ring_type& k, int d, int dx, std::mt19937_64& rng) {
    std::vector<UPoly<K>> c;
    for (int i = 0; i < d; ++i) c.push_back(random_upoly<K>(k, dx, rng));
    c.push_back(UPoly<K>::constant(k.one()));
    return BiPoly<K>(PolyRing<K>{k}, std::move(c));
}

// random square-free monic polynomial of the given degree
template <class K>
UPoly<K> random_squarefree(const typename K::ring_type& k, int deg, std::mt19937_64& rng) {
    for (;;) {
        UPoly<K> p = random_upoly<K>(k, deg, rng, true);
        if (gcd(p, p.derivative()).degree() == 0) return p;
    }
}

std::vector<long long> expand_gamma(const Invariants& inv) {
    std::vector<long long> out;
    for (const auto& [v, mult] : inv.Gamma)
        for (long long i = 0; i < mult; ++i) out.push_back(v);
    return out;
}

// pseudo-irreducibility must agree with balancedness of the explicit
// branches, and accepted inputs must reproduce their invariants
template <class K>
void check_oracle(const typename K::ring_type& k, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    int accepted = 0, rejected = 0;
    for (int i = 0; i < count; ++i) {
        auto prod = testkit::random_squarefree_product<K>(k, rng);
        auto rep = testkit::balanced_oracle(prod);
        const BiPoly<K> f = prod.polynomial();
        auto r = pseudo_irreducible(f);
        ASSERT_EQ(r.accepted, rep.balanced) << to_expr_string(f);
        EXPECT_EQ(absolutely_irreducible(f).accepted, rep.branches == 1) << to_expr_string(f);
        EXPECT_EQ(irreducible(f).verdict == Verdict::Irreducible, prod.orbits() == 1) << to_expr_string(f);
        if (r.accepted) {
            ++accepted;
            auto inv = compute_invariants(r.data);
            EXPECT_EQ(inv.f, rep.branches) << to_expr_string(f);
            EXPECT_EQ(inv.C, rep.charexps[0]) << to_expr_string(f);
            EXPECT_EQ(expand_gamma(inv), rep.gammas[0]) << to_expr_string(f);
            EXPECT_EQ(inv.vF, resultant_x_valuation(f, y_derivative(f))) << to_expr_string(f);
        } else {
            ++rejected;
        }
    }
    // both outcomes must be exercised
    EXPECT_GT(accepted, 0);
    EXPECT_GT(rejected, 0);
}

} // namespace

TEST(OracleEquivalence, Rationals) { check_oracle<Rational>(RationalField{}, 101, 40); }

TEST(OracleEquivalence, F101) { check_oracle<Fp>(PrimeField{101}, 202, 60); }

TEST(OracleEquivalence, F65537) { check_oracle<Fp>(PrimeField{65537}, 303, 60); }

TEST(Testkit, MinpolyVanishesOnItsBranch) {
    RationalField k;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto prod = testkit::random_squarefree_product<Rational>(k, rng);
        Algebra<Rational> l = prod.cf.algebra();
        for (const auto& b : prod.specs) {
            auto phi = testkit::branch_minpoly_ext(b, l);
            EXPECT_EQ(phi.degree(), b.e);
            // phi(T^e, S(T)) = 0
            auto s = testkit::branch_series(b, l);
            testkit::LPoly<Rational> acc(l), sp = testkit::LPoly<Rational>::constant(l.one());
            for (int j = 0; j <= phi.degree(); ++j) {
                testkit::LPoly<Rational> sub(l);
                const auto cj = phi.coeff(j);
                for (int a = 0; a <= cj.degree(); ++a) sub.set_coeff(a * b.e, cj.coeff(a));
                acc += sub * sp;
                sp = sp * s;
            }
            EXPECT_TRUE(acc.is_zero());
        }
    }
}

TEST(Testkit, SingleBranchCharexpMatchesDriver) {
    PrimeField k{101};
    std::mt19937_64 rng(12);
    testkit::GenOptions opt;
    opt.max_branches = 1;
    opt.allow_extension = false;
    for (int i = 0; i < 40; ++i) {
        auto prod = testkit::random_squarefree_product<Fp>(k, rng, opt);
        auto r = pseudo_irreducible(prod.polynomial());
        ASSERT_TRUE(r.accepted);
        EXPECT_EQ(compute_invariants(r.data).C, testkit::charexp_direct(prod.specs[0]));
    }
}

TEST(Testkit, KnownBalancedAndUnbalancedTrios) {
    RationalField k;
    auto branch = [&](int e, std::vector<std::pair<int, long long>> t) {
        testkit::BranchSpec<Rational> b;
        b.e = e;
        for (auto [i, a] : t) b.terms[i] = {Rational(a), Rational(0)};
        return b;
    };
    // y = x, y = -x, y = x + x^2: the first line meets the others with 1 and 2
    testkit::Product<Rational> bad;
    bad.cf.k = k;
    bad.specs = {branch(1, {{1, 1}}), branch(1, {{1, -1}}), branch(1, {{1, 1}, {2, 1}})};
    EXPECT_FALSE(testkit::balanced_oracle(bad).balanced);
    EXPECT_FALSE(pseudo_irreducible(bad.polynomial()).accepted);
    // y = x, y = -x, y = 2x: pairwise 1
    testkit::Product<Rational> good;
    good.cf.k = k;
    good.specs = {branch(1, {{1, 1}}), branch(1, {{1, -1}}), branch(1, {{1, 2}})};
    EXPECT_TRUE(testkit::balanced_oracle(good).balanced);
    EXPECT_TRUE(pseudo_irreducible(good.polynomial()).accepted);
}

// ---- algebra identities

TEST(AlgebraProperties, InverseTimesElementIsOne) {
    PrimeField k{101};
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        Algebra<Fp> a(random_squarefree<Fp>(k, 1 + static_cast<int>(rng() % 5), rng));
        auto x = a.elem(random_upoly<Fp>(k, a.degree() - 1, rng));
        if (x.is_zero()) continue;
        auto r = x.try_invert();
        if (auto* inv = std::get_if<AlgElem<Fp>>(&r)) {
            EXPECT_EQ(*inv * x, a.one());
        } else {
            const auto& g = std::get<UPoly<Fp>>(r);
            EXPECT_GE(g.degree(), 1);
            EXPECT_LT(g.degree(), a.degree());
            EXPECT_TRUE(rem(a.modulus(), g).is_zero());
        }
    }
}

TEST(AlgebraProperties, PowerDecompositionRecoversBaseAndExponent) {
    RationalField k;
    std::mt19937_64 rng(2);
    for (int i = 0; i < 60; ++i) {
        Algebra<Rational> a = Algebra<Rational>::trivial(k);
        auto p = lift_poly(random_squarefree<Rational>(k, 1 + static_cast<int>(rng() % 3), rng), a);
        const int n = 1 + static_cast<int>(rng() % 6);
        auto r = squarefree_power_decompose(pow(p, n));
        ASSERT_TRUE(std::holds_alternative<PowerDecomposition<Rational>>(r));
        EXPECT_EQ(std::get<PowerDecomposition<Rational>>(r).base, p);
        EXPECT_EQ(std::get<PowerDecomposition<Rational>>(r).exponent, n);
    }
}

TEST(AlgebraProperties, DynamicGcdDividesOnEveryComponent) {
    PrimeField k{101};
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        Algebra<Fp> a(random_squarefree<Fp>(k, 2 + static_cast<int>(rng() % 3), rng));
        auto rp = [&](int deg) {
            std::vector<AlgElem<Fp>> c;
            for (int j = 0; j <= deg; ++j) c.push_back(a.elem(random_upoly<Fp>(k, a.degree() - 1, rng)));
            c.back() = a.one();
            return AlgPoly<Fp>(a, std::move(c));
        };
        auto common = rp(1);
        auto A = rp(2) * common, B = rp(2) * common;
        auto parts = dynamic_gcd(A, B);
        UPoly<Fp> prod = UPoly<Fp>::constant(k.one());
        for (const auto& [comp, g] : parts) {
            prod = prod * comp.modulus();
            EXPECT_TRUE(rem(project(A, comp), g).is_zero());
            EXPECT_TRUE(rem(project(B, comp), g).is_zero());
            EXPECT_GE(g.degree(), 1);
        }
        EXPECT_EQ(prod, a.modulus());
    }
}

TEST(AlgebraProperties, PrimitiveElementIsAnIsomorphism) {
    PrimeField k{65537};
    std::mt19937_64 rng(4);
    for (int i = 0; i < 30; ++i) {
        Algebra<Fp> inner(random_squarefree<Fp>(k, 1 + static_cast<int>(rng() % 3), rng));
        AlgPoly<Fp> p;
        for (;;) {
            std::vector<AlgElem<Fp>> c;
            const int dp = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < dp; ++j) c.push_back(inner.elem(random_upoly<Fp>(k, inner.degree() - 1, rng)));
            c.push_back(inner.one());
            p = AlgPoly<Fp>(inner, std::move(c));
            if (is_squarefree(p)) break;
        }
        auto iso = primitive_element(inner, p, rng);
        EXPECT_EQ(iso.flat.degree(), inner.degree() * p.degree());
        // generators satisfy the original relations
        EXPECT_TRUE(eval_at(inner.modulus(), iso.t_image, [&](const Fp& v) { return iso.flat.from_base(v); }).is_zero());
        EXPECT_TRUE(iso.forward(p).is_zero());
        for (int s = 0; s < 5; ++s) {
            auto w = iso.flat.elem(random_upoly<Fp>(k, iso.flat.degree() - 1, rng));
            EXPECT_EQ(iso.forward(iso.backward(w)), w);
        }
    }
}

TEST(AlgebraProperties, IsFieldMatchesFactorCount) {
    PrimeField k{101};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        auto m = random_squarefree<Fp>(k, 1 + static_cast<int>(rng() % 6), rng);
        EXPECT_EQ(is_field(Algebra<Fp>(m)), factor_univariate(m).size() == 1);
    }
}

// ---- series, division, resultants

TEST(SeriesProperties, AgreeWithExactPolynomials) {
    RationalField k;
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
        auto a = random_upoly<Rational>(k, static_cast<int>(rng() % 8), rng);
        auto b = random_upoly<Rational>(k, static_cast<int>(rng() % 8), rng);
        const int pa = 1 + static_cast<int>(rng() % 10), pb = 1 + static_cast<int>(rng() % 10);
        auto sa = Series<Rational>::from_poly(a, pa), sb = Series<Rational>::from_poly(b, pb);
        EXPECT_EQ((sa + sb).to_poly(), (a + b).truncated(std::min(pa, pb)));
        EXPECT_EQ((sa * sb).to_poly(), (a * b).truncated(std::min(pa, pb)));
    }
}

TEST(DivisionProperties, YQuorem) {
    PrimeField k{101};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto a = random_monic<Fp>(k, 2 + static_cast<int>(rng() % 6), 3, rng);
        auto b = random_monic<Fp>(k, 1 + static_cast<int>(rng() % 3), 3, rng);
        auto [qt, r] = divrem(a, b);
        EXPECT_EQ(qt * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
    }
}

TEST(ResultantProperties, SymmetricAndMultiplicative) {
    RationalField k;
    std::mt19937_64 rng(8);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 25; ++i) {
        auto f = random_monic<Rational>(k, 1 + static_cast<int>(rng() % 2), 3, rng);
        auto g = random_monic<Rational>(k, 1 + static_cast<int>(rng() % 2), 3, rng);
        auto h = random_monic<Rational>(k, 1 + static_cast<int>(rng() % 2), 3, rng);
        try {
            long long fh = resultant_x_valuation(f, h), gh = resultant_x_valuation(g, h);
            EXPECT_EQ(resultant_x_valuation(h, f), fh);
            EXPECT_EQ(resultant_x_valuation(f * g, h), fh + gh);
            ++checked;
        } catch (const ZeroResultant&) {
        }
    }
    EXPECT_GE(checked, 20);
}

TEST(ResultantProperties, FieldsAgreeOnIntegerInputs) {
    RationalField k;
    PrimeField fp{65537};
    std::mt19937_64 rng(10);
    for (int i = 0; i < 20; ++i) {
        auto f = random_monic<Rational>(k, 2 + static_cast<int>(rng() % 2), 3, rng);
        auto g = y_derivative(f);
        long long vq = 0;
        try {
            vq = resultant_x_valuation(f, g);
        } catch (const ZeroResultant&) {
            continue;
        }
        // reduction mod a large prime can only raise the valuation
        EXPECT_GE(resultant_x_valuation(reduce_mod(f, fp), reduce_mod(g, fp)), vq);
    }
}

TEST(ReciprocalProperties, Involution) {
    PrimeField k{101};
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto f = random_upoly<Fp>(k, 1 + static_cast<int>(rng() % 10), rng);
        if (f.coeff(0).is_zero()) f.set_coeff(0, k.one());
        EXPECT_EQ(reciprocal(reciprocal(f, f.degree()), f.degree()), f);
    }
}

// ---- approximate roots

TEST(AppRootProperties, ContractAndNesting) {
    PrimeField k{65537};
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const int d = 2 + static_cast<int>(rng() % 15);
        auto f = random_monic<Fp>(k, d, 4, rng);
        std::vector<int> divs;
        for (int n = 1; n <= d; ++n)
            if (d % n == 0) divs.push_back(n);
        for (int n : divs) EXPECT_TRUE(satisfies_root_contract(f, app_root(f, n), n)) << d << " " << n;
        // expansion in (psi_d, psi_1) then recursively equals the direct one
        std::vector<BiPoly<Fp>> psi{app_root(f, d), f};
        auto terms = expand(f, psi);
        EXPECT_EQ(recompose(terms, psi, f.base()), f);
        ASSERT_EQ(terms.size(), 1u);
        EXPECT_EQ(terms[0].B.back(), 1);
    }
}

TEST(AppRootProperties, ExpansionRoundTripThroughDriverBases) {
    RationalField k;
    std::mt19937_64 rng(14);
    for (int i = 0; i < 20; ++i) {
        auto prod = testkit::random_squarefree_product<Rational>(k, rng);
        auto f = prod.polynomial();
        if (!f.is_monic()) continue;
        std::vector<BiPoly<Rational>> psi;
        for (int n = f.degree(); n >= 1; --n)
            if (f.degree() % n == 0 && (psi.empty() || app_root(f, n).degree() % psi.back().degree() == 0))
                psi.push_back(app_root(f, n));
        auto terms = expand(f, psi);
        EXPECT_EQ(recompose(terms, psi, f.base()), f);
        for (const auto& t : terms)
            for (std::size_t j = 1; j + 1 < t.B.size(); ++j)
                EXPECT_LT(t.B[j], psi[j].degree() / psi[j - 1].degree());
    }
}

// ---- Hensel lifting

template <class K>
void check_hensel(const typename K::ring_type& k, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        auto sc = testkit::random_split<K>(k, rng);
        auto st = init_cofactors(sc.F, sc.G0, sc.H0, sc.ev, 32);
        auto out = lift_to(st, sc.F, sc.ev, 32);
        EXPECT_GE(out.n, 32);
        EXPECT_GE(extended_val(out.H - to_laurent(sc.Ht), sc.ev), st.valH + 32) << i;
        EXPECT_GE(extended_val(out.G - to_laurent(sc.Gt), sc.ev), st.valG + 32) << i;
    }
}

TEST(HenselProperties, F101) { check_hensel<Fp>(PrimeField{101}, 21, 40); }

TEST(HenselProperties, F65537) { check_hensel<Fp>(PrimeField{65537}, 22, 40); }
