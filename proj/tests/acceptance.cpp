// One PASS/FAIL line per acceptance criterion.  Exit status 1 if any fails.

#include "fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

using namespace aproot;
using fixtures::q;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::cout << "AC" << id << " " << (ok ? "PASS" : "FAIL") << "  " << detail << "\n";
    if (!ok) ++failures;
}

template <class K>
std::string data_string(const std::vector<EdgeData<K>>& data) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto& d = data[i];
        os << (i ? ", " : "") << "(" << d.q << "," << d.m << "," << d.P.to_string("Z") << "," << d.N << ")";
    }
    os << "]";
    return os.str();
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string gamma_string(const Invariants& inv) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < inv.Gamma.size(); ++i)
        os << (i ? "," : "") << "(" << inv.Gamma[i].first << "," << inv.Gamma[i].second << ")";
    os << "}";
    return os.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void ac1() {
    auto f = q(fixtures::kKuo);
    const auto t0 = std::chrono::steady_clock::now();
    auto r = irreducible(f);
    const double ms = ms_since(t0);
    const auto& p = r.pseudo;
    bool ok = p.accepted && p.data.size() >= 1 && p.steps.size() >= 2;
    if (ok) {
        const auto& d = p.data[0];
        ok = d.q == 2 && d.m == 3 && d.P.to_string("Z") == "Z - 1" && d.N == 2 &&
             p.steps[1].boundary == "y^2 - 1/4*x^2" && r.verdict == Verdict::Reducible && ms < 50;
    }
    report(1, ok,
           "data " + data_string(p.data) + ", step-1 boundary " + (p.steps.size() > 1 ? p.steps[1].boundary : "-") +
               ", verdict " + to_string(r.verdict) + ", " + std::to_string(ms) + " ms");
}

void ac2() {
    auto f = q(fixtures::kOctic);
    auto r = irreducible(f);
    auto a = absolutely_irreducible(f);
    const auto& d = r.pseudo.data;
    // the tower isomorphism only relates residues; (q, m, deg P, N) must match as is
    bool shape = d.size() == 3 && d[0].q == 2 && d[0].m == 3 && d[0].ell() == 1 && d[0].N == 4 && d[1].q == 1 &&
                 d[1].m == 2 && d[1].ell() == 2 && d[1].N == 2 && d[2].q == 2 && d[2].m == 1 && d[2].ell() == 1 &&
                 d[2].N == 1;
    const bool ok = shape && r.verdict == Verdict::Irreducible && !a.accepted;
    report(2, ok,
           "data " + data_string(d) + ", verdict " + to_string(r.verdict) + ", absolute " +
               (a.accepted ? "accepted" : "rejected"));
}

void ac3() {
    auto r = pseudo_irreducible(q(fixtures::kSplitting));
    bool ok = r.accepted;
    std::string detail = r.accepted ? "" : "rejected";
    if (ok) {
        auto inv = compute_invariants(r.data);
        auto fs = factor_structure(r);
        auto rd = fs.residual_degrees;
        auto fd = fs.factor_degrees;
        std::sort(rd.begin(), rd.end());
        std::sort(fd.begin(), fd.end());
        ok = inv.f == 8 && inv.e == 2 && rd == std::vector<int>{1, 3, 4} && fd == std::vector<long long>{2, 6, 8};
        detail = "e=" + std::to_string(inv.e) + " f=" + std::to_string(inv.f) + ", residual degrees {" + join(rd) +
                 "}, K-factor degrees {" + join(fd) + "}";
    }
    report(3, ok, detail);
}

void ac4() {
    auto r = pseudo_irreducible(q(fixtures::kBalanced));
    if (!r.accepted) return report(4, false, "rejected");
    auto inv = compute_invariants(r.data);
    const bool ok = inv.e == 2 && inv.f == 3 && inv.B == std::vector<long long>{2, 2, 3} &&
                    inv.M == std::vector<long long>{4, 6} && inv.C == std::vector<long long>{2, 3} &&
                    inv.Gamma == std::vector<std::pair<long long, long long>>{{4, 2}};
    report(4, ok,
           "e=" + std::to_string(inv.e) + " f=" + std::to_string(inv.f) + " B=(" + join(inv.B) + ") M=(" + join(inv.M) +
               ") C=(" + join(inv.C) + ") Gamma=" + gamma_string(inv));
}

void ac5() {
    auto r = pseudo_irreducible(q(fixtures::kNonBalanced));
    const bool ok = !r.accepted && r.reject_step == 1 && r.rejection && r.rejection->reason == RejectReason::NotAPower;
    report(5, ok,
           std::string(r.accepted ? "accepted" : "rejected") + " at step " + std::to_string(r.reject_step) +
               (r.rejection ? std::string(", reason ") + to_string(r.rejection->reason) : ""));
}

void ac6() {
    auto r = pseudo_irreducible(q(fixtures::kNonWeierstrass));
    if (!r.accepted) return report(6, false, "rejected");
    auto inv = compute_invariants(r.data);
    const bool ok = r.data[0].m == 0 && inv.C == std::vector<long long>{2, 3} &&
                    inv.Gamma == std::vector<std::pair<long long, long long>>{{0, 2}};
    report(6, ok, "data " + data_string(r.data) + ", C=(" + join(inv.C) + ") Gamma=" + gamma_string(inv));
}

// seeded products shared by AC7, AC8, AC10 and AC11
template <class K>
std::vector<testkit::Product<K>> products(const typename K::ring_type& k, std::uint64_t seed, int count,
                                          const testkit::GenOptions& opt = {}) {
    std::mt19937_64 rng(seed);
    std::vector<testkit::Product<K>> out;
    for (int i = 0; i < count; ++i) out.push_back(testkit::random_squarefree_product<K>(k, rng, opt));
    return out;
}

template <class K>
void vf_identity(const typename K::ring_type& k, std::uint64_t seed, int want, int& accepted, int& mismatches) {
    testkit::GenOptions opt;
    opt.family_bias = 1.0;
    std::mt19937_64 rng(seed);
    int got = 0;
    for (int tries = 0; got < want && tries < 40 * want; ++tries) {
        auto f = testkit::random_squarefree_product<K>(k, rng, opt).polynomial();
        auto r = pseudo_irreducible(f);
        if (!r.accepted) continue;
        ++got;
        if (compute_invariants(r.data).vF != resultant_x_valuation(f, y_derivative(f))) ++mismatches;
    }
    accepted += got;
}

void ac7() {
    int accepted = 0, mismatches = 0;
    vf_identity<Rational>(RationalField{}, 7001, 60, accepted, mismatches);
    vf_identity<Fp>(PrimeField{101}, 7002, 60, accepted, mismatches);
    report(7, accepted >= 100 && mismatches == 0,
           std::to_string(accepted) + " accepted products, " + std::to_string(mismatches) + " mismatches");
}

template <class K>
void oracle_run(const typename K::ring_type& k, std::uint64_t seed, int count, int& total, int& bad, int& acc) {
    for (const auto& prod : products<K>(k, seed, count)) {
        auto f = prod.polynomial();
        auto rep = testkit::balanced_oracle(prod);
        const bool pi = pseudo_irreducible(f).accepted;
        const bool ai = absolutely_irreducible(f).accepted;
        ++total;
        acc += pi;
        if (pi != rep.balanced || ai != (rep.branches == 1)) ++bad;
    }
}

void ac8() {
    int total = 0, bad = 0, acc = 0;
    oracle_run<Rational>(RationalField{}, 8001, 100, total, bad, acc);
    oracle_run<Fp>(PrimeField{101}, 8002, 100, total, bad, acc);
    report(8, total >= 200 && bad == 0,
           std::to_string(total) + " products (" + std::to_string(acc) + " balanced), " + std::to_string(bad) +
               " disagreements");
}

void ac9() {
    PrimeField k{65537};
    std::mt19937_64 rng(9001);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const int d = 1 + static_cast<int>(rng() % 32);
        std::vector<UPoly<Fp>> c;
        for (int j = 0; j < d; ++j) {
            std::vector<Fp> xs;
            const int dx = static_cast<int>(rng() % 5);
            for (int a = 0; a <= dx; ++a) xs.push_back(testkit::small_scalar<Fp>(k, rng, true));
            c.push_back(UPoly<Fp>(k, std::move(xs)));
        }
        c.push_back(UPoly<Fp>::constant(k.one()));
        BiPoly<Fp> f(PolyRing<Fp>{k}, std::move(c));
        // the chain of approximate roots along the divisors of d
        std::vector<BiPoly<Fp>> psi;
        for (int n = d; n >= 1; --n) {
            if (d % n != 0) continue;
            auto p = app_root(f, n);
            if (!satisfies_root_contract(f, p, n)) ++bad;
            if (psi.empty() || p.degree() % psi.back().degree() == 0) psi.push_back(p);
        }
        auto terms = expand(f, psi);
        if (!(recompose(terms, psi, f.base()) == f)) ++bad;
        for (const auto& t : terms)
            for (std::size_t j = 1; j + 1 < t.B.size(); ++j)
                if (t.B[j] >= psi[j].degree() / psi[j - 1].degree()) ++bad;
    }
    report(9, bad == 0, "500 random monic F, " + std::to_string(bad) + " violations");
}

template <class K>
void sharpness(const BiPoly<K>& f, int& runs, int& bad, double& worst) {
    auto r = pseudo_irreducible(f);
    if (!r.accepted) return;
    const long long vf = compute_invariants(r.data).vF;
    if (vf == 0) return;  // smooth: no bound to compare against
    ++runs;
    const double bound = 2.0 * (2.0 * static_cast<double>(vf) / r.degree);
    worst = std::max(worst, static_cast<double>(r.precision_used) / bound);
    if (static_cast<double>(r.precision_used) > bound) ++bad;
}

void ac10() {
    int runs = 0, bad = 0;
    double worst = 0;
    for (const char* s : {fixtures::kKuo, fixtures::kOctic, fixtures::kSplitting, fixtures::kBalanced,
                          fixtures::kNonWeierstrass})
        sharpness(q(s), runs, bad, worst);
    for (const auto& p : products<Rational>(RationalField{}, 10001, 100)) sharpness(p.polynomial(), runs, bad, worst);
    for (const auto& p : products<Fp>(PrimeField{101}, 10002, 100)) sharpness(p.polynomial(), runs, bad, worst);
    std::ostringstream os;
    os << runs << " accepted runs, " << bad << " over the bound, worst eta/bound " << worst;
    report(10, bad == 0, os.str());
}

template <class K>
void abhyankar_agree(const BiPoly<K>& f, int& total, int& bad) {
    ++total;
    if (abhyankar_test(f).absolutely_irreducible != absolutely_irreducible(f).accepted) ++bad;
}

void ac11() {
    int total = 0, bad = 0;
    for (const char* s : {fixtures::kKuo, fixtures::kOctic, fixtures::kSplitting, fixtures::kBalanced,
                          fixtures::kNonBalanced, "y^2 - x^3", "y^3 - x^7 + x^5*y", "y - x^2"})
        abhyankar_agree(q(s), total, bad);
    testkit::GenOptions opt;
    opt.allow_constant = false;  // Weierstrass inputs only
    for (const auto& p : products<Rational>(RationalField{}, 11001, 60, opt)) abhyankar_agree(p.polynomial(), total, bad);
    for (const auto& p : products<Fp>(PrimeField{101}, 11002, 60, opt)) abhyankar_agree(p.polynomial(), total, bad);
    report(11, bad == 0, std::to_string(total) + " inputs, " + std::to_string(bad) + " disagreements");
}

// strict postconditions as stated; the >= forms are what the step asserts
struct StrictTally {
    int steps = 0, strict_fail = 0, weak_fail = 0, defect_eq = 0, bezout_eq = 0;
};

template <class K>
void strict_step(const LiftState<K>& st, const BiPoly<K>& f, const ExtendedValuation<K>& ev, StrictTally& t) {
    ++t.steps;
    StepCheck c{};
    LiftState<K> nx;
    try {
        nx = hensel_step(st, f, ev, &c);
    } catch (const std::exception&) {
        ++t.weak_fail;
        ++t.strict_fail;
        return;
    }
    const bool degrees = nx.H.is_monic() && nx.H.degree() == st.H.degree() &&
                         (nx.S.is_zero() || nx.S.degree() < nx.H.degree()) &&
                         (nx.T.is_zero() || nx.T.degree() < nx.G.degree());
    t.defect_eq += c.defect == 2 * st.n;
    t.bezout_eq += c.bezout == 2 * st.n;
    if (!(c.defect > 2 * st.n && c.bezout > 2 * st.n && degrees)) ++t.strict_fail;
    if (!(c.defect >= 2 * st.n && c.bezout >= 2 * st.n && degrees)) ++t.weak_fail;
}

void ac12() {
    StrictTally t;
    ExtendedValuation<Rational> ev{q("y^3 - x^2"), 6, 4, 13};
    auto f = q(fixtures::kHenselExample);
    auto g = q("(y^3 - x^2)^2 + x^3*y^2"), h = q("y^3 - x^2");
    auto st = init_cofactors(f, g, h, ev);
    const bool worked = st.valF == 39 && extended_val(f - g * h, ev) == 40;
    strict_step(st, f, ev, t);
    PrimeField fp{101};
    std::mt19937_64 rng(12001);
    for (int i = 0; i < 50; ++i) {
        auto sc = testkit::random_split<Fp>(fp, rng);
        strict_step(init_cofactors(sc.F, sc.G0, sc.H0, sc.ev, 16), sc.F, sc.ev, t);
    }
    report(12, worked && t.strict_fail == 0,
           std::string("worked example val F=") + std::to_string(st.valF) + ", " + std::to_string(t.steps) +
               " steps, strict (> 2n) failures " + std::to_string(t.strict_fail) + " (defect = 2n: " +
               std::to_string(t.defect_eq) + ", Bezout gain = 2n: " + std::to_string(t.bezout_eq) +
               "), non-strict (>= 2n) failures " + std::to_string(t.weak_fail));
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    ac1();
    ac2();
    ac3();
    ac4();
    ac5();
    ac6();
    ac7();
    ac8();
    ac9();
    ac10();
    ac11();
    ac12();
    std::cout << (12 - failures) << "/12 criteria pass, " << ms_since(t0) << " ms\n";
    return failures == 0 ? 0 : 1;
}
