#ifndef APROOT_DRIVER_HPP
#define APROOT_DRIVER_HPP

#include <aproot/engine.hpp>
#include <aproot/factor.hpp>
#include <aproot/invariants.hpp>

#include <functional>

namespace aproot {

struct Options {
    long long precision_start = 2;
    long long cap = 1LL << 20;
    std::uint64_t seed = 1;
    // single run at precision_start; any failed guard rejects
    bool fixed_precision = false;
    // stop at the first residual extension
    bool absolute = false;
};

enum class Verdict {
    PseudoIrreducible,
    NotPseudoIrreducible,
    Irreducible,
    Reducible,
    AbsolutelyIrreducible,
    NotAbsolutelyIrreducible,
};

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::PseudoIrreducible: return "pseudo-irreducible";
    case Verdict::NotPseudoIrreducible: return "not-pseudo-irreducible";
    case Verdict::Irreducible: return "irreducible";
    case Verdict::Reducible: return "reducible";
    case Verdict::AbsolutelyIrreducible: return "absolutely-irreducible";
    case Verdict::NotAbsolutelyIrreducible: return "not-absolutely-irreducible";
    }
    return "?";
}

// what one iteration of the main loop saw
template <class K>
struct StepLog {
    int k = 0;
    int N = 0;
    std::vector<PolygonPoint> points;
    std::optional<LowerEdge> edge;
    std::string psi;
    std::string boundary;
    EngineState<K> state;  // state on entry to the step
};

template <class K>
struct PseudoResult {
    bool accepted = false;
    int reject_step = -1;
    std::optional<Rejection> rejection;
    std::vector<EdgeData<K>> data;
    EngineState<K> final_state;
    long long precision_used = 0;
    int restarts = 0;
    mpq_class eta = 0;  // accumulated precision bound
    int degree = 0;
    std::string transform_tag = "none";
    std::vector<StepLog<K>> steps;
};

// Input normalised so that its leading coefficient is a unit.
template <class K>
struct Prepared {
    BiPoly<K> G;
    std::string tag = "none";
    bool mixed_slopes = false;
    int deg_x_original = 0;

    YPoly<K> monic(int prec) const {
        YPoly<K> t = truncate(G, prec);
        if (t.is_monic()) return t;
        Series<K> inv = t.lc().inverse();
        std::vector<Series<K>> c;
        for (int i = 0; i < t.degree(); ++i) c.push_back(t.coeff(i) * inv);
        c.push_back(t.base().one());
        return YPoly<K>(t.base(), std::move(c));
    }
};

template <class K>
void check_characteristic(const BiPoly<K>& f) {
    std::uint64_t p = f.base().characteristic();
    if (p != 0 && p <= static_cast<std::uint64_t>(f.degree()))
        throw CharacteristicError("characteristic " + std::to_string(p) + " does not exceed deg_y = " +
                                  std::to_string(f.degree()));
}

// Newton polygon of F itself: points (i, val a_i)
template <class K>
Heights full_heights(const BiPoly<K>& f) {
    Heights w(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        if (!f.coeff(i).is_zero()) w[i] = x_valuation(f.coeff(i));
    return w;
}

template <class K>
Prepared<K> prepare(const BiPoly<K>& f) {
    if (f.degree() < 1) throw DegenerateInput("polynomial is constant in y");
    if (x_content_valuation(f) > 0) throw DegenerateInput("polynomial is divisible by x");
    check_characteristic(f);
    Prepared<K> p;
    p.deg_x_original = deg_x(f);
    const auto k = f.base().base;
    if (!f.lc().coeff(0).is_zero()) {
        p.G = f;
        p.tag = f.is_monic() ? "none" : "normalize-leading";
        return p;
    }
    p.mixed_slopes = lower_hull(full_heights(f)).size() > 2;
    const int d = f.degree();
    for (int z = 0; z <= d; ++z) {
        K val = k.zero();
        K zz = k.from_int(z);
        for (int i = d; i >= 0; --i) val = val * zz + f.coeff(i).coeff(0);
        if (val.is_zero()) continue;
        p.G = mobius_shift(f, z);
        p.tag = z == 0 ? "reciprocal" : "mobius:" + std::to_string(z);
        return p;
    }
    throw InconsistentState("no Moebius shift found");
}

namespace detail {

inline mpq_class ratio(long long a, long long b = 1) {
    mpq_class r(mpz_class(static_cast<long>(a)), mpz_class(static_cast<long>(b)));
    r.canonicalize();
    return r;
}

enum class RunStatus { Done, NeedPrecision };

template <class K>
RunStatus run_once(const Prepared<K>& prep, long long eta, const Options& opt, PseudoResult<K>& res) {
    const YPoly<K> F = prep.monic(static_cast<int>(eta));
    const auto k = prep.G.base().base;
    res = PseudoResult<K>{};
    res.degree = F.degree();
    res.transform_tag = prep.tag;
    EngineState<K> st = init_state<K>(F.degree(), k);
    std::vector<YPoly<K>> psis;
    mpq_class acc = 0;
    std::mt19937_64 rng(opt.seed);
    auto reject = [&](int step, RejectReason r, std::string why) {
        res.accepted = false;
        res.reject_step = step;
        res.rejection = Rejection{r, std::move(why)};
        res.final_state = st;
        res.eta = acc;
        return RunStatus::Done;
    };
    while (st.N > 1) {
        StepLog<K> log;
        log.k = st.k;
        log.N = st.N;
        log.state = st;
        YPoly<K> psi = app_root(F, st.N);
        psis.push_back(psi);
        log.psi = to_expr_string(to_exact(psi));
        auto terms = expand(F, psis);
        Heights w = compute_heights(terms, st);
        for (int i = 0; i <= st.N; ++i)
            if (w[i]) log.points.push_back({i, *w[i]});
        auto edge = lower_edge(w);
        log.edge = edge;
        res.steps.push_back(log);
        if (!edge) {
            if (opt.fixed_precision) return reject(st.k, RejectReason::EmptyPolygon, "no point left of (N, 0)");
            return RunStatus::NeedPrecision;
        }
        if (edge->m < 0 || (st.k >= 1 && edge->m == 0))
            throw InconsistentState("lower edge with slope numerator " + std::to_string(edge->m) + " at stage " +
                                    std::to_string(st.k));
        acc += ratio(st.N * edge->m, edge->q * st.e);
        if (ratio(eta) <= acc) {
            if (opt.fixed_precision)
                return reject(st.k, RejectReason::PrecisionGuard, "precision bound " + acc.get_str() + " reached");
            return RunStatus::NeedPrecision;
        }
        BoundaryPoly<K> h = boundary_poly(terms, st, *edge, w);
        res.steps.back().boundary = h.to_string();
        auto pd = pseudo_degenerate(h);
        if (auto* r = std::get_if<Rejection>(&pd)) return reject(st.k, r->reason, r->detail);
        EdgeData<K> ed = std::get<EdgeData<K>>(pd);
        if (opt.absolute && ed.ell() > 1)
            return reject(st.k, RejectReason::ResidualExtension, "residual degree " + std::to_string(ed.ell()));
        res.data.push_back(ed);
        TowerIso<K> iso = primitive_element(st.A, ed.P, rng);
        st = update_state(st, ed, iso);
    }
    res.accepted = true;
    res.final_state = st;
    res.eta = acc;
    return RunStatus::Done;
}

} // namespace detail

template <class K>
PseudoResult<K> pseudo_irreducible(const Prepared<K>& prep, const Options& opt = {}) {
    PseudoResult<K> res;
    long long eta = std::max(1LL, opt.precision_start);
    int restarts = 0;
    for (;;) {
        if (eta > opt.cap) throw PrecisionExhausted(opt.cap);
        auto status = detail::run_once(prep, eta, opt, res);
        if (status == detail::RunStatus::Done) break;
        if (opt.fixed_precision) throw InconsistentState("fixed precision run asked for more precision");
        eta *= 2;
        ++restarts;
    }
    res.restarts = restarts;
    // a degree-one input never reads any coefficient of x
    res.precision_used = res.steps.empty() ? 0 : eta;
    return res;
}

template <class K>
PseudoResult<K> pseudo_irreducible(const BiPoly<K>& f, const Options& opt = {}) {
    return pseudo_irreducible(prepare(f), opt);
}

template <class K>
struct IrreducibleResult {
    Verdict verdict = Verdict::Reducible;
    PseudoResult<K> pseudo;
    bool early_polygon = false;  // decided by the full Newton polygon
};

// irreducibility over K, or over K[W]/(R) when `extension` is given
template <class K>
IrreducibleResult<K> irreducible(const BiPoly<K>& f, const Options& opt = {},
                                 const std::optional<UPoly<K>>& extension = std::nullopt) {
    IrreducibleResult<K> out;
    Prepared<K> prep = prepare(f);
    if (prep.mixed_slopes) {
        out.early_polygon = true;
        out.verdict = Verdict::Reducible;
        return out;
    }
    out.pseudo = pseudo_irreducible(prep, opt);
    if (!out.pseudo.accepted) {
        out.verdict = Verdict::Reducible;
        return out;
    }
    const Algebra<K>& kg = out.pseudo.final_state.A;
    bool field;
    if (extension) {
        Algebra<K> l(*extension);
        std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        TowerIso<K> iso = primitive_element(l, lift_poly(kg.modulus(), l), rng);
        field = is_field(iso.flat, opt.seed);
    } else {
        field = is_field(kg, opt.seed);
    }
    out.verdict = field ? Verdict::Irreducible : Verdict::Reducible;
    return out;
}

template <class K>
IrreducibleResult<K> irreducible(const BiPoly<K>& f, const Options& opt, const UPoly<K>& extension) {
    return irreducible(f, opt, std::optional<UPoly<K>>(extension));
}

template <class K>
PseudoResult<K> absolutely_irreducible(const BiPoly<K>& f, Options opt = {}) {
    opt.absolute = true;
    return pseudo_irreducible(f, opt);
}

// Degrees of the residue fields of K_g, and of the matching factors of F
// over K (multiplied by e).
template <class K>
struct FactorStructure {
    std::vector<int> residual_degrees;
    std::vector<long long> factor_degrees;
};

template <class K>
FactorStructure<K> factor_structure(const PseudoResult<K>& r, std::uint64_t seed = 1) {
    FactorStructure<K> fs;
    for (const auto& [g, mult] : factor_univariate(r.final_state.A.modulus(), seed)) {
        fs.residual_degrees.push_back(g.degree());
        fs.factor_degrees.push_back(r.final_state.e * g.degree());
    }
    return fs;
}

// Fixed precision 4 * deg_x; no square-freeness assumption.
template <class K>
PseudoResult<K> bivariate_mode(const BiPoly<K>& f, Options opt = {}) {
    Prepared<K> prep = prepare(f);
    opt.fixed_precision = true;
    opt.precision_start = std::max(1, 4 * prep.deg_x_original);
    return pseudo_irreducible(prep, opt);
}

// ---- polygon-only absolute irreducibility test

struct AbhyankarStep {
    int k;
    int N;
    long long v_psi;
    std::vector<PolygonPoint> points;
};

struct AbhyankarResult {
    bool absolutely_irreducible = false;
    int fail_step = -1;
    std::string reason;
    long long precision_used = 0;
    std::vector<AbhyankarStep> steps;
};

namespace detail {

template <class K>
std::optional<AbhyankarResult> abhyankar_once(const Prepared<K>& prep, long long eta) {
    const YPoly<K> F = prep.monic(static_cast<int>(eta));
    AbhyankarResult res;
    int n = F.degree();
    std::vector<long long> V{1};  // valuations of x, psi_0, ..., psi_{k-1}
    std::vector<YPoly<K>> psis;
    auto fail = [&](int k, std::string why) {
        res.absolutely_irreducible = false;
        res.fail_step = k;
        res.reason = std::move(why);
        return std::optional<AbhyankarResult>(res);
    };
    for (int k = 0; n > 1; ++k) {
        const long long ceiling = eta * V[0];  // value of x^eta
        YPoly<K> psi = app_root(F, n);
        long long vpsi = 0;
        if (k > 0) {
            auto pt = expand(psi, psis);
            bool first = true;
            for (const auto& t : pt) {
                long long val = 0;
                for (std::size_t j = 0; j < V.size(); ++j) val += t.B[j] * V[j];
                if (first || val < vpsi) vpsi = val;
                first = false;
            }
            if (vpsi >= ceiling) return std::nullopt;
        }
        psis.push_back(psi);
        std::vector<long long> W = V;
        W.push_back(vpsi);
        auto terms = expand(F, psis);
        Heights w(n + 1);
        for (const auto& t : terms) {
            long long val = 0;
            for (std::size_t j = 0; j < W.size(); ++j) val += t.B[j] * W[j];
            int i = t.B.back();
            if (!w[i] || val < *w[i]) w[i] = val;
        }
        AbhyankarStep step{k, n, vpsi, {}};
        for (int i = 0; i <= n; ++i)
            if (w[i]) step.points.push_back({i, *w[i]});
        res.steps.push_back(step);
        const long long vf = n * vpsi;
        // lowest point below (N, N v(psi))?
        long long lowest = vf;
        for (int i = 0; i < n; ++i)
            if (w[i] && *w[i] < lowest) lowest = *w[i];
        if (lowest < vf) {
            if (vf < ceiling) return fail(k, "(N, v(F)) is not on the polygon");
            return std::nullopt;
        }
        Heights rel(n + 1);
        for (int i = 0; i <= n; ++i)
            if (w[i]) rel[i] = *w[i] - vf;
        auto edge = lower_edge(rel);
        if (!edge) return std::nullopt;
        // every truncated monomial must lie strictly above the edge line
        mpq_class h0 = ratio(vf) + ratio(n * edge->m, edge->q);
        if (ratio(ceiling) <= h0) return std::nullopt;
        if (edge->left() != 0) return fail(k, "polygon is not straight");
        if (edge->q == 1) return fail(k, "edge has q = 1");
        for (auto& v : V) v *= edge->q;
        V.push_back(edge->q * vpsi + edge->m);
        n /= edge->q;
    }
    res.absolutely_irreducible = true;
    return res;
}

} // namespace detail

template <class K>
AbhyankarResult abhyankar_test(const BiPoly<K>& f, const Options& opt = {}) {
    Prepared<K> prep = prepare(f);
    long long eta = std::max(1LL, opt.precision_start);
    for (;;) {
        if (eta > opt.cap) throw PrecisionExhausted(opt.cap);
        auto r = detail::abhyankar_once(prep, eta);
        if (r) {
            r->precision_used = r->steps.empty() ? 0 : eta;
            return *r;
        }
        eta *= 2;
    }
}

} // namespace aproot

#endif
