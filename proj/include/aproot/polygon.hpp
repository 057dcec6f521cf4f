#ifndef APROOT_POLYGON_HPP
#define APROOT_POLYGON_HPP

#include <aproot/dynamic.hpp>

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace aproot {

// Heights w_i indexed by i = 0..N; nullopt marks an absent point.
using Heights = std::vector<std::optional<long long>>;

struct PolygonPoint {
    int i;
    long long w;
};

// Lower convex hull vertices of the finite points, left to right.
inline std::vector<PolygonPoint> lower_hull(const Heights& w) {
    std::vector<PolygonPoint> pts;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i]) pts.push_back({i, *w[i]});
    std::vector<PolygonPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // drop b when it is on or above segment a-p
            __int128 cross = static_cast<__int128>(b.i - a.i) * (p.w - a.w) -
                             static_cast<__int128>(b.w - a.w) * (p.i - a.i);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    return hull;
}

// The edge of the lower hull ending at (N, w_N): slope -m/q with
// gcd(q, m) = 1 and the list of abscissae lying on it.
struct LowerEdge {
    int q = 1;
    long long m = 0;
    std::vector<int> on_edge;  // increasing, ends with N
    int left() const { return on_edge.front(); }
};

inline std::optional<LowerEdge> lower_edge(const Heights& w) {
    const int n = static_cast<int>(w.size()) - 1;
    if (n < 1 || !w[n]) return std::nullopt;
    const long long wn = *w[n];
    // minimise (w_i - w_N)/(N - i) over i < N
    std::optional<std::pair<long long, long long>> best;  // num, den
    for (int i = 0; i < n; ++i) {
        if (!w[i]) continue;
        long long num = *w[i] - wn, den = n - i;
        if (!best || static_cast<__int128>(num) * best->second < static_cast<__int128>(best->first) * den)
            best = {num, den};
    }
    if (!best) return std::nullopt;
    LowerEdge e;
    long long g = std::gcd(best->first < 0 ? -best->first : best->first, best->second);
    if (g == 0) g = best->second;
    e.m = best->first / g;
    e.q = static_cast<int>(best->second / g);
    for (int i = 0; i < n; ++i) {
        if (!w[i]) continue;
        if (static_cast<__int128>(*w[i] - wn) * e.q == static_cast<__int128>(e.m) * (n - i)) e.on_edge.push_back(i);
    }
    e.on_edge.push_back(n);
    return e;
}

enum class RejectReason {
    NotAligned,         // q does not divide the degree
    NotAPower,          // residual polynomial is not P^N with P square-free
    NonUnitConstant,    // q > 1 and P(0) not invertible
    ResidualExtension,  // absolute test: residual degree > 1
    PrecisionGuard,     // fixed-precision mode could not certify the edge
    EmptyPolygon,       // fixed-precision mode found no point left of (N, 0)
};

inline const char* to_string(RejectReason r) {
    switch (r) {
    case RejectReason::NotAligned: return "NotAligned";
    case RejectReason::NotAPower: return "NotAPower";
    case RejectReason::NonUnitConstant: return "NonUnitConstant";
    case RejectReason::ResidualExtension: return "ResidualExtension";
    case RejectReason::PrecisionGuard: return "PrecisionGuard";
    case RejectReason::EmptyPolygon: return "EmptyPolygon";
    }
    return "?";
}

struct Rejection {
    RejectReason reason;
    std::string detail;
};

// Edge data (q, m, P, N) of a pseudo-degenerate boundary polynomial.
template <class K>
struct EdgeData {
    int q = 1;
    long long m = 0;
    AlgPoly<K> P;
    int N = 1;
    int ell() const { return P.degree(); }
};

// Boundary polynomial: monic, supported on the lower edge; coefficient of
// y^i x^{w_i} stored at index i (zero off the edge).
template <class K>
struct BoundaryPoly {
    int N = 0;
    LowerEdge edge;
    std::vector<long long> heights;  // w_i relative to v(F), for on-edge i
    AlgPoly<K> coeffs;               // in y, over the current algebra

    std::string to_string() const {
        std::string out;
        for (int idx = static_cast<int>(edge.on_edge.size()) - 1; idx >= 0; --idx) {
            int i = edge.on_edge[idx];
            const auto c = coeffs.coeff(i);
            if (c.is_zero()) continue;
            std::string cs = c.to_string();
            bool neg = !detail::needs_parens(cs) && !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            else if (detail::needs_parens(cs)) cs = "(" + cs + ")";
            std::string mono;
            if (i > 0) mono = i == 1 ? "y" : "y^" + std::to_string(i);
            long long wi = heights[idx];
            if (wi > 0) {
                std::string xs = wi == 1 ? "x" : "x^" + std::to_string(wi);
                mono = mono.empty() ? xs : mono + "*" + xs;
            }
            std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
            if (out.empty()) out = neg ? "-" + term : term;
            else out += neg ? " - " + term : " + " + term;
        }
        return out.empty() ? "0" : out;
    }
};

// P0 with Z^j read at abscissa j*q; requires q | N.
template <class K>
std::optional<AlgPoly<K>> residual_poly(const BoundaryPoly<K>& h) {
    const int q = h.edge.q;
    if (h.N % q != 0) return std::nullopt;
    const Algebra<K>& a = h.coeffs.base();
    std::vector<AlgElem<K>> c;
    for (int j = 0; j <= h.N / q; ++j) c.push_back(h.coeffs.coeff(j * q));
    return AlgPoly<K>(a, std::move(c));
}

// Decide pseudo-degeneracy and extract (q, m, P, N).
template <class K>
std::variant<EdgeData<K>, Rejection> pseudo_degenerate(const BoundaryPoly<K>& h) {
    auto p0 = residual_poly(h);
    if (!p0) return Rejection{RejectReason::NotAligned, "q=" + std::to_string(h.edge.q) + " does not divide N=" + std::to_string(h.N)};
    auto dec = squarefree_power_decompose(*p0);
    if (auto* bad = std::get_if<NotAPower>(&dec)) return Rejection{RejectReason::NotAPower, bad->detail};
    auto& pd = std::get<PowerDecomposition<K>>(dec);
    if (h.edge.q > 1 && !pd.base.coeff(0).is_unit())
        return Rejection{RejectReason::NonUnitConstant, "P(0) is not a unit"};
    EdgeData<K> e;
    e.q = h.edge.q;
    e.m = h.edge.m;
    e.P = pd.base;
    e.N = pd.exponent;
    return e;
}

} // namespace aproot

#endif
