#ifndef APROOT_REPORT_HPP
#define APROOT_REPORT_HPP

// JSON reports with stable keys: verdict, data, residue_modulus, invariants,
// precision_used, transform_tag, timings_ms, polygons.

#include <aproot/driver.hpp>
#include <aproot/invariants.hpp>

#include <nlohmann/json.hpp>

namespace aproot {

inline nlohmann::json points_json(const std::vector<PolygonPoint>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : pts) out.push_back({p.i, p.w});
    return out;
}

template <class K>
nlohmann::json data_json(const std::vector<EdgeData<K>>& data) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& d : data) out.push_back({{"q", d.q}, {"m", d.m}, {"P", d.P.to_string("Z")}, {"N", d.N}});
    return out;
}

inline nlohmann::json invariants_json(const Invariants& inv) {
    nlohmann::json gamma = nlohmann::json::array();
    for (const auto& [v, mult] : inv.Gamma) gamma.push_back({v, mult});
    return {{"e", inv.e},       {"f", inv.f},   {"B", inv.B},
            {"M", inv.M},       {"C", inv.C},   {"Gamma", gamma},
            {"vF", inv.vF},     {"per_factor_vF", inv.per_factor_vF},
            {"tangent_flag", inv.tangent_flag}};
}

template <class K>
nlohmann::json polygons_json(const std::vector<StepLog<K>>& steps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json j{{"k", s.k}, {"N", s.N}, {"points", points_json(s.points)}, {"psi", s.psi}};
        if (s.edge) j["edge"] = {{"q", s.edge->q}, {"m", s.edge->m}, {"left", s.edge->left()}};
        if (!s.boundary.empty()) j["boundary"] = s.boundary;
        out.push_back(std::move(j));
    }
    return out;
}

// the common part of every driver report
template <class K>
nlohmann::json pseudo_report(const PseudoResult<K>& r, Verdict v, double ms) {
    nlohmann::json out;
    out["verdict"] = to_string(v);
    out["data"] = data_json(r.data);
    out["residue_modulus"] = r.final_state.A.modulus().to_string("t");
    out["invariants"] = r.accepted ? invariants_json(compute_invariants(r.data)) : nlohmann::json(nullptr);
    out["precision_used"] = r.precision_used;
    out["transform_tag"] = r.transform_tag;
    out["timings_ms"] = ms;
    out["polygons"] = polygons_json(r.steps);
    if (r.rejection)
        out["rejection"] = {{"step", r.reject_step}, {"reason", to_string(r.rejection->reason)}, {"detail", r.rejection->detail}};
    return out;
}

inline nlohmann::json abhyankar_report(const AbhyankarResult& r, double ms) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : r.steps) steps.push_back({{"k", s.k}, {"N", s.N}, {"v_psi", s.v_psi}, {"points", points_json(s.points)}});
    nlohmann::json out{{"verdict", to_string(r.absolutely_irreducible ? Verdict::AbsolutelyIrreducible
                                                                       : Verdict::NotAbsolutelyIrreducible)},
                       {"precision_used", r.precision_used},
                       {"timings_ms", ms},
                       {"polygons", steps}};
    if (!r.absolutely_irreducible) out["rejection"] = {{"step", r.fail_step}, {"reason", r.reason}};
    return out;
}

} // namespace aproot

#endif
