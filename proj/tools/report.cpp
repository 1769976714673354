#include "report.hpp"

#include <sstream>

namespace repdim::cli {

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

std::string upper_missing_reason(const BoundReport& r) {
    if (r.upper) return {};
    switch (r.spec.family) {
    case Family::HeckeD: return !r.n_odd ? "n even" : "g_n(q) = 0";
    case Family::HeckeB: return "f_n(Q,q) = 0";
    case Family::ArikiKoike: return "no upper bound available";
    default: return "unavailable";
    }
}

Json to_json(const BoundReport& r) {
    Json spec;
    spec["family"] = to_string(r.spec.family);
    spec["n"] = r.spec.n;
    spec["ell"] = r.spec.ell ? Json(*r.spec.ell) : Json("inf");
    if (r.spec.Q) spec["Q"] = r.spec.Q->to_string();
    if (!r.spec.Qs.empty()) spec["Qs"] = r.spec.Qs;

    Json out;
    out["spec"] = spec;
    out["lower"] = opt(r.lower);
    out["upper"] = opt(r.upper);
    if (!r.upper) out["upper_reason"] = upper_missing_reason(r);
    out["class"] = r.type ? Json(to_string(*r.type)) : Json(nullptr);
    out["known_exact"] = opt(r.known_exact);
    Json cond;
    cond["f_n"] = r.f_value ? Json(r.f_value->to_string()) : Json(nullptr);
    cond["g_n"] = r.g_value ? Json(r.g_value->to_string()) : Json(nullptr);
    cond["n_odd"] = r.n_odd;
    cond["semisimple"] = r.semisimple;
    out["conditions"] = cond;
    out["citations"] = r.citations;
    return out;
}

Json to_json(const GlobalDimReport& r) {
    Json out;
    out["value"] = opt(r.value);
    out["text"] = r.text();
    out["cap"] = r.cap;
    out["algebra_dim"] = r.algebra_dim;
    Json pd = Json::array();
    for (const auto& p : r.pd) pd.push_back(opt(p));
    out["pd_simples"] = pd;
    return out;
}

Json to_json(const UpperBoundWitness& w) {
    Json out;
    out["instance"] = w.instance;
    out["n"] = w.n;
    out["ell"] = w.ell;
    out["m"] = w.m;
    out["module_dim"] = w.module_dim;
    out["induced_dim"] = w.induced_dim;
    out["basic_end_dim"] = w.basic_end_dim;
    out["summand_classes"] = w.summand_classes;
    Json checks = Json::array();
    for (const auto& c : w.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out["checks"] = checks;
    out["gldim"] = to_json(w.gldim);
    out["gldim_sub"] = w.gldim_sub ? to_json(*w.gldim_sub) : Json(nullptr);
    out["claimed_upper"] = w.claimed_upper;
    out["passed"] = w.passed();
    out["citations"] = {"upper bound 2m: gldim End of an induced generator-cogenerator",
                        "induced generator from a separable (parabolic) subalgebra"};
    return out;
}

Json without_timing(Json report) {
    report.erase("timing");
    return report;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    flatten(report, "", os);
    return os.str();
}

} // namespace repdim::cli
