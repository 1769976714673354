#include "suites.hpp"

namespace repdim::cli {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"casimir", "trace", "ext-injectivity", "mackey", "xi", "gldim-comparison"};
    return names;
}

namespace {

InductionSetting setting(const SuiteParams& p) {
    if (p.family == "heckeA") return hecke_setting(p.n, p.ell);
    if (p.family == "group") return group_setting(p.n, p.ell);
    throw Error(ErrorCode::Usage, "family must be heckeA or group for this suite");
}

std::vector<Representation> generator_classes(const InductionSetting& st, std::uint64_t seed) {
    std::vector<Representation> out;
    for (const auto& c : decompose_induced(st.embedding, st.m, seed).classes) out.push_back(c.module);
    return out;
}

SuiteResult casimir_suite(const SuiteParams& p) {
    const auto st = setting(p);
    const auto c = casimir(st.embedding, st.form);
    SuiteResult r;
    const bool central = casimir_is_central(c), inv = mu_invertible(c);
    r.passed = central && inv;
    r.payload = {{"rank", st.embedding.rank()},
                 {"central", central},
                 {"mu_invertible", inv},
                 {"mu", to_json(c.mu)},
                 {"citations", {"mu(c) is central", "mu(c) invertible for the parabolic inclusion"}}};
    return r;
}

SuiteResult trace_suite(const SuiteParams& p) {
    const auto st = setting(p);
    auto mods = generator_classes(st, p.seed);
    mods.insert(mods.begin(), regular_module(st.lambda));
    const auto t = verify_trace_identities(st.embedding, st.form, mods, p.seed, p.samples);
    SuiteResult r;
    r.passed = t.ok();
    r.payload = {{"modules", mods.size()},
                 {"samples", t.samples},
                 {"tr_res_failures", t.tr_res_failures},
                 {"transitivity_failures", t.transitivity_failures},
                 {"citations", {"tr(res f) = mu(c) f", "tr o tr = tr along Lambda > Gamma > k"}}};
    return r;
}

SuiteResult ext_suite(const SuiteParams& p) {
    const auto st = setting(p);
    const auto lam = algebra_structure(st.lambda, p.seed);
    const auto gam = algebra_structure(st.embedding.sub, p.seed);
    const auto mods = generator_classes(st, p.seed);
    SuiteResult r;
    r.passed = true;
    std::size_t checked = 0;
    Json failures = Json::array();
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = 0; b < mods.size(); ++b)
            for (std::size_t i = 1; i <= p.max_degree; ++i) {
                const auto e = ext_restriction(lam, gam, st.embedding, mods[a], mods[b], i);
                ++checked;
                if (e.injective()) continue;
                r.passed = false;
                failures.push_back({{"i", i}, {"m", a}, {"n", b}, {"ext_lambda", e.ext_lambda},
                                    {"ext_gamma", e.ext_gamma}, {"kernel_dim", e.kernel_dim}});
            }
    Json dims = Json::array();
    for (const auto& m : mods) dims.push_back(m.dim());
    r.payload = {{"summand_dims", dims},
                 {"max_degree", p.max_degree},
                 {"checked", checked},
                 {"failures", failures},
                 {"citations", {"restriction of Ext is injective when mu(c) is invertible"}}};
    return r;
}

SuiteResult mackey_suite(const SuiteParams& p) {
    if (p.family != "group") throw Error(ErrorCode::Usage, "mackey suite needs --family group");
    const auto st = setting(p);
    const auto m = mackey_check(*st.sylow, st.m, p.seed);
    SuiteResult r;
    r.passed = m.passed();
    Json terms = Json::array();
    for (const auto& t : m.terms)
        terms.push_back({{"double_coset_size", t.double_coset_size},
                         {"intersection_order", t.intersection_order},
                         {"dim", t.dim},
                         {"agrees", t.agrees},
                         {"in_add_m", t.in_add_m}});
    r.payload = {{"lhs_dim", m.lhs_dim},
                 {"rhs_dim", m.rhs_dim},
                 {"agree", m.agree},
                 {"in_add_m", m.in_add_m},
                 {"terms", terms},
                 {"citations", {"Mackey decomposition of Res Ind M over double cosets"}}};
    return r;
}

// ⊕ of all indecomposables of a serial factor algebra
Representation serial_generator(const SuiteParams& p) {
    AlgebraPtr b;
    if (p.family == "truncated") b = truncated_polynomial(Field::rationals(), p.n);
    else if (p.family == "heckeA") b = hecke_algebra(CoxeterType::A, p.n, condition_q(p.ell));
    else throw Error(ErrorCode::Usage, "xi suite needs --family truncated or heckeA");
    return direct_sum(serial_indecomposables(algebra_structure(b, p.seed)), "M");
}

SuiteResult xi_suite(const SuiteParams& p) {
    const Representation m = serial_generator(p);
    const auto x = verify_xi_additivity(m, m, p.seed);
    SuiteResult r;
    r.passed = x.holds;
    r.payload = {{"factor_module_dim", m.dim()},
                 {"first", to_json(x.first)},
                 {"second", to_json(x.second)},
                 {"tensor", to_json(x.tensor)},
                 {"citations", {"gldim End of an outer tensor product is additive over a perfect field"}}};
    return r;
}

SuiteResult comparison_suite(const SuiteParams& p) {
    const auto st = setting(p);
    const auto c = verify_gldim_comparison(st.embedding, st.m, p.seed);
    SuiteResult r;
    r.passed = c.holds;
    r.payload = {{"induced", to_json(c.induced)},
                 {"sub", to_json(c.sub)},
                 {"citations", {"gldim End(Lambda (x) M) <= gldim End(M)"}}};
    return r;
}

} // namespace

SuiteResult run_suite(const std::string& name, const SuiteParams& p) {
    if (name == "casimir") return casimir_suite(p);
    if (name == "trace") return trace_suite(p);
    if (name == "ext-injectivity") return ext_suite(p);
    if (name == "mackey") return mackey_suite(p);
    if (name == "xi") return xi_suite(p);
    if (name == "gldim-comparison") return comparison_suite(p);
    throw Error(ErrorCode::Usage, "unknown suite '" + name + "'");
}

} // namespace repdim::cli
