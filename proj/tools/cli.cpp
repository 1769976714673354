#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "suites.hpp"

namespace repdim::cli {

namespace {

struct Options {
    std::string family = "heckeA";
    int n = 3;
    std::string ell = "2";
    int p = 2;
    std::string Q;
    std::vector<std::string> Qs;
    std::string field;
    std::string q;
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_syzygy;
    std::size_t group_cap = kDefaultGroupCap;
    std::string format = "json";
    std::string output;
    std::string out_path;
    std::string persist;
    bool no_compare = false;
    std::string suite;
    std::size_t samples = 20;
    std::size_t max_degree = 2;
};

std::optional<int> parse_ell(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::nullopt;
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::Usage, "--ell must be an integer or 'inf'");
}

int finite_ell(const Options& o) {
    const auto l = parse_ell(o.ell);
    if (!l) throw Error(ErrorCode::Usage, "this command needs a finite --ell");
    return *l;
}

int exit_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::CapExceeded: return 3;
    case ErrorCode::Usage:
    case ErrorCode::ParseError:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnsupportedOrder:
    case ErrorCode::UnsupportedRank:
    case ErrorCode::NonPrimeModulus:
    case ErrorCode::BadComposition:
    case ErrorCode::RankTooLarge:
    case ErrorCode::EvenRankUnsupported:
    case ErrorCode::FieldMismatch:
    case ErrorCode::Io: return 2;
    default: return 1;
    }
}

std::filesystem::path default_dir() {
    const char* env = std::getenv("REPDIM_OUTPUT_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::current_path();
}

// q and the field for Hecke-type constructions
std::pair<Field, Scalar> hecke_parameter(const Options& o) {
    if (!o.field.empty() || !o.q.empty()) {
        if (o.field.empty() || o.q.empty()) throw Error(ErrorCode::Usage, "--field and --q go together");
        const Field f = Field::parse(o.field);
        return {f, Scalar::parse(f, o.q)};
    }
    const auto l = parse_ell(o.ell);
    if (!l) return {Field::rationals(), Field::rationals().from_int(2)}; // q of infinite order
    return {condition_field(*l), condition_q(*l)};
}

AlgebraPtr build_algebra(const Options& o) {
    if (o.family == "group") return group_algebra(symmetric_group(o.n, o.group_cap), Field::prime(o.p));
    if (o.family == "truncated") return truncated_polynomial(o.field.empty() ? Field::rationals() : Field::parse(o.field), o.n);
    const auto [f, q] = hecke_parameter(o);
    if (o.family == "heckeA") return hecke_algebra(CoxeterType::A, o.n, q);
    if (o.family == "heckeD") return hecke_algebra(CoxeterType::D, o.n, q);
    if (o.family == "heckeB") {
        if (o.Q.empty()) throw Error(ErrorCode::Usage, "heckeB needs --Q");
        return hecke_algebra(CoxeterType::B, o.n, q, Scalar::parse(f, o.Q));
    }
    throw Error(ErrorCode::Usage, "unknown family '" + o.family + "'");
}

struct Outcome {
    std::string status;
    Json payload;
    std::optional<int> code; // default: 1 on "fail", else 0
};

Outcome cmd_bounds(const Options& o) {
    BoundReport r;
    if (o.family == "heckeA") r = bounds_type_A(o.n, parse_ell(o.ell));
    else if (o.family == "group") r = bounds_group(o.n, o.p);
    else if (o.family == "heckeB") {
        const int l = finite_ell(o);
        if (o.Q.empty()) throw Error(ErrorCode::Usage, "heckeB needs --Q");
        r = bounds_type_B(o.n, l, Scalar::parse(condition_field(l), o.Q));
    } else if (o.family == "heckeD") r = bounds_type_D(o.n, finite_ell(o));
    else if (o.family == "arikiKoike") r = bounds_ariki_koike(o.n, finite_ell(o), o.Qs);
    else throw Error(ErrorCode::Usage, "unknown family '" + o.family + "'");
    Json payload = to_json(r);
    if (o.family == "heckeB" || o.family == "heckeD") {
        Json listing = Json::array();
        try {
            for (const auto& [j, k] : morita_factors(o.family == "heckeB" ? BDType::B : BDType::D, o.n)) listing.push_back({j, k});
            payload["morita_factors"] = listing;
        } catch (const Error&) {
            payload["morita_factors"] = nullptr;
        }
    }
    if (r.spec.ell) {
        if (const auto c = rouquier_chain(o.n, *r.spec.ell))
            payload["stable_dim_chain"] = {{"stable_dim_lower", c->stable_dim_lower}, {"repdim_lower", c->repdim_lower}};
    }
    return {"pass", payload};
}

Outcome cmd_witness(const Options& o) {
    WitnessOptions w;
    w.seed = o.seed;
    w.compare_sub = !o.no_compare;
    w.syzygy_cap = o.max_syzygy;
    if (!o.persist.empty()) w.persist = o.persist;
    UpperBoundWitness r;
    if (o.family == "heckeA") r = witness_upper_hecke(o.n, finite_ell(o), w);
    else if (o.family == "group") r = witness_upper_group(o.n, o.p, w);
    else throw Error(ErrorCode::Usage, "witness needs --family heckeA or group");
    bool others = true;
    for (const auto& c : r.checks)
        if (c.name != "gldim <= 2m" && c.name != "gldim comparison") others = others && c.passed;
    if (!r.gldim.value && others) return {"partial", to_json(r), 3}; // syzygy cap reached
    return {r.passed() ? "pass" : "fail", to_json(r)};
}

Outcome cmd_verify(const Options& o) {
    SuiteParams p;
    p.family = o.family;
    p.n = o.n;
    p.ell = o.family == "group" ? o.p : o.family == "truncated" ? 2 : finite_ell(o);
    p.seed = o.seed;
    p.samples = o.samples;
    p.max_degree = o.max_degree;
    auto r = run_suite(o.suite, p);
    Json payload = {{"suite", o.suite}};
    payload.update(r.payload);
    return {r.passed ? "pass" : "fail", payload};
}

Outcome cmd_algebra(const Options& o) {
    const auto a = build_algebra(o);
    const std::string text = a->serialize();
    const std::filesystem::path path = o.out_path.empty() ? default_dir() / (o.family + "-n" + std::to_string(o.n) + ".alg")
                                                           : std::filesystem::path(o.out_path);
    {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
        os << text;
    }
    std::ifstream is(path, std::ios::binary);
    const std::string back((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    const bool roundtrip = Algebra::deserialize(back).serialize() == text;
    return {roundtrip ? "pass" : "fail",
            {{"name", a->name()}, {"dim", a->dim()}, {"field", a->field().to_string()}, {"path", path.string()}, {"roundtrip", roundtrip}}};
}

Outcome cmd_indecomposables(const Options& o) {
    const auto a = build_algebra(o);
    const auto st = algebra_structure(a, o.seed);
    std::vector<Representation> mods;
    bool complete = true;
    try {
        mods = serial_indecomposables(st);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SerialityError) throw;
        complete = false;
        mods = st.pims;
        mods.insert(mods.end(), st.simples.begin(), st.simples.end());
    }
    Json list = Json::array();
    for (std::size_t i = 0; i < mods.size(); ++i) {
        Json entry = {{"label", mods[i].label()}, {"dim", mods[i].dim()}};
        if (!o.out_path.empty()) {
            std::filesystem::create_directories(o.out_path);
            const auto path = std::filesystem::path(o.out_path) / ("module" + std::to_string(i) + ".module");
            std::ofstream os(path);
            if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
            os << serialize_module(mods[i]);
            entry["path"] = path.string();
        }
        list.push_back(entry);
    }
    return {complete ? "pass" : "partial",
            {{"algebra", a->name()}, {"dim", a->dim()}, {"complete", complete}, {"modules", list}}};
}

void add_common(CLI::App* c, Options& o) {
    c->add_option("--family", o.family, "heckeA, heckeB, heckeD, arikiKoike, group, truncated");
    c->add_option("--n", o.n, "rank / number of strands / group degree");
    c->add_option("--ell", o.ell, "order of q, or 'inf'");
    c->add_option("--p", o.p, "characteristic for group algebras");
    c->add_option("--seed", o.seed, "random seed (default 0)");
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--output", o.output, "write the report here instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"repdim: representation dimension bounds and witnesses"};
    app.require_subcommand(1);
    auto* bounds = app.add_subcommand("bounds", "closed-form bounds and type A classification");
    add_common(bounds, o);
    bounds->add_option("--Q", o.Q, "type B parameter");
    bounds->add_option("--Qs", o.Qs, "Ariki-Koike parameters");
    auto* witness = app.add_subcommand("witness", "upper-bound witness pipeline");
    add_common(witness, o);
    witness->add_option("--max-syzygy", o.max_syzygy, "syzygy cap for global dimension");
    witness->add_option("--persist", o.persist, "directory for intermediate modules");
    witness->add_flag("--no-compare", o.no_compare, "skip gldim End_B(M)");
    auto* verify = app.add_subcommand("verify", "property verification suites");
    add_common(verify, o);
    verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--samples", o.samples, "samples per module pair (trace)");
    verify->add_option("--max-degree", o.max_degree, "largest Ext degree (ext-injectivity)");
    auto* algebra = app.add_subcommand("algebra", "construct and serialize an algebra");
    add_common(algebra, o);
    algebra->add_option("--Q", o.Q, "type B parameter");
    algebra->add_option("--field", o.field, "field, e.g. Q, GF(3), Q(zeta_3)");
    algebra->add_option("--q", o.q, "Hecke parameter in --field");
    algebra->add_option("--group-cap", o.group_cap, "largest group order");
    algebra->add_option("--out", o.out_path, "algebra file (default $REPDIM_OUTPUT_DIR or cwd)");
    auto* indec = app.add_subcommand("indecomposables", "indecomposable modules of an algebra");
    add_common(indec, o);
    indec->add_option("--Q", o.Q, "type B parameter");
    indec->add_option("--field", o.field, "field override");
    indec->add_option("--q", o.q, "Hecke parameter in --field");
    indec->add_option("--group-cap", o.group_cap, "largest group order");
    indec->add_option("--out", o.out_path, "directory for module files");

    std::vector<std::string> argv_s{"repdim"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_s) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    const auto t0 = std::chrono::steady_clock::now();
    Json report;
    report["schema"] = kSchema;
    report["tool"] = {{"name", "repdim"}, {"version", kToolVersion}};
    report["command"] = {{"subcommand", sub}, {"args", args}};
    report["seed"] = o.seed;
    int code = 0;
    try {
        Outcome r;
        if (sub == "bounds") r = cmd_bounds(o);
        else if (sub == "witness") r = cmd_witness(o);
        else if (sub == "verify") r = cmd_verify(o);
        else if (sub == "algebra") r = cmd_algebra(o);
        else r = cmd_indecomposables(o);
        report["status"] = r.status;
        report["payload"] = r.payload;
        code = r.code.value_or(r.status == "fail" ? 1 : 0);
    } catch (const Error& e) {
        code = exit_code(e.code());
        report["status"] = "fail";
        report["payload"] = {{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
        err << e.what() << "\n";
    }
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};

    const std::string text = o.format == "json" ? report.dump(2) + "\n" : render_text(report);
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream os(o.output, std::ios::binary);
        if (!os) {
            err << "cannot write " << o.output << "\n";
            return 2;
        }
        os << text;
    }
    return code;
}

} // namespace repdim::cli
