#include "repdim/auslander.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

namespace repdim {

AlgebraPtr end_algebra(const Representation& m) {
    return endomorphism_algebra(hom_space(m, m), "End(" + m.label() + ")");
}

namespace {

Matrix minus_identity(const Matrix& m, const Scalar& c) {
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= c;
    return out;
}

bool nilpotent(Matrix m) {
    for (std::size_t k = 1; k < m.rows(); k *= 2) m = m * m;
    return m.is_zero();
}

// φ = λ + nilpotent in a split local ring; λ.
std::optional<Scalar> local_eigenvalue(const Matrix& phi) {
    const auto roots = roots_in_field(charpoly(phi));
    if (roots.size() != 1) return std::nullopt;
    if (!nilpotent(minus_identity(phi, roots[0]))) return std::nullopt;
    return roots[0];
}

struct Block {
    std::size_t row = 0, col = 0; // map N_col -> N_row
    Matrix m;
};

} // namespace

BasicEnd basic_end(const std::vector<Representation>& distinct, std::string name) {
    if (distinct.empty()) throw Error(ErrorCode::DimensionMismatch, "no summands");
    const Field& f = distinct[0].field();
    const std::size_t t = distinct.size();
    std::vector<Block> basis;
    std::vector<std::size_t> ids;
    std::vector<std::vector<Subspace>> span;
    std::vector<std::vector<std::vector<std::size_t>>> members(t, std::vector<std::vector<std::size_t>>(t));
    for (std::size_t i = 0; i < t; ++i) {
        span.emplace_back();
        for (std::size_t j = 0; j < t; ++j) span[i].emplace_back(f, distinct[i].dim() * distinct[j].dim(), true);
    }
    auto push = [&](std::size_t i, std::size_t j, Matrix m) {
        if (!span[i][j].add(m.flatten())) return;
        members[i][j].push_back(basis.size());
        basis.push_back({i, j, std::move(m)});
    };
    for (std::size_t i = 0; i < t; ++i) {
        const auto& n = distinct[i];
        const auto endo = hom_space(n, n);
        ids.push_back(basis.size());
        push(i, i, Matrix::identity(f, n.dim()));
        for (const auto& phi : endo) {
            const auto lam = local_eigenvalue(phi);
            if (!lam) throw Error(ErrorCode::SplitError, "End(" + n.label() + ") is not split local");
            push(i, i, minus_identity(phi, *lam));
        }
        if (members[i][i].size() != endo.size())
            throw Error(ErrorCode::SplitError, "End(" + n.label() + ") has residue field larger than the base field");
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (i != j)
                for (auto& h : hom_space(distinct[j], distinct[i])) push(i, j, std::move(h));

    const std::size_t r = basis.size();
    std::vector<std::vector<Term>> table(r * r);
    Subspace rad2(f, r);
    std::vector<bool> is_id(r, false);
    for (auto i : ids) is_id[i] = true;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            if (basis[a].col != basis[b].row) continue;
            const std::size_t i = basis[a].row, l = basis[b].col;
            const Matrix prod = basis[a].m * basis[b].m;
            if (prod.is_zero()) continue;
            const auto c = span[i][l].coordinates(prod.flatten());
            if (!c) throw Error(ErrorCode::AlgorithmFailure, "Hom spaces not closed under composition");
            Vector full = zero_vector(f, r);
            for (std::size_t k = 0; k < c->size(); ++k)
                if (!(*c)[k].is_zero()) {
                    table[a * r + b].push_back({members[i][l][k], (*c)[k]});
                    full[members[i][l][k]] = (*c)[k];
                }
            if (!is_id[a] && !is_id[b]) rad2.add(full);
        }
    std::vector<Vector> gens;
    Vector unit = zero_vector(f, r);
    for (auto i : ids) {
        gens.push_back(unit_vector(f, r, i));
        unit[i] = f.one();
    }
    for (std::size_t a = 0; a < r; ++a)
        if (!is_id[a] && rad2.add(unit_vector(f, r, a))) gens.push_back(unit_vector(f, r, a));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < r; ++a)
        labels.push_back("h" + std::to_string(basis[a].row) + "." + std::to_string(basis[a].col) + "." + std::to_string(a));

    BasicEnd out;
    out.algebra = std::make_shared<const Algebra>(f, std::move(name), std::move(labels), std::move(table), unit, gens);
    for (std::size_t a = 0; a < r; ++a)
        if (!is_id[a]) out.wedderburn.radical.push_back(unit_vector(f, r, a));
    for (std::size_t i = 0; i < t; ++i) {
        out.wedderburn.block_dims.push_back(1);
        out.wedderburn.idempotents.push_back(unit_vector(f, r, ids[i]));
        out.wedderburn.block_of.push_back(i);
    }
    out.summands = distinct;
    return out;
}

BasicEnd basic_end(const DecompositionReport& m, std::string name) {
    std::vector<Representation> distinct;
    for (const auto& c : m.classes) distinct.push_back(c.module);
    return basic_end(distinct, std::move(name));
}

std::string GlobalDimReport::text() const {
    if (value) return std::to_string(*value);
    return ">= " + std::to_string(cap);
}

GlobalDimReport global_dimension(const AlgebraStructure& s, std::optional<std::size_t> cap) {
    GlobalDimReport out;
    out.algebra_dim = s.algebra->dim();
    out.cap = cap.value_or(2 * s.algebra->dim());
    std::size_t best = 0;
    bool finite = true;
    for (const auto& simple : s.simples) {
        auto pd = projective_dimension(s, simple, out.cap);
        if (pd) best = std::max(best, *pd);
        else finite = false;
        out.pd.push_back(pd);
    }
    if (finite) out.value = best;
    return out;
}

GlobalDimReport global_dimension(const AlgebraPtr& a, std::optional<std::size_t> cap) {
    return global_dimension(algebra_structure(a), cap);
}

GlobalDimReport gldim_end(const DecompositionReport& m, std::optional<std::size_t> cap) {
    const BasicEnd e = basic_end(m);
    return global_dimension(algebra_structure(e.algebra, e.wedderburn), cap);
}

GlobalDimReport gldim_end(const Representation& m, std::uint64_t seed, std::optional<std::size_t> cap) {
    return gldim_end(decompose(m, seed), cap);
}

std::size_t repdim_finite_type(const AlgebraPtr& a) {
    const auto s = algebra_structure(a);
    if (s.wedderburn.radical.empty()) return 0;
    const BasicEnd e = basic_end(serial_indecomposables(s), "End(" + a->name() + "-mod)");
    const auto g = global_dimension(algebra_structure(e.algebra, e.wedderburn));
    if (!g.value) throw Error(ErrorCode::CapExceeded, "Auslander algebra resolution hit the cap");
    return *g.value;
}

namespace {

std::vector<Vector> generators_or_basis(const Algebra& a) {
    if (!a.generators().empty()) return a.generators();
    std::vector<Vector> out;
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis(i));
    return out;
}

// Columns e_k -> f(e_k) stacked for each map, kernel of the stack.
std::vector<Vector> common_kernel(const Field& f, std::size_t dim, const std::vector<std::function<Vector(const Vector&)>>& maps) {
    std::vector<Vector> cols(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const Vector e = unit_vector(f, dim, k);
        Vector col;
        for (const auto& m : maps) {
            const Vector v = m(e);
            col.insert(col.end(), v.begin(), v.end());
        }
        cols[k] = std::move(col);
    }
    return kernel(Matrix::from_columns(f, cols.empty() ? 0 : cols[0].size(), cols));
}

} // namespace

SeparableDivision separable_division_check(const SubalgebraEmbedding& emb, const SymmetrizingForm& s,
                                           std::size_t limit, bool try_casimir) {
    const Algebra& lam = *emb.ambient;
    const Field& f = lam.field();
    SeparableDivision out;
    if (try_casimir && mu_invertible(casimir(emb, s))) {
        out.divides = out.by_casimir = true;
        return out;
    }
    const std::size_t d = lam.dim(), r = emb.rank(), td = r * d;
    if (td > limit) throw Error(ErrorCode::CapExceeded, "Λ ⊗_Γ Λ too large for the bimodule test");

    // Hom(Λ, Λ ⊗_Γ Λ): Λ-central elements
    std::vector<std::function<Vector(const Vector&)>> central;
    for (const auto& x : generators_or_basis(lam))
        central.push_back([&emb, x](const Vector& t) { return sub(tensor_left(emb, x, t), tensor_right(emb, t, x)); });
    const auto cs = common_kernel(f, td, central);
    // Hom(Λ ⊗_Γ Λ, Λ): a ⊗ b -> a z b with z centralizing Γ
    std::vector<std::function<Vector(const Vector&)>> comm;
    for (const auto& g : generators_or_basis(*emb.sub)) {
        const Vector x = emb.include(g);
        comm.push_back([&lam, x](const Vector& z) { return sub(lam.multiply(x, z), lam.multiply(z, x)); });
    }
    const auto zs = common_kernel(f, d, comm);

    Subspace span(f, d);
    for (const auto& c : cs)
        for (const auto& z : zs) {
            Vector v = lam.zero();
            for (std::size_t j = 0; j < r; ++j) {
                const Vector y(c.begin() + static_cast<std::ptrdiff_t>(j * d), c.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
                if (is_zero(y)) continue;
                v = add(v, lam.multiply(emb.free_basis[j], lam.multiply(z, y)));
            }
            span.add(v);
        }
    out.divides = span.contains(lam.unit());
    return out;
}

bool UpperBoundWitness::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return gldim.value && *gldim.value <= claimed_upper;
}

namespace {

void persist(const WitnessOptions& opt, const std::string& stem, const Representation& m) {
    if (!opt.persist) return;
    std::filesystem::create_directories(*opt.persist);
    std::ofstream os(*opt.persist / (stem + ".module"));
    if (!os) throw Error(ErrorCode::Io, "cannot write " + (*opt.persist / (stem + ".module")).string());
    os << serialize_module(m);
}

template <class F>
void run_check(UpperBoundWitness& w, const std::string& name, F&& body) {
    WitnessCheck c{name, false, {}};
    try {
        c.passed = body(c.detail);
    } catch (const Error& e) {
        c.detail = e.what();
    }
    w.checks.push_back(std::move(c));
}

// Λ_Λ ∈ add(X): every indecomposable summand of the regular module occurs in X.
bool is_generator(const AlgebraPtr& lam, const DecompositionReport& x, std::uint64_t seed) {
    return add_member(decompose(regular_module(lam), seed), x);
}

// Λ ⊗_Γ M as the sum of the induced summands of M, so it can be split one
// piece at a time.
std::vector<Representation> induced_parts(const SubalgebraEmbedding& emb, const DecompositionReport& dm) {
    std::vector<Representation> out;
    for (const auto& s : dm.summands) out.push_back(induce(emb, s.module));
    return out;
}

void finish(UpperBoundWitness& w, const Representation& x, const DecompositionReport& dx, const DecompositionReport& dm,
            const WitnessOptions& opt) {
    w.induced_dim = x.dim();
    w.summand_classes = dx.classes.size();
    const BasicEnd e = basic_end(dx, "End(" + x.label() + ")");
    w.basic_end_dim = e.algebra->dim();
    w.gldim = global_dimension(algebra_structure(e.algebra, e.wedderburn), opt.syzygy_cap);
    if (opt.compare_sub) w.gldim_sub = gldim_end(dm, opt.syzygy_cap);
    w.checks.push_back({"gldim <= 2m", w.gldim.value && *w.gldim.value <= w.claimed_upper,
                        "gldim End = " + w.gldim.text() + ", 2m = " + std::to_string(w.claimed_upper)});
    if (w.gldim_sub)
        w.checks.push_back({"gldim comparison", w.gldim.value && w.gldim_sub->value && *w.gldim.value <= *w.gldim_sub->value,
                            w.gldim.text() + " <= " + w.gldim_sub->text()});
}

} // namespace

InductionSetting hecke_setting(int n, int ell) {
    if (ell < 2 || n < ell) throw Error(ErrorCode::DimensionMismatch, "need 2 <= l <= n");
    const Field f = ell == 2 ? Field::rationals() : Field::cyclotomic(ell);
    const Scalar q = root_of_unity(f, ell);
    InductionSetting st;
    st.n = n;
    st.ell = ell;
    st.lambda = hecke_algebra(CoxeterType::A, n, q);
    st.embedding = max_ell_parabolic(st.lambda, ell);
    st.form = standard_form(st.lambda);
    const auto bi = hecke_algebra(CoxeterType::A, ell, q);
    const Representation mi = direct_sum(serial_indecomposables(algebra_structure(bi)), "M1");
    st.m = transport(outer_tensor(std::vector<Representation>(static_cast<std::size_t>(n / ell), mi)), st.embedding.sub);
    return st;
}

InductionSetting group_setting(int n, int p) {
    if (n < p) throw Error(ErrorCode::DimensionMismatch, "need p <= n");
    InductionSetting st;
    st.n = n;
    st.ell = p;
    st.sylow = sylow_setting(n, p);
    st.lambda = st.sylow->kg;
    st.embedding = st.sylow->embedding;
    st.form = standard_form(st.lambda);
    std::vector<int> all;
    for (int b = 1; b <= p; ++b) all.push_back(b);
    st.m = sylow_jordan_module(*st.sylow, std::vector<std::vector<int>>(static_cast<std::size_t>(n / p), all));
    return st;
}

namespace {

UpperBoundWitness start(const std::string& kind, const InductionSetting& st) {
    UpperBoundWitness w;
    w.instance = kind + " n=" + std::to_string(st.n) + (kind == "hecke" ? " l=" : " p=") + std::to_string(st.ell);
    w.n = st.n;
    w.ell = st.ell;
    w.m = st.n / st.ell;
    w.claimed_upper = 2 * static_cast<std::size_t>(w.m);
    w.module_dim = st.m.dim();
    return w;
}

} // namespace

UpperBoundWitness witness_upper_hecke(int n, int ell, const WitnessOptions& opt) {
    const InductionSetting st = hecke_setting(n, ell);
    UpperBoundWitness w = start("hecke", st);
    const auto& emb = st.embedding;
    run_check(w, "parabolic", [&](std::string&) { return parabolic_certify(emb, st.form).ok(); });
    run_check(w, "mu invertible", [&](std::string&) { return mu_invertible(casimir(emb, st.form)); });
    persist(opt, "M", st.m);

    const auto dm = decompose(st.m, opt.seed);
    const auto parts = induced_parts(emb, dm);
    Representation x = direct_sum(parts, "Lambda(x)M");
    persist(opt, "induced", x);

    run_check(w, "restriction in add(M)", [&](std::string& d) {
        std::vector<Representation> res;
        for (const auto& p : parts) res.push_back(restrict_module(p, emb));
        const auto dr = decompose_sum(res, opt.seed);
        d = std::to_string(dr.classes.size()) + " classes";
        return add_member(dr, dm);
    });
    const auto dx = decompose_sum(parts, opt.seed);
    run_check(w, "generator", [&](std::string&) { return is_generator(st.lambda, dx, opt.seed); });
    finish(w, x, dx, dm, opt);
    return w;
}

UpperBoundWitness witness_upper_group(int n, int p, const WitnessOptions& opt) {
    const InductionSetting st = group_setting(n, p);
    UpperBoundWitness w = start("group", st);
    persist(opt, "M", st.m);
    run_check(w, "separable division", [&](std::string& d) {
        const auto sd = separable_division_check(st.embedding, st.form);
        d = sd.by_casimir ? "index invertible" : "bimodule test";
        return sd.divides;
    });
    run_check(w, "mackey", [&](std::string& d) {
        const auto r = mackey_check(*st.sylow, st.m, opt.seed);
        d = std::to_string(r.terms.size()) + " double cosets";
        return r.passed();
    });
    const auto dm = decompose(st.m, opt.seed);
    const auto parts = induced_parts(st.embedding, dm);
    Representation x = direct_sum(parts, "kSn(x)M");
    persist(opt, "induced", x);
    const auto dx = decompose_sum(parts, opt.seed);
    run_check(w, "generator", [&](std::string&) { return is_generator(st.lambda, dx, opt.seed); });
    finish(w, x, dx, dm, opt);
    return w;
}

DecompositionReport decompose_induced(const SubalgebraEmbedding& emb, const Representation& m, std::uint64_t seed) {
    return decompose_sum(induced_parts(emb, decompose(m, seed)), seed);
}

GldimComparison verify_gldim_comparison(const SubalgebraEmbedding& emb, const Representation& m, std::uint64_t seed) {
    GldimComparison out;
    out.induced = gldim_end(decompose_induced(emb, m, seed));
    out.sub = gldim_end(m, seed);
    out.holds = out.induced.value && out.sub.value && *out.induced.value <= *out.sub.value;
    return out;
}

XiAdditivity verify_xi_additivity(const Representation& m1, const Representation& m2, std::uint64_t seed) {
    XiAdditivity out;
    out.first = gldim_end(m1, seed);
    out.second = gldim_end(m2, seed);
    out.tensor = gldim_end(outer_tensor(m1, m2), seed);
    out.holds = out.first.value && out.second.value && out.tensor.value &&
                *out.tensor.value == *out.first.value + *out.second.value;
    return out;
}

} // namespace repdim
