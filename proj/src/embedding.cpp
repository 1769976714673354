#include <algorithm>
#include <map>

#include "repdim/embedding.hpp"

namespace repdim {

std::vector<Vector> SubalgebraEmbedding::decompose(const Vector& lambda) const {
    const Vector c = split * lambda;
    const std::size_t dg = sub->dim();
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rank(); ++i)
        out.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(i * dg), c.begin() + static_cast<std::ptrdiff_t>((i + 1) * dg));
    return out;
}

std::vector<std::vector<Vector>> SubalgebraEmbedding::rewrite(const Vector& x) const {
    std::vector<std::vector<Vector>> out;
    for (const auto& a : free_basis) out.push_back(decompose(ambient->multiply(x, a)));
    return out;
}

SubalgebraEmbedding make_embedding(AlgebraPtr ambient, AlgebraPtr sub, Matrix inclusion,
                                   std::vector<Vector> free_basis, std::vector<std::size_t> complement,
                                   std::string label) {
    const Field& f = ambient->field();
    const std::size_t dl = ambient->dim(), dg = sub->dim();
    if (inclusion.rows() != dl || inclusion.cols() != dg) throw Error(ErrorCode::DimensionMismatch, "inclusion shape");
    if (inclusion * sub->unit() != ambient->unit()) throw Error(ErrorCode::RelationViolation, "inclusion is not unital");
    std::vector<Vector> gam;
    for (std::size_t k = 0; k < dg; ++k) gam.push_back(inclusion.column(k));
    for (std::size_t i = 0; i < dg; ++i)
        for (std::size_t j = 0; j < dg; ++j) {
            Vector prod = sub->zero();
            for (const auto& t : sub->product(i, j)) prod[t.k] += t.c;
            if (inclusion * prod != ambient->multiply(gam[i], gam[j]))
                throw Error(ErrorCode::RelationViolation, "inclusion is not multiplicative");
        }
    if (free_basis.empty() || free_basis[0] != ambient->unit())
        throw Error(ErrorCode::FreenessFailure, "free basis must start with the unit");
    if (free_basis.size() * dg != dl) throw Error(ErrorCode::FreenessFailure, "rank times dim Γ differs from dim Λ");
    std::vector<Vector> cols;
    for (const auto& a : free_basis)
        for (const auto& g : gam) cols.push_back(ambient->multiply(a, g));
    auto inv = inverse(Matrix::from_columns(f, dl, cols));
    if (!inv) throw Error(ErrorCode::FreenessFailure, "products a_j γ_k are not a basis");
    SubalgebraEmbedding e;
    e.ambient = std::move(ambient);
    e.sub = std::move(sub);
    e.inclusion = std::move(inclusion);
    e.free_basis = std::move(free_basis);
    e.split = std::move(*inv);
    e.complement = std::move(complement);
    e.label = std::move(label);
    return e;
}

std::vector<int> ell_parabolic_composition(int n, int ell) {
    if (ell < 2) throw Error(ErrorCode::BadComposition, "ℓ must be at least 2");
    std::vector<int> lambda(static_cast<std::size_t>(n / ell), ell);
    for (int i = 0; i < n % ell; ++i) lambda.push_back(1);
    return lambda;
}

namespace {

std::string composition_text(const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

} // namespace

SubalgebraEmbedding parabolic_subalgebra(const AlgebraPtr& hecke, const std::vector<int>& composition) {
    const auto& info = hecke->group_info();
    if (!info || info->kind != GroupBasisKind::Hecke || info->type != CoxeterType::A)
        throw Error(ErrorCode::DimensionMismatch, "parabolic_subalgebra needs a type-A Hecke algebra");
    const Field& f = hecke->field();
    const auto g = CoxeterGroup::enumerate(CoxeterType::A, info->n);
    const auto gens = young_generator_indices(CoxeterType::A, info->n, composition);
    const auto elems = parabolic_elements(g, gens);
    const auto reps = min_coset_reps(g, gens, CosetSide::Left);

    std::vector<Vector> span, sub_gens;
    std::vector<std::string> labels;
    GroupBasisInfo sub_info = *info;
    sub_info.elements.clear();
    sub_info.lengths.clear();
    for (auto u : elems) {
        span.push_back(hecke->basis(u));
        labels.push_back(hecke->labels()[u]);
        sub_info.elements.push_back(g.element(u));
        sub_info.lengths.push_back(g.length(u));
    }
    for (auto s : gens) sub_gens.push_back(hecke->basis(g.index_of(g.generators()[s])));
    const std::string name = "B" + composition_text(composition);
    auto sub = subalgebra(*hecke, span, sub_gens, name, labels, sub_info);

    std::vector<Vector> free;
    for (auto d : reps) free.push_back(hecke->basis(d));
    std::vector<std::size_t> complement;
    for (std::size_t w = 0; w < hecke->dim(); ++w)
        if (!std::binary_search(elems.begin(), elems.end(), w)) complement.push_back(w);
    return make_embedding(hecke, sub, Matrix::from_columns(f, hecke->dim(), span), std::move(free),
                          std::move(complement), name + " in " + hecke->name());
}

SubalgebraEmbedding max_ell_parabolic(const AlgebraPtr& hecke, int ell) {
    const auto& info = hecke->group_info();
    if (!info) throw Error(ErrorCode::DimensionMismatch, "max_ell_parabolic needs a Hecke algebra");
    return parabolic_subalgebra(hecke, ell_parabolic_composition(info->n, ell));
}

SubalgebraEmbedding group_subalgebra(const AlgebraPtr& kg, const SubgroupData& h) {
    const auto& info = kg->group_info();
    if (!info || info->kind != GroupBasisKind::Group) throw Error(ErrorCode::DimensionMismatch, "needs a group algebra");
    const Field& f = kg->field();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < info->elements.size(); ++i) index.emplace(info->elements[i].images, i);
    auto sub = group_algebra(h, f);
    std::vector<Vector> span;
    std::vector<bool> in_h(kg->dim(), false);
    for (const auto& x : h.elements) {
        const std::size_t i = index.at(x.images);
        span.push_back(kg->basis(i));
        in_h[i] = true;
    }
    std::vector<bool> covered(kg->dim(), false);
    std::vector<Vector> free;
    for (std::size_t i = 0; i < kg->dim(); ++i) {
        if (covered[i]) continue;
        free.push_back(kg->basis(i));
        for (const auto& x : h.elements) covered[index.at((info->elements[i] * x).images)] = true;
    }
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < kg->dim(); ++i)
        if (!in_h[i]) complement.push_back(i);
    return make_embedding(kg, sub, Matrix::from_columns(f, kg->dim(), span), std::move(free), std::move(complement),
                          sub->name() + " in " + kg->name());
}

SubalgebraEmbedding scalar_subalgebra(const AlgebraPtr& a) {
    const Field& f = a->field();
    auto k = ground_algebra(f);
    Subspace s(f, a->dim());
    std::vector<Vector> free{a->unit()};
    s.add(a->unit());
    for (std::size_t i = 0; i < a->dim(); ++i)
        if (s.add(a->basis(i))) free.push_back(a->basis(i));
    std::vector<std::size_t> complement;
    if (a->group_info()) {
        const std::size_t id = a->group_info()->identity_index();
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (i != id) complement.push_back(i);
    }
    return make_embedding(a, k, Matrix::from_columns(f, a->dim(), {a->unit()}), std::move(free), std::move(complement),
                          "k in " + a->name());
}

SubalgebraEmbedding identity_embedding(const AlgebraPtr& a) {
    return make_embedding(a, a, Matrix::identity(a->field(), a->dim()), {a->unit()}, {}, a->name() + " in itself");
}

} // namespace repdim
