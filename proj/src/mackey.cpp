#include "repdim/mackey.hpp"

#include <map>

namespace repdim {

SylowSetting sylow_setting(int n, int p) {
    SylowSetting s;
    s.n = n;
    s.p = p;
    s.group = symmetric_group(n);
    s.sylow = sylow_symmetric(n, p);
    s.kg = group_algebra(s.group, Field::prime(p));
    s.embedding = group_subalgebra(s.kg, s.sylow);
    return s;
}

Representation sylow_jordan_module(const SylowSetting& s, const std::vector<std::vector<int>>& sizes) {
    const Field& f = s.kg->field();
    const std::size_t m = s.sylow.generators.size();
    if (sizes.size() != m) throw Error(ErrorCode::DimensionMismatch, "one list of Jordan sizes per p-cycle");
    std::vector<Matrix> factor;
    std::string label;
    for (std::size_t i = 0; i < m; ++i) {
        Matrix acc(f, 0, 0);
        for (int b : sizes[i]) {
            if (b < 1 || b > s.p) throw Error(ErrorCode::DimensionMismatch, "Jordan block size outside 1..p");
            Matrix j = Matrix::identity(f, static_cast<std::size_t>(b));
            for (int r = 0; r + 1 < b; ++r) j(r + 1, r) = f.one();
            acc = direct_sum(acc, j);
            label += (label.empty() || label.back() == '(' ? "" : "+") + ("J" + std::to_string(b));
        }
        factor.push_back(std::move(acc));
        if (i + 1 < m) label += " (x) ";
    }
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < m; ++i) {
        Matrix g = Matrix::identity(f, 1);
        for (std::size_t k = 0; k < m; ++k)
            g = kronecker(g, k == i ? factor[k] : Matrix::identity(f, factor[k].rows()));
        gens.push_back(std::move(g));
    }
    const std::size_t d = gens.empty() ? 1 : gens[0].rows();
    Representation r(s.embedding.sub, d, std::move(gens), label);
    if (!is_module(r)) throw Error(ErrorCode::RelationViolation, "Jordan data does not define a kP-module");
    return r;
}

namespace {

std::size_t element_index(const Algebra& kg, const Vector& v) {
    for (std::size_t i = 0; i < kg.dim(); ++i)
        if (!v[i].is_zero()) return i;
    throw Error(ErrorCode::DimensionMismatch, "zero coset representative");
}

// x ⊗ M as a module over Q = P ∩ xPx^-1: q acts through x^-1 q x ∈ P.
Representation conjugated(const SylowSetting& s, const AlgebraPtr& kq, const SubgroupData& q, const SignedPerm& x,
                          const Representation& m) {
    const Field& f = m.field();
    const SignedPerm xi = x.inverse();
    std::vector<Matrix> gens;
    for (const auto& g : q.generators) {
        const SignedPerm c = xi * g * x;
        gens.push_back(m.act(unit_vector(f, s.sylow.elements.size(), s.sylow.index_of(c))));
    }
    Representation r(kq, m.dim(), std::move(gens), "x" + m.label());
    if (!is_module(r)) throw Error(ErrorCode::RelationViolation, "conjugated module violates relations");
    return r;
}

} // namespace

MackeyReport mackey_check(const SylowSetting& s, const Representation& m, std::uint64_t seed) {
    const Field& f = m.field();
    const auto& emb = s.embedding;
    const Representation lhs = restrict_module(induce(emb, m), emb);
    const auto dm = decompose(m, seed);

    MackeyReport out;
    out.lhs_dim = lhs.dim();
    const auto dcs = double_cosets(s.group, s.sylow, s.sylow);
    std::map<std::vector<int>, std::size_t> which;
    for (std::size_t c = 0; c < dcs.size(); ++c)
        for (const auto& h : s.sylow.elements)
            for (const auto& k : s.sylow.elements) which.emplace((h * dcs[c].rep * k).images, c);
    std::vector<std::vector<std::size_t>> cosets(dcs.size());
    for (std::size_t j = 0; j < emb.rank(); ++j) {
        const auto& g = s.group.elements[element_index(*s.kg, emb.free_basis[j])];
        cosets[which.at(g.images)].push_back(j);
    }

    out.agree = true;
    out.in_add_m = true;
    for (std::size_t c = 0; c < dcs.size(); ++c) {
        const SignedPerm& x = dcs[c].rep;
        MackeyTerm t;
        t.rep = x;
        t.double_coset_size = dcs[c].size;

        // left side: the a_j ⊗ M with a_j ∈ PxP span a kP-submodule
        std::vector<Vector> span;
        for (auto j : cosets[c])
            for (std::size_t k = 0; k < m.dim(); ++k) span.push_back(unit_vector(f, lhs.dim(), j * m.dim() + k));
        const Representation piece = submodule(lhs, span).module;

        // right side, built from the intersection alone
        std::vector<SignedPerm> qs;
        const SignedPerm xi = x.inverse();
        for (const auto& h : s.sylow.elements)
            if (s.sylow.contains(xi * h * x)) qs.push_back(h);
        const SubgroupData q = generate_subgroup(s.n, qs, "P^x");
        const auto ci = conjugate_intersection(s.sylow, x);
        t.intersection_order = q.order;
        t.factorized = ci.factorized && ci.group.order == q.order;
        t.diagnostic = ci.diagnostic;
        const SubalgebraEmbedding qemb = group_subalgebra(emb.sub, q);
        const Representation rhs = induce(qemb, conjugated(s, qemb.sub, q, x, m));
        out.rhs_dim += rhs.dim();
        t.dim = rhs.dim();

        const auto dp = decompose(piece, seed), dr = decompose(rhs, seed);
        t.agrees = piece.dim() == rhs.dim() && isomorphic(dp, dr);
        t.in_add_m = add_member(dr, dm) && add_member(dp, dm);
        out.agree = out.agree && t.agrees;
        out.in_add_m = out.in_add_m && t.in_add_m;
        out.terms.push_back(std::move(t));
    }
    out.agree = out.agree && out.lhs_dim == out.rhs_dim;
    return out;
}

} // namespace repdim
