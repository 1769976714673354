#include "doctest.h"

#include <algorithm>

#include "repdim/homological.hpp"

using namespace repdim;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

AlgebraPtr ks3(const Field& f) { return group_algebra(symmetric_group(3), f); }
AlgebraPtr kc2() { return group_algebra(generate_subgroup(2, {SignedPerm::from_cycles(2, {{1, 2}})}, "C2"), F2); }

Representation trivial(const AlgebraPtr& a) {
    return scalar_module(a, std::vector<Scalar>(a->generators().size(), a->field().one()), "k");
}

// Hom dimension over F_2 by enumerating every matrix.
std::size_t brute_hom_dim_f2(const Representation& m, const Representation& n) {
    const std::size_t cells = m.dim() * n.dim();
    REQUIRE(cells <= 16);
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cells); ++mask) {
        Matrix f(F2, n.dim(), m.dim());
        for (std::size_t c = 0; c < cells; ++c)
            if (mask >> c & 1) f(c / m.dim(), c % m.dim()) = F2.one();
        if (is_homomorphism(m, n, f)) ++count;
    }
    std::size_t d = 0;
    while ((std::size_t{1} << d) < count) ++d;
    return d;
}

// Hom via the Kronecker system (I ⊗ ρ_N - ρ_M^T ⊗ I) vec F = 0, row-major vec.
std::size_t kronecker_hom_dim(const Representation& m, const Representation& n) {
    const Field& f = m.field();
    const std::size_t dm = m.dim(), dn = n.dim();
    std::vector<Vector> rows;
    for (std::size_t g = 0; g < m.action().size(); ++g) {
        const Matrix sys = kronecker(n.action()[g], Matrix::identity(f, dm)) -
                           kronecker(Matrix::identity(f, dn), m.action()[g].transpose());
        for (std::size_t r = 0; r < sys.rows(); ++r) rows.push_back(sys.row(r));
    }
    return dm * dn - span_basis(f, dm * dn, rows).size();
}

// Free module A^r -> M on the standard basis of M.
struct FreeCover {
    Representation free;
    Matrix map;
};
FreeCover free_cover(const Representation& m) {
    const Representation reg = regular_module(m.algebra());
    std::vector<Representation> parts(m.dim(), reg);
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < reg.dim(); ++j)
            cols.push_back(m.apply(m.algebra()->basis(j), unit_vector(m.field(), m.dim(), i)));
    return {direct_sum(parts), Matrix::from_columns(m.field(), m.dim(), cols)};
}

// Ext^i via a free (non-minimal) resolution: coker(Hom(F_{i-1}, N) -> Hom(K_i, N)).
std::size_t ext_by_free_resolution(const Representation& m, const Representation& n, std::size_t i) {
    Representation cur = m;
    FreeCover fc = free_cover(cur);
    Submodule k = submodule(fc.free, kernel(fc.map));
    for (std::size_t step = 1; step < i; ++step) {
        cur = k.module;
        fc = free_cover(cur);
        k = submodule(fc.free, kernel(fc.map));
    }
    const std::size_t hk = hom_space(k.module, n).size();
    std::vector<Vector> restricted;
    for (const auto& h : hom_space(fc.free, n)) restricted.push_back((h * k.basis).flatten());
    return hk - span_basis(m.field(), n.dim() * k.module.dim(), restricted).size();
}

std::vector<std::pair<std::size_t, std::size_t>> class_shape(const DecompositionReport& r) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& c : r.classes) out.emplace_back(c.module.dim(), c.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
}

void check_witness(const Representation& m, const DecompositionReport& r) {
    const Matrix inv = inverse_or_throw(r.witness);
    std::vector<Representation> parts;
    for (const auto& s : r.summands) parts.push_back(s.module);
    const Representation sum = direct_sum(parts);
    for (std::size_t g = 0; g < m.action().size(); ++g) CHECK(inv * m.action()[g] * r.witness == sum.action()[g]);
}

} // namespace

TEST_CASE("regular modules") {
    auto a = ks3(F2);
    const auto reg = regular_module(a);
    CHECK(reg.dim() == 6);
    CHECK(reg.act(a->unit()).is_identity());
    CHECK(is_module(reg));
    // semisimple: simples occur with multiplicity equal to their dimension
    auto ss = ks3(Field::prime(5));
    const auto w = wedderburn(*ss);
    std::vector<std::pair<std::size_t, std::size_t>> expect;
    for (auto d : w.block_dims) expect.emplace_back(d, d);
    std::sort(expect.begin(), expect.end());
    CHECK(class_shape(decompose(regular_module(ss))) == expect);
}

TEST_CASE("hom spaces") {
    auto a = ks3(Field::prime(5));
    const auto s = algebra_structure(a);
    for (std::size_t i = 0; i < s.blocks(); ++i)
        for (std::size_t j = 0; j < s.blocks(); ++j)
            CHECK(hom_space(s.simples[i], s.simples[j]).size() == (i == j ? 1u : 0u));
    const auto c2 = regular_module(kc2());
    CHECK(hom_space(c2, c2).size() == 2);
    CHECK(brute_hom_dim_f2(c2, c2) == 2);

    auto b = ks3(F2);
    const auto sb = algebra_structure(b);
    std::vector<Representation> small{trivial(b), sb.simples[0], sb.simples[1], sb.pims[0], sb.pims[1]};
    for (const auto& m : small)
        for (const auto& n : small) {
            const auto h = hom_space(m, n);
            for (const auto& f : h) CHECK(is_homomorphism(m, n, f));
            if (m.dim() * n.dim() <= 16) CHECK(h.size() == brute_hom_dim_f2(m, n));
            CHECK(h.size() == kronecker_hom_dim(m, n));
        }
    const auto reg = regular_module(b);
    CHECK(hom_space(reg, direct_sum({reg, reg})).size() == 2 * hom_space(reg, reg).size());

    auto h = hecke_algebra(CoxeterType::A, 3, Q.from_int(-1));
    const auto rh = regular_module(h);
    const auto triv = scalar_module(h, {Q.from_int(-1), Q.from_int(-1)}, "sgn");
    CHECK(hom_space(rh, triv).size() == kronecker_hom_dim(rh, triv));
    CHECK(hom_space(rh, rh).size() == 6);
}

TEST_CASE("induction and restriction") {
    auto a = ks3(F2);
    const auto p = generate_subgroup(3, {SignedPerm::from_cycles(3, {{1, 2}})}, "P");
    const auto emb = group_subalgebra(a, p);
    const auto k = trivial(emb.sub);
    const auto ind = induce(emb, k);
    CHECK(ind.dim() == 3);
    CHECK(is_module(ind));
    const auto ind_reg = induce(emb, regular_module(emb.sub));
    CHECK(ind_reg.dim() == 6);
    CHECK(isomorphic(ind_reg, regular_module(a)));
    CHECK(restrict_module(ind_reg, emb).dim() == emb.rank() * emb.sub->dim());

    auto h4 = hecke_algebra(CoxeterType::A, 4, Q.from_int(-1));
    const auto par = parabolic_subalgebra(h4, {2, 2});
    const auto sgn = scalar_module(par.sub, {Q.from_int(-1), Q.from_int(-1)}, "sgn");
    const auto hi = induce(par, sgn);
    CHECK(hi.dim() == 6);
    CHECK(is_module(hi));
    CHECK(induce(par, regular_module(par.sub)).dim() == 24);

    // adjointness
    const auto sa = algebra_structure(a);
    std::vector<Representation> ms{k, regular_module(emb.sub)};
    std::vector<Representation> ns{regular_module(a), sa.simples[0], sa.simples[1], ind};
    for (const auto& m : ms)
        for (const auto& n : ns)
            CHECK(hom_space(induce(emb, m), n).size() == hom_space(m, restrict_module(n, emb)).size());
    const auto sh = algebra_structure(h4);
    for (const auto& n : sh.simples)
        CHECK(hom_space(hi, n).size() == hom_space(sgn, restrict_module(n, par)).size());

    // projective Λ-modules stay projective over Γ
    const auto reg_g = regular_module(emb.sub);
    for (const auto& pim : sa.pims) CHECK(add_member(restrict_module(pim, emb), reg_g).member);
    for (const auto& pim : sh.pims) CHECK(add_member(restrict_module(pim, par), regular_module(par.sub)).member);
}

TEST_CASE("projective covers and Ext") {
    auto x2 = truncated_polynomial(F2, 2);
    const auto s = algebra_structure(x2);
    const auto k = s.simples[0];
    const auto pc = projective_cover(s, k);
    CHECK(pc.cover.dim() == 2);
    CHECK(pc.kernel.module.dim() == 1);
    CHECK(isomorphic_indecomposables(pc.kernel.module, k));
    CHECK(ext_group(s, k, k, 1) == 1);
    CHECK(ext_group(s, k, k, 0) == hom_space(k, k).size());
    CHECK(ext_group(s, s.pims[0], k, 1) == 0);
    CHECK(projective_cover(s, s.pims[0]).kernel.module.dim() == 0);

    auto a = ks3(F2);
    const auto sa = algebra_structure(a);
    const auto triv = trivial(a);
    CHECK(projective_cover(sa, triv).cover.dim() == 2);
    for (const auto& p : sa.pims) {
        CHECK(is_projective(sa, p));
        CHECK(ext_group(sa, p, triv, 1) == 0);
        CHECK(ext_group(sa, p, triv, 2) == 0);
    }
    // kernel sits in the radical of the cover
    const auto pct = projective_cover(sa, triv);
    const auto jp = radical_of_module(sa, pct.cover);
    Subspace rad(F2, pct.cover.dim());
    for (const auto& v : jp) rad.add(v);
    for (std::size_t j = 0; j < pct.kernel.basis.cols(); ++j) CHECK(rad.contains(pct.kernel.basis.column(j)));

    // minimal and free resolutions agree
    std::vector<Representation> mods{triv, sa.simples[0], sa.simples[1], regular_module(a)};
    for (const auto& m : mods)
        for (const auto& n : mods)
            for (std::size_t i : {1u, 2u}) CHECK(ext_group(sa, m, n, i) == ext_by_free_resolution(m, n, i));
    CHECK(ext_group(s, k, k, 2) == ext_by_free_resolution(k, k, 2));
    CHECK_THROWS_AS(ext_group(s, k, k, 3, 2), Error);
}

TEST_CASE("decomposition") {
    auto a = ks3(F2);
    const auto reg = regular_module(a);
    const auto r = decompose(reg);
    CHECK(class_shape(r) == std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 2}});
    std::size_t total = 0;
    for (const auto& s : r.summands) total += s.module.dim();
    CHECK(total == 6);
    check_witness(reg, r);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto r2 = decompose(reg, seed);
        CHECK(class_shape(r2) == class_shape(r));
        check_witness(reg, r2);
    }
    const auto sa = algebra_structure(a);
    const auto twice = direct_sum({sa.pims[0], sa.pims[0]});
    CHECK(class_shape(decompose(twice)) == std::vector<std::pair<std::size_t, std::size_t>>{{sa.pims[0].dim(), 2}});
    const auto one = decompose(sa.pims[0]);
    CHECK(one.classes.size() == 1);
    CHECK(one.classes[0].multiplicity == 1);

    auto h = hecke_algebra(CoxeterType::A, 4, Q.from_int(-1));
    const auto rh = regular_module(h);
    const auto dh = decompose(rh);
    check_witness(rh, dh);
    const auto sh = algebra_structure(h);
    // each PIM P_b occurs dim S_b times
    std::vector<std::pair<std::size_t, std::size_t>> expect;
    for (std::size_t b = 0; b < sh.blocks(); ++b) expect.emplace_back(sh.pims[b].dim(), sh.simples[b].dim());
    std::sort(expect.begin(), expect.end());
    CHECK(class_shape(dh) == expect);
}

TEST_CASE("add membership") {
    auto c2 = kc2();
    const auto reg = regular_module(c2);
    const auto k = trivial(c2);
    CHECK(add_member(reg, reg).member);
    CHECK_FALSE(add_member(k, reg).member);
    CHECK(add_member(direct_sum({reg, reg}), reg).member);
    CHECK(add_member(k, direct_sum({k, reg})).member);
    // the witness really expresses the identity
    const auto w = add_member(direct_sum({reg, k}), direct_sum({k, reg}));
    REQUIRE(w.member);
    Matrix acc(F2, 3, 3);
    for (const auto& [i, j, c] : w.terms) acc.add_scaled(c, w.into[i] * w.outof[j]);
    CHECK(acc.is_identity());
    // agreement with decompositions
    auto a = ks3(F2);
    const auto sa = algebra_structure(a);
    std::vector<Representation> mods{trivial(a), sa.simples[1], sa.pims[0], regular_module(a),
                                     direct_sum({trivial(a), sa.pims[1]})};
    for (const auto& x : mods)
        for (const auto& m : mods)
            CHECK(add_member(x, m).member == add_member(decompose(x), decompose(m)));
}

TEST_CASE("serial algebras") {
    const auto s3 = algebra_structure(truncated_polynomial(Q, 3));
    auto mods = serial_indecomposables(s3);
    std::vector<std::size_t> dims;
    for (const auto& m : mods) dims.push_back(m.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 2, 3});

    const auto h1 = algebra_structure(hecke_algebra(CoxeterType::A, 2, Q.from_int(-1)));
    CHECK(serial_indecomposables(h1).size() == 2);

    const Field z3 = Field::cyclotomic(3);
    const auto h2 = algebra_structure(hecke_algebra(CoxeterType::A, 3, z3.zeta()));
    const auto ind = serial_indecomposables(h2);
    CHECK(ind.size() == 6);
    std::size_t loewy = 0;
    for (auto l : pim_loewy_lengths(h2)) loewy += l;
    CHECK(ind.size() == loewy);
    for (std::size_t i = 0; i < ind.size(); ++i)
        for (std::size_t j = i + 1; j < ind.size(); ++j) CHECK_FALSE(isomorphic_indecomposables(ind[i], ind[j]));

    const auto sa = algebra_structure(ks3(F2));
    CHECK(serial_indecomposables(sa).size() == 3);
    // k[x,y]/(x^2, y^2) is not serial
    auto x2 = truncated_polynomial(Q, 2);
    CHECK_THROWS_AS(serial_indecomposables(algebra_structure(tensor_algebra(x2, x2))), Error);
}

TEST_CASE("outer tensor products") {
    auto c2 = kc2();
    const auto reg = regular_module(c2);
    const auto m = direct_sum({trivial(c2), reg});
    const auto t = outer_tensor(m, m);
    CHECK(t.dim() == 9);
    CHECK(is_module(t));
    const auto rr = outer_tensor(reg, reg);
    CHECK(add_member(regular_module(rr.algebra()), rr).member);
    CHECK(outer_tensor({reg, reg, reg}).dim() == 8);
    CHECK_THROWS_AS(outer_tensor(reg, regular_module(truncated_polynomial(Q, 2))), Error);
}

TEST_CASE("jordan modules and serialization") {
    auto c3 = group_algebra(generate_subgroup(3, {SignedPerm::from_cycles(3, {{1, 2, 3}})}, "C3"), Field::prime(3));
    for (int j = 1; j <= 3; ++j) CHECK(jordan_module(c3, j).dim() == static_cast<std::size_t>(j));
    CHECK_THROWS_AS(jordan_module(c3, 4), Error);
    const auto m = direct_sum({jordan_module(c3, 2), jordan_module(c3, 3)}, "J2+J3");
    const std::string text = serialize_module(m);
    const auto back = deserialize_module(c3, text);
    CHECK(serialize_module(back) == text);
    CHECK(back.action()[0] == m.action()[0]);
    CHECK_THROWS_AS(deserialize_module(c3, "garbage"), Error);
    auto hz = hecke_algebra(CoxeterType::A, 3, Field::cyclotomic(3).zeta());
    const auto r = regular_module(hz);
    CHECK(serialize_module(deserialize_module(hz, serialize_module(r))) == serialize_module(r));
}
