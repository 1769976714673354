#include "doctest.h"

#include "repdim/symform.hpp"

using namespace repdim;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

Representation trivial(const AlgebraPtr& a) {
    return scalar_module(a, std::vector<Scalar>(a->generators().size(), a->field().one()), "k");
}

SubgroupData c2_in_s3() { return generate_subgroup(3, {SignedPerm::from_cycles(3, {{1, 2}})}, "P"); }

std::size_t inverse_index(const GroupBasisInfo& info, std::size_t i) {
    const SignedPerm inv = info.elements[i].inverse();
    for (std::size_t j = 0; j < info.elements.size(); ++j)
        if (info.elements[j].images == inv.images) return j;
    FAIL("inverse missing");
    return 0;
}

Scalar power(const Scalar& q, int e) {
    Scalar out = q.field().one();
    for (int i = 0; i < e; ++i) out = out * q;
    return out;
}

} // namespace

TEST_CASE("standard forms") {
    SUBCASE("group algebra: Gram is the permutation g -> g^-1") {
        const auto kg = group_algebra(symmetric_group(3), Q);
        const auto s = standard_form(kg);
        const Matrix g = gram_matrix(s);
        const auto& info = *kg->group_info();
        for (std::size_t i = 0; i < kg->dim(); ++i)
            for (std::size_t j = 0; j < kg->dim(); ++j)
                CHECK(g(i, j) == (j == inverse_index(info, i) ? Q.one() : Q.zero()));
        CHECK(is_symmetrizing(s));
    }
    SUBCASE("Hecke A1") {
        const Scalar q = Q.from_int(3);
        const auto h = hecke_algebra(CoxeterType::A, 2, q);
        const Matrix g = gram_matrix(standard_form(h));
        const std::size_t id = h->group_info()->identity_index(), t = 1 - id;
        CHECK(g(id, id) == Q.one());
        CHECK(g(id, t) == Q.zero());
        CHECK(g(t, id) == Q.zero());
        CHECK(g(t, t) == q);
    }
    SUBCASE("symmetric on every basis pair") {
        for (int n = 2; n <= 4; ++n) CHECK(is_symmetrizing(standard_form(hecke_algebra(CoxeterType::A, n, Q.from_int(-1)))));
        CHECK(is_symmetrizing(standard_form(hecke_algebra(CoxeterType::B, 2, Q.from_int(2), Q.from_int(3)))));
        CHECK(is_symmetrizing(standard_form(group_algebra(symmetric_group(3), F2))));
    }
    SUBCASE("rejected forms") {
        const auto kg = group_algebra(symmetric_group(3), Q);
        CHECK_THROWS_AS(make_form(kg, zero_vector(Q, kg->dim())), Error);
        CHECK_THROWS_AS(standard_form(lower_triangular(Q, 2)), Error);
    }
}

TEST_CASE("dual bases") {
    SUBCASE("group algebra: g* = g^-1") {
        const auto kg = group_algebra(symmetric_group(3), F2);
        const auto d = dual_basis(standard_form(kg));
        for (std::size_t i = 0; i < kg->dim(); ++i) CHECK(d[i] == kg->basis(inverse_index(*kg->group_info(), i)));
    }
    SUBCASE("Hecke A: T_w* = q^-l(w) T_{w^-1}") {
        const Scalar q = Q.from_int(2);
        const auto h = hecke_algebra(CoxeterType::A, 4, q);
        const auto d = dual_basis(standard_form(h));
        const auto& info = *h->group_info();
        for (std::size_t i = 0; i < h->dim(); ++i)
            CHECK(d[i] == scale(Q.one() / power(q, info.lengths[i]), h->basis(inverse_index(info, i))));
    }
    SUBCASE("ground field") {
        const auto k = ground_algebra(Q);
        CHECK(dual_basis(standard_form(k)) == std::vector<Vector>{k->unit()});
    }
}

TEST_CASE("parabolic certificates") {
    const auto h = hecke_algebra(CoxeterType::A, 4, Q.from_int(-1));
    const auto s = standard_form(h);
    const auto cert = parabolic_certify(parabolic_subalgebra(h, {2, 2}), s);
    CHECK(cert.ok());
    CHECK(cert.complement.size() == 20);

    const auto kg = group_algebra(symmetric_group(3), F2);
    CHECK(parabolic_certify(group_subalgebra(kg, c2_in_s3()), standard_form(kg)).ok());
    CHECK(parabolic_certify(scalar_subalgebra(kg), standard_form(kg)).ok());
    CHECK(parabolic_certify(identity_embedding(kg), standard_form(kg)).ok());

    // a class-function form that is nonzero on 3-cycles: still symmetrizing,
    // but the complement of kP is no longer in its kernel
    const auto qg = group_algebra(symmetric_group(3), Q);
    Vector c = zero_vector(Q, qg->dim());
    const auto& info = *qg->group_info();
    for (std::size_t i = 0; i < qg->dim(); ++i) {
        const auto& e = info.elements[i];
        const bool three_cycle = !(e * e).is_identity();
        if (i == info.identity_index()) c[i] = Q.one();
        if (three_cycle) c[i] = Q.from_int(2);
    }
    const auto odd = make_form(qg, c);
    CHECK_THROWS_AS(parabolic_certify(group_subalgebra(qg, c2_in_s3()), odd), Error);
}

TEST_CASE("relative Casimir elements") {
    SUBCASE("Gamma = Lambda") {
        const auto h = hecke_algebra(CoxeterType::A, 3, Q.from_int(-1));
        const auto emb = identity_embedding(h);
        const auto c = casimir(emb, standard_form(h));
        CHECK(c.tensor == tensor_over(emb, h->unit(), h->unit()));
        CHECK(c.mu == h->unit());
        CHECK(mu_invertible(c));
    }
    SUBCASE("Gamma = k in kG: sum g (x) g^-1, mu = |G|") {
        const auto kg = group_algebra(symmetric_group(3), Q);
        const auto emb = scalar_subalgebra(kg);
        const auto c = casimir(emb, standard_form(kg));
        Vector expect = zero_vector(Q, c.tensor.size());
        for (std::size_t i = 0; i < kg->dim(); ++i)
            expect = add(expect, tensor_over(emb, kg->basis(i), kg->basis(inverse_index(*kg->group_info(), i))));
        CHECK(c.tensor == expect);
        CHECK(c.mu == scale(Q.from_int(6), kg->unit()));
        CHECK(casimir_is_central(c));
    }
    SUBCASE("Hecke (2,2) parabolic at q = -1") {
        const auto h = hecke_algebra(CoxeterType::A, 4, Q.from_int(-1));
        const auto emb = parabolic_subalgebra(h, {2, 2});
        const auto c = casimir(emb, standard_form(h));
        CHECK(casimir_is_central(c));
        CHECK(mu_invertible(c));
        for (std::size_t i = 0; i < h->dim(); ++i) CHECK(h->multiply(h->basis(i), c.mu) == h->multiply(c.mu, h->basis(i)));
    }
    SUBCASE("independent of the free basis") {
        const auto h = hecke_algebra(CoxeterType::A, 3, Q.from_int(2));
        const auto emb = parabolic_subalgebra(h, {2, 1});
        const auto s = standard_form(h);
        const auto c = casimir(emb, s);
        // reverse the non-identity representatives and rescale them
        std::vector<Vector> fb{emb.free_basis[0]};
        for (std::size_t j = emb.rank() - 1; j >= 1; --j) fb.push_back(scale(Q.from_int(static_cast<long>(j + 1)), emb.free_basis[j]));
        const auto other = make_embedding(emb.ambient, emb.sub, emb.inclusion, fb, emb.complement, "permuted");
        const auto c2 = casimir(other, s);
        Vector t = zero_vector(Q, c.tensor.size());
        for (const auto& [x, y] : c2.pairs) t = add(t, tensor_over(emb, x, y));
        CHECK(t == c.tensor);
        CHECK(c2.mu == c.mu);
    }
    SUBCASE("mu over F2") {
        const auto kg = group_algebra(symmetric_group(3), F2);
        const auto s = standard_form(kg);
        CHECK_FALSE(mu_invertible(casimir(scalar_subalgebra(kg), s)));
        const auto emb = group_subalgebra(kg, c2_in_s3());
        const auto c = casimir(emb, s);
        CHECK(c.mu == kg->unit()); // index 3 = 1 mod 2
        CHECK(mu_invertible(c));
        CHECK(mu_invertible(casimir(identity_embedding(kg), s)));
    }
}

TEST_CASE("trace maps") {
    const auto kg = group_algebra(symmetric_group(3), Q);
    const auto s = standard_form(kg);
    const auto emb_k = scalar_subalgebra(kg);
    const auto ck = casimir(emb_k, s);
    const auto reg = regular_module(kg);
    const Matrix id = Matrix::identity(Q, reg.dim());
    CHECK(trace_map(id, reg, reg, ck) == id.scaled(Q.from_int(6)));
    const Matrix zero(Q, reg.dim(), reg.dim());
    CHECK(trace_map(zero, reg, reg, ck) == zero);

    const auto emb = group_subalgebra(kg, c2_in_s3());
    const auto c = casimir(emb, s);
    for (const auto& f : hom_space(reg, trivial(kg))) CHECK(trace_map(f, reg, trivial(kg), c) == trivial(kg).act(c.mu) * f);
}

TEST_CASE("trace identities on chains") {
    SUBCASE("kS3 > kP > F2") {
        const auto kg = group_algebra(symmetric_group(3), F2);
        const auto st = algebra_structure(kg);
        std::vector<Representation> mods{trivial(kg), regular_module(kg)};
        for (const auto& sm : st.simples) mods.push_back(sm);
        const auto rep = verify_trace_identities(group_subalgebra(kg, c2_in_s3()), standard_form(kg), mods, 7, 20);
        CHECK(rep.ok());
        CHECK(rep.samples == 20 * mods.size() * mods.size());
    }
    SUBCASE("H_-1(A2) > (2,1) > Q") {
        const auto h = hecke_algebra(CoxeterType::A, 3, Q.from_int(-1));
        const auto st = algebra_structure(h);
        std::vector<Representation> mods{regular_module(h)};
        for (const auto& sm : st.simples) mods.push_back(sm);
        const auto rep = verify_trace_identities(parabolic_subalgebra(h, {2, 1}), standard_form(h), mods, 11, 5);
        CHECK(rep.ok());
    }
}

TEST_CASE("restriction of Ext") {
    const auto kg = group_algebra(symmetric_group(3), F2);
    const auto lam = algebra_structure(kg);
    const auto emb = group_subalgebra(kg, c2_in_s3());
    const auto gam = algebra_structure(emb.sub);
    const auto k = trivial(kg);

    const auto r1 = ext_restriction(lam, gam, emb, k, k, 1);
    CHECK(r1.ext_lambda == 1); // Hom(S3, F2)
    CHECK(r1.ext_gamma == 1);  // every Ext^i over F2 C2 between trivials is 1-dimensional
    CHECK(r1.injective());
    CHECK(r1.ext_lambda == ext_group(lam, k, k, 1));

    // μ invertible: injective for every tested triple
    std::vector<Representation> mods{k, regular_module(kg)};
    for (const auto& sm : lam.simples) mods.push_back(sm);
    for (const auto& m : mods)
        for (const auto& n : mods)
            for (std::size_t i = 1; i <= 3; ++i) CHECK(ext_restriction(lam, gam, emb, m, n, i).injective());

    CHECK(ext_restriction(lam, gam, emb, regular_module(kg), k, 1).ext_lambda == 0);

    const auto id = identity_embedding(kg);
    const auto same = ext_restriction(lam, lam, id, k, k, 2);
    CHECK(same.injective());
    CHECK(same.ext_lambda == same.ext_gamma);

    // without the hypothesis: over the ground field every Ext vanishes
    const auto ground = scalar_subalgebra(kg);
    const auto gk = algebra_structure(ground.sub);
    const auto r0 = ext_restriction(lam, gk, ground, k, k, 1);
    CHECK(r0.ext_gamma == 0);
    CHECK(r0.kernel_dim == 1);
    CHECK_THROWS_AS(ext_restriction(lam, gam, emb, k, k, 9, 4), Error);
}
