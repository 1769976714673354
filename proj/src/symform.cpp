#include "repdim/symform.hpp"

#include <random>

namespace repdim {

Scalar SymmetrizingForm::operator()(const Vector& x) const {
    Scalar out = algebra->field().zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !coords[i].is_zero()) out += coords[i] * x[i];
    return out;
}

Matrix gram_matrix(const SymmetrizingForm& s) {
    const Algebra& a = *s.algebra;
    Matrix g(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Scalar v = a.field().zero();
            for (const auto& t : a.product(i, j)) v += t.c * s.coords[t.k];
            g(i, j) = v;
        }
    return g;
}

bool is_symmetrizing(const SymmetrizingForm& s) {
    const Matrix g = gram_matrix(s);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i + 1; j < g.cols(); ++j)
            if (g(i, j) != g(j, i)) return false;
    return rank(g) == g.rows();
}

SymmetrizingForm make_form(const AlgebraPtr& a, Vector coords) {
    if (coords.size() != a->dim()) throw Error(ErrorCode::DimensionMismatch, "form has the wrong length");
    SymmetrizingForm s{a, std::move(coords)};
    if (!is_symmetrizing(s))
        throw Error(ErrorCode::NotSymmetricWithThisForm, "form on " + a->name() + " is not symmetric and nondegenerate");
    return s;
}

SymmetrizingForm standard_form(const AlgebraPtr& a) {
    const Vector& one = a->unit();
    std::size_t id = a->dim(), nonzero = 0;
    for (std::size_t i = 0; i < one.size(); ++i)
        if (!one[i].is_zero()) {
            ++nonzero;
            id = i;
        }
    if (nonzero != 1 || one[id] != a->field().one())
        throw Error(ErrorCode::NotSymmetricWithThisForm, "unit of " + a->name() + " is not a basis element");
    return make_form(a, unit_vector(a->field(), a->dim(), id));
}

SymmetrizingForm restrict_form(const SymmetrizingForm& s, const SubalgebraEmbedding& emb) {
    Vector c = zero_vector(s.algebra->field(), emb.sub->dim());
    for (std::size_t k = 0; k < emb.sub->dim(); ++k) c[k] = s(emb.inclusion.column(k));
    return {emb.sub, std::move(c)};
}

std::vector<Vector> dual_basis(const SymmetrizingForm& s) {
    const Matrix c = inverse_or_throw(gram_matrix(s));
    std::vector<Vector> out;
    for (std::size_t j = 0; j < c.cols(); ++j) out.push_back(c.column(j));
    return out;
}

ParabolicCertificate parabolic_certify(const SubalgebraEmbedding& emb, const SymmetrizingForm& s) {
    const Algebra& lam = *emb.ambient;
    const Field& f = lam.field();
    ParabolicCertificate cert;
    cert.gamma_symmetric = is_symmetrizing(restrict_form(s, emb));
    if (!cert.gamma_symmetric) throw Error(ErrorCode::CertificationFailure, "restricted form is not symmetrizing on Γ");

    std::vector<Vector> gamma;
    for (std::size_t k = 0; k < emb.sub->dim(); ++k) gamma.push_back(emb.inclusion.column(k));
    Subspace all(f, lam.dim()), b(f, lam.dim());
    for (std::size_t j = 0; j < emb.rank(); ++j)
        for (const auto& g : gamma) {
            const Vector v = lam.multiply(emb.free_basis[j], g);
            all.add(v);
            if (j > 0) {
                b.add(v);
                cert.complement.push_back(v);
            }
        }
    cert.free = all.dim() == lam.dim() && emb.rank() * gamma.size() == lam.dim() && is_zero(sub(emb.free_basis[0], lam.unit()));
    if (!cert.free) throw Error(ErrorCode::CertificationFailure, "Λ is not free over Γ on the given basis");

    cert.complement_bimodule = true;
    for (const auto& v : cert.complement)
        for (const auto& g : gamma)
            if (!b.contains(lam.multiply(g, v)) || !b.contains(lam.multiply(v, g))) cert.complement_bimodule = false;
    if (!cert.complement_bimodule) throw Error(ErrorCode::CertificationFailure, "complement B is not a Γ-bimodule");

    cert.complement_in_kernel = true;
    for (const auto& v : cert.complement)
        if (!s(v).is_zero()) cert.complement_in_kernel = false;
    if (!cert.complement_in_kernel) throw Error(ErrorCode::CertificationFailure, "complement B is not inside Ker s");
    return cert;
}

Vector tensor_over(const SubalgebraEmbedding& emb, const Vector& x, const Vector& y) {
    const Algebra& lam = *emb.ambient;
    const std::size_t d = lam.dim();
    Vector out = zero_vector(lam.field(), emb.rank() * d);
    const auto parts = emb.decompose(x);
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (is_zero(parts[j])) continue;
        const Vector v = lam.multiply(emb.include(parts[j]), y);
        for (std::size_t k = 0; k < d; ++k) out[j * d + k] += v[k];
    }
    return out;
}

Vector tensor_left(const SubalgebraEmbedding& emb, const Vector& z, const Vector& t) {
    const Algebra& lam = *emb.ambient;
    const std::size_t d = lam.dim();
    Vector out = zero_vector(lam.field(), t.size());
    const auto rw = emb.rewrite(z);
    for (std::size_t j = 0; j < emb.rank(); ++j) {
        const Vector yj(t.begin() + static_cast<std::ptrdiff_t>(j * d), t.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
        if (is_zero(yj)) continue;
        for (std::size_t i = 0; i < emb.rank(); ++i) {
            if (is_zero(rw[j][i])) continue;
            const Vector v = lam.multiply(emb.include(rw[j][i]), yj);
            for (std::size_t k = 0; k < d; ++k) out[i * d + k] += v[k];
        }
    }
    return out;
}

Vector tensor_right(const SubalgebraEmbedding& emb, const Vector& t, const Vector& z) {
    const Algebra& lam = *emb.ambient;
    const std::size_t d = lam.dim();
    Vector out = zero_vector(lam.field(), t.size());
    for (std::size_t j = 0; j < emb.rank(); ++j) {
        const Vector yj(t.begin() + static_cast<std::ptrdiff_t>(j * d), t.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
        const Vector v = lam.multiply(yj, z);
        for (std::size_t k = 0; k < d; ++k) out[j * d + k] = v[k];
    }
    return out;
}

CasimirElement casimir(const SubalgebraEmbedding& emb, const SymmetrizingForm& s) {
    const Algebra& lam = *emb.ambient;
    const Field& f = lam.field();
    const std::size_t d = lam.dim(), g = emb.sub->dim(), r = emb.rank();
    // π(x) is the γ with s(γ γ') = s(x γ') for all γ' in Γ
    std::vector<Vector> gamma;
    for (std::size_t t = 0; t < g; ++t) gamma.push_back(emb.inclusion.column(t));
    const Matrix ginv = inverse_or_throw(gram_matrix(restrict_form(s, emb)));
    auto pi = [&](const Vector& x) {
        Vector rhs = zero_vector(f, g);
        for (std::size_t t = 0; t < g; ++t) rhs[t] = s(lam.multiply(x, gamma[t]));
        return ginv * rhs;
    };
    // x -> (π(x a_k))_k, square since Λ is free of rank r over Γ
    Matrix l(f, r * g, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            const Vector p = pi(lam.multiply(lam.basis(i), emb.free_basis[k]));
            for (std::size_t t = 0; t < g; ++t) l(k * g + t, i) = p[t];
        }
    const Matrix inv = inverse_or_throw(l);
    const Vector one_gamma = pi(lam.unit());
    CasimirElement c;
    c.embedding = emb;
    c.tensor = zero_vector(f, r * d);
    c.mu = lam.zero();
    for (std::size_t j = 0; j < r; ++j) {
        Vector rhs = zero_vector(f, r * g);
        for (std::size_t t = 0; t < g; ++t) rhs[j * g + t] = one_gamma[t];
        Vector dual = inv * rhs;
        const auto t = tensor_over(emb, emb.free_basis[j], dual);
        for (std::size_t k = 0; k < t.size(); ++k) c.tensor[k] += t[k];
        c.mu = add(c.mu, lam.multiply(emb.free_basis[j], dual));
        c.pairs.emplace_back(emb.free_basis[j], std::move(dual));
    }
    return c;
}

bool casimir_is_central(const CasimirElement& c) {
    const Algebra& lam = *c.embedding.ambient;
    for (std::size_t i = 0; i < lam.dim(); ++i)
        if (tensor_left(c.embedding, lam.basis(i), c.tensor) != tensor_right(c.embedding, c.tensor, lam.basis(i)))
            return false;
    return true;
}

bool mu_invertible(const CasimirElement& c) {
    const Algebra& lam = *c.embedding.ambient;
    return rank(lam.left_matrix(c.mu)) == lam.dim();
}

Matrix trace_map(const Matrix& f, const Representation& m, const Representation& n, const CasimirElement& c) {
    Matrix out(m.field(), n.dim(), m.dim());
    for (const auto& [x, y] : c.pairs) out = out + n.act(x) * f * m.act(y);
    if (!is_homomorphism(m, n, out)) throw Error(ErrorCode::LinearityFailure, "trace map produced a non-linear map");
    return out;
}

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    const long p = f.characteristic();
    std::uniform_int_distribution<long> coef(p ? 0 : -3, p ? p - 1 : 3);
    return f.from_int(coef(rng));
}

} // namespace

TraceReport verify_trace_identities(const SubalgebraEmbedding& emb, const SymmetrizingForm& s,
                                    const std::vector<Representation>& modules, std::uint64_t seed,
                                    std::size_t samples) {
    const Field& f = emb.ambient->field();
    std::mt19937_64 rng(seed);
    const SymmetrizingForm sg = restrict_form(s, emb);
    const auto lam_gamma = casimir(emb, s);
    const auto gamma_k_emb = scalar_subalgebra(emb.sub);
    const auto gamma_k = casimir(gamma_k_emb, sg);
    const auto lam_k_emb = scalar_subalgebra(emb.ambient);
    const auto lam_k = casimir(lam_k_emb, s);
    TraceReport rep;
    for (const auto& m : modules)
        for (const auto& n : modules) {
            const auto hom = hom_space(m, n);
            const Matrix mu = n.act(lam_gamma.mu);
            const Representation mg = restrict_module(m, emb), ng = restrict_module(n, emb);
            for (std::size_t t = 0; t < samples; ++t) {
                ++rep.samples;
                if (!hom.empty()) {
                    Matrix h(f, n.dim(), m.dim());
                    for (const auto& b : hom) h.add_scaled(random_scalar(f, rng), b);
                    if (trace_map(h, m, n, lam_gamma) != mu * h) ++rep.tr_res_failures;
                }
                Matrix g(f, n.dim(), m.dim());
                for (std::size_t i = 0; i < n.dim(); ++i)
                    for (std::size_t j = 0; j < m.dim(); ++j) g(i, j) = random_scalar(f, rng);
                const Matrix two_step = trace_map(trace_map(g, mg, ng, gamma_k), m, n, lam_gamma);
                if (two_step != trace_map(g, m, n, lam_k)) ++rep.transitivity_failures;
            }
        }
    return rep;
}

ExtRestriction ext_restriction(const AlgebraStructure& lambda, const AlgebraStructure& gamma,
                               const SubalgebraEmbedding& emb, const Representation& m, const Representation& n,
                               std::size_t i, std::optional<std::size_t> cap) {
    const Field& f = m.field();
    ExtRestriction out;
    const std::size_t limit = cap.value_or(lambda.algebra->dim());
    if (i > limit) throw Error(ErrorCode::CapExceeded, "Ext degree beyond the syzygy cap");
    out.ext_gamma = ext_group(gamma, restrict_module(m, emb), restrict_module(n, emb), i, limit);
    if (i == 0) {
        // Hom_Λ -> Hom_Γ is an inclusion
        out.ext_lambda = hom_space(m, n).size();
        return out;
    }
    Representation x = m;
    for (std::size_t k = 0; k < i && x.dim() > 0; ++k) x = syzygy(lambda, x);
    if (x.dim() == 0) return out;
    const auto hom = hom_space(x, n);
    const auto p_lam = projective_factoring_maps(lambda, x, n);
    const auto p_gam = projective_factoring_maps(gamma, restrict_module(x, emb), restrict_module(n, emb));
    out.ext_lambda = hom.size() - p_lam.size();
    Subspace both(f, n.dim() * x.dim());
    for (const auto& h : hom) both.add(h.flatten());
    for (const auto& h : p_gam) both.add(h.flatten());
    const std::size_t meet = hom.size() + p_gam.size() - both.dim();
    out.kernel_dim = meet - p_lam.size();
    return out;
}

} // namespace repdim
