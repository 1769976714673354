#include "repdim/module.hpp"

namespace repdim {

namespace {

// Basis of M reached by applying generators to a few seed vectors.
struct Spin {
    std::vector<Vector> vecs;
    std::vector<std::ptrdiff_t> parent; // -1 for seeds
    std::vector<std::size_t> gen;
    std::vector<std::size_t> seed_of;   // seed number for seeds
    std::size_t seeds = 0;
    // child[t][g]: index reached from t by generator g, or -1
    std::vector<std::vector<std::ptrdiff_t>> child;
};

Spin spin(const Representation& m, Subspace& span) {
    Spin s;
    const std::size_t ng = m.action().size();
    for (std::size_t i = 0; i < m.dim() && span.dim() < m.dim(); ++i) {
        Vector e = unit_vector(m.field(), m.dim(), i);
        if (!span.add(e)) continue;
        s.vecs.push_back(std::move(e));
        s.parent.push_back(-1);
        s.gen.push_back(0);
        s.seed_of.push_back(s.seeds++);
        s.child.emplace_back(ng, -1);
        for (std::size_t t = s.vecs.size() - 1; t < s.vecs.size(); ++t)
            for (std::size_t g = 0; g < ng; ++g) {
                Vector w = m.action()[g] * s.vecs[t];
                if (!span.add(w)) continue;
                s.child[t][g] = static_cast<std::ptrdiff_t>(s.vecs.size());
                s.vecs.push_back(std::move(w));
                s.parent.push_back(static_cast<std::ptrdiff_t>(t));
                s.gen.push_back(g);
                s.seed_of.push_back(0);
                s.child.emplace_back(ng, -1);
            }
    }
    return s;
}

} // namespace

bool is_homomorphism(const Representation& m, const Representation& n, const Matrix& f) {
    if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
    for (std::size_t g = 0; g < m.action().size(); ++g)
        if (n.action()[g] * f != f * m.action()[g]) return false;
    return true;
}

std::vector<Matrix> hom_space(const Representation& m, const Representation& n) {
    const Field& f = m.field();
    if (m.action().size() != n.action().size() || m.field() != n.field())
        throw Error(ErrorCode::DimensionMismatch, "hom_space: modules over different algebras");
    const std::size_t dm = m.dim(), dn = n.dim(), ng = m.action().size();
    if (dm == 0 || dn == 0) return {};
    Subspace span(f, dm, true);
    const Spin s = spin(m, span);
    const std::size_t unknowns = s.seeds * dn;

    // image of spin vector t is A[t] * y, y = stacked seed images
    std::vector<Matrix> img(s.vecs.size());
    for (std::size_t t = 0; t < s.vecs.size(); ++t) {
        if (s.parent[t] < 0) {
            Matrix a(f, dn, unknowns);
            for (std::size_t i = 0; i < dn; ++i) a(i, s.seed_of[t] * dn + i) = f.one();
            img[t] = std::move(a);
        } else {
            img[t] = n.action()[s.gen[t]] * img[static_cast<std::size_t>(s.parent[t])];
        }
    }

    Subspace eqs(f, unknowns);
    for (std::size_t t = 0; t < s.vecs.size() && eqs.dim() < unknowns; ++t)
        for (std::size_t g = 0; g < ng && eqs.dim() < unknowns; ++g) {
            if (s.child[t][g] >= 0) continue; // holds by construction
            const Vector c = *span.coordinates(m.action()[g] * s.vecs[t]);
            Matrix rel = n.action()[g] * img[t];
            for (std::size_t u = 0; u < c.size(); ++u)
                if (!c[u].is_zero()) rel.add_scaled(-c[u], img[u]);
            for (std::size_t i = 0; i < dn; ++i) eqs.add(rel.row(i));
        }

    // kernel of the echelon system
    std::vector<bool> is_pivot(unknowns, false);
    for (auto p : eqs.pivots()) is_pivot[p] = true;
    Matrix spin_inv = inverse_or_throw(Matrix::from_columns(f, dm, s.vecs));
    std::vector<Vector> flat;
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free]) continue;
        Vector y = zero_vector(f, unknowns);
        y[free] = f.one();
        for (std::size_t r = 0; r < eqs.dim(); ++r) y[eqs.pivots()[r]] = -eqs.basis()[r][free];
        Matrix on_spin(f, dn, dm);
        for (std::size_t t = 0; t < s.vecs.size(); ++t) on_spin.set_column(t, img[t] * y);
        flat.push_back((on_spin * spin_inv).flatten());
    }
    std::vector<Matrix> out;
    for (const auto& v : span_basis(f, dn * dm, flat)) out.push_back(Matrix::unflatten(f, dn, dm, v));
    return out;
}

} // namespace repdim
