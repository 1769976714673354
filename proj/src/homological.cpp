#include "repdim/homological.hpp"

namespace repdim {

AlgebraStructure algebra_structure(const AlgebraPtr& a, std::uint64_t seed) { return algebra_structure(a, wedderburn(*a, seed)); }

AlgebraStructure algebra_structure(const AlgebraPtr& a, WedderburnData w) {
    AlgebraStructure s;
    s.algebra = a;
    s.wedderburn = std::move(w);
    const Representation reg = regular_module(a);
    const std::size_t nb = s.wedderburn.block_dims.size();
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t i = 0; i < s.wedderburn.idempotents.size(); ++i)
            if (s.wedderburn.block_of[i] == b) {
                s.idempotent.push_back(s.wedderburn.idempotents[i]);
                break;
            }
    for (std::size_t b = 0; b < nb; ++b) {
        const Matrix r = a->right_matrix(s.idempotent[b]);
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < a->dim(); ++j) cols.push_back(r.column(j));
        Submodule p = submodule(reg, cols);
        p.module.set_label("P" + std::to_string(b));
        s.pims.push_back(p.module);
        s.pim_basis.push_back(p.basis);
    }
    for (std::size_t b = 0; b < nb; ++b) {
        Quotient q = quotient_module(s.pims[b], radical_of_module(s, s.pims[b]));
        q.module.set_label("S" + std::to_string(b));
        s.simples.push_back(q.module);
    }
    return s;
}

std::vector<Vector> radical_of_module(const AlgebraStructure& s, const Representation& m) {
    Subspace span(m.field(), m.dim());
    for (const auto& r : s.wedderburn.radical) {
        if (span.dim() == m.dim()) break;
        const Matrix a = m.act(r);
        for (std::size_t j = 0; j < m.dim(); ++j) span.add(a.column(j));
    }
    return span.basis();
}

std::vector<std::size_t> top_multiplicities(const AlgebraStructure& s, const Representation& m) {
    const auto jm = radical_of_module(s, m);
    std::vector<std::size_t> out;
    for (const auto& e : s.idempotent) {
        Subspace span(m.field(), m.dim());
        for (const auto& v : jm) span.add(v);
        const std::size_t base = span.dim();
        const Matrix a = m.act(e);
        for (std::size_t j = 0; j < m.dim(); ++j) span.add(a.column(j));
        out.push_back(span.dim() - base);
    }
    return out;
}

std::vector<std::vector<Vector>> radical_series(const AlgebraStructure& s, const Representation& m) {
    std::vector<std::vector<Vector>> out;
    std::vector<Vector> cur;
    for (std::size_t j = 0; j < m.dim(); ++j) cur.push_back(unit_vector(m.field(), m.dim(), j));
    out.push_back(cur);
    while (!cur.empty()) {
        const Submodule u = submodule(m, cur);
        std::vector<Vector> next;
        for (const auto& v : radical_of_module(s, u.module)) next.push_back(u.basis * v);
        if (next.size() == cur.size()) throw Error(ErrorCode::AlgorithmFailure, "radical series does not descend");
        cur = span_basis(m.field(), m.dim(), next);
        out.push_back(cur);
    }
    return out;
}

ProjectiveCover projective_cover(const AlgebraStructure& s, const Representation& m) {
    const Field& f = m.field();
    Subspace span(f, m.dim());
    for (const auto& v : radical_of_module(s, m)) span.add(v);
    std::vector<std::pair<std::size_t, Vector>> tops;
    for (std::size_t b = 0; b < s.blocks() && span.dim() < m.dim(); ++b) {
        const Matrix e = m.act(s.idempotent[b]);
        for (std::size_t j = 0; j < m.dim(); ++j) {
            Vector v = e.column(j);
            if (span.add(v)) tops.emplace_back(b, std::move(v));
        }
    }
    ProjectiveCover out;
    std::vector<Representation> parts;
    std::vector<Vector> cols;
    for (const auto& [b, v] : tops) {
        parts.push_back(s.pims[b]);
        out.blocks.push_back(b);
        const Matrix& pb = s.pim_basis[b];
        for (std::size_t c = 0; c < pb.cols(); ++c) cols.push_back(m.apply(pb.column(c), v));
    }
    if (parts.empty()) {
        // M = 0
        out.cover = Representation(m.algebra(), 0, std::vector<Matrix>(m.action().size(), Matrix(f, 0, 0)));
        out.map = Matrix(f, m.dim(), 0);
        out.kernel = submodule(out.cover, {});
        return out;
    }
    out.cover = direct_sum(parts, "cover");
    out.map = Matrix::from_columns(f, m.dim(), cols);
    out.kernel = submodule(out.cover, kernel(out.map));
    return out;
}

Representation syzygy(const AlgebraStructure& s, const Representation& m) { return projective_cover(s, m).kernel.module; }

bool is_projective(const AlgebraStructure& s, const Representation& m) {
    return projective_cover(s, m).cover.dim() == m.dim();
}

std::vector<Matrix> projective_factoring_maps(const AlgebraStructure& s, const Representation& x,
                                              const Representation& n) {
    const Field& f = x.field();
    const auto pc = projective_cover(s, n);
    std::vector<Vector> flat;
    for (const auto& h : hom_space(x, pc.cover)) flat.push_back((pc.map * h).flatten());
    std::vector<Matrix> out;
    for (const auto& v : span_basis(f, n.dim() * x.dim(), flat)) out.push_back(Matrix::unflatten(f, n.dim(), x.dim(), v));
    return out;
}

std::size_t stable_hom_dim(const AlgebraStructure& s, const Representation& x, const Representation& n) {
    return hom_space(x, n).size() - projective_factoring_maps(s, x, n).size();
}

std::size_t ext_group(const AlgebraStructure& s, const Representation& m, const Representation& n, std::size_t i,
                      std::optional<std::size_t> cap) {
    const std::size_t limit = cap.value_or(s.algebra->dim());
    if (i > limit) throw Error(ErrorCode::CapExceeded, "Ext degree beyond the syzygy cap");
    if (i == 0) return hom_space(m, n).size();
    Representation omega = m;
    for (std::size_t k = 0; k < i; ++k) {
        omega = syzygy(s, omega);
        if (omega.dim() == 0) return 0;
    }
    return stable_hom_dim(s, omega, n);
}

std::optional<std::size_t> projective_dimension(const AlgebraStructure& s, const Representation& m, std::size_t cap) {
    Representation cur = m;
    for (std::size_t k = 0; k <= cap; ++k) {
        cur = syzygy(s, cur);
        if (cur.dim() == 0) return k;
    }
    return std::nullopt;
}

std::vector<std::size_t> pim_loewy_lengths(const AlgebraStructure& s) {
    std::vector<std::size_t> out;
    for (const auto& p : s.pims) out.push_back(radical_series(s, p).size() - 1);
    return out;
}

std::vector<Representation> serial_indecomposables(const AlgebraStructure& s) {
    std::vector<Representation> out;
    for (std::size_t b = 0; b < s.blocks(); ++b) {
        const Representation& p = s.pims[b];
        const auto series = radical_series(s, p);
        for (std::size_t k = 0; k + 1 < series.size(); ++k) {
            // layer J^k P / J^{k+1} P must be simple
            std::size_t total = 0;
            for (const auto& e : s.idempotent) {
                Subspace span(p.field(), p.dim());
                for (const auto& v : series[k + 1]) span.add(v);
                const std::size_t base = span.dim();
                const Matrix a = p.act(e);
                for (const auto& v : series[k]) span.add(a * v);
                total += span.dim() - base;
            }
            if (total != 1)
                throw Error(ErrorCode::SerialityError, "projective " + p.label() + " is not uniserial; supply the modules");
        }
        for (std::size_t k = 1; k < series.size(); ++k) {
            Representation q = quotient_module(p, series[k]).module;
            q.set_label(p.label() + "/J" + std::to_string(k));
            bool seen = false;
            for (const auto& o : out)
                if (isomorphic_indecomposables(o, q)) {
                    seen = true;
                    break;
                }
            if (!seen) out.push_back(std::move(q));
        }
    }
    return out;
}

} // namespace repdim
