#include <random>
#include <sstream>

#include "repdim/algebra.hpp"

namespace repdim {

std::size_t GroupBasisInfo::identity_index() const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i].is_identity()) return i;
    throw Error(ErrorCode::AlgorithmFailure, "group basis without identity");
}

namespace {

WordBasis build_word_basis(const Algebra& a) {
    const Field& f = a.field();
    const std::size_t d = a.dim();
    std::vector<Vector> gens = a.generators();
    if (gens.empty())
        for (std::size_t i = 0; i < d; ++i) gens.push_back(a.basis(i));
    WordBasis wb;
    Subspace span(f, d);
    std::vector<Vector> prods;
    span.add(a.unit());
    prods.push_back(a.unit());
    wb.words.push_back({});
    wb.parent.push_back(0);
    for (std::size_t i = 0; i < prods.size() && span.dim() < d; ++i)
        for (std::size_t g = 0; g < gens.size() && span.dim() < d; ++g) {
            Vector v = a.multiply(gens[g], prods[i]);
            if (!span.add(v)) continue;
            std::vector<std::size_t> w{g};
            w.insert(w.end(), wb.words[i].begin(), wb.words[i].end());
            wb.words.push_back(std::move(w));
            wb.parent.push_back(i);
            prods.push_back(std::move(v));
        }
    if (span.dim() < d) throw Error(ErrorCode::AlgorithmFailure, "designated generators do not generate " + a.name());
    wb.change = inverse_or_throw(Matrix::from_columns(f, d, prods));
    return wb;
}

} // namespace

Algebra::Algebra(Field field, std::string name, std::vector<std::string> labels, std::vector<std::vector<Term>> table,
                 Vector unit, std::vector<Vector> generators, std::optional<GroupBasisInfo> info)
    : m_field(std::move(field)), m_name(std::move(name)), m_dim(labels.size()), m_labels(std::move(labels)),
      m_table(std::move(table)), m_unit(std::move(unit)), m_generators(std::move(generators)), m_info(std::move(info)) {
    if (m_table.size() != m_dim * m_dim || m_unit.size() != m_dim)
        throw Error(ErrorCode::DimensionMismatch, "structure constant table has the wrong size");
    for (const auto& g : m_generators)
        if (g.size() != m_dim) throw Error(ErrorCode::DimensionMismatch, "generator has the wrong length");
    if (m_dim > 0) m_words = build_word_basis(*this);
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
    Vector out = zero();
    for (std::size_t i = 0; i < m_dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < m_dim; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar ab = a[i] * b[j];
            for (const auto& t : product(i, j)) out[t.k].add_product(ab, t.c);
        }
    }
    return out;
}

Matrix Algebra::left_matrix(const Vector& a) const {
    Matrix m(m_field, m_dim, m_dim);
    for (std::size_t i = 0; i < m_dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < m_dim; ++j)
            for (const auto& t : product(i, j)) m(t.k, j).add_product(a[i], t.c);
    }
    return m;
}

Matrix Algebra::right_matrix(const Vector& a) const {
    Matrix m(m_field, m_dim, m_dim);
    for (std::size_t j = 0; j < m_dim; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < m_dim; ++i)
            for (const auto& t : product(i, j)) m(t.k, i).add_product(a[j], t.c);
    }
    return m;
}

bool Algebra::is_associative(std::size_t max_checks) const {
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vector ij = zero(), jk = zero();
        for (const auto& t : product(i, j)) ij[t.k] += t.c;
        for (const auto& t : product(j, k)) jk[t.k] += t.c;
        return multiply(ij, basis(k)) == multiply(basis(i), jk);
    };
    const std::size_t total = m_dim * m_dim * m_dim;
    if (total <= max_checks) {
        for (std::size_t i = 0; i < m_dim; ++i)
            for (std::size_t j = 0; j < m_dim; ++j)
                for (std::size_t k = 0; k < m_dim; ++k)
                    if (!check(i, j, k)) return false;
        return true;
    }
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, m_dim - 1);
    for (std::size_t t = 0; t < max_checks; ++t)
        if (!check(pick(rng), pick(rng), pick(rng))) return false;
    return true;
}

bool Algebra::unit_ok() const {
    for (std::size_t i = 0; i < m_dim; ++i) {
        const Vector e = basis(i);
        if (multiply(m_unit, e) != e || multiply(e, m_unit) != e) return false;
    }
    return true;
}

bool Algebra::operator==(const Algebra& o) const {
    return m_field == o.m_field && m_name == o.m_name && m_labels == o.m_labels && m_table == o.m_table &&
           m_unit == o.m_unit && m_generators == o.m_generators;
}

} // namespace repdim
