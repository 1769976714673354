#include "repdim/linalg.hpp"

#include <algorithm>

namespace repdim {

RowEchelon row_reduce(Matrix a) {
    const Field field = a.field();
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        const Scalar inv = a(row, col).inv();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Scalar f = -a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j).add_product(f, a(row, j));
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(a);
    return out;
}

namespace {

std::vector<Vector> kernel_from_rref(const RowEchelon& e) {
    const Matrix& r = e.rref;
    const Field& field = r.field();
    std::vector<bool> is_pivot(r.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < r.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(field, r.cols());
        v[free] = field.one();
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -r(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<Vector> kernel(const Matrix& a) { return kernel_from_rref(row_reduce(a)); }

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix::identity(a.field(), n));
    auto e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return e.rref.block(0, n, n, n);
}

Matrix inverse_or_throw(const Matrix& a) {
    auto inv = inverse(a);
    if (!inv) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
    return *inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    Matrix rhs(a.field(), b.size(), 1);
    rhs.set_column(0, b);
    auto res = solve_and_kernel(a, rhs);
    if (!res.particular) return std::nullopt;
    return res.particular->column(0);
}

RowEchelon bareiss_echelon(Matrix a) {
    RowEchelon out;
    Scalar prev = a.field().one();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = a.rows();
        for (std::size_t i = row; i < a.rows(); ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        const Scalar p = a(row, col);
        const Scalar prev_inv = prev.inv();
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            const Scalar f = a(i, col);
            for (std::size_t j = col + 1; j < a.cols(); ++j) {
                // exact division: the result is a minor of the input
                a(i, j) = (p * a(i, j) - f * a(row, j)) * prev_inv;
            }
            a(i, col) = a.field().zero();
        }
        prev = p;
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(a);
    return out;
}

SolveResult solve_and_kernel(const Matrix& a, const std::optional<Matrix>& b) {
    if (b && b->rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs row count differs");
    const Field& field = a.field();
    const std::size_t nrhs = b ? b->cols() : 0;
    Matrix aug(field, a.rows(), a.cols() + nrhs);
    aug.set_block(0, 0, a);
    if (b) aug.set_block(0, a.cols(), *b);

    RowEchelon e;
    if (field.kind() == FieldKind::Prime) {
        e = row_reduce(std::move(aug));
    } else {
        // Bareiss forward sweep, then normalise and back-substitute.
        e = bareiss_echelon(std::move(aug));
        Matrix& r = e.rref;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            const std::size_t pc = e.pivots[k];
            const Scalar inv = r(k, pc).inv();
            for (std::size_t j = pc; j < r.cols(); ++j) r(k, j) *= inv;
            for (std::size_t i = 0; i < k; ++i) {
                if (r(i, pc).is_zero()) continue;
                const Scalar f = -r(i, pc);
                for (std::size_t j = pc; j < r.cols(); ++j)
                    if (!r(k, j).is_zero()) r(i, j).add_product(f, r(k, j));
            }
        }
    }

    SolveResult out;
    RowEchelon left;
    left.rref = e.rref.block(0, 0, e.rref.rows(), a.cols());
    bool consistent = true;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
        if (e.pivots[k] < a.cols()) {
            left.pivots.push_back(e.pivots[k]);
        } else {
            consistent = false;
        }
    }
    out.rank = left.pivots.size();
    out.kernel = kernel_from_rref(left);
    if (b && consistent) {
        Matrix x(field, a.cols(), nrhs);
        for (std::size_t k = 0; k < left.pivots.size(); ++k)
            for (std::size_t j = 0; j < nrhs; ++j) x(left.pivots[k], j) = e.rref(k, a.cols() + j);
        out.particular = std::move(x);
    }
    return out;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Field field, std::size_t ambient, bool track)
    : m_field(std::move(field)), m_n(ambient), m_track(track), m_pivot_row(ambient, -1) {}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != m_n) throw Error(ErrorCode::DimensionMismatch, "subspace reduce");
    for (std::size_t r = 0; r < m_rows.size(); ++r) {
        const Scalar c = v[m_pivots[r]];
        if (c.is_zero()) continue;
        axpy(v, -c, m_rows[r]);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::add(const Vector& v) {
    Vector combo;
    if (m_track) {
        combo = zero_vector(m_field, m_inputs.size() + 1);
        combo.back() = m_field.one();
        for (std::size_t r = 0; r < m_rows.size(); ++r) m_combos[r].push_back(m_field.zero());
    }
    Vector w = v;
    if (w.size() != m_n) throw Error(ErrorCode::DimensionMismatch, "subspace add");
    for (std::size_t r = 0; r < m_rows.size(); ++r) {
        const Scalar c = w[m_pivots[r]];
        if (c.is_zero()) continue;
        axpy(w, -c, m_rows[r]);
        if (m_track) axpy(combo, -c, m_combos[r]);
    }
    std::size_t piv = m_n;
    for (std::size_t j = 0; j < m_n; ++j)
        if (!w[j].is_zero()) { piv = j; break; }
    if (piv == m_n) {
        if (m_track)
            for (auto& c : m_combos) c.pop_back();
        return false;
    }
    const Scalar inv = w[piv].inv();
    for (auto& x : w) x *= inv;
    if (m_track)
        for (auto& x : combo) x *= inv;
    for (std::size_t r = 0; r < m_rows.size(); ++r) {
        const Scalar c = m_rows[r][piv];
        if (c.is_zero()) continue;
        axpy(m_rows[r], -c, w);
        if (m_track) axpy(m_combos[r], -c, combo);
    }
    m_pivot_row[piv] = static_cast<std::ptrdiff_t>(m_rows.size());
    m_rows.push_back(std::move(w));
    m_pivots.push_back(piv);
    if (m_track) m_combos.push_back(std::move(combo));
    m_inputs.push_back(v);
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (!m_track) throw Error(ErrorCode::AlgorithmFailure, "coordinates() needs a tracking subspace");
    if (!contains(v)) return std::nullopt;
    Vector out = zero_vector(m_field, m_inputs.size());
    for (std::size_t r = 0; r < m_rows.size(); ++r) {
        const Scalar& c = v[m_pivots[r]];
        if (!c.is_zero()) axpy(out, c, m_combos[r]);
    }
    return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m_n; ++j)
        if (m_pivot_row[j] < 0) out.push_back(j);
    return out;
}

std::vector<Vector> span_basis(const Field& field, std::size_t n, const std::vector<Vector>& vectors) {
    Subspace s(field, n);
    for (const auto& v : vectors) s.add(v);
    return s.basis();
}

std::vector<Vector> intersect(const Field& field, std::size_t n, const std::vector<Vector>& u,
                              const std::vector<Vector>& w) {
    if (u.empty() || w.empty()) return {};
    // solve sum a_i u_i - sum b_j w_j = 0
    Matrix m(field, n, u.size() + w.size());
    for (std::size_t i = 0; i < u.size(); ++i) m.set_column(i, u[i]);
    for (std::size_t j = 0; j < w.size(); ++j) m.set_column(u.size() + j, scale(field.from_int(-1), w[j]));
    std::vector<Vector> out;
    Subspace s(field, n);
    for (const auto& k : kernel(m)) {
        Vector v = zero_vector(field, n);
        for (std::size_t i = 0; i < u.size(); ++i) axpy(v, k[i], u[i]);
        s.add(v);
    }
    return s.basis();
}

std::vector<Vector> column_space(const Matrix& a) {
    Subspace s(a.field(), a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) s.add(a.column(j));
    return s.basis();
}

} // namespace repdim
