#include "repdim/matrix.hpp"

namespace repdim {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
    Vector v = zero_vector(field, n);
    v[i] = field.one();
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vector sub(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sub");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Scalar& c, const Vector& v) {
    Vector out = v;
    for (auto& x : out) x *= c;
    return out;
}

void axpy(Vector& y, const Scalar& c, const Vector& x) {
    if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i].add_product(c, x[i]);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : m_field(std::move(field)), m_rows(rows), m_cols(cols), m_data(rows * cols, m_field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "from_columns");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "from_rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(m_data.begin() + static_cast<std::ptrdiff_t>(i * m_cols),
                  m_data.begin() + static_cast<std::ptrdiff_t>((i + 1) * m_cols));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) v.push_back((*this)(i, j));
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != m_rows) throw Error(ErrorCode::DimensionMismatch, "set_column");
    for (std::size_t i = 0; i < m_rows; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (m_cols != b.m_rows) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix out(m_field, m_rows, b.m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        Scalar* orow = &out.m_data[i * b.m_cols];
        for (std::size_t k = 0; k < m_cols; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            const Scalar* brow = &b.m_data[k * b.m_cols];
            for (std::size_t j = 0; j < b.m_cols; ++j)
                if (!brow[j].is_zero()) orow[j].add_product(a, brow[j]);
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    if (m_cols != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vector out = zero_vector(m_field, m_rows);
    for (std::size_t k = 0; k < m_cols; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < m_rows; ++i) {
            const Scalar& a = (*this)(i, k);
            if (!a.is_zero()) out[i].add_product(a, v[k]);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& b) const {
    Matrix out = *this;
    out.add_scaled(m_field.one(), b);
    return out;
}

Matrix Matrix::operator-(const Matrix& b) const {
    Matrix out = *this;
    out.add_scaled(m_field.from_int(-1), b);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& x : out.m_data) x *= c;
    return out;
}

Matrix& Matrix::add_scaled(const Scalar& c, const Matrix& b) {
    if (m_rows != b.m_rows || m_cols != b.m_cols) throw Error(ErrorCode::DimensionMismatch, "matrix add");
    if (c.is_zero()) return *this;
    for (std::size_t i = 0; i < m_data.size(); ++i)
        if (!b.m_data[i].is_zero()) m_data[i].add_product(c, b.m_data[i]);
    return *this;
}

Matrix Matrix::transpose() const {
    Matrix out(m_field, m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i)
        for (std::size_t j = 0; j < m_cols; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > m_rows || c0 + nc > m_cols) throw Error(ErrorCode::DimensionMismatch, "block");
    Matrix out(m_field, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.m_rows > m_rows || c0 + b.m_cols > m_cols) throw Error(ErrorCode::DimensionMismatch, "set_block");
    for (std::size_t i = 0; i < b.m_rows; ++i)
        for (std::size_t j = 0; j < b.m_cols; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
    for (const auto& x : m_data)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (m_rows != m_cols) return false;
    for (std::size_t i = 0; i < m_rows; ++i)
        for (std::size_t j = 0; j < m_cols; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& b) const {
    return m_rows == b.m_rows && m_cols == b.m_cols && m_data == b.m_data;
}

Matrix Matrix::unflatten(const Field& field, std::size_t rows, std::size_t cols, const Vector& v) {
    if (v.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "unflatten");
    Matrix m(field, rows, cols);
    m.m_data = v;
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

} // namespace repdim
