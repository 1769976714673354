#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "repdim/field.hpp"

namespace repdim {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);

/// Dense row-major matrix; every entry lives in the same field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);
    static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);

    const Field& field() const { return m_field; }
    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);

    Matrix operator*(const Matrix& b) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix scaled(const Scalar& c) const;
    Matrix& add_scaled(const Scalar& c, const Matrix& b);
    Matrix transpose() const;
    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& b) const;
    bool operator!=(const Matrix& b) const { return !(*this == b); }

    /// Row-major flattening (used as coordinates in Hom spaces).
    Vector flatten() const { return m_data; }
    static Matrix unflatten(const Field& field, std::size_t rows, std::size_t cols, const Vector& v);

private:
    Field m_field;
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Scalar> m_data;
};

/// Block diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);

} // namespace repdim
