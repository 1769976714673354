#pragma once

// Exact elimination: reduced echelon forms, kernels, inverses, subspace
// bookkeeping and characteristic polynomials.

#include <optional>
#include <vector>

#include "repdim/matrix.hpp"

namespace repdim {

struct RowEchelon {
    Matrix rref;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Gauss-Jordan with the first nonzero entry of each column as pivot.
RowEchelon row_reduce(Matrix a);
/// Right kernel {x : a x = 0}; one basis vector per free column, with a 1 in
/// that column.
std::vector<Vector> kernel(const Matrix& a);
std::size_t rank(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Matrix inverse_or_throw(const Matrix& a);
std::optional<Vector> solve(const Matrix& a, const Vector& b);

struct SolveResult {
    std::optional<Matrix> particular; // empty if the system is inconsistent or no rhs was given
    std::vector<Vector> kernel;
    std::size_t rank = 0;
};

/// Fraction-free (Bareiss) elimination over characteristic zero, plain
/// Gaussian elimination over F_p. The kernel basis is the reduced echelon
/// one, so both routes agree.
SolveResult solve_and_kernel(const Matrix& a, const std::optional<Matrix>& b = std::nullopt);

/// Forward Bareiss sweep: returns the echelon matrix whose pivot entries are
/// leading principal minors of the row-permuted input.
RowEchelon bareiss_echelon(Matrix a);

/// Incrementally maintained, fully reduced row-echelon basis of a subspace of
/// k^n. Optionally records how every basis row is combined from the vectors
/// passed to add().
class Subspace {
public:
    Subspace(Field field, std::size_t ambient, bool track = false);

    std::size_t ambient() const { return m_n; }
    std::size_t dim() const { return m_rows.size(); }
    const Field& field() const { return m_field; }

    /// Returns true if v was independent of the current span (and adds it).
    bool add(const Vector& v);
    bool contains(const Vector& v) const;
    /// v minus its projection onto the pivot coordinates.
    Vector reduce(Vector v) const;
    /// Coefficients expressing v in the accepted inputs (insertion order);
    /// requires tracking.
    std::optional<Vector> coordinates(const Vector& v) const;

    const std::vector<Vector>& basis() const { return m_rows; }
    const std::vector<std::size_t>& pivots() const { return m_pivots; }
    /// Accepted inputs, in insertion order.
    const std::vector<Vector>& inputs() const { return m_inputs; }
    /// Standard basis indices not used as pivots (a complement).
    std::vector<std::size_t> non_pivots() const;

private:
    Field m_field;
    std::size_t m_n;
    bool m_track;
    std::vector<Vector> m_rows;
    std::vector<std::size_t> m_pivots;
    std::vector<std::ptrdiff_t> m_pivot_row; // column -> row or -1
    std::vector<Vector> m_combos;
    std::vector<Vector> m_inputs;
};

/// Basis of span(vectors) in reduced echelon form.
std::vector<Vector> span_basis(const Field& field, std::size_t n, const std::vector<Vector>& vectors);
/// Basis of U ∩ W.
std::vector<Vector> intersect(const Field& field, std::size_t n, const std::vector<Vector>& u,
                              const std::vector<Vector>& w);
std::vector<Vector> column_space(const Matrix& a);

// ---- univariate polynomials, constant term first ----

using Poly = std::vector<Scalar>;

void poly_trim(Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic
Poly poly_derivative(const Poly& p);
Scalar poly_eval(const Poly& p, const Scalar& x);
Matrix poly_eval(const Poly& p, const Matrix& m);
Poly squarefree_part(const Poly& p);

/// Characteristic polynomial via Hessenberg reduction.
Poly charpoly(const Matrix& m);
/// Distinct roots of p lying in its field (sorted by text form for
/// determinism). Over F_p this is exhaustive; over Q and Q(zeta_l) candidates
/// come from a floating-point root finder and are accepted only after exact
/// verification, so every returned root is exact but roots may be missed for
/// badly conditioned input.
std::vector<Scalar> roots_in_field(const Poly& p);

} // namespace repdim
