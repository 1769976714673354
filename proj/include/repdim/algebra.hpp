#pragma once

// Finite-dimensional algebras by sparse structure constants.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repdim/coxeter.hpp"
#include "repdim/linalg.hpp"

namespace repdim {

struct Term {
    std::size_t k;
    Scalar c;
    bool operator==(const Term&) const = default;
};

enum class GroupBasisKind { Hecke, Group };

/// Present when the basis is indexed by group elements: T_w for Hecke
/// algebras, g for group algebras.
struct GroupBasisInfo {
    GroupBasisKind kind = GroupBasisKind::Group;
    CoxeterType type = CoxeterType::A; // Hecke only
    int n = 0;
    std::vector<SignedPerm> elements;
    std::vector<int> lengths; // Hecke only
    std::optional<Scalar> q, Q;
    std::size_t identity_index() const;
};

/// Products of designated generators that form a basis; basis vector e_j
/// equals sum_i change(i, j) * product(words[i]).
struct WordBasis {
    std::vector<std::vector<std::size_t>> words; // generator indices, leftmost first
    std::vector<std::size_t> parent;              // words[i] = gen * words[parent[i]]
    Matrix change;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    /// table has dim*dim entries; table[i*dim+j] = e_i * e_j. An empty
    /// generator list designates the full basis.
    Algebra(Field field, std::string name, std::vector<std::string> labels, std::vector<std::vector<Term>> table,
            Vector unit, std::vector<Vector> generators = {}, std::optional<GroupBasisInfo> info = std::nullopt);

    const Field& field() const { return m_field; }
    const std::string& name() const { return m_name; }
    std::size_t dim() const { return m_dim; }
    const std::vector<std::string>& labels() const { return m_labels; }
    const std::vector<Term>& product(std::size_t i, std::size_t j) const { return m_table[i * m_dim + j]; }
    const Vector& unit() const { return m_unit; }
    const std::vector<Vector>& generators() const { return m_generators; }
    const std::optional<GroupBasisInfo>& group_info() const { return m_info; }
    const WordBasis& word_basis() const { return m_words; }

    Vector basis(std::size_t i) const { return unit_vector(m_field, m_dim, i); }
    Vector zero() const { return zero_vector(m_field, m_dim); }
    Vector multiply(const Vector& a, const Vector& b) const;
    /// Matrices of x -> a x and x -> x a in the basis.
    Matrix left_matrix(const Vector& a) const;
    Matrix right_matrix(const Vector& a) const;

    /// (e_i e_j) e_k == e_i (e_j e_k) on all triples (or a seeded sample of
    /// max_checks triples when there are more).
    bool is_associative(std::size_t max_checks = 300000) const;
    bool unit_ok() const;
    bool operator==(const Algebra& other) const;

    /// Text format: header, labels, then `i j k scalar` lines.
    std::string serialize() const;
    static Algebra deserialize(const std::string& text);

private:
    Field m_field;
    std::string m_name;
    std::size_t m_dim;
    std::vector<std::string> m_labels;
    std::vector<std::vector<Term>> m_table;
    Vector m_unit;
    std::vector<Vector> m_generators;
    std::optional<GroupBasisInfo> m_info;
    WordBasis m_words;
};

/// Hecke algebra of type A_{n-1} (S_n), B_n or D_n with T_s quadratic
/// relation (T_s + 1)(T_s - q_s) = 0; q_s = Q for t_0 in type B.
AlgebraPtr hecke_algebra(CoxeterType type, int n, const Scalar& q, std::optional<Scalar> Q = std::nullopt);
AlgebraPtr group_algebra(const SubgroupData& g, const Field& field);
/// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
AlgebraPtr truncated_polynomial(const Field& field, int n);
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
/// Lower triangular n x n matrices, basis E_ij (i >= j) in row-major order.
AlgebraPtr lower_triangular(const Field& field, int n);
/// The field itself as a 1-dimensional algebra.
AlgebraPtr ground_algebra(const Field& field);
/// Subalgebra spanned by the given (independent) vectors, with generators
/// given in ambient coordinates. Structure constants in the span basis.
AlgebraPtr subalgebra(const Algebra& ambient, const std::vector<Vector>& span, const std::vector<Vector>& generators,
                      std::string name, std::vector<std::string> labels,
                      std::optional<GroupBasisInfo> info = std::nullopt);
/// A/I for a two-sided ideal I, on the complement spanned by the non-pivot
/// basis vectors of I. Returns the quotient and the chosen basis indices.
std::pair<AlgebraPtr, std::vector<std::size_t>> quotient_algebra(const Algebra& a, const std::vector<Vector>& ideal);

/// Defining relations of the Hecke presentation, checked exhaustively.
bool hecke_relations_hold(const Algebra& h);

/// Linear map on basis coordinates that is unital and multiplicative.
struct AlgebraMap {
    AlgebraPtr source, target;
    Matrix matrix; // dim target x dim source
    Vector apply(const Vector& x) const { return matrix * x; }
};

/// Determined by images of the source generators; RelationViolation unless
/// the extension is multiplicative and unital.
AlgebraMap algebra_map(const AlgebraPtr& source, const AlgebraPtr& target, const std::vector<Vector>& images);
AlgebraMap compose(const AlgebraMap& second, const AlgebraMap& first);

} // namespace repdim
