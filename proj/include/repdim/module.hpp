#pragma once

// Left modules given by matrices for the designated generators of an
// algebra. Basis-element actions are derived from the algebra's word basis
// and cached on first use.

#include <atomic>
#include <memory>
#include <mutex>

#include "repdim/embedding.hpp"

namespace repdim {

class Representation {
public:
    Representation() = default;
    /// Checks shapes only; use is_module() for the relations.
    Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action, std::string label = {});

    const AlgebraPtr& algebra() const { return m_algebra; }
    const Field& field() const { return m_algebra->field(); }
    std::size_t dim() const { return m_dim; }
    const std::vector<Matrix>& action() const { return m_action; }
    const std::string& label() const { return m_label; }
    void set_label(std::string label) { m_label = std::move(label); }

    /// Matrices of every algebra basis element (lazy, shared between copies).
    const std::vector<Matrix>& basis_action() const;
    /// Matrix by which the algebra element x acts (from the cache when it
    /// exists, otherwise from the generator words x needs).
    Matrix act(const Vector& x) const;
    /// x · v without forming the full matrix of x when the basis action is
    /// not cached yet (walks the generator words).
    Vector apply(const Vector& x, const Vector& v) const;

private:
    struct Cache {
        std::once_flag once;
        std::atomic<bool> ready{false};
        std::vector<Matrix> mats;
    };
    AlgebraPtr m_algebra;
    std::size_t m_dim = 0;
    std::vector<Matrix> m_action;
    std::string m_label;
    std::shared_ptr<Cache> m_cache = std::make_shared<Cache>();
};

/// Module relations: unit acts as 1 and g·(e_j·v) = (g e_j)·v for every
/// generator g and basis element e_j.
bool is_module(const Representation& m);

Representation regular_module(const AlgebraPtr& a);
/// The one-dimensional module on which every generator acts by the given
/// scalar (e.g. 1 for the trivial module of a group algebra).
Representation scalar_module(const AlgebraPtr& a, const std::vector<Scalar>& values, std::string label = {});
/// The same matrices viewed over another algebra with matching generators.
/// RelationViolation if they do not define a module there.
Representation transport(const Representation& m, const AlgebraPtr& target);

struct Submodule {
    Representation module;
    Matrix basis; // dim M x dim U, columns in M-coordinates
};
/// Submodule spanned by the (A-stable) vectors; the basis is echelonized.
Submodule submodule(const Representation& m, const std::vector<Vector>& span);
/// Smallest submodule containing the vectors.
std::vector<Vector> submodule_closure(const Representation& m, const std::vector<Vector>& vectors);

struct Quotient {
    Representation module;
    Matrix projection;                  // dim(M/U) x dim M
    std::vector<std::size_t> complement; // basis indices of M representing M/U
};
Quotient quotient_module(const Representation& m, const std::vector<Vector>& sub);

Representation direct_sum(const std::vector<Representation>& parts, std::string label = {});

/// Basis of Hom_A(M, N) as dim N x dim M matrices, in reduced echelon order
/// of their row-major flattenings.
std::vector<Matrix> hom_space(const Representation& m, const Representation& n);
bool is_homomorphism(const Representation& m, const Representation& n, const Matrix& f);

struct ModuleHom {
    Representation source, target;
    Matrix matrix;
};

/// Λ ⊗_Γ M on the basis a_j ⊗ m_k (index j * dim M + k).
Representation induce(const SubalgebraEmbedding& emb, const Representation& m);
Representation restrict_module(const Representation& m, const SubalgebraEmbedding& emb);

/// Kronecker product module over tensor_algebra(M.algebra, N.algebra)
/// (or the supplied tensor algebra with the same generator order).
Representation outer_tensor(const Representation& m, const Representation& n, AlgebraPtr tensor = nullptr);
Representation outer_tensor(const std::vector<Representation>& parts);

/// Jordan block module k[x]/(x^size) for a cyclic group algebra: the
/// generator acts by a unipotent Jordan block.
Representation jordan_module(const AlgebraPtr& cyclic_group_algebra, int size);

/// Text form: header, dim, label, then one matrix per generator.
std::string serialize_module(const Representation& m);
Representation deserialize_module(const AlgebraPtr& algebra, const std::string& text);

} // namespace repdim
