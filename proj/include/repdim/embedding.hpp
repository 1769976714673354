#pragma once

// Subalgebras Γ ⊆ Λ over which Λ is free as a right module.

#include "repdim/algebra.hpp"

namespace repdim {

struct SubalgebraEmbedding {
    AlgebraPtr ambient, sub;
    Matrix inclusion;               // dim Λ x dim Γ
    std::vector<Vector> free_basis; // a_j in Λ, a_0 = 1; Λ = ⊕ a_j Γ
    Matrix split;                   // Λ coordinates -> coefficient of a_j γ_k at j*dim Γ + k
    /// Basis indices of Λ spanning a complement B with Λ = Γ ⊕ B, when the
    /// basis is a group basis (empty otherwise).
    std::vector<std::size_t> complement;
    std::string label;

    std::size_t rank() const { return free_basis.size(); }
    Vector include(const Vector& gamma) const { return inclusion * gamma; }
    /// λ = Σ_i a_i γ_i; returns the γ_i in Γ coordinates.
    std::vector<Vector> decompose(const Vector& lambda) const;
    /// x a_j = Σ_i a_i γ_ij; result[j][i] = γ_ij.
    std::vector<std::vector<Vector>> rewrite(const Vector& x) const;
};

/// Checks the inclusion is a unital algebra map and that {a_j γ_k} is a basis
/// (FreenessFailure otherwise).
SubalgebraEmbedding make_embedding(AlgebraPtr ambient, AlgebraPtr sub, Matrix inclusion,
                                   std::vector<Vector> free_basis, std::vector<std::size_t> complement,
                                   std::string label);

/// span{T_w : w in S_λ} inside the type-A Hecke algebra, with free basis T_d
/// over minimal left coset representatives d.
SubalgebraEmbedding parabolic_subalgebra(const AlgebraPtr& hecke, const std::vector<int>& composition);
/// (ℓ, ..., ℓ, 1, ..., 1) with m = n / ℓ parts equal to ℓ.
std::vector<int> ell_parabolic_composition(int n, int ell);
SubalgebraEmbedding max_ell_parabolic(const AlgebraPtr& hecke, int ell);
/// kH ⊆ kG with free basis over left coset representatives.
SubalgebraEmbedding group_subalgebra(const AlgebraPtr& kg, const SubgroupData& h);
/// k·1 ⊆ Λ.
SubalgebraEmbedding scalar_subalgebra(const AlgebraPtr& a);
/// Λ ⊆ Λ.
SubalgebraEmbedding identity_embedding(const AlgebraPtr& a);

} // namespace repdim
