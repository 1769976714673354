#pragma once

// Symmetrizing forms, parabolic subalgebras, relative Casimir elements and
// trace maps.

#include <optional>

#include "repdim/embedding.hpp"
#include "repdim/homological.hpp"

namespace repdim {

struct SymmetrizingForm {
    AlgebraPtr algebra;
    Vector coords; // s(b_i)

    Scalar operator()(const Vector& x) const;
};

/// s(b_i b_j).
Matrix gram_matrix(const SymmetrizingForm& s);
/// s = coefficient of the identity, for algebras whose unit is a basis
/// element (group and Hecke algebras, their tensor products). Checked to be
/// symmetric and nondegenerate; NotSymmetricWithThisForm otherwise.
SymmetrizingForm standard_form(const AlgebraPtr& a);
/// Wraps given coordinates after the same checks.
SymmetrizingForm make_form(const AlgebraPtr& a, Vector coords);
/// s ∘ inclusion on Γ (unchecked).
SymmetrizingForm restrict_form(const SymmetrizingForm& s, const SubalgebraEmbedding& emb);
bool is_symmetrizing(const SymmetrizingForm& s);

/// b_j^* with s(b_i b_j^*) = δ_ij.
std::vector<Vector> dual_basis(const SymmetrizingForm& s);

struct ParabolicCertificate {
    bool gamma_symmetric = false;    // s restricted to Γ symmetrizing
    bool free = false;               // Λ = ⊕ a_j Γ
    bool complement_bimodule = false; // B = ⊕_{j>0} a_j Γ is a Γ-Γ-bimodule
    bool complement_in_kernel = false; // B ⊆ Ker s
    std::vector<Vector> complement;   // basis of B
    bool ok() const { return gamma_symmetric && free && complement_bimodule && complement_in_kernel; }
};
/// CertificationFailure naming the first failed clause.
ParabolicCertificate parabolic_certify(const SubalgebraEmbedding& emb, const SymmetrizingForm& s);

/// Elements of Λ ⊗_Γ Λ as coordinates on {a_j ⊗ b_k}, index j * dim Λ + k.
Vector tensor_over(const SubalgebraEmbedding& emb, const Vector& x, const Vector& y);
/// z · t and t · z.
Vector tensor_left(const SubalgebraEmbedding& emb, const Vector& z, const Vector& t);
Vector tensor_right(const SubalgebraEmbedding& emb, const Vector& t, const Vector& z);

struct CasimirElement {
    SubalgebraEmbedding embedding;
    std::vector<std::pair<Vector, Vector>> pairs; // c = Σ x_i ⊗ y_i
    Vector tensor;                                // in Λ ⊗_Γ Λ coordinates
    Vector mu;                                    // Σ x_i y_i
};
/// c = Σ_j a_j ⊗ a_j' where π(a_j' a_k) = δ_jk and π: Λ -> Γ is the
/// projection along B.
CasimirElement casimir(const SubalgebraEmbedding& emb, const SymmetrizingForm& s);
bool casimir_is_central(const CasimirElement& c);
bool mu_invertible(const CasimirElement& c);

/// tr(f)(m) = Σ x_i f(y_i m) for Γ-linear f: M -> N between Λ-modules.
/// LinearityFailure if the result is not Λ-linear.
Matrix trace_map(const Matrix& f, const Representation& m, const Representation& n, const CasimirElement& c);

struct TraceReport {
    std::size_t samples = 0;
    std::size_t tr_res_failures = 0;   // tr(res f) != μ f
    std::size_t transitivity_failures = 0; // tr_Γ^Λ tr_k^Γ != tr_k^Λ
    bool ok() const { return samples > 0 && tr_res_failures == 0 && transitivity_failures == 0; }
};
/// On random Λ-linear maps and random k-linear maps between the sample
/// modules (`samples` of each per ordered pair).
TraceReport verify_trace_identities(const SubalgebraEmbedding& emb, const SymmetrizingForm& s,
                                    const std::vector<Representation>& modules, std::uint64_t seed,
                                    std::size_t samples = 20);

struct ExtRestriction {
    std::size_t ext_lambda = 0, ext_gamma = 0, kernel_dim = 0;
    bool injective() const { return kernel_dim == 0; }
};
/// Ext^i_Λ(M, N) -> Ext^i_Γ(M, N) realized on Hom(Ω^i M, N) modulo maps
/// through projectives. The cap (default dim Λ) applies to both sides.
ExtRestriction ext_restriction(const AlgebraStructure& lambda, const AlgebraStructure& gamma,
                               const SubalgebraEmbedding& emb, const Representation& m, const Representation& n,
                               std::size_t i, std::optional<std::size_t> cap = std::nullopt);

} // namespace repdim
