#pragma once

// Endomorphism algebras, global dimension and the upper-bound witnesses for
// representation dimension.

#include <filesystem>
#include <optional>

#include "repdim/homological.hpp"
#include "repdim/mackey.hpp"
#include "repdim/symform.hpp"

namespace repdim {

/// End(M) on a basis of hom_space(M, M), product = composition.
AlgebraPtr end_algebra(const Representation& m);

/// End of a basic module ⊕ N_i (pairwise non-isomorphic indecomposables with
/// split local endomorphism rings). Basis: per i the identity of N_i then a
/// basis of rad End(N_i), then Hom(N_j, N_i) for i != j. The identities and
/// a basis of rad / rad^2 are the designated generators.
struct BasicEnd {
    AlgebraPtr algebra;
    WedderburnData wedderburn; // radical and idempotents read off the blocks
    std::vector<Representation> summands;
};
/// SplitError if some End(N_i) is not local with residue field k.
BasicEnd basic_end(const std::vector<Representation>& distinct, std::string name = "End");
/// End of the basic module Morita equivalent to End(M).
BasicEnd basic_end(const DecompositionReport& m, std::string name = "End");

struct GlobalDimReport {
    std::vector<std::optional<std::size_t>> pd; // per simple; empty when ≥ cap
    std::size_t cap = 0;
    std::optional<std::size_t> value;           // max of pd when all finite
    std::size_t algebra_dim = 0;
    /// "d", or "≥ cap" when some resolution hit the cap
    std::string text() const;
};
/// cap defaults to 2 dim A.
GlobalDimReport global_dimension(const AlgebraStructure& s, std::optional<std::size_t> cap = std::nullopt);
GlobalDimReport global_dimension(const AlgebraPtr& a, std::optional<std::size_t> cap = std::nullopt);
/// gldim End(M) through the basic algebra of M.
GlobalDimReport gldim_end(const Representation& m, std::uint64_t seed = 0, std::optional<std::size_t> cap = std::nullopt);
GlobalDimReport gldim_end(const DecompositionReport& m, std::optional<std::size_t> cap = std::nullopt);

/// gldim End(⊕ all indecomposables) for a serial algebra; 0 when
/// semisimple. SerialityError otherwise.
std::size_t repdim_finite_type(const AlgebraPtr& a);

/// Is the Λ-Λ-bimodule Λ a summand of Λ ⊗_Γ Λ? First looks for the Casimir
/// witness (μ invertible); otherwise decides it from the central elements of
/// Λ ⊗_Γ Λ and the centralizer of Γ, which needs dim Λ ⊗_Γ Λ ≤ `limit`
/// (CapExceeded beyond).
struct SeparableDivision {
    bool divides = false;
    bool by_casimir = false;
};
SeparableDivision separable_division_check(const SubalgebraEmbedding& emb, const SymmetrizingForm& s,
                                           std::size_t limit = 400, bool try_casimir = true);

struct WitnessCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct UpperBoundWitness {
    std::string instance;   // e.g. "hecke n=4 l=2"
    int n = 0, ell = 0, m = 0;
    std::size_t module_dim = 0, induced_dim = 0, basic_end_dim = 0, summand_classes = 0;
    std::vector<WitnessCheck> checks;
    GlobalDimReport gldim;           // End_Λ of the induced module
    std::optional<GlobalDimReport> gldim_sub; // End_Γ(M) when computed
    std::size_t claimed_upper = 0;   // 2m
    bool passed() const;
};

struct WitnessOptions {
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> persist; // directory for intermediate modules
    bool compare_sub = true;                      // also compute gldim End_Γ(M)
    std::optional<std::size_t> syzygy_cap;        // default 2 dim of the basic End
};

/// Λ ⊇ Γ with the symmetrizing form on Λ and the module M over Γ that the
/// witnesses induce.
struct InductionSetting {
    AlgebraPtr lambda;
    SubalgebraEmbedding embedding;
    SymmetrizingForm form;
    Representation m;
    int n = 0, ell = 0;
    std::optional<SylowSetting> sylow; // group case
};
/// H_q(A_{n-1}), q of order ℓ, over its maximal ℓ-parabolic.
InductionSetting hecke_setting(int n, int ell);
/// kS_n over F_p, over a Sylow p-subgroup.
InductionSetting group_setting(int n, int p);

/// Type A Hecke algebra at a primitive ℓ-th root of unity over Q(ζ_ℓ)
/// (ℓ = 2: q = -1 over Q), the maximal ℓ-parabolic 𝓑 and M = ⊗ M_i with
/// M_i all indecomposables of H(A_{ℓ-1}).
UpperBoundWitness witness_upper_hecke(int n, int ell, const WitnessOptions& opt = {});
/// kS_n over F_p, P Sylow, M = ⊗ (J_1 ⊕ ... ⊕ J_p) over the p-cycles.
UpperBoundWitness witness_upper_group(int n, int p, const WitnessOptions& opt = {});

/// Decomposition of Λ ⊗_Γ M, induced one summand of M at a time.
DecompositionReport decompose_induced(const SubalgebraEmbedding& emb, const Representation& m, std::uint64_t seed = 0);

struct GldimComparison {
    GlobalDimReport induced, sub;
    bool holds = false; // induced ≤ sub
};
GldimComparison verify_gldim_comparison(const SubalgebraEmbedding& emb, const Representation& m,
                                        std::uint64_t seed = 0);

struct XiAdditivity {
    GlobalDimReport tensor, first, second;
    bool holds = false; // tensor = first + second
};
XiAdditivity verify_xi_additivity(const Representation& m1, const Representation& m2, std::uint64_t seed = 0);

} // namespace repdim
