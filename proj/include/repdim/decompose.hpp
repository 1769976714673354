#pragma once

// Krull-Schmidt decomposition, isomorphism tests, add(M) membership.

#include <cstdint>

#include "repdim/module.hpp"
#include "repdim/wedderburn.hpp"

namespace repdim {

/// Algebra on a basis of endomorphisms (closed under composition, identity
/// in the span); e_i e_j is the composite e_i ∘ e_j. `generators` are basis
/// indices designated as generators (all of them when empty).
AlgebraPtr endomorphism_algebra(const std::vector<Matrix>& basis, std::string name,
                                const std::vector<std::size_t>& generators = {});

/// Isomorphism invariant used to order summands: dim, then the ranks of
/// ρ(g), ρ(g) - 1 and ρ(g) + 1 for each generator g.
std::vector<std::size_t> fingerprint(const Representation& m);

struct Summand {
    Representation module;
    Matrix basis; // columns in coordinates of the decomposed module
};

struct SummandClass {
    Representation module; // first member
    std::size_t multiplicity = 0;
    std::vector<std::size_t> members; // indices into summands
};

struct DecompositionReport {
    std::vector<Summand> summands;     // sorted by (dim, fingerprint), stable
    std::vector<SummandClass> classes; // in order of first member
    Matrix witness;                    // columns: the summand bases, in order
};

/// Splits M by Fitting decompositions of endomorphisms with eigenvalues in
/// the base field. SplitError if some piece has a non-local endomorphism
/// ring that cannot be split this way.
DecompositionReport decompose(const Representation& m, std::uint64_t seed = 0);
/// Same, reusing a known basis of End(M).
DecompositionReport decompose(const Representation& m, const std::vector<Matrix>& endo, std::uint64_t seed = 0);
/// Decomposition of p_1 ⊕ ... ⊕ p_r, one part at a time.
DecompositionReport decompose_sum(const std::vector<Representation>& parts, std::uint64_t seed = 0);

/// For modules with local endomorphism rings.
bool isomorphic_indecomposables(const Representation& a, const Representation& b);
/// Isomorphism via decompositions.
bool isomorphic(const Representation& a, const Representation& b);
/// Same summand classes with the same multiplicities.
bool isomorphic(const DecompositionReport& x, const DecompositionReport& y);

/// Merge summand classes of several modules into one list of pairwise
/// non-isomorphic indecomposables (first occurrence wins).
std::vector<Representation> distinct_indecomposables(const std::vector<DecompositionReport>& reports);

struct AddMembership {
    bool member = false;
    // id_X = sum c * into[i] ∘ outof[j] over the recorded (i, j, c)
    std::vector<Matrix> into;  // M -> X
    std::vector<Matrix> outof; // X -> M
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
};
/// Is X a direct summand of a sum of copies of M? Decided by whether id_X
/// lies in the span of the maps X -> M -> X.
AddMembership add_member(const Representation& x, const Representation& m);
/// Same question answered from decompositions: every summand class of X
/// occurs among those of M.
bool add_member(const DecompositionReport& x, const DecompositionReport& m);

} // namespace repdim
