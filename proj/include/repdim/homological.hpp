#pragma once

// Projective covers, syzygies, stable Hom and Ext over an algebra whose
// semisimple quotient splits.

#include <optional>

#include "repdim/decompose.hpp"
#include "repdim/wedderburn.hpp"

namespace repdim {

/// Radical, one primitive idempotent per simple block, the projective
/// indecomposables A e_b and the simples A e_b / J e_b.
struct AlgebraStructure {
    AlgebraPtr algebra;
    WedderburnData wedderburn;
    std::vector<Vector> idempotent;      // per block
    std::vector<Representation> pims;    // per block
    std::vector<Matrix> pim_basis;       // per block, columns in algebra coordinates
    std::vector<Representation> simples; // per block

    std::size_t blocks() const { return pims.size(); }
};

AlgebraStructure algebra_structure(const AlgebraPtr& a, std::uint64_t seed = 0);
AlgebraStructure algebra_structure(const AlgebraPtr& a, WedderburnData w);

/// Basis of J·M.
std::vector<Vector> radical_of_module(const AlgebraStructure& s, const Representation& m);
/// Multiplicity of each simple in M / J·M.
std::vector<std::size_t> top_multiplicities(const AlgebraStructure& s, const Representation& m);
/// J^k M for k = 0, 1, ... down to 0 (bases in M-coordinates).
std::vector<std::vector<Vector>> radical_series(const AlgebraStructure& s, const Representation& m);

struct ProjectiveCover {
    Representation cover;
    Matrix map; // dim M x dim cover, surjective
    Submodule kernel;
    std::vector<std::size_t> blocks; // block of each PIM summand, in order
};
ProjectiveCover projective_cover(const AlgebraStructure& s, const Representation& m);
Representation syzygy(const AlgebraStructure& s, const Representation& m);
bool is_projective(const AlgebraStructure& s, const Representation& m);

/// Maps X -> N that factor through a projective (through the cover of N).
std::vector<Matrix> projective_factoring_maps(const AlgebraStructure& s, const Representation& x,
                                              const Representation& n);
std::size_t stable_hom_dim(const AlgebraStructure& s, const Representation& x, const Representation& n);
/// Ext^i(M, N) as the stable Hom from the i-th syzygy. CapExceeded if i > cap.
std::size_t ext_group(const AlgebraStructure& s, const Representation& m, const Representation& n, std::size_t i,
                      std::optional<std::size_t> cap = std::nullopt);

/// Length of the minimal projective resolution, or nothing once `cap`
/// syzygies have been taken without reaching zero.
std::optional<std::size_t> projective_dimension(const AlgebraStructure& s, const Representation& m, std::size_t cap);

/// All quotients P / J^k P of the projective indecomposables, pairwise
/// non-isomorphic. SerialityError unless every PIM is uniserial.
std::vector<Representation> serial_indecomposables(const AlgebraStructure& s);
/// Loewy length of each PIM.
std::vector<std::size_t> pim_loewy_lengths(const AlgebraStructure& s);

} // namespace repdim
