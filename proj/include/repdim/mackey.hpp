#pragma once

// Mackey formula for a Sylow p-subgroup P of S_n: the restriction to kP of
// kS_n ⊗_{kP} M against ⊕_x Ind_{P ∩ xPx^-1}^P (conjugated M).

#include "repdim/coxeter.hpp"
#include "repdim/decompose.hpp"
#include "repdim/embedding.hpp"

namespace repdim {

/// S_n over F_p with its Sylow p-subgroup P (n < p^2) and kP ⊆ kS_n.
struct SylowSetting {
    int n = 0, p = 0;
    SubgroupData group, sylow;
    AlgebraPtr kg;
    SubalgebraEmbedding embedding; // sub = kP
};
SylowSetting sylow_setting(int n, int p);

/// Module over kP = k[C_p]^{⊗m} given by Jordan blocks: `sizes[i]` lists the
/// block sizes for the i-th p-cycle; the module is the tensor product over
/// the cycles of the direct sums.
Representation sylow_jordan_module(const SylowSetting& s, const std::vector<std::vector<int>>& sizes);

struct MackeyTerm {
    SignedPerm rep;
    std::size_t double_coset_size = 0;
    std::uint64_t intersection_order = 0;
    bool factorized = false;
    std::string diagnostic;
    std::size_t dim = 0;
    bool agrees = false;    // the double-coset piece of the left side ≅ this induced module
    bool in_add_m = false;  // its summands all occur in M
};

struct MackeyReport {
    std::size_t lhs_dim = 0, rhs_dim = 0;
    std::vector<MackeyTerm> terms;
    bool agree = false;
    bool in_add_m = false;
    bool passed() const { return agree && in_add_m; }
};

MackeyReport mackey_check(const SylowSetting& s, const Representation& m, std::uint64_t seed = 0);

} // namespace repdim
