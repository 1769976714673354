#pragma once

// Jacobson radical, semisimple quotient, primitive idempotents.

#include <cstdint>

#include "repdim/algebra.hpp"

namespace repdim {

/// Basis (reduced echelon) of rad A. Characteristic 0 and p > dim A: kernel
/// of the trace form. Otherwise the iterated p-power trace method over F_p.
/// The result is checked to be a nilpotent two-sided ideal.
std::vector<Vector> radical(const Algebra& a);

/// Basis of e A f.
std::vector<Vector> corner_basis(const Algebra& a, const Vector& e, const Vector& f);
/// Minimal polynomial of c inside the algebra with identity `one`
/// (constant term first, monic).
Poly minimal_polynomial(const Algebra& a, const Vector& c, const Vector& one);

struct WedderburnData {
    std::vector<Vector> radical;
    std::vector<std::size_t> block_dims;   // d_i with A/rad ≅ ∏ M_{d_i}(k)
    std::vector<Vector> idempotents;       // primitive, orthogonal, summing to 1
    std::vector<std::size_t> block_of;     // idempotent -> simple block
};

/// SplitError when A/rad is not split over the base field.
WedderburnData wedderburn(const Algebra& a, std::uint64_t seed = 0);
/// Same, reusing a known radical basis. `hints` are extra elements of A tried
/// first when looking for zero divisors of the semisimple quotient.
WedderburnData wedderburn(const Algebra& a, const std::vector<Vector>& rad, std::uint64_t seed = 0,
                          const std::vector<Vector>& hints = {});

/// Splits an idempotent e of a semisimple algebra into orthogonal primitive
/// idempotents (in the order found).
std::vector<Vector> primitive_decomposition(const Algebra& semisimple, const Vector& e, std::uint64_t seed = 0,
                                            const std::vector<Vector>& hints = {});

} // namespace repdim
