#pragma once

// Closed-form bounds on representation dimension and the type A
// representation-type classification.

#include <optional>
#include <string>
#include <vector>

#include "repdim/field.hpp"

namespace repdim {

enum class Family { HeckeA, HeckeB, HeckeD, ArikiKoike, SymmetricGroup };
enum class RepType { Semisimple, Finite, Tame, Wild };

std::string to_string(Family f);
std::string to_string(RepType t);

/// ℓ is the order of q (nullopt = ∞, q not a root of unity); for the
/// symmetric group it is p.
struct AlgebraSpec {
    Family family = Family::HeckeA;
    int n = 1;
    std::optional<int> ell;
    std::optional<Scalar> Q;          // type B parameter
    std::vector<std::string> Qs;      // Ariki-Koike parameters, as given
};

struct BoundReport {
    AlgebraSpec spec;
    std::optional<std::size_t> lower, upper;
    std::optional<RepType> type;             // type A and groups only
    std::optional<std::size_t> known_exact;  // finite type: 2, tame type A: 3
    std::optional<Scalar> f_value, g_value;
    bool n_odd = false;
    bool semisimple = false;
    std::vector<std::string> citations;      // one tag per attached bound
};

/// m = floor(n / ℓ); 0 when ℓ = ∞.
int ell_quotient(int n, std::optional<int> ell);

RepType classify_type_A(int n, std::optional<int> ell);
BoundReport bounds_type_A(int n, std::optional<int> ell);
/// kS_n in characteristic p; RankTooLarge unless n < p^2.
BoundReport bounds_group(int n, int p);

/// Field in which the bound conditions are evaluated: Q with q = -1 for
/// ℓ = 2, Q(ζ_ℓ) with q = ζ_ℓ otherwise.
Field condition_field(int ell);
Scalar condition_q(int ell);

/// ∏_{i=1-n}^{n-1} (Q + q^i).
Scalar f_poly(int n, const Scalar& Q, const Scalar& q);
/// 2 ∏_{i=1}^{n-1} (1 + q^i).
Scalar g_poly(int n, const Scalar& q);

/// Q must live in condition_field(ℓ).
BoundReport bounds_type_B(int n, int ell, const Scalar& Q);
BoundReport bounds_type_D(int n, int ell);
BoundReport bounds_ariki_koike(int n, int ell, std::vector<std::string> Qs);

enum class BDType { B, D };
/// Index pairs (j, n - j) of the type A factors H(A_{j-1}) ⊗ H(A_{n-j-1}).
/// Type D needs n odd (EvenRankUnsupported).
std::vector<std::pair<int, int>> morita_factors(BDType t, int n);

struct RouquierChain {
    int stable_dim_lower = 0; // m - 1
    int repdim_lower = 0;     // m + 1
};
/// nullopt when m = 0.
std::optional<RouquierChain> rouquier_chain(int n, int ell);

} // namespace repdim
