#include "repdim/bounds.hpp"

#include "repdim/error.hpp"

namespace repdim {

std::string to_string(Family f) {
    switch (f) {
    case Family::HeckeA: return "heckeA";
    case Family::HeckeB: return "heckeB";
    case Family::HeckeD: return "heckeD";
    case Family::ArikiKoike: return "arikiKoike";
    case Family::SymmetricGroup: return "symmetricGroup";
    }
    return "?";
}

std::string to_string(RepType t) {
    switch (t) {
    case RepType::Semisimple: return "semisimple";
    case RepType::Finite: return "finite";
    case RepType::Tame: return "tame";
    case RepType::Wild: return "wild";
    }
    return "?";
}

int ell_quotient(int n, std::optional<int> ell) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "n must be >= 1");
    if (!ell) return 0;
    if (*ell < 2) throw Error(ErrorCode::UnsupportedOrder, "l must be >= 2 or infinite");
    return n / *ell;
}

RepType classify_type_A(int n, std::optional<int> ell) {
    const int m = ell_quotient(n, ell);
    if (m == 0) return RepType::Semisimple;
    if (m == 1) return RepType::Finite;
    if (*ell == 2 && (n == 4 || n == 5)) return RepType::Tame;
    return RepType::Wild;
}

namespace {

BoundReport with_m_bounds(BoundReport r, int m, const std::string& tag) {
    r.lower = static_cast<std::size_t>(m + 1);
    r.upper = static_cast<std::size_t>(2 * m);
    r.citations = {tag + " lower bound m+1", tag + " upper bound 2m"};
    return r;
}

} // namespace

BoundReport bounds_type_A(int n, std::optional<int> ell) {
    BoundReport r;
    r.spec = {Family::HeckeA, n, ell, std::nullopt, {}};
    r.n_odd = n % 2 == 1;
    const int m = ell_quotient(n, ell);
    r.type = classify_type_A(n, ell);
    if (*r.type == RepType::Semisimple) {
        r.semisimple = true;
        r.lower = r.upper = 0;
        r.citations = {"semisimple: repdim 0"};
        return r;
    }
    r = with_m_bounds(std::move(r), m, "type A");
    if (*r.type == RepType::Finite) {
        r.known_exact = 2;
        r.citations.push_back("finite type: repdim 2");
    } else if (*r.type == RepType::Tame) {
        r.known_exact = 3;
        r.citations.push_back("tame type A: repdim 3");
    }
    return r;
}

BoundReport bounds_group(int n, int p) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (n >= p * p) throw Error(ErrorCode::RankTooLarge, "group bounds need n < p^2");
    BoundReport r;
    r.spec = {Family::SymmetricGroup, n, p, std::nullopt, {}};
    r.n_odd = n % 2 == 1;
    const int m = ell_quotient(n, p);
    if (m == 0) {
        r.semisimple = true;
        r.type = RepType::Semisimple;
        r.lower = r.upper = 0;
        r.citations = {"semisimple: repdim 0"};
        return r;
    }
    r = with_m_bounds(std::move(r), m, "symmetric group");
    if (m == 1) {
        r.type = RepType::Finite; // cyclic Sylow subgroup
        r.known_exact = 2;
        r.citations.push_back("finite type: repdim 2");
    }
    return r;
}

Field condition_field(int ell) {
    if (ell < 2) throw Error(ErrorCode::UnsupportedOrder, "l must be >= 2");
    return ell == 2 ? Field::rationals() : Field::cyclotomic(ell);
}

Scalar condition_q(int ell) { return root_of_unity(condition_field(ell), ell); }

Scalar f_poly(int n, const Scalar& Q, const Scalar& q) {
    if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "f_n needs q != 0");
    Scalar out = q.field().one();
    for (int i = 1 - n; i <= n - 1; ++i) out *= Q + q.pow(i);
    return out;
}

Scalar g_poly(int n, const Scalar& q) {
    const Scalar one = q.field().one();
    Scalar out = one + one;
    for (int i = 1; i <= n - 1; ++i) out *= one + q.pow(i);
    return out;
}

BoundReport bounds_type_B(int n, int ell, const Scalar& Q) {
    const Scalar q = condition_q(ell);
    if (!Q.same_field(q)) throw Error(ErrorCode::FieldMismatch, "Q must lie in " + q.field().to_string());
    BoundReport r;
    r.spec = {Family::HeckeB, n, ell, Q, {}};
    r.n_odd = n % 2 == 1;
    const int m = ell_quotient(n, ell);
    r.f_value = f_poly(n, Q, q);
    if (m >= 1) {
        r.lower = static_cast<std::size_t>(m + 1);
        r.citations.push_back("type B lower bound m+1");
    }
    if (!r.f_value->is_zero()) {
        r.upper = static_cast<std::size_t>(2 * m);
        r.citations.push_back("type B upper bound 2m (f_n(Q,q) != 0)");
    }
    return r;
}

BoundReport bounds_type_D(int n, int ell) {
    const Scalar q = condition_q(ell);
    BoundReport r;
    r.spec = {Family::HeckeD, n, ell, std::nullopt, {}};
    r.n_odd = n % 2 == 1;
    const int m = ell_quotient(n, ell);
    r.g_value = g_poly(n, q);
    if (m >= 1) {
        r.lower = static_cast<std::size_t>(m + 1);
        r.citations.push_back("type D lower bound m+1");
    }
    if (r.n_odd && !r.g_value->is_zero()) {
        r.upper = static_cast<std::size_t>(2 * m);
        r.citations.push_back("type D upper bound 2m (n odd, g_n(q) != 0)");
    }
    return r;
}

BoundReport bounds_ariki_koike(int n, int ell, std::vector<std::string> Qs) {
    BoundReport r;
    r.spec = {Family::ArikiKoike, n, ell, std::nullopt, std::move(Qs)};
    r.n_odd = n % 2 == 1;
    const int m = ell_quotient(n, ell);
    if (m >= 1) {
        r.lower = static_cast<std::size_t>(m + 1);
        r.citations.push_back("Ariki-Koike lower bound m+1");
    }
    return r;
}

std::vector<std::pair<int, int>> morita_factors(BDType t, int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "n must be >= 1");
    if (t == BDType::D && n % 2 == 0) throw Error(ErrorCode::EvenRankUnsupported, "type D listing needs n odd");
    std::vector<std::pair<int, int>> out;
    for (int j = t == BDType::B ? 0 : (n + 1) / 2; j <= n; ++j) out.emplace_back(j, n - j);
    return out;
}

std::optional<RouquierChain> rouquier_chain(int n, int ell) {
    const int m = ell_quotient(n, ell);
    if (m < 1) return std::nullopt;
    return RouquierChain{m - 1, m + 1};
}

} // namespace repdim
