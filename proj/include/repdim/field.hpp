#pragma once

// Exact scalars over Q, F_p and the cyclotomic fields Q(zeta_l).

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "repdim/error.hpp"

namespace repdim {

enum class FieldKind { Rationals, Prime, Cyclotomic };

/// Shared reduction data for Q(zeta_l): the monic cyclotomic polynomial
/// Phi_l, coefficients from the constant term upwards.
struct CyclotomicData {
    int order = 0;
    int degree = 0;
    std::vector<mpz_class> modulus;
};

class Scalar;

class Field {
public:
    Field() = default; // rationals

    static Field rationals() { return Field(); }
    static Field prime(std::int64_t p);
    /// cyclotomic(1) and cyclotomic(2) collapse to the rationals.
    static Field cyclotomic(int order);

    FieldKind kind() const { return m_kind; }
    std::int64_t characteristic() const { return m_kind == FieldKind::Prime ? m_p : 0; }
    /// l for Q(zeta_l); 1 for Q.
    int cyclotomic_order() const { return m_cyc ? m_cyc->order : 1; }
    /// Degree over the prime field (phi(l) for cyclotomic fields).
    int degree() const { return m_cyc ? m_cyc->degree : 1; }
    const std::shared_ptr<const CyclotomicData>& cyclotomic_data() const { return m_cyc; }
    /// Phi_l as integer coefficients, constant term first.
    std::vector<mpz_class> cyclotomic_polynomial() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long value) const;
    Scalar from_rational(const mpq_class& value) const;
    /// The generator zeta of Q(zeta_l) (a primitive l-th root of unity).
    Scalar zeta() const;

    std::string to_string() const;
    static Field parse(const std::string& text);

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    FieldKind m_kind = FieldKind::Rationals;
    std::int64_t m_p = 0;
    std::shared_ptr<const CyclotomicData> m_cyc;
};

Field field_make_prime(std::int64_t p);
Field field_make_cyclotomic(int order);

/// Primitive l-th root of unity. Rationals support l in {1, 2}; Q(zeta_l)
/// supports its own l. Anything else is UnsupportedOrder.
Scalar root_of_unity(const Field& field, int order);

/// Integer cyclotomic polynomial Phi_n by recursive division of x^n - 1.
std::vector<mpz_class> cyclotomic_polynomial(int n);
int euler_phi(int n);
bool is_prime(std::int64_t p);

class Scalar {
public:
    struct Residue {
        std::int64_t r;
        std::int64_t p;
    };
    struct Cyclo {
        std::shared_ptr<const CyclotomicData> ctx;
        std::vector<mpq_class> c; // length == ctx->degree
    };

    Scalar() : m_v(mpq_class(0)) {}
    explicit Scalar(mpq_class q) : m_v(std::move(q)) { std::get<mpq_class>(m_v).canonicalize(); }
    Scalar(Residue r) : m_v(r) {}
    Scalar(Cyclo c) : m_v(std::move(c)) {}

    Field field() const;
    bool same_field(const Scalar& other) const;

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& b) const;
    Scalar operator-(const Scalar& b) const;
    Scalar operator*(const Scalar& b) const;
    Scalar operator/(const Scalar& b) const { return *this * b.inv(); }
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    /// this += a * b, in place.
    void add_product(const Scalar& a, const Scalar& b);

    Scalar inv() const;
    /// Integer powers; negative exponents invert first.
    Scalar pow(long e) const;
    Scalar times_int(long k) const;

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    bool is_rational() const { return std::holds_alternative<mpq_class>(m_v); }
    bool is_residue() const { return std::holds_alternative<Residue>(m_v); }
    bool is_cyclo() const { return std::holds_alternative<Cyclo>(m_v); }
    const mpq_class& rational() const { return std::get<mpq_class>(m_v); }
    const Residue& residue() const { return std::get<Residue>(m_v); }
    const Cyclo& cyclo() const { return std::get<Cyclo>(m_v); }

    /// Canonical text: `a/b` (or `a`) over Q, `r mod p` over F_p, and
    /// `c0 + c1*z + c2*z^2` over Q(zeta_l) with zero terms omitted.
    std::string to_string() const;
    static Scalar parse(const Field& field, const std::string& text);

    /// Fingerprint usable for ordering and hashing payloads.
    std::size_t hash() const;

private:
    std::variant<mpq_class, Residue, Cyclo> m_v;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace repdim
