#include "repdim/field.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace repdim {

namespace {

std::int64_t mod_normalize(std::int64_t r, std::int64_t p) {
    r %= p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_normalize(t, p);
}

std::vector<mpq_class> cyclo_reduce(std::vector<mpq_class> poly, const CyclotomicData& ctx) {
    const int d = ctx.degree;
    for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
        if (sgn(poly[k]) == 0) continue;
        const mpq_class t = poly[k];
        for (int j = 0; j < d; ++j) {
            if (sgn(ctx.modulus[j]) != 0) poly[k - d + j] -= t * ctx.modulus[j];
        }
        poly[k] = 0;
    }
    poly.resize(d);
    return poly;
}

std::vector<mpq_class> cyclo_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                                 const CyclotomicData& ctx) {
    std::vector<mpq_class> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return cyclo_reduce(std::move(prod), ctx);
}

// Solves the d x d multiplication-by-a system for a^{-1}.
std::vector<mpq_class> cyclo_inverse(const std::vector<mpq_class>& a, const CyclotomicData& ctx) {
    const int d = ctx.degree;
    // column j holds a * z^j
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
    std::vector<mpq_class> power(d);
    power[0] = 1;
    for (int j = 0; j < d; ++j) {
        std::vector<mpq_class> zj(d);
        zj.assign(d, 0);
        if (j < d) zj[j] = 1;
        auto col = cyclo_mul(a, zj, ctx);
        for (int i = 0; i < d; ++i) m[i][j] = col[i];
    }
    m[0][d] = 1;
    for (int col = 0, row = 0; col < d; ++col) {
        int piv = -1;
        for (int i = row; i < d; ++i)
            if (sgn(m[i][col]) != 0) { piv = i; break; }
        if (piv < 0) throw Error(ErrorCode::DivisionByZero, "cyclotomic inverse of zero");
        std::swap(m[piv], m[row]);
        const mpq_class inv = 1 / m[row][col];
        for (int j = col; j <= d; ++j) m[row][j] *= inv;
        for (int i = 0; i < d; ++i) {
            if (i == row || sgn(m[i][col]) == 0) continue;
            const mpq_class f = m[i][col];
            for (int j = col; j <= d; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    std::vector<mpq_class> out(d);
    for (int i = 0; i < d; ++i) out[i] = m[i][d];
    return out;
}

[[noreturn]] void mismatch() { throw Error(ErrorCode::FieldMismatch, "operands live in different fields"); }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

mpq_class parse_rational(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + t + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

} // namespace

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int euler_phi(int n) {
    int result = n;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            result -= result / d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
    if (n < 1) throw Error(ErrorCode::UnsupportedOrder, "cyclotomic order must be >= 1");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<mpz_class> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto den = cyclotomic_polynomial(d);
        // exact division by a monic polynomial
        std::vector<mpz_class> quot(num.size() - den.size() + 1);
        for (int k = static_cast<int>(num.size()) - 1; k >= static_cast<int>(den.size()) - 1; --k) {
            const mpz_class c = num[k];
            const int shift = k - static_cast<int>(den.size()) + 1;
            quot[shift] = c;
            for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        }
        num = std::move(quot);
    }
    return num;
}

Field Field::prime(std::int64_t p) {
    if (!is_prime(p) || p >= (std::int64_t(1) << 31))
        throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not a supported prime");
    Field f;
    f.m_kind = FieldKind::Prime;
    f.m_p = p;
    return f;
}

Field Field::cyclotomic(int order) {
    if (order < 1) throw Error(ErrorCode::UnsupportedOrder, "cyclotomic order must be >= 1");
    if (order <= 2) return rationals();
    static std::mutex cache_mutex;
    static std::map<int, std::shared_ptr<const CyclotomicData>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it == cache.end()) {
        auto data = std::make_shared<CyclotomicData>();
        data->order = order;
        data->modulus = repdim::cyclotomic_polynomial(order);
        data->degree = static_cast<int>(data->modulus.size()) - 1;
        it = cache.emplace(order, std::move(data)).first;
    }
    Field f;
    f.m_kind = FieldKind::Cyclotomic;
    f.m_cyc = it->second;
    return f;
}

Field field_make_prime(std::int64_t p) { return Field::prime(p); }
Field field_make_cyclotomic(int order) { return Field::cyclotomic(order); }

std::vector<mpz_class> Field::cyclotomic_polynomial() const {
    if (m_cyc) return m_cyc->modulus;
    return {mpz_class(-1), mpz_class(1)};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
    switch (m_kind) {
    case FieldKind::Rationals: return Scalar(mpq_class(value));
    case FieldKind::Prime: return Scalar(Scalar::Residue{mod_normalize(value, m_p), m_p});
    case FieldKind::Cyclotomic: {
        std::vector<mpq_class> c(m_cyc->degree);
        c[0] = value;
        return Scalar(Scalar::Cyclo{m_cyc, std::move(c)});
    }
    }
    return Scalar();
}

Scalar Field::from_rational(const mpq_class& raw) const {
    mpq_class value = raw;
    value.canonicalize();
    switch (m_kind) {
    case FieldKind::Rationals: return Scalar(value);
    case FieldKind::Prime: {
        mpz_class num = value.get_num() % m_p;
        mpz_class den = value.get_den() % m_p;
        if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod p");
        const std::int64_t n = mod_normalize(num.get_si(), m_p);
        const std::int64_t d = mod_normalize(den.get_si(), m_p);
        return Scalar(Scalar::Residue{n * mod_inverse(d, m_p) % m_p, m_p});
    }
    case FieldKind::Cyclotomic: {
        std::vector<mpq_class> c(m_cyc->degree);
        c[0] = value;
        return Scalar(Scalar::Cyclo{m_cyc, std::move(c)});
    }
    }
    return Scalar();
}

Scalar Field::zeta() const {
    if (m_kind != FieldKind::Cyclotomic) return from_int(m_kind == FieldKind::Rationals ? 1 : 1);
    std::vector<mpq_class> c(m_cyc->degree);
    if (m_cyc->degree == 1) {
        c[0] = -mpq_class(m_cyc->modulus[0]);
    } else {
        c[1] = 1;
    }
    return Scalar(Scalar::Cyclo{m_cyc, std::move(c)});
}

std::string Field::to_string() const {
    switch (m_kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "GF(" + std::to_string(m_p) + ")";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(m_cyc->order) + ")";
    }
    return "?";
}

Field Field::parse(const std::string& text) {
    const std::string t = trim(text);
    if (t == "Q") return rationals();
    if (t.rfind("GF(", 0) == 0 && t.back() == ')') return prime(std::stoll(t.substr(3, t.size() - 4)));
    if (t.rfind("Q(zeta_", 0) == 0 && t.back() == ')') return cyclotomic(std::stoi(t.substr(7, t.size() - 8)));
    throw Error(ErrorCode::ParseError, "unknown field '" + t + "'");
}

bool Field::operator==(const Field& other) const {
    if (m_kind != other.m_kind) return false;
    if (m_kind == FieldKind::Prime) return m_p == other.m_p;
    if (m_kind == FieldKind::Cyclotomic) return m_cyc->order == other.m_cyc->order;
    return true;
}

Scalar root_of_unity(const Field& field, int order) {
    if (order < 1) throw Error(ErrorCode::UnsupportedOrder, "order must be >= 1");
    switch (field.kind()) {
    case FieldKind::Rationals:
        if (order == 1) return field.one();
        if (order == 2) return field.from_int(-1);
        break;
    case FieldKind::Cyclotomic:
        if (order == field.cyclotomic_order()) return field.zeta();
        break;
    case FieldKind::Prime: {
        const std::int64_t p = field.characteristic();
        if ((p - 1) % order != 0) break;
        for (std::int64_t g = 1; g < p; ++g) {
            Scalar x = field.from_int(static_cast<long>(g));
            bool primitive = x.pow(order).is_one();
            for (int j = 1; primitive && j < order; ++j)
                if (x.pow(j).is_one()) primitive = false;
            if (primitive) return x;
        }
        break;
    }
    }
    throw Error(ErrorCode::UnsupportedOrder,
                "no primitive " + std::to_string(order) + "-th root of unity in " + field.to_string());
}

// ---------------------------------------------------------------------------

Field Scalar::field() const {
    if (is_rational()) return Field::rationals();
    if (is_residue()) return Field::prime(residue().p);
    return Field::cyclotomic(cyclo().ctx->order);
}

bool Scalar::same_field(const Scalar& other) const {
    if (m_v.index() != other.m_v.index()) return false;
    if (is_residue()) return residue().p == other.residue().p;
    if (is_cyclo()) return cyclo().ctx->order == other.cyclo().ctx->order;
    return true;
}

bool Scalar::is_zero() const {
    if (is_rational()) return sgn(rational()) == 0;
    if (is_residue()) return residue().r == 0;
    for (const auto& c : cyclo().c)
        if (sgn(c) != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (is_rational()) return rational() == 1;
    if (is_residue()) return residue().r == 1;
    const auto& c = cyclo().c;
    if (c[0] != 1) return false;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (sgn(c[i]) != 0) return false;
    return true;
}

Scalar Scalar::operator+(const Scalar& b) const {
    Scalar out = *this;
    out += b;
    return out;
}

Scalar Scalar::operator-(const Scalar& b) const {
    Scalar out = *this;
    out -= b;
    return out;
}

Scalar Scalar::operator*(const Scalar& b) const {
    Scalar out = *this;
    out *= b;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (!same_field(b)) mismatch();
    if (is_rational()) {
        std::get<mpq_class>(m_v) += b.rational();
    } else if (is_residue()) {
        auto& r = std::get<Residue>(m_v);
        r.r += b.residue().r;
        if (r.r >= r.p) r.r -= r.p;
    } else {
        auto& c = std::get<Cyclo>(m_v).c;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.cyclo().c[i];
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
    if (!same_field(b)) mismatch();
    if (is_rational()) {
        std::get<mpq_class>(m_v) -= b.rational();
    } else if (is_residue()) {
        auto& r = std::get<Residue>(m_v);
        r.r -= b.residue().r;
        if (r.r < 0) r.r += r.p;
    } else {
        auto& c = std::get<Cyclo>(m_v).c;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.cyclo().c[i];
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& b) {
    if (!same_field(b)) mismatch();
    if (is_rational()) {
        std::get<mpq_class>(m_v) *= b.rational();
    } else if (is_residue()) {
        auto& r = std::get<Residue>(m_v);
        r.r = r.r * b.residue().r % r.p;
    } else {
        auto& me = std::get<Cyclo>(m_v);
        me.c = cyclo_mul(me.c, b.cyclo().c, *me.ctx);
    }
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (is_residue() && a.is_residue() && b.is_residue()) {
        auto& r = std::get<Residue>(m_v);
        if (r.p != a.residue().p || r.p != b.residue().p) mismatch();
        r.r = (r.r + a.residue().r * b.residue().r) % r.p;
        return;
    }
    if (is_rational() && a.is_rational() && b.is_rational()) {
        std::get<mpq_class>(m_v) += a.rational() * b.rational();
        return;
    }
    *this += a * b;
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (is_rational()) {
        std::get<mpq_class>(out.m_v) = -rational();
    } else if (is_residue()) {
        auto& r = std::get<Residue>(out.m_v);
        r.r = r.r == 0 ? 0 : r.p - r.r;
    } else {
        for (auto& c : std::get<Cyclo>(out.m_v).c) c = -c;
    }
    return out;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (is_rational()) return Scalar(mpq_class(1 / rational()));
    if (is_residue()) return Scalar(Residue{mod_inverse(residue().r, residue().p), residue().p});
    return Scalar(Cyclo{cyclo().ctx, cyclo_inverse(cyclo().c, *cyclo().ctx)});
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar base = *this;
    Scalar acc = field().one();
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

Scalar Scalar::times_int(long k) const { return *this * field().from_int(k); }

bool Scalar::operator==(const Scalar& b) const {
    if (!same_field(b)) return false;
    if (is_rational()) return rational() == b.rational();
    if (is_residue()) return residue().r == b.residue().r;
    return cyclo().c == b.cyclo().c;
}

std::string Scalar::to_string() const {
    if (is_rational()) return rational().get_str();
    if (is_residue()) return std::to_string(residue().r) + " mod " + std::to_string(residue().p);
    std::string out;
    const auto& c = cyclo().c;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += c[k].get_str();
        if (k == 1) out += "*z";
        if (k > 1) out += "*z^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
    const std::string t = trim(text);
    switch (field.kind()) {
    case FieldKind::Rationals: return Scalar(parse_rational(t));
    case FieldKind::Prime: {
        const auto pos = t.find(" mod ");
        if (pos == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'r mod p', got '" + t + "'");
        const std::int64_t r = std::stoll(t.substr(0, pos));
        const std::int64_t p = std::stoll(t.substr(pos + 5));
        if (p != field.characteristic()) throw Error(ErrorCode::FieldMismatch, "modulus mismatch in '" + t + "'");
        if (r < 0 || r >= p) throw Error(ErrorCode::ParseError, "residue out of range in '" + t + "'");
        return Scalar(Residue{r, p});
    }
    case FieldKind::Cyclotomic: {
        const auto& ctx = field.cyclotomic_data();
        std::vector<mpq_class> c(ctx->degree);
        std::size_t start = 0;
        while (start <= t.size()) {
            auto pos = t.find(" + ", start);
            const std::string term = trim(t.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
            int k = 0;
            std::string coeff = term;
            const auto star = term.find("*z");
            if (star != std::string::npos) {
                coeff = term.substr(0, star);
                const std::string rest = term.substr(star + 2);
                k = rest.empty() ? 1 : std::stoi(rest.substr(1));
            }
            if (k < 0 || k >= ctx->degree) throw Error(ErrorCode::ParseError, "power out of range in '" + t + "'");
            c[k] += parse_rational(coeff);
            if (pos == std::string::npos) break;
            start = pos + 3;
        }
        return Scalar(Cyclo{ctx, std::move(c)});
    }
    }
    return Scalar();
}

std::size_t Scalar::hash() const {
    std::hash<std::string> h;
    return h(to_string());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace repdim
