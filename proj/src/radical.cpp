#include <cmath>

#include "repdim/wedderburn.hpp"

namespace repdim {

namespace {

using IntMat = std::vector<std::int64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, std::int64_t mod) {
    IntMat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t x = a[i * n + k];
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % mod;
        }
    return c;
}

// (Tr(lift(m)^(p^j)) mod p^(j+1)) / p^j
std::int64_t g_value(const Matrix& m, std::int64_t p, int j) {
    const std::size_t n = m.rows();
    std::int64_t mod = 1;
    for (int i = 0; i < j; ++i) mod *= p;
    const std::int64_t pj = mod;
    mod *= p;
    IntMat x(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) x[i * n + k] = m(i, k).residue().r;
    for (int i = 0; i < j; ++i) { // x^(p^j) by j rounds of p-th powers
        IntMat y = x;
        for (std::int64_t e = 1; e < p; ++e) y = int_mul(y, x, n, mod);
        x = std::move(y);
    }
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = (tr + x[i * n + i]) % mod;
    return tr / pj;
}

std::vector<Vector> trace_form_kernel(const Algebra& a) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    Vector tr = zero_vector(f, d); // tr[k] = Tr L(e_k)
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& t : a.product(k, i))
                if (t.k == i) tr[k] += t.c;
    Matrix form(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : a.product(i, j)) form(i, j).add_product(t.c, tr[t.k]);
    return span_basis(f, d, kernel(form));
}

std::vector<Vector> p_power_radical(const Algebra& a) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    const std::int64_t p = f.characteristic();
    std::vector<Vector> cur;
    for (std::size_t i = 0; i < d; ++i) cur.push_back(a.basis(i));
    int jmax = 0;
    for (std::int64_t pp = p; pp <= static_cast<std::int64_t>(d); pp *= p) ++jmax;
    for (int j = 0; j <= jmax && !cur.empty(); ++j) {
        Matrix g(f, d, cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t b = 0; b < d; ++b)
                g(b, i) = f.from_int(static_cast<long>(g_value(a.left_matrix(a.multiply(cur[i], a.basis(b))), p, j)));
        std::vector<Vector> next;
        for (const auto& k : kernel(g)) {
            Vector v = a.zero();
            for (std::size_t i = 0; i < cur.size(); ++i) axpy(v, k[i], cur[i]);
            next.push_back(std::move(v));
        }
        cur = span_basis(f, d, next);
    }
    return cur;
}

void check_nilpotent_ideal(const Algebra& a, const std::vector<Vector>& r) {
    const Field& f = a.field();
    Subspace s(f, a.dim());
    for (const auto& v : r) s.add(v);
    for (const auto& v : r)
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!s.contains(a.multiply(a.basis(i), v)) || !s.contains(a.multiply(v, a.basis(i))))
                throw Error(ErrorCode::AlgorithmFailure, "radical candidate is not a two-sided ideal");
    std::vector<Vector> power = r;
    for (std::size_t k = 0; k <= a.dim() && !power.empty(); ++k) {
        std::vector<Vector> next;
        for (const auto& x : power)
            for (const auto& y : r) next.push_back(a.multiply(x, y));
        power = span_basis(f, a.dim(), next);
    }
    if (!power.empty()) throw Error(ErrorCode::AlgorithmFailure, "radical candidate is not nilpotent");
}

} // namespace

std::vector<Vector> radical(const Algebra& a) {
    const std::int64_t p = a.field().characteristic();
    std::vector<Vector> r;
    if (p == 0 || p > static_cast<std::int64_t>(a.dim())) r = trace_form_kernel(a);
    else r = p_power_radical(a);
    check_nilpotent_ideal(a, r);
    return r;
}

} // namespace repdim
