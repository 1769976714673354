#pragma once

// Independent arithmetic for products of cyclotomic integers: elements of
// the group ring Z[x]/(x^l - 1), mapped to Q(ζ_l) by x -> ζ_l. An element
// vanishes in Q(ζ_l) iff its representative is divisible by Φ_l, which is
// built here by integer division of x^l - 1.

#include <stdexcept>
#include <vector>

namespace oracle {

// Elements of Z[x]/(x^l - 1); the image of x in Q(ζ_l) is ζ_l.
using Ring = std::vector<long long>;
using Poly = std::vector<long long>; // low degree first

inline Ring ring_x_power(int l, int e) {
    Ring r(static_cast<std::size_t>(l), 0);
    r[static_cast<std::size_t>(((e % l) + l) % l)] = 1;
    return r;
}

inline Ring ring_mul(const Ring& a, const Ring& b) {
    const std::size_t l = a.size();
    Ring out(l, 0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) out[(i + j) % l] += a[i] * b[j];
    return out;
}

inline Ring ring_add(Ring a, const Ring& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Ring ring_const(int l, long long c) {
    Ring r(static_cast<std::size_t>(l), 0);
    r[0] = c;
    return r;
}

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a mod b for monic b
inline Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size()) {
        const long long c = a.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return a;
}

// exact quotient by a monic divisor
inline Poly poly_div(Poly a, const Poly& b) {
    trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        const long long c = a.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact division");
    return q;
}

inline Poly phi(int l) {
    Poly p(static_cast<std::size_t>(l) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(l)] = 1;
    for (int d = 1; d < l; ++d)
        if (l % d == 0) p = poly_div(p, phi(d));
    return p;
}

inline bool ring_is_zero_in_field(const Ring& r, int l) { return poly_mod(r, phi(l)).empty(); }

inline Ring oracle_f(int n, const Ring& Q, int l) {
    Ring out = ring_const(l, 1);
    for (int i = 1 - n; i <= n - 1; ++i) out = ring_mul(out, ring_add(Q, ring_x_power(l, i)));
    return out;
}

inline Ring oracle_g(int n, int l) {
    Ring out = ring_const(l, 2);
    for (int i = 1; i <= n - 1; ++i) out = ring_mul(out, ring_add(ring_const(l, 1), ring_x_power(l, i)));
    return out;
}

} // namespace oracle
