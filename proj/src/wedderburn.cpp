#include <functional>
#include <numeric>
#include <random>

#include "repdim/wedderburn.hpp"

namespace repdim {

std::vector<Vector> corner_basis(const Algebra& a, const Vector& e, const Vector& f) {
    Subspace s(a.field(), a.dim());
    const Matrix le = a.left_matrix(e), rf = a.right_matrix(f);
    for (std::size_t i = 0; i < a.dim(); ++i) s.add(le * (rf * a.basis(i)));
    return s.basis();
}

Poly minimal_polynomial(const Algebra& a, const Vector& c, const Vector& one) {
    const Field& f = a.field();
    Subspace s(f, a.dim(), true);
    Vector power = one;
    const Matrix lc = a.left_matrix(c);
    while (s.add(power)) power = lc * power;
    const auto coords = *s.coordinates(power);
    Poly p;
    for (const auto& x : coords) p.push_back(-x);
    p.push_back(f.one());
    return p;
}

namespace {

struct Corner {
    std::vector<Vector> basis;
    Subspace span;
};

Corner make_corner(const Algebra& a, const Vector& e) {
    Corner c{corner_basis(a, e, e), Subspace(a.field(), a.dim(), true)};
    for (const auto& v : c.basis) c.span.add(v);
    return c;
}

bool singular_in_corner(const Algebra& a, const Corner& c, const Vector& x) {
    const Matrix lx = a.left_matrix(x);
    Subspace img(a.field(), a.dim());
    for (const auto& u : c.basis) img.add(lx * u);
    return img.dim() < c.basis.size();
}

// e = e1 + e2 with e1 = s x, where x s x = x and x is a zero divisor of eAe.
std::optional<std::pair<Vector, Vector>> split_by(const Algebra& a, const Corner& c, const Vector& e, const Vector& x) {
    const Field& f = a.field();
    const Matrix lx = a.left_matrix(x), rx = a.right_matrix(x);
    Matrix sys(f, a.dim(), c.basis.size());
    for (std::size_t t = 0; t < c.basis.size(); ++t) sys.set_column(t, lx * (rx * c.basis[t]));
    Matrix rhs(f, a.dim(), 1);
    rhs.set_column(0, x);
    auto sol = solve_and_kernel(sys, rhs);
    if (!sol.particular) return std::nullopt;
    Vector s = a.zero();
    for (std::size_t t = 0; t < c.basis.size(); ++t) axpy(s, (*sol.particular)(t, 0), c.basis[t]);
    Vector e1 = a.multiply(s, x);
    Vector e2 = sub(e, e1);
    if (is_zero(e1) || is_zero(e2) || a.multiply(e1, e1) != e1) return std::nullopt;
    return std::make_pair(std::move(e1), std::move(e2));
}

std::optional<Vector> zero_divisor(const Algebra& a, const Corner& c, const Vector& e, const Vector& cand) {
    if (is_zero(cand) || c.span.coordinates(cand) == std::nullopt) return std::nullopt;
    if (singular_in_corner(a, c, cand)) return cand;
    const Poly m = minimal_polynomial(a, cand, e);
    if (m.size() <= 2) return std::nullopt; // scalar multiple of e
    for (const auto& root : roots_in_field(m)) return sub(cand, scale(root, e));
    return std::nullopt;
}

} // namespace

std::vector<Vector> primitive_decomposition(const Algebra& a, const Vector& e, std::uint64_t seed,
                                            const std::vector<Vector>& hints) {
    const Field& f = a.field();
    std::vector<Vector> done, todo{e};
    std::mt19937_64 rng(seed);
    while (!todo.empty()) {
        Vector cur = std::move(todo.back());
        todo.pop_back();
        Corner c = make_corner(a, cur);
        if (c.basis.size() <= 1) {
            done.push_back(std::move(cur));
            continue;
        }
        std::optional<std::pair<Vector, Vector>> parts;
        auto attempt = [&](const Vector& cand) {
            if (parts) return;
            if (auto x = zero_divisor(a, c, cur, cand)) parts = split_by(a, c, cur, *x);
        };
        for (const auto& h : hints) attempt(a.multiply(cur, a.multiply(h, cur)));
        for (const auto& g : a.generators()) attempt(a.multiply(cur, a.multiply(g, cur)));
        for (const auto& u : c.basis) attempt(u);
        for (std::size_t i = 0; i < c.basis.size() && !parts; ++i)
            for (std::size_t j = 0; j < c.basis.size() && !parts; ++j) attempt(a.multiply(c.basis[i], c.basis[j]));
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int t = 0; t < 64 && !parts; ++t) {
            Vector v = a.zero();
            for (const auto& u : c.basis) axpy(v, f.from_int(coef(rng)), u);
            attempt(v);
        }
        if (!parts) throw Error(ErrorCode::SplitError, "semisimple quotient of " + a.name() + " is not split over " + f.to_string());
        // keep discovery order stable: process e1 before e2
        todo.push_back(std::move(parts->second));
        todo.push_back(std::move(parts->first));
    }
    return done;
}

WedderburnData wedderburn(const Algebra& a, std::uint64_t seed) { return wedderburn(a, radical(a), seed); }

WedderburnData wedderburn(const Algebra& a, const std::vector<Vector>& rad, std::uint64_t seed,
                          const std::vector<Vector>& hints) {
    const Field& f = a.field();
    WedderburnData out;
    out.radical = rad;
    auto [quot, comp] = quotient_algebra(a, rad);
    std::vector<Vector> qhints;
    if (!hints.empty()) {
        Subspace r(f, a.dim());
        for (const auto& v : rad) r.add(v);
        for (const auto& h : hints) {
            const Vector red = r.reduce(h);
            Vector q = zero_vector(f, comp.size());
            for (std::size_t c = 0; c < comp.size(); ++c) q[c] = red[comp[c]];
            qhints.push_back(std::move(q));
        }
    }
    const auto prim = primitive_decomposition(*quot, quot->unit(), seed, qhints);

    // blocks: e_i ~ e_j when e_i Ā e_j != 0
    const std::size_t t = prim.size();
    std::vector<std::size_t> parent(t);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            if (!corner_basis(*quot, prim[i], prim[j]).empty()) parent[find(i)] = find(j);
    std::vector<std::size_t> block_id(t, t);
    out.block_of.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t r = find(i);
        if (block_id[r] == t) {
            block_id[r] = out.block_dims.size();
            out.block_dims.push_back(0);
        }
        out.block_of[i] = block_id[r];
        ++out.block_dims[block_id[r]];
    }
    std::size_t total = 0;
    for (auto d : out.block_dims) total += d * d;
    if (total != quot->dim()) throw Error(ErrorCode::SplitError, "block dimensions do not account for A/rad");

    // lift sequentially inside the remaining corner
    auto lift = [&](const Vector& v) {
        Vector w = a.zero();
        for (std::size_t c = 0; c < comp.size(); ++c) w[comp[c]] = v[c];
        return w;
    };
    Vector rest = a.unit();
    for (std::size_t i = 0; i < t; ++i) {
        if (i + 1 == t) {
            out.idempotents.push_back(rest);
            break;
        }
        Vector x = a.multiply(rest, a.multiply(lift(prim[i]), rest));
        int iter = 0;
        for (Vector sq = a.multiply(x, x); sq != x; sq = a.multiply(x, x)) {
            if (++iter > 64) throw Error(ErrorCode::AlgorithmFailure, "idempotent lifting did not converge");
            const Vector cube = a.multiply(sq, x);
            x = sub(scale(f.from_int(3), sq), scale(f.from_int(2), cube));
        }
        out.idempotents.push_back(x);
        rest = sub(rest, x);
    }
    return out;
}

} // namespace repdim
