#include <algorithm>
#include <numeric>
#include <random>

#include "repdim/decompose.hpp"

namespace repdim {

AlgebraPtr endomorphism_algebra(const std::vector<Matrix>& basis, std::string name,
                                const std::vector<std::size_t>& generators) {
    if (basis.empty()) throw Error(ErrorCode::DimensionMismatch, "empty endomorphism basis");
    const Field& f = basis[0].field();
    const std::size_t d = basis[0].rows(), r = basis.size();
    Subspace span(f, d * d, true);
    for (const auto& b : basis)
        if (!span.add(b.flatten())) throw Error(ErrorCode::DimensionMismatch, "endomorphism basis is dependent");
    auto coords = [&](const Matrix& m) {
        auto c = span.coordinates(m.flatten());
        if (!c) throw Error(ErrorCode::AlgorithmFailure, "endomorphisms not closed under composition");
        return *c;
    };
    std::vector<std::vector<Term>> table(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Vector c = coords(basis[i] * basis[j]);
            for (std::size_t k = 0; k < r; ++k)
                if (!c[k].is_zero()) table[i * r + j].push_back({k, c[k]});
        }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back("f" + std::to_string(i));
    std::vector<Vector> gens;
    for (auto g : generators) gens.push_back(unit_vector(f, r, g));
    return std::make_shared<const Algebra>(f, std::move(name), std::move(labels), std::move(table),
                                           coords(Matrix::identity(f, d)), std::move(gens));
}

namespace {

struct Piece {
    Representation mod;
    Matrix basis;             // in coordinates of the original module
    std::vector<Matrix> endo; // basis of End(piece)
};

Matrix stable_power(Matrix m) {
    for (std::size_t k = 1; k < m.rows(); k *= 2) m = m * m;
    return m;
}

Matrix minus_scalar(const Matrix& m, const Scalar& c) {
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= c;
    return out;
}

Piece restrict_piece(const Piece& y, const Submodule& part, const Matrix& proj_rows) {
    const Field& f = y.mod.field();
    const std::size_t k = part.module.dim();
    std::vector<Vector> flat;
    for (const auto& phi : y.endo) flat.push_back((proj_rows * (phi * part.basis)).flatten());
    std::vector<Matrix> endo;
    for (const auto& v : span_basis(f, k * k, flat)) endo.push_back(Matrix::unflatten(f, k, k, v));
    return {part.module, y.basis * part.basis, std::move(endo)};
}

std::pair<Piece, Piece> split_along(const Piece& y, const std::vector<Vector>& ker, const std::vector<Vector>& img) {
    const Field& f = y.mod.field();
    const std::size_t d = y.mod.dim();
    Submodule a = submodule(y.mod, ker), b = submodule(y.mod, img);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < a.basis.cols(); ++j) cols.push_back(a.basis.column(j));
    for (std::size_t j = 0; j < b.basis.cols(); ++j) cols.push_back(b.basis.column(j));
    const Matrix inv = inverse_or_throw(Matrix::from_columns(f, d, cols));
    const std::size_t ka = a.basis.cols();
    Piece pa = restrict_piece(y, a, inv.block(0, 0, ka, d));
    Piece pb = restrict_piece(y, b, inv.block(ka, 0, d - ka, d));
    return {std::move(pa), std::move(pb)};
}

std::optional<std::pair<Piece, Piece>> try_split(const Piece& y, const Matrix& phi) {
    const Field& f = y.mod.field();
    const std::size_t d = y.mod.dim();
    std::vector<Scalar> lambdas;
    if (f.characteristic() == 0 && rank(phi) < d) lambdas.push_back(f.zero());
    else lambdas = roots_in_field(charpoly(phi));
    for (const auto& lam : lambdas) {
        const Matrix p = stable_power(minus_scalar(phi, lam));
        auto img = column_space(p);
        if (img.empty() || img.size() == d) continue;
        return split_along(y, kernel(p), img);
    }
    return std::nullopt;
}

// φ = λ + nilpotent for a single λ; returns the nilpotent part.
std::optional<Matrix> nilpotent_part(const Matrix& phi) {
    const Field& f = phi.field();
    const std::size_t d = phi.rows();
    Scalar lam = f.zero();
    if (f.characteristic() == 0 || d % static_cast<std::size_t>(f.characteristic()) != 0) {
        Scalar tr = f.zero();
        for (std::size_t i = 0; i < d; ++i) tr += phi(i, i);
        lam = tr / f.from_int(static_cast<long>(d));
    } else {
        const auto roots = roots_in_field(charpoly(phi));
        if (roots.size() != 1) return std::nullopt;
        lam = roots[0];
    }
    Matrix n = minus_scalar(phi, lam);
    if (!stable_power(n).is_zero()) return std::nullopt;
    return n;
}

Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng) {
    const Field& f = basis[0].field();
    const long p = f.characteristic();
    std::uniform_int_distribution<long> coef(p ? 0 : -3, p ? p - 1 : 3);
    Matrix out(f, basis[0].rows(), basis[0].cols());
    for (const auto& b : basis) out.add_scaled(f.from_int(coef(rng)), b);
    return out;
}

bool looks_local(const Piece& y, std::mt19937_64& rng) {
    std::vector<Matrix> nil;
    for (const auto& phi : y.endo) {
        auto n = nilpotent_part(phi);
        if (!n) return false;
        if (!n->is_zero()) nil.push_back(std::move(*n));
    }
    if (nil.size() < 2) return true;
    for (int t = 0; t < 8; ++t)
        if (!stable_power(random_combination(nil, rng)).is_zero()) return false;
    return true;
}

// Columns of B spanning {x in span B : m x = 0}.
Matrix restrict_kernel(const Matrix& b, const Matrix& m) {
    const auto ker = kernel(m * b);
    std::vector<Vector> cols;
    for (const auto& c : ker) cols.push_back(b * c);
    return Matrix::from_columns(b.field(), b.rows(), cols);
}

// Elements of End(Y) killing a vector v on which End(Y)/J acts through a
// small simple module. v is cut out of ker J by eigenspaces of the algebra
// action, which commutes with End(Y). Used when the quotient basis is too
// skewed for the random search.
std::vector<Vector> annihilator_hints(const Piece& y, const std::vector<Vector>& rad) {
    const Field& f = y.mod.field();
    const std::size_t d = y.mod.dim(), n = y.endo.size();
    auto combine = [&](const Vector& c) {
        Matrix m(f, d, d);
        for (std::size_t i = 0; i < n; ++i)
            if (!c[i].is_zero()) m.add_scaled(c[i], y.endo[i]);
        return m;
    };
    Matrix w = Matrix::identity(f, d);
    for (const auto& r : rad) w = restrict_kernel(w, combine(r));
    for (bool shrunk = true; shrunk && w.cols() > 1;) {
        shrunk = false;
        for (const auto& g : y.mod.action()) {
            for (const auto& lam : roots_in_field(charpoly(g))) {
                Matrix k = restrict_kernel(w, minus_scalar(g, lam));
                if (k.cols() > 0 && k.cols() < w.cols()) {
                    w = std::move(k);
                    shrunk = true;
                }
            }
        }
    }
    std::vector<Vector> hints;
    for (std::size_t j = 0; j < w.cols(); ++j) {
        const Vector v = w.column(j);
        std::vector<Vector> images;
        for (const auto& phi : y.endo) images.push_back(phi * v);
        for (auto& c : kernel(Matrix::from_columns(f, d, images))) hints.push_back(std::move(c));
    }
    return hints;
}

// Split with a nontrivial idempotent of End(Y); nothing when End(Y) is local.
std::optional<std::pair<Piece, Piece>> split_by_idempotent(const Piece& y, std::uint64_t seed) {
    const auto e = endomorphism_algebra(y.endo, "End(" + y.mod.label() + ")");
    const auto rad = radical(*e);
    WedderburnData w;
    try {
        w = wedderburn(*e, rad, seed);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::SplitError) throw;
        w = wedderburn(*e, rad, seed, annihilator_hints(y, rad));
    }
    if (w.idempotents.size() < 2) return std::nullopt;
    Matrix idem(y.mod.field(), y.mod.dim(), y.mod.dim());
    for (std::size_t i = 0; i < y.endo.size(); ++i)
        if (!w.idempotents[0][i].is_zero()) idem.add_scaled(w.idempotents[0][i], y.endo[i]);
    return split_along(y, kernel(idem), column_space(idem));
}

constexpr std::size_t kSmallEndo = 80;

std::optional<std::pair<Piece, Piece>> find_split(const Piece& y, std::mt19937_64& rng) {
    for (int t = 0; t < 4; ++t)
        if (auto s = try_split(y, random_combination(y.endo, rng))) return s;
    if (y.endo.size() <= kSmallEndo) return split_by_idempotent(y, rng());
    if (looks_local(y, rng)) return std::nullopt;
    for (const auto& phi : y.endo)
        if (auto s = try_split(y, phi)) return s;
    for (int t = 0; t < 32; ++t)
        if (auto s = try_split(y, random_combination(y.endo, rng))) return s;
    if (auto s = split_by_idempotent(y, rng())) return s;
    throw Error(ErrorCode::AlgorithmFailure, "endomorphism ring looked non-local but no idempotent was found");
}

} // namespace

std::vector<std::size_t> fingerprint(const Representation& m) {
    std::vector<std::size_t> fp{m.dim()};
    const Field& f = m.field();
    const std::size_t ng = std::min<std::size_t>(m.action().size(), 8);
    for (std::size_t g = 0; g < ng; ++g) {
        const Matrix& a = m.action()[g];
        fp.push_back(rank(a));
        fp.push_back(rank(minus_scalar(a, f.one())));
        fp.push_back(rank(minus_scalar(a, -f.one())));
    }
    return fp;
}

namespace {

// Sort indecomposable pieces by fingerprint and group them into classes.
DecompositionReport assemble(const Field& f, std::size_t dim, std::vector<Summand> done) {
    std::vector<std::vector<std::size_t>> fps;
    for (const auto& p : done) fps.push_back(fingerprint(p.module));
    std::vector<std::size_t> order(done.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fps[a] < fps[b]; });

    DecompositionReport out;
    std::vector<Vector> cols;
    for (auto i : order) {
        for (std::size_t j = 0; j < done[i].basis.cols(); ++j) cols.push_back(done[i].basis.column(j));
        out.summands.push_back(std::move(done[i]));
    }
    out.witness = Matrix::from_columns(f, dim, cols);
    for (std::size_t i = 0; i < out.summands.size(); ++i) {
        bool placed = false;
        for (auto& c : out.classes) {
            const std::size_t rep = c.members[0];
            if (fps[order[rep]] != fps[order[i]]) continue;
            if (isomorphic_indecomposables(out.summands[rep].module, out.summands[i].module)) {
                c.members.push_back(i);
                ++c.multiplicity;
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back({out.summands[i].module, 1, {i}});
    }
    return out;
}

} // namespace

DecompositionReport decompose(const Representation& m, std::uint64_t seed) { return decompose(m, hom_space(m, m), seed); }

DecompositionReport decompose(const Representation& m, const std::vector<Matrix>& endo, std::uint64_t seed) {
    const Field& f = m.field();
    std::mt19937_64 rng(seed);
    std::vector<Piece> todo{{m, Matrix::identity(f, m.dim()), endo}}, done;
    while (!todo.empty()) {
        Piece y = std::move(todo.back());
        todo.pop_back();
        if (y.mod.dim() == 0) continue;
        auto s = y.endo.size() <= 1 ? std::nullopt : find_split(y, rng);
        if (!s) {
            done.push_back(std::move(y));
            continue;
        }
        todo.push_back(std::move(s->second));
        todo.push_back(std::move(s->first));
    }

    std::vector<Summand> pieces;
    for (auto& p : done) pieces.push_back({std::move(p.mod), std::move(p.basis)});
    return assemble(f, m.dim(), std::move(pieces));
}

DecompositionReport decompose_sum(const std::vector<Representation>& parts, std::uint64_t seed) {
    if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "decompose_sum: no parts");
    const Field& f = parts.front().field();
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim();
    std::vector<Summand> pieces;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (auto& s : decompose(p, seed).summands) {
            Matrix b(f, total, s.basis.cols());
            b.set_block(offset, 0, s.basis);
            pieces.push_back({std::move(s.module), std::move(b)});
        }
        offset += p.dim();
    }
    return assemble(f, total, std::move(pieces));
}

bool isomorphic_indecomposables(const Representation& a, const Representation& b) {
    if (a.dim() != b.dim()) return false;
    if (fingerprint(a) != fingerprint(b)) return false;
    const auto ab = hom_space(a, b);
    if (ab.empty()) return false;
    for (const auto& f : ab)
        if (rank(f) == a.dim()) return true;
    const auto ba = hom_space(b, a);
    for (const auto& f : ab)
        for (const auto& g : ba)
            if (!stable_power(g * f).is_zero()) return true;
    return false;
}

bool isomorphic(const DecompositionReport& x, const DecompositionReport& y) {
    if (x.classes.size() != y.classes.size()) return false;
    std::vector<bool> used(y.classes.size(), false);
    for (const auto& c : x.classes) {
        bool found = false;
        for (std::size_t j = 0; j < y.classes.size() && !found; ++j) {
            if (used[j] || y.classes[j].multiplicity != c.multiplicity) continue;
            if (isomorphic_indecomposables(c.module, y.classes[j].module)) found = used[j] = true;
        }
        if (!found) return false;
    }
    return true;
}

bool isomorphic(const Representation& a, const Representation& b) {
    if (a.dim() != b.dim()) return false;
    return isomorphic(decompose(a), decompose(b));
}

std::vector<Representation> distinct_indecomposables(const std::vector<DecompositionReport>& reports) {
    std::vector<Representation> out;
    for (const auto& r : reports)
        for (const auto& c : r.classes) {
            bool seen = false;
            for (const auto& o : out)
                if (isomorphic_indecomposables(o, c.module)) {
                    seen = true;
                    break;
                }
            if (!seen) out.push_back(c.module);
        }
    return out;
}

AddMembership add_member(const Representation& x, const Representation& m) {
    const Field& f = x.field();
    AddMembership out;
    out.into = hom_space(m, x);
    out.outof = hom_space(x, m);
    const std::size_t d = x.dim();
    const Vector id = Matrix::identity(f, d).flatten();
    Subspace ideal(f, d * d, true);
    std::vector<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t i = 0; i < out.into.size(); ++i)
        for (std::size_t j = 0; j < out.outof.size(); ++j) {
            if (ideal.add((out.into[i] * out.outof[j]).flatten())) used.emplace_back(i, j);
            if (auto c = ideal.coordinates(id)) {
                out.member = true;
                for (std::size_t k = 0; k < c->size(); ++k)
                    if (!(*c)[k].is_zero()) out.terms.emplace_back(used[k].first, used[k].second, (*c)[k]);
                return out;
            }
        }
    return out;
}

bool add_member(const DecompositionReport& x, const DecompositionReport& m) {
    for (const auto& c : x.classes) {
        bool found = false;
        for (const auto& mc : m.classes)
            if (isomorphic_indecomposables(c.module, mc.module)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace repdim
