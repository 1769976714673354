#include <algorithm>
#include <map>

#include "repdim/algebra.hpp"

namespace repdim {

namespace {

std::vector<Term> to_terms(const std::map<std::size_t, Scalar>& acc) {
    std::vector<Term> out;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({k, c});
    return out;
}

std::string hecke_label(CoxeterType type, const std::vector<int>& word) {
    std::string s = "T[";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(type == CoxeterType::A ? word[i] + 1 : word[i]);
    }
    return s + "]";
}

} // namespace

AlgebraPtr hecke_algebra(CoxeterType type, int n, const Scalar& q, std::optional<Scalar> Q) {
    const Field field = q.field();
    if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "Hecke parameter q must be nonzero");
    if (type == CoxeterType::B && !Q) throw Error(ErrorCode::RelationViolation, "type B needs the parameter Q");
    if (Q && type != CoxeterType::B) Q.reset();
    if (Q) q.same_field(*Q);
    const auto g = CoxeterGroup::enumerate(type, n);
    const std::size_t d = g.size();
    const std::size_t ngen = g.num_generators();
    std::vector<Scalar> qs(ngen, q);
    if (type == CoxeterType::B) qs[0] = *Q;

    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t y = 0; y < d; ++y) table[y] = {{y, field.one()}};
    for (std::size_t x = 1; x < d; ++x) {
        const std::size_t s = static_cast<std::size_t>(g.word(x)[0]);
        const std::size_t rest = g.left_mult(s, x);
        const Scalar qm1 = qs[s] - field.one();
        for (std::size_t y = 0; y < d; ++y) {
            std::map<std::size_t, Scalar> acc;
            auto at = [&](std::size_t k) -> Scalar& { return acc.try_emplace(k, field.zero()).first->second; };
            for (const auto& t : table[rest * d + y]) {
                const std::size_t sw = g.left_mult(s, t.k);
                if (g.length(sw) > g.length(t.k)) {
                    at(sw) += t.c;
                } else {
                    at(sw) += t.c * qs[s];
                    at(t.k) += t.c * qm1;
                }
            }
            table[x * d + y] = to_terms(acc);
        }
    }

    std::vector<std::string> labels;
    for (std::size_t w = 0; w < d; ++w) labels.push_back(hecke_label(type, g.word(w)));
    std::vector<Vector> gens;
    for (std::size_t s = 0; s < ngen; ++s) gens.push_back(unit_vector(field, d, g.index_of(g.generators()[s])));
    GroupBasisInfo info;
    info.kind = GroupBasisKind::Hecke;
    info.type = type;
    info.n = n;
    for (std::size_t w = 0; w < d; ++w) {
        info.elements.push_back(g.element(w));
        info.lengths.push_back(g.length(w));
    }
    info.q = q;
    info.Q = Q;
    std::string name = std::string("H(") + coxeter_type_name(type) + std::to_string(type == CoxeterType::A ? n - 1 : n) +
                       ";q=" + q.to_string() + (Q ? ";Q=" + Q->to_string() : "") + ")";
    return std::make_shared<Algebra>(field, name, labels, std::move(table), unit_vector(field, d, 0), gens, info);
}

AlgebraPtr group_algebra(const SubgroupData& g, const Field& field) {
    if (g.elements.empty()) throw Error(ErrorCode::CapExceeded, "group not enumerated");
    const std::size_t d = g.elements.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index.emplace(g.elements[i].images, i);
    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            table[i * d + j] = {{index.at((g.elements[i] * g.elements[j]).images), field.one()}};
    std::vector<std::string> labels;
    for (const auto& w : g.elements) labels.push_back(w.to_string());
    std::vector<Vector> gens;
    for (const auto& s : g.generators) gens.push_back(unit_vector(field, d, index.at(s.images)));
    GroupBasisInfo info;
    info.kind = GroupBasisKind::Group;
    info.n = g.n;
    info.elements = g.elements;
    return std::make_shared<Algebra>(field, "k[" + g.label + "]", labels, std::move(table),
                                     unit_vector(field, d, index.at(SignedPerm::identity(g.n).images)), gens, info);
}

AlgebraPtr truncated_polynomial(const Field& field, int n) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "k[x]/(x^n) needs n >= 1");
    const std::size_t d = static_cast<std::size_t>(n);
    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; i + j < d; ++j) table[i * d + j] = {{i + j, field.one()}};
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < d; ++i) labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<Vector> gens;
    if (d > 1) gens.push_back(unit_vector(field, d, 1));
    return std::make_shared<Algebra>(field, "k[x]/(x^" + std::to_string(n) + ")", labels, std::move(table),
                                     unit_vector(field, d, 0), gens);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a->field() != b->field()) throw Error(ErrorCode::FieldMismatch, "tensor factors over different fields");
    const Field& f = a->field();
    const std::size_t da = a->dim(), db = b->dim(), d = da * db;
    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    auto& out = table[(i * db + j) * d + (k * db + l)];
                    for (const auto& t : a->product(i, k))
                        for (const auto& u : b->product(j, l)) out.push_back({t.k * db + u.k, t.c * u.c});
                    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
                }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) labels.push_back(a->labels()[i] + "|" + b->labels()[j]);
    auto kron = [&](const Vector& x, const Vector& y) {
        Vector v = zero_vector(f, d);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) v[i * db + j] = x[i] * y[j];
        return v;
    };
    std::vector<Vector> gens;
    auto ga = a->generators(), gb = b->generators();
    if (ga.empty())
        for (std::size_t i = 0; i < da; ++i) ga.push_back(a->basis(i));
    if (gb.empty())
        for (std::size_t j = 0; j < db; ++j) gb.push_back(b->basis(j));
    for (const auto& x : ga) gens.push_back(kron(x, b->unit()));
    for (const auto& y : gb) gens.push_back(kron(a->unit(), y));
    return std::make_shared<Algebra>(f, a->name() + "(x)" + b->name(), labels, std::move(table),
                                     kron(a->unit(), b->unit()), gens);
}

AlgebraPtr lower_triangular(const Field& field, int n) {
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) idx.push_back({i, j});
    const std::size_t d = idx.size();
    std::vector<std::vector<Term>> table(d * d);
    Vector unit = zero_vector(field, d);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) {
        labels.push_back("E" + std::to_string(idx[a].first + 1) + std::to_string(idx[a].second + 1));
        if (idx[a].first == idx[a].second) unit[a] = field.one();
        for (std::size_t b = 0; b < d; ++b) {
            if (idx[a].second != idx[b].first) continue;
            const std::pair<int, int> target{idx[a].first, idx[b].second};
            for (std::size_t c = 0; c < d; ++c)
                if (idx[c] == target) table[a * d + b] = {{c, field.one()}};
        }
    }
    return std::make_shared<Algebra>(field, "LT" + std::to_string(n), labels, std::move(table), unit);
}

AlgebraPtr ground_algebra(const Field& field) {
    return std::make_shared<Algebra>(field, "k", std::vector<std::string>{"1"},
                                     std::vector<std::vector<Term>>{{{0, field.one()}}}, Vector{field.one()});
}

AlgebraPtr subalgebra(const Algebra& ambient, const std::vector<Vector>& span, const std::vector<Vector>& generators,
                      std::string name, std::vector<std::string> labels, std::optional<GroupBasisInfo> info) {
    const Field& f = ambient.field();
    Subspace s(f, ambient.dim(), true);
    for (const auto& v : span)
        if (!s.add(v)) throw Error(ErrorCode::DimensionMismatch, "subalgebra spanning vectors are dependent");
    const std::size_t d = span.size();
    auto coords = [&](const Vector& v) {
        auto c = s.coordinates(v);
        if (!c) throw Error(ErrorCode::RelationViolation, "span is not closed under multiplication");
        return *c;
    };
    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vector c = coords(ambient.multiply(span[i], span[j]));
            for (std::size_t k = 0; k < d; ++k)
                if (!c[k].is_zero()) table[i * d + j].push_back({k, c[k]});
        }
    std::vector<Vector> gens;
    for (const auto& g : generators) gens.push_back(coords(g));
    return std::make_shared<Algebra>(f, std::move(name), std::move(labels), std::move(table), coords(ambient.unit()),
                                     gens, std::move(info));
}

std::pair<AlgebraPtr, std::vector<std::size_t>> quotient_algebra(const Algebra& a, const std::vector<Vector>& ideal) {
    const Field& f = a.field();
    Subspace s(f, a.dim());
    for (const auto& v : ideal) s.add(v);
    const auto comp = s.non_pivots();
    const std::size_t d = comp.size();
    auto project = [&](const Vector& v) {
        const Vector r = s.reduce(v);
        Vector out = zero_vector(f, d);
        for (std::size_t c = 0; c < d; ++c) out[c] = r[comp[c]];
        return out;
    };
    std::vector<std::vector<Term>> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector prod = a.zero();
            for (const auto& t : a.product(comp[i], comp[j])) prod[t.k] += t.c;
            const Vector c = project(prod);
            for (std::size_t k = 0; k < d; ++k)
                if (!c[k].is_zero()) table[i * d + j].push_back({k, c[k]});
        }
    std::vector<std::string> labels;
    for (auto c : comp) labels.push_back(a.labels()[c]);
    std::vector<Vector> gens;
    for (const auto& g : a.generators()) gens.push_back(project(g));
    auto q = std::make_shared<Algebra>(f, a.name() + "/I", labels, std::move(table), project(a.unit()), gens);
    return {q, comp};
}

bool hecke_relations_hold(const Algebra& h) {
    const auto& info = h.group_info();
    if (!info || info->kind != GroupBasisKind::Hecke) return false;
    const auto gens = coxeter_generators(info->type, info->n);
    const auto& t = h.generators();
    for (std::size_t s = 0; s < gens.size(); ++s) {
        const Scalar qs = (info->type == CoxeterType::B && s == 0) ? *info->Q : *info->q;
        Vector a = t[s], b = t[s];
        a = add(a, h.unit());
        b = sub(b, scale(qs, h.unit()));
        if (!is_zero(h.multiply(a, b))) return false;
    }
    for (std::size_t s = 0; s < gens.size(); ++s)
        for (std::size_t u = s + 1; u < gens.size(); ++u) {
            // braid length = order of s*u
            int m = 1;
            SignedPerm p = gens[s] * gens[u];
            for (SignedPerm cur = p; !cur.is_identity(); cur = cur * p) ++m;
            Vector left = h.unit(), right = h.unit();
            for (int k = 0; k < m; ++k) {
                left = h.multiply(left, t[k % 2 ? u : s]);
                right = h.multiply(right, t[k % 2 ? s : u]);
            }
            if (left != right) return false;
        }
    return true;
}

} // namespace repdim
