#include <sstream>

#include "repdim/module.hpp"

namespace repdim {

namespace {

std::size_t generator_count(const Algebra& a) { return a.generators().empty() ? a.dim() : a.generators().size(); }

} // namespace

Representation::Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action, std::string label)
    : m_algebra(std::move(algebra)), m_dim(dim), m_action(std::move(action)), m_label(std::move(label)) {
    if (m_action.size() != generator_count(*m_algebra))
        throw Error(ErrorCode::DimensionMismatch, "one action matrix per designated generator expected");
    for (const auto& m : m_action)
        if (m.rows() != dim || m.cols() != dim || m.field() != m_algebra->field())
            throw Error(ErrorCode::DimensionMismatch, "action matrix has the wrong shape or field");
}

const std::vector<Matrix>& Representation::basis_action() const {
    std::call_once(m_cache->once, [this] {
        const Algebra& a = *m_algebra;
        const auto& wb = a.word_basis();
        const std::size_t d = a.dim();
        std::vector<Matrix> words(d);
        words[0] = Matrix::identity(field(), m_dim);
        for (std::size_t i = 1; i < d; ++i) {
            const std::size_t g = wb.words[i][0], p = wb.parent[i];
            words[i] = p == 0 ? m_action[g] : m_action[g] * words[p];
        }
        auto& mats = m_cache->mats;
        mats.assign(d, Matrix(field(), m_dim, m_dim));
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                if (!wb.change(i, j).is_zero()) mats[j].add_scaled(wb.change(i, j), words[i]);
        m_cache->ready.store(true);
    });
    return m_cache->mats;
}

Matrix Representation::act(const Vector& x) const {
    Matrix out(field(), m_dim, m_dim);
    if (m_cache->ready.load()) {
        const auto& mats = m_cache->mats;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!x[j].is_zero()) out.add_scaled(x[j], mats[j]);
        return out;
    }
    // walk only the words x actually needs
    const auto& wb = m_algebra->word_basis();
    const Vector y = wb.change * x;
    const std::size_t d = m_algebra->dim();
    std::vector<bool> needed(d, false);
    for (std::size_t i = d; i-- > 0;) {
        if (!y[i].is_zero()) needed[i] = true;
        if (needed[i] && i) needed[wb.parent[i]] = true;
    }
    std::vector<Matrix> words(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!needed[i]) continue;
        if (i == 0) words[i] = Matrix::identity(field(), m_dim);
        else words[i] = wb.parent[i] == 0 ? m_action[wb.words[i][0]] : m_action[wb.words[i][0]] * words[wb.parent[i]];
        if (!y[i].is_zero()) out.add_scaled(y[i], words[i]);
    }
    return out;
}

Vector Representation::apply(const Vector& x, const Vector& v) const {
    const auto& wb = m_algebra->word_basis();
    const Vector y = wb.change * x; // coefficients on the word products
    const std::size_t d = m_algebra->dim();
    // needed[i]: word i (or a descendant) carries weight
    std::vector<bool> needed(d, false);
    for (std::size_t i = d; i-- > 0;) {
        if (!y[i].is_zero()) needed[i] = true;
        if (needed[i] && i) needed[wb.parent[i]] = true;
    }
    std::vector<Vector> img(d);
    Vector out = zero_vector(field(), m_dim);
    for (std::size_t i = 0; i < d; ++i) {
        if (!needed[i]) continue;
        img[i] = i == 0 ? v : m_action[wb.words[i][0]] * img[wb.parent[i]];
        if (!y[i].is_zero()) axpy(out, y[i], img[i]);
    }
    return out;
}

bool is_module(const Representation& m) {
    const Algebra& a = *m.algebra();
    if (!m.act(a.unit()).is_identity()) return false;
    const auto& mats = m.basis_action();
    const std::size_t ng = m.action().size();
    for (std::size_t g = 0; g < ng; ++g) {
        const Vector gv = a.generators().empty() ? a.basis(g) : a.generators()[g];
        if (m.act(gv) != m.action()[g]) return false;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.action()[g] * mats[j] != m.act(a.multiply(gv, a.basis(j)))) return false;
    }
    return true;
}

Representation regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> act;
    if (a->generators().empty())
        for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_matrix(a->basis(i)));
    else
        for (const auto& g : a->generators()) act.push_back(a->left_matrix(g));
    return Representation(a, a->dim(), std::move(act), "regular " + a->name());
}

Representation scalar_module(const AlgebraPtr& a, const std::vector<Scalar>& values, std::string label) {
    std::vector<Matrix> act;
    for (const auto& v : values) {
        Matrix m(a->field(), 1, 1);
        m(0, 0) = v;
        act.push_back(std::move(m));
    }
    Representation r(a, 1, std::move(act), std::move(label));
    if (!is_module(r)) throw Error(ErrorCode::RelationViolation, "scalars do not define a module");
    return r;
}

Representation transport(const Representation& m, const AlgebraPtr& target) {
    Representation r(target, m.dim(), m.action(), m.label());
    if (!is_module(r)) throw Error(ErrorCode::RelationViolation, "action does not satisfy the relations of " + target->name());
    return r;
}

Submodule submodule(const Representation& m, const std::vector<Vector>& span) {
    const Field& f = m.field();
    Subspace s(f, m.dim());
    for (const auto& v : span) s.add(v);
    const auto& rows = s.basis();
    const auto& piv = s.pivots();
    const std::size_t r = rows.size();
    std::vector<Matrix> act;
    for (const auto& g : m.action()) {
        Matrix a(f, r, r);
        for (std::size_t c = 0; c < r; ++c) {
            const Vector w = g * rows[c];
            if (!is_zero(s.reduce(w))) throw Error(ErrorCode::AlgorithmFailure, "span is not a submodule");
            for (std::size_t t = 0; t < r; ++t) a(t, c) = w[piv[t]];
        }
        act.push_back(std::move(a));
    }
    return {Representation(m.algebra(), r, std::move(act), m.label().empty() ? "" : "sub of " + m.label()),
            Matrix::from_columns(f, m.dim(), rows)};
}

std::vector<Vector> submodule_closure(const Representation& m, const std::vector<Vector>& vectors) {
    Subspace s(m.field(), m.dim());
    std::vector<Vector> queue;
    for (const auto& v : vectors)
        if (s.add(v)) queue.push_back(v);
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto& g : m.action()) {
            Vector w = g * queue[i];
            if (s.add(w)) queue.push_back(std::move(w));
        }
    return s.basis();
}

Quotient quotient_module(const Representation& m, const std::vector<Vector>& sub) {
    const Field& f = m.field();
    Subspace s(f, m.dim());
    for (const auto& v : sub) s.add(v);
    const auto comp = s.non_pivots();
    const std::size_t r = comp.size();
    Matrix proj(f, r, m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) {
        const Vector red = s.reduce(unit_vector(f, m.dim(), j));
        for (std::size_t t = 0; t < r; ++t) proj(t, j) = red[comp[t]];
    }
    std::vector<Matrix> act;
    for (const auto& g : m.action()) {
        Matrix a(f, r, r);
        for (std::size_t c = 0; c < r; ++c) {
            const Vector red = s.reduce(g.column(comp[c]));
            for (std::size_t t = 0; t < r; ++t) a(t, c) = red[comp[t]];
        }
        act.push_back(std::move(a));
    }
    return {Representation(m.algebra(), r, std::move(act), m.label().empty() ? "" : "quotient of " + m.label()),
            std::move(proj), comp};
}

Representation direct_sum(const std::vector<Representation>& parts, std::string label) {
    if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "direct sum of nothing");
    const AlgebraPtr& a = parts[0].algebra();
    std::size_t d = 0;
    for (const auto& p : parts) {
        if (p.algebra() != a && !(*p.algebra() == *a)) throw Error(ErrorCode::DimensionMismatch, "summands over different algebras");
        d += p.dim();
    }
    std::vector<Matrix> act;
    for (std::size_t g = 0; g < parts[0].action().size(); ++g) {
        Matrix m(a->field(), d, d);
        std::size_t off = 0;
        for (const auto& p : parts) {
            m.set_block(off, off, p.action()[g]);
            off += p.dim();
        }
        act.push_back(std::move(m));
    }
    return Representation(a, d, std::move(act), std::move(label));
}

Representation outer_tensor(const Representation& m, const Representation& n, AlgebraPtr tensor) {
    if (m.field() != n.field()) throw Error(ErrorCode::FieldMismatch, "outer tensor over different fields");
    if (!tensor) tensor = tensor_algebra(m.algebra(), n.algebra());
    const Field& f = m.field();
    std::vector<Matrix> act;
    for (const auto& g : m.action()) act.push_back(kronecker(g, Matrix::identity(f, n.dim())));
    for (const auto& g : n.action()) act.push_back(kronecker(Matrix::identity(f, m.dim()), g));
    std::string label = m.label() + " # " + n.label();
    return Representation(std::move(tensor), m.dim() * n.dim(), std::move(act), std::move(label));
}

Representation outer_tensor(const std::vector<Representation>& parts) {
    if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "outer tensor of nothing");
    Representation acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = outer_tensor(parts[i], acc);
    return acc;
}

Representation jordan_module(const AlgebraPtr& a, int size) {
    if (generator_count(*a) != 1 || size < 1) throw Error(ErrorCode::DimensionMismatch, "Jordan modules need one generator");
    const Field& f = a->field();
    const auto d = static_cast<std::size_t>(size);
    Matrix g = Matrix::identity(f, d);
    for (std::size_t i = 0; i + 1 < d; ++i) g(i + 1, i) = f.one();
    Representation r(a, d, {g}, "J" + std::to_string(size));
    if (!is_module(r)) throw Error(ErrorCode::RelationViolation, "Jordan block of this size is not a module");
    return r;
}

std::string serialize_module(const Representation& m) {
    std::ostringstream os;
    os << "repdim-module 1\n"
       << "algebra " << m.algebra()->name() << "\n"
       << "field " << m.field().to_string() << "\n"
       << "dim " << m.dim() << "\n"
       << "label " << m.label() << "\n"
       << "generators " << m.action().size() << "\n";
    for (std::size_t g = 0; g < m.action().size(); ++g) {
        os << "gen " << g << "\n";
        const Matrix& a = m.action()[g];
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!a(i, j).is_zero()) os << i << " " << j << " " << a(i, j).to_string() << "\n";
    }
    os << "end\n";
    return os.str();
}

Representation deserialize_module(const AlgebraPtr& algebra, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    auto expect = [&](const std::string& key) {
        if (!std::getline(is, line) || line.rfind(key, 0) != 0) throw Error(ErrorCode::ParseError, "expected '" + key + "'");
        return line.size() > key.size() ? line.substr(key.size() + 1) : std::string();
    };
    if (expect("repdim-module") != "1") throw Error(ErrorCode::ParseError, "unsupported module format version");
    expect("algebra");
    const Field f = Field::parse(expect("field"));
    if (f != algebra->field()) throw Error(ErrorCode::FieldMismatch, "module field differs from the algebra");
    std::size_t dim = 0, ng = 0;
    try {
        dim = std::stoul(expect("dim"));
        std::string label = expect("label");
        ng = std::stoul(expect("generators"));
        std::vector<Matrix> act(ng, Matrix(f, dim, dim));
        std::ptrdiff_t cur = -1;
        while (std::getline(is, line)) {
            if (line == "end") return Representation(algebra, dim, std::move(act), label);
            if (line.rfind("gen ", 0) == 0) {
                cur = std::stol(line.substr(4));
                if (cur < 0 || static_cast<std::size_t>(cur) >= ng) throw Error(ErrorCode::ParseError, "bad generator index");
                continue;
            }
            std::istringstream ls(line);
            std::size_t i = 0, j = 0;
            if (cur < 0 || !(ls >> i >> j) || i >= dim || j >= dim) throw Error(ErrorCode::ParseError, "bad entry: " + line);
            std::string rest;
            std::getline(ls >> std::ws, rest);
            act[static_cast<std::size_t>(cur)](i, j) = Scalar::parse(f, rest);
        }
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "malformed number in module file");
    }
    throw Error(ErrorCode::ParseError, "missing 'end'");
}

} // namespace repdim
