#include <sstream>

#include "repdim/algebra.hpp"

namespace repdim {

namespace {

std::string rest_of(std::istringstream& is) {
    std::string rest;
    std::getline(is >> std::ws, rest);
    return rest;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, "algebra file: " + what); }

} // namespace

std::string Algebra::serialize() const {
    std::ostringstream os;
    os << "repdim-algebra 1\n";
    os << "name " << m_name << "\n";
    os << "field " << m_field.to_string() << "\n";
    os << "dim " << m_dim << "\n";
    for (std::size_t i = 0; i < m_dim; ++i) os << "label " << i << " " << m_labels[i] << "\n";
    for (std::size_t i = 0; i < m_dim; ++i)
        if (!m_unit[i].is_zero()) os << "unit " << i << " " << m_unit[i].to_string() << "\n";
    os << "generators " << m_generators.size() << "\n";
    for (std::size_t g = 0; g < m_generators.size(); ++g)
        for (std::size_t i = 0; i < m_dim; ++i)
            if (!m_generators[g][i].is_zero()) os << "gen " << g << " " << i << " " << m_generators[g][i].to_string() << "\n";
    if (m_info) {
        const auto& info = *m_info;
        os << "group " << (info.kind == GroupBasisKind::Hecke ? "hecke" : "group") << " "
           << coxeter_type_name(info.type) << " " << info.n << "\n";
        if (info.q) os << "param q " << info.q->to_string() << "\n";
        if (info.Q) os << "param Q " << info.Q->to_string() << "\n";
        for (std::size_t i = 0; i < info.elements.size(); ++i) {
            os << "elem " << i << " " << (info.lengths.empty() ? -1 : info.lengths[i]);
            for (int v : info.elements[i].images) os << " " << v;
            os << "\n";
        }
    }
    os << "products\n";
    for (std::size_t i = 0; i < m_dim; ++i)
        for (std::size_t j = 0; j < m_dim; ++j)
            for (const auto& t : product(i, j)) os << i << " " << j << " " << t.k << " " << t.c.to_string() << "\n";
    os << "end\n";
    return os.str();
}

Algebra Algebra::deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "repdim-algebra 1") parse_fail("bad header");
    std::string name;
    std::optional<Field> field;
    std::size_t dim = 0;
    bool have_dim = false;
    std::vector<std::string> labels;
    Vector unit;
    std::vector<Vector> gens;
    std::optional<GroupBasisInfo> info;
    std::vector<std::vector<Term>> table;
    bool in_products = false, ended = false;
    auto need_dim = [&]() {
        if (!have_dim || !field) parse_fail("dim and field must precede data");
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (in_products) {
            if (line == "end") { ended = true; break; }
            std::size_t i, j, k;
            if (!(ls >> i >> j >> k) || i >= dim || j >= dim || k >= dim) parse_fail("bad product line: " + line);
            table[i * dim + j].push_back({k, Scalar::parse(*field, rest_of(ls))});
            continue;
        }
        std::string key;
        ls >> key;
        if (key == "name") name = rest_of(ls);
        else if (key == "field") field = Field::parse(rest_of(ls));
        else if (key == "dim") {
            if (!field || !(ls >> dim)) parse_fail("bad dim");
            have_dim = true;
            labels.assign(dim, "");
            unit = zero_vector(*field, dim);
            table.assign(dim * dim, {});
        } else if (key == "label") {
            need_dim();
            std::size_t i;
            if (!(ls >> i) || i >= dim) parse_fail("bad label");
            labels[i] = rest_of(ls);
        } else if (key == "unit") {
            need_dim();
            std::size_t i;
            if (!(ls >> i) || i >= dim) parse_fail("bad unit");
            unit[i] = Scalar::parse(*field, rest_of(ls));
        } else if (key == "generators") {
            need_dim();
            std::size_t m;
            if (!(ls >> m)) parse_fail("bad generator count");
            gens.assign(m, zero_vector(*field, dim));
        } else if (key == "gen") {
            std::size_t g, i;
            if (!(ls >> g >> i) || g >= gens.size() || i >= dim) parse_fail("bad gen");
            gens[g][i] = Scalar::parse(*field, rest_of(ls));
        } else if (key == "group") {
            std::string kind, type;
            GroupBasisInfo gi;
            if (!(ls >> kind >> type >> gi.n)) parse_fail("bad group line");
            gi.kind = kind == "hecke" ? GroupBasisKind::Hecke : GroupBasisKind::Group;
            gi.type = type == "B" ? CoxeterType::B : type == "D" ? CoxeterType::D : CoxeterType::A;
            info = gi;
        } else if (key == "param") {
            std::string which;
            ls >> which;
            if (!info || !field) parse_fail("param before group");
            (which == "q" ? info->q : info->Q) = Scalar::parse(*field, rest_of(ls));
        } else if (key == "elem") {
            if (!info) parse_fail("elem before group");
            std::size_t i;
            int len;
            ls >> i >> len;
            SignedPerm w;
            int v;
            while (ls >> v) w.images.push_back(v);
            if (i != info->elements.size()) parse_fail("elements out of order");
            info->elements.push_back(w);
            if (len >= 0) info->lengths.push_back(len);
        } else if (key == "products") {
            need_dim();
            in_products = true;
        } else {
            parse_fail("unknown key " + key);
        }
    }
    if (!ended) parse_fail("missing end marker");
    return Algebra(*field, name, labels, std::move(table), unit, gens, info);
}

} // namespace repdim
