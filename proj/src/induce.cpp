#include "repdim/module.hpp"

namespace repdim {

Representation induce(const SubalgebraEmbedding& emb, const Representation& m) {
    const Field& f = m.field();
    const Algebra& lam = *emb.ambient;
    const std::size_t r = emb.rank(), dm = m.dim();
    std::vector<Vector> gens = lam.generators();
    if (gens.empty())
        for (std::size_t i = 0; i < lam.dim(); ++i) gens.push_back(lam.basis(i));
    std::vector<Matrix> act;
    for (const auto& x : gens) {
        const auto rw = emb.rewrite(x); // x a_j = sum_i a_i gamma_ij
        Matrix a(f, r * dm, r * dm);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                if (!is_zero(rw[j][i])) a.set_block(i * dm, j * dm, m.act(rw[j][i]));
        act.push_back(std::move(a));
    }
    return Representation(emb.ambient, r * dm, std::move(act), "ind(" + m.label() + ")");
}

Representation restrict_module(const Representation& m, const SubalgebraEmbedding& emb) {
    const Algebra& g = *emb.sub;
    std::vector<Vector> gens = g.generators();
    if (gens.empty())
        for (std::size_t i = 0; i < g.dim(); ++i) gens.push_back(g.basis(i));
    std::vector<Matrix> act;
    for (const auto& x : gens) act.push_back(m.act(emb.include(x)));
    return Representation(emb.sub, m.dim(), std::move(act), "res(" + m.label() + ")");
}

} // namespace repdim
