#include <algorithm>
#include <deque>

#include "repdim/coxeter.hpp"

namespace repdim {

CoxeterGroup CoxeterGroup::enumerate(CoxeterType type, int n, std::size_t cap) {
    CoxeterGroup g;
    g.m_type = type;
    g.m_n = n;
    g.m_gens = coxeter_generators(type, n);
    const std::size_t ngen = g.m_gens.size();

    // BFS by left multiplication; depth is the Coxeter length.
    std::vector<SignedPerm> found{SignedPerm::identity(n)};
    std::vector<int> depth{0};
    std::map<std::vector<int>, std::size_t> where{{found[0].images, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < ngen; ++s) {
            SignedPerm next = g.m_gens[s] * found[cur];
            if (where.count(next.images)) continue;
            if (found.size() >= cap) throw Error(ErrorCode::CapExceeded, "group order exceeds cap");
            where.emplace(next.images, found.size());
            found.push_back(std::move(next));
            depth.push_back(depth[cur] + 1);
            queue.push_back(found.size() - 1);
        }
    }

    // Lex-smallest reduced word: smallest left descent, then recurse. BFS
    // order is by depth, so sw has its word before w needs it.
    std::vector<std::vector<int>> words(found.size());
    for (std::size_t w = 1; w < found.size(); ++w) {
        for (std::size_t s = 0; s < ngen; ++s) {
            const std::size_t sw = where.at((g.m_gens[s] * found[w]).images);
            if (depth[sw] < depth[w]) {
                words[w] = {static_cast<int>(s)};
                words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
                break;
            }
        }
    }

    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (depth[a] != depth[b]) return depth[a] < depth[b];
        return words[a] < words[b];
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
        g.m_elements.push_back(found[order[k]]);
        g.m_length.push_back(depth[order[k]]);
        g.m_words.push_back(words[order[k]]);
        g.m_index.emplace(found[order[k]].images, k);
    }

    const std::size_t N = g.m_elements.size();
    g.m_left.resize(N * ngen);
    g.m_right.resize(N * ngen);
    g.m_inverse.resize(N);
    for (std::size_t w = 0; w < N; ++w) {
        for (std::size_t s = 0; s < ngen; ++s) {
            g.m_left[w * ngen + s] = g.index_of(g.m_gens[s] * g.m_elements[w]);
            g.m_right[w * ngen + s] = g.index_of(g.m_elements[w] * g.m_gens[s]);
        }
        g.m_inverse[w] = g.index_of(g.m_elements[w].inverse());
    }
    return g;
}

std::size_t CoxeterGroup::index_of(const SignedPerm& w) const {
    auto it = m_index.find(w.images);
    if (it == m_index.end()) throw Error(ErrorCode::DimensionMismatch, "element not in group");
    return it->second;
}

std::size_t CoxeterGroup::multiply(std::size_t x, std::size_t y) const {
    // x*y = s_{i1} (s_{i2} ( ... y))
    std::size_t cur = y;
    const auto& w = m_words[x];
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = left_mult(static_cast<std::size_t>(*it), cur);
    return cur;
}

std::vector<std::size_t> young_generator_indices(CoxeterType type, int n, const std::vector<int>& composition) {
    int total = 0;
    for (int part : composition) {
        if (part <= 0) throw Error(ErrorCode::BadComposition, "composition parts must be positive");
        total += part;
    }
    if (total != n) throw Error(ErrorCode::BadComposition, "composition does not sum to n");
    const std::size_t offset = type == CoxeterType::A ? 0 : 1;
    std::vector<std::size_t> out;
    int start = 0;
    for (int part : composition) {
        for (int i = start + 1; i < start + part; ++i) out.push_back(static_cast<std::size_t>(i - 1) + offset);
        start += part;
    }
    return out;
}

std::vector<std::size_t> parabolic_elements(const CoxeterGroup& g, const std::vector<std::size_t>& gens) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> out{0};
    seen[0] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t s : gens) {
            const std::size_t next = g.left_mult(s, out[k]);
            if (!seen[next]) {
                seen[next] = true;
                out.push_back(next);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> min_coset_reps(const CoxeterGroup& g, const std::vector<std::size_t>& parabolic,
                                        CosetSide side) {
    const auto sub = parabolic_elements(g, parabolic);
    std::vector<bool> covered(g.size(), false);
    std::vector<std::size_t> reps;
    for (std::size_t w = 0; w < g.size(); ++w) {
        if (covered[w]) continue;
        reps.push_back(w);
        for (std::size_t u : sub) covered[side == CosetSide::Right ? g.multiply(u, w) : g.multiply(w, u)] = true;
    }
    return reps;
}

std::vector<std::size_t> min_coset_reps(CoxeterType type, int n, const std::vector<int>& composition) {
    const auto g = CoxeterGroup::enumerate(type, n);
    return min_coset_reps(g, young_generator_indices(type, n, composition), CosetSide::Right);
}

} // namespace repdim
