#include <algorithm>
#include <set>

#include "repdim/coxeter.hpp"
#include "repdim/field.hpp"

namespace repdim {

namespace {

struct KeyedPerm {
    int len;
    std::vector<int> word;
    SignedPerm w;
};

void sort_elements(std::vector<SignedPerm>& elems) {
    const bool plain = std::all_of(elems.begin(), elems.end(), [](const SignedPerm& w) { return w.is_unsigned(); });
    if (!plain || elems.empty() || elems[0].degree() < 1) {
        std::sort(elems.begin(), elems.end());
        return;
    }
    std::vector<KeyedPerm> keyed;
    keyed.reserve(elems.size());
    for (auto& w : elems)
        keyed.push_back({inversion_length(CoxeterType::A, w), lex_reduced_word(CoxeterType::A, w), w});
    std::sort(keyed.begin(), keyed.end(), [](const KeyedPerm& a, const KeyedPerm& b) {
        if (a.len != b.len) return a.len < b.len;
        return a.word < b.word;
    });
    for (std::size_t i = 0; i < elems.size(); ++i) elems[i] = std::move(keyed[i].w);
}

std::uint64_t element_order(const SignedPerm& w) {
    std::uint64_t k = 1;
    SignedPerm cur = w;
    while (!cur.is_identity()) {
        cur = cur * w;
        ++k;
    }
    return k;
}

} // namespace

bool SubgroupData::contains(const SignedPerm& w) const {
    return std::find(elements.begin(), elements.end(), w) != elements.end();
}

std::size_t SubgroupData::index_of(const SignedPerm& w) const {
    auto it = std::find(elements.begin(), elements.end(), w);
    if (it == elements.end()) throw Error(ErrorCode::DimensionMismatch, "element not in subgroup");
    return static_cast<std::size_t>(it - elements.begin());
}

SubgroupData generate_subgroup(int n, std::vector<SignedPerm> gens, std::string label, std::size_t cap) {
    SubgroupData out;
    out.n = n;
    out.label = std::move(label);
    out.generators = std::move(gens);
    std::set<std::vector<int>> seen;
    std::vector<SignedPerm> elems{SignedPerm::identity(n)};
    seen.insert(elems[0].images);
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : out.generators) {
            SignedPerm next = elems[k] * g;
            if (seen.insert(next.images).second) {
                if (elems.size() >= cap) throw Error(ErrorCode::CapExceeded, "subgroup order exceeds cap");
                elems.push_back(std::move(next));
            }
        }
    sort_elements(elems);
    out.elements = std::move(elems);
    out.order = out.elements.size();
    return out;
}

SubgroupData symmetric_group(int n, std::size_t cap) {
    return generate_subgroup(n, coxeter_generators(CoxeterType::A, n), "S" + std::to_string(n), cap);
}

SubgroupData young_subgroup(int n, const std::vector<int>& composition) {
    const auto idx = young_generator_indices(CoxeterType::A, n, composition);
    const auto all = coxeter_generators(CoxeterType::A, n);
    std::vector<SignedPerm> gens;
    for (auto i : idx) gens.push_back(all[i]);
    std::string label = "S(";
    for (std::size_t i = 0; i < composition.size(); ++i)
        label += (i ? "," : "") + std::to_string(composition[i]);
    return generate_subgroup(n, std::move(gens), label + ")");
}

SubgroupData sylow_symmetric(int n, int p) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, "sylow_symmetric needs a prime");
    if (n >= p * p) throw Error(ErrorCode::RankTooLarge, "n must be below p^2");
    const int m = n / p;
    std::vector<SignedPerm> gens;
    for (int j = 0; j < m; ++j) {
        std::vector<int> cyc;
        for (int i = 1; i <= p; ++i) cyc.push_back(j * p + i);
        gens.push_back(SignedPerm::from_cycles(n, {cyc}));
    }
    std::uint64_t order = 1;
    for (int j = 0; j < m; ++j) order *= static_cast<std::uint64_t>(p);
    const std::string label = "Syl" + std::to_string(p) + "(S" + std::to_string(n) + ")";
    if (order > kDefaultGroupCap) {
        SubgroupData out;
        out.n = n;
        out.label = label;
        out.generators = std::move(gens);
        out.order = order;
        return out;
    }
    return generate_subgroup(n, std::move(gens), label);
}

std::vector<DoubleCoset> double_cosets(const SubgroupData& g, const SubgroupData& h, const SubgroupData& k) {
    if (g.elements.empty() && g.order > 0) throw Error(ErrorCode::CapExceeded, "group not enumerated");
    std::set<std::vector<int>> covered;
    std::vector<DoubleCoset> out;
    for (const auto& x : g.elements) {
        if (covered.count(x.images)) continue;
        std::set<std::vector<int>> cls;
        for (const auto& a : h.elements)
            for (const auto& b : k.elements) cls.insert((a * x * b).images);
        covered.insert(cls.begin(), cls.end());
        out.push_back({x, cls.size()});
    }
    return out;
}

ConjugateIntersection conjugate_intersection(const SubgroupData& p, const SignedPerm& x) {
    ConjugateIntersection out;
    const SignedPerm xinv = x.inverse();
    std::vector<SignedPerm> members;
    for (const auto& y : p.elements)
        if (p.contains(xinv * y * x)) members.push_back(y);

    // greedy generating set in element order
    std::vector<SignedPerm> gens;
    std::set<std::vector<int>> span{SignedPerm::identity(p.n).images};
    for (const auto& y : members) {
        if (span.count(y.images)) continue;
        gens.push_back(y);
        span = {};
        for (const auto& e : generate_subgroup(p.n, gens, "").elements) span.insert(e.images);
    }
    out.group = generate_subgroup(p.n, gens, p.label + "^x");

    // orbits on points
    std::vector<int> orbit_of(static_cast<std::size_t>(p.n), -1);
    std::vector<std::vector<int>> orbits;
    for (int pt = 1; pt <= p.n; ++pt) {
        if (orbit_of[static_cast<std::size_t>(pt - 1)] >= 0) continue;
        std::vector<int> orb{pt};
        orbit_of[static_cast<std::size_t>(pt - 1)] = static_cast<int>(orbits.size());
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const auto& g : gens) {
                const int img = std::abs(g(orb[i]));
                if (orbit_of[static_cast<std::size_t>(img - 1)] < 0) {
                    orbit_of[static_cast<std::size_t>(img - 1)] = static_cast<int>(orbits.size());
                    orb.push_back(img);
                }
            }
        orbits.push_back(std::move(orb));
    }

    std::uint64_t product = 1;
    bool cyclic = true;
    for (const auto& orb : orbits) {
        if (orb.size() < 2) continue;
        // restriction of the group to this orbit
        std::set<std::vector<int>> restricted;
        std::vector<SignedPerm> reps;
        for (const auto& e : out.group.elements) {
            SignedPerm r = SignedPerm::identity(p.n);
            for (int pt : orb) r.images[static_cast<std::size_t>(pt - 1)] = e.images[static_cast<std::size_t>(pt - 1)];
            if (restricted.insert(r.images).second) reps.push_back(r);
        }
        product *= restricted.size();
        const SignedPerm* gen = nullptr;
        for (const auto& r : reps)
            if (element_order(r) == restricted.size()) { gen = &r; break; }
        if (!gen) {
            cyclic = false;
            out.diagnostic += "orbit restriction is not cyclic; ";
            continue;
        }
        out.factors.push_back(generate_subgroup(p.n, {*gen}, "C" + std::to_string(restricted.size())));
    }
    if (product != out.group.order) out.diagnostic += "group is not the product of its orbit restrictions; ";
    out.factorized = cyclic && product == out.group.order;
    if (!out.factorized) out.factors.clear();
    return out;
}

} // namespace repdim
