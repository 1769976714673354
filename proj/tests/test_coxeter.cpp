#include "doctest.h"

#include <functional>
#include <numeric>

#include "repdim/coxeter.hpp"

using namespace repdim;

namespace {

SignedPerm word_product(const std::vector<SignedPerm>& gens, int n, const std::vector<int>& word) {
    SignedPerm w = SignedPerm::identity(n);
    for (int s : word) w = w * gens[static_cast<std::size_t>(s)];
    return w;
}

// every reduced word of w by exhaustive search, lex-smallest first
std::vector<int> brute_min_word(const CoxeterGroup& g, std::size_t w) {
    std::vector<int> best;
    bool have = false;
    std::vector<int> cur;
    const int target = g.length(w);
    std::function<void(SignedPerm)> go = [&](SignedPerm acc) {
        if (static_cast<int>(cur.size()) == target) {
            if (acc == g.element(w) && (!have || cur < best)) {
                best = cur;
                have = true;
            }
            return;
        }
        for (std::size_t s = 0; s < g.num_generators(); ++s) {
            cur.push_back(static_cast<int>(s));
            go(acc * g.generators()[s]);
            cur.pop_back();
        }
    };
    go(SignedPerm::identity(g.rank()));
    return best;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

} // namespace

TEST_CASE("generators and orders") {
    auto a3 = coxeter_generators(CoxeterType::A, 3);
    REQUIRE(a3.size() == 2);
    CHECK(a3[0] == SignedPerm::from_cycles(3, {{1, 2}}));
    CHECK(a3[1] == SignedPerm::from_cycles(3, {{2, 3}}));
    auto b2 = coxeter_generators(CoxeterType::B, 2);
    CHECK(b2[0].images == std::vector<int>{-1, 2});
    CHECK(generate_subgroup(2, b2, "B2").order == 8);
    auto d4 = coxeter_generators(CoxeterType::D, 4);
    CHECK(d4.size() == 4);
    CHECK(generate_subgroup(4, d4, "D4").order == 192);
    CHECK_THROWS_AS(coxeter_generators(CoxeterType::B, 1), Error);
    for (const auto& w : generate_subgroup(4, d4, "D4").elements) CHECK(w.sign_product() == 1);
}

TEST_CASE("enumeration sizes match closure") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(CoxeterGroup::enumerate(CoxeterType::A, n).size() == factorial(n));
        CHECK(CoxeterGroup::enumerate(CoxeterType::B, n).size() == (1u << n) * factorial(n));
        CHECK(CoxeterGroup::enumerate(CoxeterType::D, n).size() == (1u << (n - 1)) * factorial(n));
    }
    auto a4 = CoxeterGroup::enumerate(CoxeterType::A, 4);
    CHECK(a4.max_length() == 6);
    CHECK(CoxeterGroup::enumerate(CoxeterType::B, 2).max_length() == 4);
    auto a3 = CoxeterGroup::enumerate(CoxeterType::A, 3);
    CHECK(a3.word(a3.size() - 1) == std::vector<int>{0, 1, 0});
    CHECK_THROWS_AS(CoxeterGroup::enumerate(CoxeterType::A, 8), Error);
}

TEST_CASE("inversion statistics equal BFS depth") {
    for (auto [t, n] : std::vector<std::pair<CoxeterType, int>>{
             {CoxeterType::A, 4}, {CoxeterType::A, 5}, {CoxeterType::B, 3}, {CoxeterType::B, 4}, {CoxeterType::D, 4}, {CoxeterType::D, 5}}) {
        auto g = CoxeterGroup::enumerate(t, n);
        for (std::size_t w = 0; w < g.size(); ++w) {
            CHECK(inversion_length(t, g.element(w)) == g.length(w));
            CHECK(static_cast<int>(g.word(w).size()) == g.length(w));
            CHECK(word_product(g.generators(), n, g.word(w)) == g.element(w));
            CHECK(lex_reduced_word(t, g.element(w)) == g.word(w));
        }
    }
}

TEST_CASE("chosen words are lex-minimal and order is (length, word)") {
    for (auto [t, n] : std::vector<std::pair<CoxeterType, int>>{{CoxeterType::A, 4}, {CoxeterType::B, 3}, {CoxeterType::D, 4}}) {
        auto g = CoxeterGroup::enumerate(t, n);
        for (std::size_t w = 0; w < g.size(); ++w) {
            if (g.length(w) <= 6) CHECK(brute_min_word(g, w) == g.word(w));
            if (w > 0) {
                const bool ordered = g.length(w - 1) < g.length(w) ||
                                     (g.length(w - 1) == g.length(w) && g.word(w - 1) < g.word(w));
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("multiplication tables") {
    auto g = CoxeterGroup::enumerate(CoxeterType::B, 3);
    for (std::size_t x = 0; x < g.size(); x += 7)
        for (std::size_t y = 0; y < g.size(); y += 5) CHECK(g.element(g.multiply(x, y)) == g.element(x) * g.element(y));
    for (std::size_t w = 0; w < g.size(); ++w) CHECK(g.multiply(w, g.inverse(w)) == 0);
}

TEST_CASE("young subgroups") {
    CHECK(young_subgroup(4, {2, 2}).order == 4);
    CHECK(young_subgroup(3, {3}).order == 6);
    CHECK(young_subgroup(3, {2, 1}).order == 2);
    CHECK_THROWS_AS(young_subgroup(4, {2, 1}), Error);
    CHECK_THROWS_AS(young_subgroup(2, {3, -1}), Error);
}

TEST_CASE("minimal coset representatives") {
    CHECK(min_coset_reps(CoxeterType::A, 4, {2, 2}).size() == 6);
    CHECK(min_coset_reps(CoxeterType::A, 3, {3}) == std::vector<std::size_t>{0});
    auto g3 = CoxeterGroup::enumerate(CoxeterType::A, 3);
    auto reps = min_coset_reps(CoxeterType::A, 3, {2, 1});
    REQUIRE(reps.size() == 3);
    CHECK(g3.length(reps[0]) == 0);
    CHECK(g3.length(reps[1]) == 1);
    CHECK(g3.length(reps[2]) == 2);
    // oracle: partition into cosets and take the minimum length by scanning
    for (int n = 2; n <= 4; ++n) {
        auto g = CoxeterGroup::enumerate(CoxeterType::A, n);
        std::vector<std::vector<int>> comps{{n}, {1, n - 1}};
        if (n == 4) comps.push_back({2, 2});
        if (n >= 3) comps.push_back({n - 1, 1});
        for (const auto& lambda : comps) {
            const auto gens = young_generator_indices(CoxeterType::A, n, lambda);
            const auto sub = parabolic_elements(g, gens);
            for (auto side : {CosetSide::Right, CosetSide::Left}) {
                const auto r = min_coset_reps(g, gens, side);
                CHECK(r.size() * sub.size() == g.size());
                for (auto d : r)
                    for (auto u : sub) {
                        const auto ud = side == CosetSide::Right ? g.multiply(u, d) : g.multiply(d, u);
                        CHECK(g.length(ud) == g.length(u) + g.length(d));
                    }
            }
        }
    }
}

TEST_CASE("sylow subgroups") {
    auto s32 = sylow_symmetric(3, 2);
    CHECK(s32.generators.size() == 1);
    CHECK(s32.generators[0] == SignedPerm::from_cycles(3, {{1, 2}}));
    auto s63 = sylow_symmetric(6, 3);
    CHECK(s63.order == 9);
    CHECK(s63.generators[1] == SignedPerm::from_cycles(6, {{4, 5, 6}}));
    CHECK(sylow_symmetric(5, 5).order == 5);
    CHECK_THROWS_AS(sylow_symmetric(9, 3), Error);
    for (int p : {2, 3, 5})
        for (int n = p; n < p * p && n <= 7; ++n) {
            auto s = sylow_symmetric(n, p);
            std::uint64_t pm = 1;
            for (int j = 0; j < n / p; ++j) pm *= static_cast<std::uint64_t>(p);
            CHECK(s.order == pm);
            CHECK((factorial(n) / s.order) % static_cast<std::uint64_t>(p) != 0);
        }
}

TEST_CASE("double cosets") {
    auto s3 = symmetric_group(3);
    auto h = generate_subgroup(3, {SignedPerm::from_cycles(3, {{1, 2}})}, "H");
    auto dc = double_cosets(s3, h, h);
    REQUIRE(dc.size() == 2);
    CHECK(dc[0].size == 2);
    CHECK(dc[1].size == 4);
    CHECK(dc[0].rep.is_identity());
    CHECK(double_cosets(s3, s3, s3).size() == 1);
    auto e = generate_subgroup(3, {}, "1");
    CHECK(double_cosets(s3, e, e).size() == 6);
    auto s5 = symmetric_group(5);
    auto p = sylow_symmetric(5, 3);
    std::size_t total = 0;
    for (const auto& d : double_cosets(s5, p, p)) total += d.size;
    CHECK(total == 120);
}

TEST_CASE("conjugate intersections") {
    auto p = generate_subgroup(3, {SignedPerm::from_cycles(3, {{1, 2}})}, "P");
    auto same = conjugate_intersection(p, SignedPerm::identity(3));
    CHECK(same.group.order == 2);
    CHECK(same.factorized);
    auto triv = conjugate_intersection(p, SignedPerm::from_cycles(3, {{1, 3}}));
    CHECK(triv.group.order == 1);
    CHECK(triv.factorized);
    auto p6 = sylow_symmetric(6, 3);
    auto sw = conjugate_intersection(p6, SignedPerm::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
    CHECK(sw.group.order == 9);
    CHECK(sw.factorized);
    CHECK(sw.factors.size() == 2);
    // a diagonal subgroup does not split over its orbits
    auto diag = generate_subgroup(4, {SignedPerm::from_cycles(4, {{1, 2}, {3, 4}})}, "diag");
    auto d = conjugate_intersection(diag, SignedPerm::identity(4));
    CHECK_FALSE(d.factorized);
    CHECK_FALSE(d.diagnostic.empty());
}

TEST_CASE("printing") {
    CHECK(SignedPerm::identity(3).to_string() == "()");
    CHECK(SignedPerm::from_cycles(6, {{1, 2, 3}, {4, 5, 6}}).to_string() == "(1 2 3)(4 5 6)");
    CHECK(coxeter_generators(CoxeterType::D, 3)[0].to_string() == "(1' 2')");
    CHECK(coxeter_generators(CoxeterType::B, 3)[0].to_string() == "(1')");
}
