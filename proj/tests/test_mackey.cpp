#include "doctest.h"

#include <map>
#include <set>

#include "repdim/mackey.hpp"

using namespace repdim;

namespace {

// Over k C_p a module is fixed by the Jordan type of g - 1; block sizes from
// ranks of powers.
std::map<std::size_t, std::size_t> jordan_type(const Matrix& g) {
    const Field& f = g.field();
    const std::size_t d = g.rows();
    Matrix n = g;
    for (std::size_t i = 0; i < d; ++i) n(i, i) -= f.one();
    std::vector<std::size_t> r{d};
    Matrix pw = Matrix::identity(f, d);
    while (r.back() > 0) {
        pw = pw * n;
        r.push_back(rank(pw));
    }
    // blocks of size >= k: r[k-1] - r[k]
    std::map<std::size_t, std::size_t> out;
    for (std::size_t k = 1; k < r.size(); ++k) {
        const std::size_t at_least = r[k - 1] - r[k];
        const std::size_t longer = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
        if (at_least > longer) out[k] = at_least - longer;
    }
    return out;
}

// x with xPx^-1 = P give Q = P and a copy of M; the other double cosets
// have size |P|^2 and give free modules (P of prime order).
std::map<std::size_t, std::size_t> expected_type(const SylowSetting& s, const std::map<std::size_t, std::size_t>& m,
                                                 std::size_t dim_m) {
    std::size_t normalizer = 0;
    for (const auto& x : s.group.elements) {
        bool normal = true;
        for (const auto& h : s.sylow.generators) normal = normal && s.sylow.contains(x * h * x.inverse());
        if (normal) ++normalizer;
    }
    const std::size_t p = s.sylow.order;
    const std::size_t fixed = normalizer / p;
    const std::size_t free = (s.group.order - normalizer) / (p * p);
    auto out = m;
    for (auto& [k, c] : out) c *= fixed;
    out[p] += free * dim_m;
    return out;
}

std::size_t brute_double_cosets(const SylowSetting& s) {
    std::set<std::vector<int>> seen;
    std::size_t count = 0;
    for (const auto& x : s.group.elements) {
        if (seen.count(x.images)) continue;
        ++count;
        for (const auto& h : s.sylow.elements)
            for (const auto& k : s.sylow.elements) seen.insert((h * x * k).images);
    }
    return count;
}

void run_case(int n, int p, const std::vector<int>& blocks) {
    const auto s = sylow_setting(n, p);
    const Representation m = sylow_jordan_module(s, {blocks});
    const auto rep = mackey_check(s, m);
    CHECK(rep.passed());
    CHECK(rep.lhs_dim == s.group.order / s.sylow.order * m.dim());
    CHECK(rep.rhs_dim == rep.lhs_dim);
    CHECK(rep.terms.size() == brute_double_cosets(s));
    for (const auto& t : rep.terms) {
        CHECK(t.agrees);
        CHECK(t.in_add_m);
        CHECK(t.factorized);
    }
    const Representation lhs = restrict_module(induce(s.embedding, m), s.embedding);
    CHECK(jordan_type(lhs.action()[0]) == expected_type(s, jordan_type(m.action()[0]), m.dim()));
}

} // namespace

TEST_CASE("sylow jordan modules") {
    const auto s = sylow_setting(4, 3);
    CHECK(s.sylow.order == 3);
    const auto m = sylow_jordan_module(s, {{1, 2, 3}});
    CHECK(m.dim() == 6);
    CHECK(jordan_type(m.action()[0]) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 1}});
    CHECK_THROWS_AS(sylow_jordan_module(s, {{4}}), Error);
    CHECK_THROWS_AS(sylow_jordan_module(s, {{1}, {1}}), Error);

    const auto s2 = sylow_setting(6, 3); // two 3-cycles
    const auto t = sylow_jordan_module(s2, {{1, 2}, {3}});
    CHECK(t.dim() == 9);
    CHECK(t.action().size() == 2);
}

TEST_CASE("mackey (3,2) with k + kC2") {
    const auto s = sylow_setting(3, 2);
    const auto m = sylow_jordan_module(s, {{1, 2}});
    const auto rep = mackey_check(s, m);
    CHECK(rep.lhs_dim == 9);
    CHECK(rep.rhs_dim == 9);
    CHECK(rep.passed());
    run_case(3, 2, {1, 2});
}

TEST_CASE("mackey (4,3) with J1+J2+J3") { run_case(4, 3, {1, 2, 3}); }

TEST_CASE("mackey (5,3) with J1+J2+J3") { run_case(5, 3, {1, 2, 3}); }

TEST_CASE("mackey with a module missing the projective") {
    // M = J1 + J2 has no free summand while the far double cosets induce
    // free modules, so the left side is not in add(M).
    const auto s = sylow_setting(4, 3);
    const auto rep = mackey_check(s, sylow_jordan_module(s, {{1, 2}}));
    CHECK(rep.agree);
    CHECK_FALSE(rep.in_add_m);
}
