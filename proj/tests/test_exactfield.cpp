#include "doctest.h"

#include <random>

#include "repdim/linalg.hpp"

using namespace repdim;

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    if (f.kind() == FieldKind::Cyclotomic) {
        Scalar s = f.zero();
        Scalar z = f.one();
        for (int i = 0; i < f.degree(); ++i) {
            s += f.from_rational(mpq_class(d(rng), 1 + std::abs(d(rng)))) * z;
            z *= f.zeta();
        }
        return s;
    }
    if (f.kind() == FieldKind::Prime) return f.from_int(d(rng));
    return f.from_rational(mpq_class(d(rng), 1 + std::abs(d(rng))));
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
    return m;
}

// cofactor expansion along the first row
Scalar laplace_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return m.field().one();
    if (n == 1) return m(0, 0);
    Scalar out = m.field().zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        Matrix minor(m.field(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = m(i, k);
        Scalar term = m(0, j) * laplace_det(minor);
        if (j % 2) out -= term;
        else out += term;
    }
    return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) { out.push_back(cur); return; }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// largest k with a nonzero k x k minor
std::size_t minor_rank(const Matrix& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Matrix sub(m.field(), k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
                if (!laplace_det(sub).is_zero()) return k;
            }
    }
    return 0;
}

std::vector<Field> sample_fields() {
    return {Field::rationals(), Field::prime(5), Field::prime(2), Field::cyclotomic(3), Field::cyclotomic(5),
            Field::cyclotomic(4)};
}

} // namespace

TEST_CASE("field descriptors") {
    CHECK(Field::prime(5).characteristic() == 5);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK(Field::cyclotomic(2) == Field::rationals());
    CHECK(Field::cyclotomic(1) == Field::rationals());
    CHECK(Field::cyclotomic(2).degree() == 1);
    // x^4 - 1 = (x - 1)(x + 1)(x^2 + 1): divide out the lower cyclotomic factors
    std::vector<mpz_class> expect{1, 0, 1};
    CHECK(Field::cyclotomic(4).cyclotomic_polynomial() == expect);
    CHECK(Field::cyclotomic(4).degree() == 2);
    for (int l = 1; l <= 12; ++l) CHECK(static_cast<int>(cyclotomic_polynomial(l).size()) == euler_phi(l) + 1);
}

TEST_CASE("scalar arithmetic examples") {
    const Field q = Field::rationals();
    CHECK(q.from_rational(mpq_class(1, 2)) + q.from_rational(mpq_class(1, 3)) == q.from_rational(mpq_class(5, 6)));
    const Field f5 = Field::prime(5);
    CHECK(f5.from_int(2) * f5.from_int(3) == f5.one());
    const Field c4 = Field::cyclotomic(4);
    CHECK(c4.zeta() * c4.zeta() == c4.from_int(-1));
    CHECK_THROWS_AS(q.zero().inv(), Error);
    CHECK_THROWS_AS(q.one() + f5.one(), Error);
}

TEST_CASE("roots of unity") {
    CHECK(root_of_unity(Field::rationals(), 2) == Field::rationals().from_int(-1));
    CHECK(root_of_unity(Field::rationals(), 1).is_one());
    CHECK_THROWS_AS(root_of_unity(Field::rationals(), 3), Error);
    for (int l = 3; l <= 12; ++l) {
        const Field f = Field::cyclotomic(l);
        const Scalar z = root_of_unity(f, l);
        CHECK(z.pow(l).is_one());
        for (int j = 1; j < l; ++j) CHECK_FALSE(z.pow(j).is_one());
        // Phi_l(z) == 0
        Scalar acc = f.zero();
        const auto phi = cyclotomic_polynomial(l);
        for (std::size_t i = 0; i < phi.size(); ++i)
            acc += f.from_rational(mpq_class(phi[i])) * z.pow(static_cast<long>(i));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    for (const Field& f : sample_fields()) {
        for (int t = 0; t < 40; ++t) {
            const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + (-a) == f.zero());
            if (!a.is_zero()) CHECK(a * a.inv() == f.one());
        }
    }
}

TEST_CASE("scalar text round trip") {
    std::mt19937_64 rng(3);
    for (const Field& f : sample_fields()) {
        CHECK(Field::parse(f.to_string()) == f);
        for (int t = 0; t < 30; ++t) {
            const Scalar a = random_scalar(f, rng);
            CHECK(Scalar::parse(f, a.to_string()) == a);
            CHECK(Scalar::parse(f, a.to_string()).to_string() == a.to_string());
        }
    }
    CHECK(Field::rationals().from_rational(mpq_class(-3, 4)).to_string() == "-3/4");
    CHECK(Field::prime(7).from_int(-1).to_string() == "6 mod 7");
    CHECK(Field::cyclotomic(3).zeta().to_string() == "1*z");
}

TEST_CASE("solve_and_kernel examples") {
    const Field q = Field::rationals();
    {
        Matrix b(q, 3, 1);
        b(0, 0) = q.one();
        auto r = solve_and_kernel(Matrix::identity(q, 3), b);
        REQUIRE(r.particular);
        CHECK(*r.particular == b);
        CHECK(r.kernel.empty());
    }
    {
        Matrix a(q, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = q.one();
        auto r = solve_and_kernel(a);
        CHECK(r.rank == 1);
        REQUIRE(r.kernel.size() == 1);
        CHECK(r.kernel[0] == Vector{q.from_int(-1), q.one()});
    }
    CHECK_THROWS_AS(solve_and_kernel(Matrix(q, 2, 2), Matrix(q, 3, 1)), Error);
}

TEST_CASE("rank against minor oracle over F_5") {
    const Field f5 = Field::prime(5);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 5; ++t) {
        Matrix m = random_matrix(f5, 6, 6, rng);
        if (t >= 2) // force dependencies
            for (std::size_t j = 0; j < 6; ++j) m(5, j) = m(0, j) + m(1, j) * f5.from_int(t);
        if (t == 4)
            for (std::size_t j = 0; j < 6; ++j) m(4, j) = m(2, j);
        CHECK(rank(m) == minor_rank(m));
        CHECK(solve_and_kernel(m).rank == minor_rank(m));
    }
}

TEST_CASE("solve/kernel invariants across fields") {
    std::mt19937_64 rng(5);
    for (const Field& f : sample_fields()) {
        for (int t = 0; t < 6; ++t) {
            const std::size_t r = 2 + t % 3, c = 3 + t % 4;
            Matrix a = random_matrix(f, r, c, rng);
            if (t % 2)
                for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * f.from_int(2);
            Matrix x = random_matrix(f, c, 2, rng);
            Matrix b = a * x;
            auto res = solve_and_kernel(a, b);
            REQUIRE(res.particular);
            CHECK(a * *res.particular == b);
            for (const auto& k : res.kernel) CHECK(is_zero(a * k));
            CHECK(res.rank + res.kernel.size() == c);
            // elimination routes agree
            CHECK(res.rank == rank(a));
            auto plain = kernel(a);
            CHECK(plain == res.kernel);
        }
    }
}

TEST_CASE("inverse and charpoly") {
    std::mt19937_64 rng(8);
    for (const Field& f : sample_fields()) {
        Matrix m = random_matrix(f, 4, 4, rng);
        auto inv = inverse(m);
        if (inv) CHECK((m * *inv).is_identity());
        const Poly p = charpoly(m);
        REQUIRE(p.size() == 5);
        CHECK(p.back().is_one());
        CHECK(poly_eval(p, m).is_zero()); // Cayley-Hamilton
    }
}

TEST_CASE("roots in field") {
    const Field q = Field::rationals();
    // (x - 1/2)(x + 3)(x - 3)^2
    Poly p{q.one()};
    for (auto r : {mpq_class(1, 2), mpq_class(-3), mpq_class(3), mpq_class(3)})
        p = poly_mul(p, Poly{-q.from_rational(r), q.one()});
    auto roots = roots_in_field(p);
    CHECK(roots.size() == 3);
    for (const auto& r : roots) CHECK(poly_eval(p, r).is_zero());

    const Field c3 = Field::cyclotomic(3);
    const Scalar z = c3.zeta();
    Poly pc = poly_mul(Poly{-z, c3.one()}, Poly{-(z * z + c3.from_int(2)), c3.one()});
    pc = poly_mul(pc, Poly{c3.one(), c3.zero(), c3.one()}); // x^2 + 1 has no roots here
    auto rc = roots_in_field(pc);
    CHECK(rc.size() == 2);
    for (const auto& r : rc) CHECK(poly_eval(pc, r).is_zero());

    const Field f7 = Field::prime(7);
    Poly pf{f7.from_int(1), f7.zero(), f7.one()}; // x^2 + 1 irreducible mod 7
    CHECK(roots_in_field(pf).empty());
}
