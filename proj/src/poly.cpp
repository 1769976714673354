#include <algorithm>
#include <numeric>
#include <cmath>
#include <complex>
#include <map>

#include <Eigen/Dense>

#include "repdim/linalg.hpp"

namespace repdim {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, a[0].field().zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j].add_product(a[i], b[j]);
    poly_trim(out);
    return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly den = b;
    poly_trim(den);
    if (den.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Poly rem = a;
    poly_trim(rem);
    if (rem.size() < den.size()) return {{}, rem};
    const Field field = den[0].field();
    Poly quot(rem.size() - den.size() + 1, field.zero());
    const Scalar lead_inv = den.back().inv();
    for (std::size_t k = rem.size() - 1;; --k) {
        const Scalar c = rem[k] * lead_inv;
        const std::size_t shift = k - (den.size() - 1);
        quot[shift] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < den.size(); ++j) rem[shift + j].add_product(-c, den[j]);
        if (k == den.size() - 1) break;
    }
    poly_trim(rem);
    poly_trim(quot);
    return {quot, rem};
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    const Scalar inv = a.back().inv();
    for (auto& c : a) c *= inv;
    return a;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k].times_int(static_cast<long>(k)));
    poly_trim(out);
    return out;
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar acc = x.field().zero();
    for (std::size_t k = p.size(); k-- > 0;) {
        acc *= x;
        acc += p[k];
    }
    return acc;
}

Matrix poly_eval(const Poly& p, const Matrix& m) {
    Matrix acc(m.field(), m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.field(), m.rows());
    for (std::size_t k = p.size(); k-- > 0;) {
        acc = acc * m;
        acc.add_scaled(p[k], id);
    }
    return acc;
}

Poly squarefree_part(const Poly& p) {
    Poly f = p;
    poly_trim(f);
    if (f.size() <= 1) return f;
    const Field field = f[0].field();
    if (field.kind() == FieldKind::Prime) {
        // product of the distinct linear factors
        Poly out{field.one()};
        for (const auto& r : roots_in_field(f)) out = poly_mul(out, {-r, field.one()});
        return out;
    }
    auto g = poly_gcd(f, poly_derivative(f));
    auto q = poly_divmod(f, g).first;
    const Scalar inv = q.back().inv();
    for (auto& c : q) c *= inv;
    return q;
}

Poly charpoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
    const std::size_t n = m.rows();
    const Field field = m.field();
    Matrix h = m;
    // Hessenberg reduction by similarity transforms.
    for (std::size_t col = 0; col + 1 < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col + 1; i < n; ++i)
            if (!h(i, col).is_zero()) { piv = i; break; }
        if (piv == n) continue;
        const std::size_t r = col + 1;
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(r, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, r));
        }
        const Scalar t_inv = h(r, col).inv();
        for (std::size_t i = r + 1; i < n; ++i) {
            if (h(i, col).is_zero()) continue;
            const Scalar u = h(i, col) * t_inv;
            for (std::size_t j = 0; j < n; ++j)
                if (!h(r, j).is_zero()) h(i, j).add_product(-u, h(r, j));
            for (std::size_t k = 0; k < n; ++k)
                if (!h(k, i).is_zero()) h(k, r).add_product(u, h(k, i));
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} prod_{j=i+1..k} h_{j,j-1} p_{i-1}
    std::vector<Poly> p(n + 1);
    p[0] = {field.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly next = poly_mul({-h(k - 1, k - 1), field.one()}, p[k - 1]);
        next.resize(k + 1, field.zero());
        Scalar prod = field.one();
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (prod.is_zero()) break;
            const Scalar c = -(h(i - 1, k - 1) * prod);
            for (std::size_t d = 0; d < p[i - 1].size(); ++d) next[d].add_product(c, p[i - 1][d]);
        }
        poly_trim(next);
        p[k] = std::move(next);
    }
    return p[n];
}

namespace {

std::vector<std::complex<double>> numeric_roots(const std::vector<std::complex<double>>& monic) {
    // monic: coefficients low->high with leading 1
    const std::size_t d = monic.size() - 1;
    if (d == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 1; i < d; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < d; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -monic[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

// Best rational approximation with bounded denominator.
std::optional<mpq_class> rationalize(double x, long max_den = 1000000) {
    if (!std::isfinite(x) || std::fabs(x) > 1e12) return std::nullopt;
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double a = std::floor(v);
        const long ai = static_cast<long>(a);
        const long h2 = ai * h1 + h0;
        const long k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::fabs(static_cast<double>(h1) / static_cast<double>(k1) - x) < 1e-9 * std::max(1.0, std::fabs(x))) break;
        const double frac = v - a;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (k1 == 0) return std::nullopt;
    mpq_class q(h1, k1);
    q.canonicalize();
    return q;
}

double to_double(const mpq_class& q) { return q.get_d(); }

void add_root(std::vector<Scalar>& roots, const Poly& p, const Scalar& cand) {
    if (!poly_eval(p, cand).is_zero()) return;
    for (const auto& r : roots)
        if (r == cand) return;
    roots.push_back(cand);
}

} // namespace

std::vector<Scalar> roots_in_field(const Poly& input) {
    Poly p = input;
    poly_trim(p);
    if (p.size() <= 1) return {};
    const Field field = p[0].field();
    std::vector<Scalar> roots;

    if (field.kind() == FieldKind::Prime) {
        const std::int64_t q = field.characteristic();
        if (q > 2000000) throw Error(ErrorCode::AlgorithmFailure, "prime too large for exhaustive root search");
        for (std::int64_t a = 0; a < q; ++a) {
            const Scalar x = field.from_int(static_cast<long>(a));
            if (poly_eval(p, x).is_zero()) roots.push_back(x);
        }
        return roots;
    }

    Poly sf = squarefree_part(p);
    if (sf.size() == 2) {
        roots.push_back(-sf[0] / sf[1]);
        return roots;
    }

    if (field.kind() == FieldKind::Rationals) {
        std::vector<std::complex<double>> monic;
        for (const auto& c : sf) monic.emplace_back(to_double(c.rational()), 0.0);
        for (const auto& z : numeric_roots(monic)) {
            if (std::fabs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
            if (auto q = rationalize(z.real())) add_root(roots, sf, field.from_rational(*q));
        }
    } else {
        // Q(zeta_l): match numeric roots across the embeddings z -> e^{2 pi i j / l}
        // for j < l/2 coprime to l; complex conjugation supplies the others.
        const auto& ctx = field.cyclotomic_data();
        const int l = ctx->order;
        const int deg = ctx->degree;
        std::vector<int> js;
        for (int j = 1; 2 * j < l; ++j)
            if (std::gcd(j, l) == 1) js.push_back(j);
        std::vector<std::vector<std::complex<double>>> per_embedding;
        for (int j : js) {
            const std::complex<double> z = std::polar(1.0, 2.0 * M_PI * j / l);
            std::vector<std::complex<double>> monic;
            for (const auto& c : sf) {
                std::complex<double> acc = 0.0, zk = 1.0;
                for (int k = 0; k < deg; ++k) {
                    acc += to_double(c.cyclo().c[k]) * zk;
                    zk *= z;
                }
                monic.push_back(acc);
            }
            const std::complex<double> lead = monic.back();
            for (auto& c : monic) c /= lead;
            per_embedding.push_back(numeric_roots(monic));
        }
        // real system: for each embedding j, Re and Im of sum_k c_k z_j^k
        Eigen::MatrixXd sys(deg, deg);
        for (std::size_t e = 0; e < js.size(); ++e) {
            const std::complex<double> z = std::polar(1.0, 2.0 * M_PI * js[e] / l);
            std::complex<double> zk = 1.0;
            for (int k = 0; k < deg; ++k) {
                sys(static_cast<Eigen::Index>(2 * e), k) = zk.real();
                sys(static_cast<Eigen::Index>(2 * e + 1), k) = zk.imag();
                zk *= z;
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
        std::size_t combos = 1;
        for (const auto& r : per_embedding) combos *= std::max<std::size_t>(1, r.size());
        if (combos > 200000) throw Error(ErrorCode::AlgorithmFailure, "too many root combinations");
        std::vector<std::size_t> idx(per_embedding.size(), 0);
        for (std::size_t c = 0; c < combos; ++c) {
            Eigen::VectorXd rhs(deg);
            for (std::size_t e = 0; e < js.size(); ++e) {
                rhs(static_cast<Eigen::Index>(2 * e)) = per_embedding[e][idx[e]].real();
                rhs(static_cast<Eigen::Index>(2 * e + 1)) = per_embedding[e][idx[e]].imag();
            }
            Eigen::VectorXd sol = lu.solve(rhs);
            std::vector<mpq_class> coeffs(deg);
            bool ok = true;
            for (int k = 0; k < deg && ok; ++k) {
                auto q = rationalize(sol(k));
                if (!q) ok = false; else coeffs[k] = *q;
            }
            if (ok) add_root(roots, sf, Scalar(Scalar::Cyclo{ctx, coeffs}));
            for (std::size_t e = 0; e < idx.size(); ++e) {
                if (++idx[e] < per_embedding[e].size()) break;
                idx[e] = 0;
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.to_string() < b.to_string(); });
    return roots;
}

} // namespace repdim
