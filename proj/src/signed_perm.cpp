#include <cstdlib>
#include <sstream>

#include "repdim/coxeter.hpp"

namespace repdim {

const char* coxeter_type_name(CoxeterType t) {
    switch (t) {
    case CoxeterType::A: return "A";
    case CoxeterType::B: return "B";
    case CoxeterType::D: return "D";
    }
    return "?";
}

SignedPerm SignedPerm::identity(int n) {
    SignedPerm w;
    w.images.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w.images[static_cast<std::size_t>(i)] = i + 1;
    return w;
}

SignedPerm SignedPerm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    SignedPerm w = identity(n);
    for (const auto& c : cycles)
        for (std::size_t k = 0; k < c.size(); ++k) {
            const int a = c[k], b = c[(k + 1) % c.size()];
            if (a < 1 || a > n || b < 1 || b > n) throw Error(ErrorCode::DimensionMismatch, "cycle point out of range");
            w.images[static_cast<std::size_t>(a - 1)] = b;
        }
    return w;
}

int SignedPerm::operator()(int i) const {
    const int v = images[static_cast<std::size_t>(std::abs(i) - 1)];
    return i < 0 ? -v : v;
}

SignedPerm SignedPerm::operator*(const SignedPerm& y) const {
    if (y.degree() != degree()) throw Error(ErrorCode::DimensionMismatch, "permutation degrees differ");
    SignedPerm out;
    out.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = (*this)(y.images[i]);
    return out;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm out;
    out.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const int v = images[i];
        const int pt = static_cast<int>(i) + 1;
        out.images[static_cast<std::size_t>(std::abs(v) - 1)] = v < 0 ? -pt : pt;
    }
    return out;
}

bool SignedPerm::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool SignedPerm::is_unsigned() const {
    for (int v : images)
        if (v < 0) return false;
    return true;
}

int SignedPerm::sign_product() const {
    int s = 1;
    for (int v : images)
        if (v < 0) s = -s;
    return s;
}

std::string SignedPerm::to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(images.size(), false);
    bool any = false;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        const bool fixed = images[start] == static_cast<int>(start) + 1;
        if (fixed) { seen[start] = true; continue; }
        any = true;
        os << '(';
        std::size_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            if (!first) os << ' ';
            first = false;
            os << i + 1;
            if (images[i] < 0) os << '\'';
            i = static_cast<std::size_t>(std::abs(images[i]) - 1);
        }
        os << ')';
    }
    if (!any) return "()";
    return os.str();
}

std::vector<SignedPerm> coxeter_generators(CoxeterType type, int n) {
    const int min_rank = type == CoxeterType::A ? 1 : 2;
    if (n < min_rank) throw Error(ErrorCode::UnsupportedRank, "rank too small for this Coxeter type");
    std::vector<SignedPerm> gens;
    if (type == CoxeterType::B) {
        SignedPerm t = SignedPerm::identity(n);
        t.images[0] = -1;
        gens.push_back(t);
    } else if (type == CoxeterType::D) {
        SignedPerm t = SignedPerm::identity(n);
        t.images[0] = -2;
        t.images[1] = -1;
        gens.push_back(t);
    }
    for (int i = 1; i < n; ++i) gens.push_back(SignedPerm::from_cycles(n, {{i, i + 1}}));
    return gens;
}

std::string generator_name(CoxeterType type, int index) {
    if (type == CoxeterType::A) return "s" + std::to_string(index + 1);
    return index == 0 ? "t0" : "s" + std::to_string(index);
}

int inversion_length(CoxeterType type, const SignedPerm& w) {
    const auto& v = w.images;
    const std::size_t n = v.size();
    int inv = 0, nsp = 0, neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] < 0) ++neg;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[i] > v[j]) ++inv;
            if (v[i] + v[j] < 0) ++nsp;
        }
    }
    switch (type) {
    case CoxeterType::A: return inv;
    case CoxeterType::B: return inv + nsp + neg;
    case CoxeterType::D: return inv + nsp;
    }
    return inv;
}

std::vector<int> lex_reduced_word(CoxeterType type, const SignedPerm& w) {
    const auto gens = coxeter_generators(type, w.degree());
    std::vector<int> word;
    SignedPerm cur = w;
    int len = inversion_length(type, cur);
    while (len > 0) {
        bool found = false;
        for (std::size_t s = 0; s < gens.size(); ++s) {
            SignedPerm next = gens[s] * cur;
            const int l = inversion_length(type, next);
            if (l < len) {
                word.push_back(static_cast<int>(s));
                cur = std::move(next);
                len = l;
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorCode::AlgorithmFailure, "no left descent for a non-identity element");
    }
    return word;
}

} // namespace repdim
