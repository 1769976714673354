#pragma once

// Signed permutations and the Coxeter groups S_n, W(B_n), W(D_n).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repdim/error.hpp"

namespace repdim {

enum class CoxeterType { A, B, D };

const char* coxeter_type_name(CoxeterType t);

/// images[i-1] = w(i) in ±{1..n}. Unsigned permutations have all images
/// positive. Composition is (x*y)(i) = x(y(i)).
struct SignedPerm {
    std::vector<int> images;

    static SignedPerm identity(int n);
    /// From a list of disjoint cycles of points (1-based).
    static SignedPerm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int i) const; // signed image of a signed point
    SignedPerm operator*(const SignedPerm& y) const;
    SignedPerm inverse() const;
    bool is_identity() const;
    bool is_unsigned() const;
    int sign_product() const;
    /// Cycle notation on |w|; a point whose image is negative carries a
    /// trailing apostrophe, e.g. t_0 of type D prints as (1' 2').
    std::string to_string() const;

    auto operator<=>(const SignedPerm&) const = default;
};

/// Generators in presentation order. A: s_1..s_{n-1} of S_n. B and D:
/// t_0, s_1..s_{n-1}.
std::vector<SignedPerm> coxeter_generators(CoxeterType type, int n);
std::string generator_name(CoxeterType type, int index);

/// Length from inversion statistics (independent of any enumeration).
int inversion_length(CoxeterType type, const SignedPerm& w);
/// Lex-smallest reduced word (generator indices), built by peeling off the
/// smallest left descent.
std::vector<int> lex_reduced_word(CoxeterType type, const SignedPerm& w);

constexpr std::size_t kDefaultGroupCap = 10000;

/// Eager enumeration ordered by (length, lex reduced word).
class CoxeterGroup {
public:
    static CoxeterGroup enumerate(CoxeterType type, int n, std::size_t cap = kDefaultGroupCap);

    CoxeterType type() const { return m_type; }
    int rank() const { return m_n; }
    std::size_t size() const { return m_elements.size(); }
    std::size_t num_generators() const { return m_gens.size(); }
    const std::vector<SignedPerm>& generators() const { return m_gens; }

    const SignedPerm& element(std::size_t i) const { return m_elements[i]; }
    int length(std::size_t i) const { return m_length[i]; }
    const std::vector<int>& word(std::size_t i) const { return m_words[i]; }
    std::size_t index_of(const SignedPerm& w) const;
    bool contains(const SignedPerm& w) const { return m_index.count(w.images) > 0; }

    /// index of s*w and w*s
    std::size_t left_mult(std::size_t s, std::size_t w) const { return m_left[w * m_gens.size() + s]; }
    std::size_t right_mult(std::size_t w, std::size_t s) const { return m_right[w * m_gens.size() + s]; }
    std::size_t multiply(std::size_t x, std::size_t y) const;
    std::size_t inverse(std::size_t w) const { return m_inverse[w]; }
    /// max length (length of the longest element)
    int max_length() const { return m_length.empty() ? 0 : m_length.back(); }

private:
    CoxeterType m_type = CoxeterType::A;
    int m_n = 0;
    std::vector<SignedPerm> m_gens;
    std::vector<SignedPerm> m_elements;
    std::vector<int> m_length;
    std::vector<std::vector<int>> m_words;
    std::map<std::vector<int>, std::size_t> m_index;
    std::vector<std::size_t> m_left, m_right, m_inverse;
};

/// A finite group of signed permutations given by generators, with its
/// elements when the order is within the cap.
struct SubgroupData {
    int n = 0;
    std::string label;
    std::vector<SignedPerm> generators;
    /// Sorted by (type-A length, lex reduced word) for unsigned groups, by
    /// images otherwise. Empty if order exceeded the cap.
    std::vector<SignedPerm> elements;
    std::uint64_t order = 0;

    bool contains(const SignedPerm& w) const;
    std::size_t index_of(const SignedPerm& w) const;
};

/// Closure of the generators; CapExceeded if more than cap elements.
SubgroupData generate_subgroup(int n, std::vector<SignedPerm> gens, std::string label,
                               std::size_t cap = kDefaultGroupCap);
SubgroupData symmetric_group(int n, std::size_t cap = kDefaultGroupCap);
SubgroupData young_subgroup(int n, const std::vector<int>& composition);
/// Index subset of the Coxeter generators s_i spanning the Young subgroup.
std::vector<std::size_t> young_generator_indices(CoxeterType type, int n, const std::vector<int>& composition);
/// Order-sorted elements of a parabolic subgroup given by generator indices.
std::vector<std::size_t> parabolic_elements(const CoxeterGroup& g, const std::vector<std::size_t>& gens);

enum class CosetSide { Right, Left }; // Right: W_J w; Left: w W_J

/// Minimal-length representative of each coset of the parabolic subgroup,
/// in enumeration order (hence sorted by length).
std::vector<std::size_t> min_coset_reps(const CoxeterGroup& g, const std::vector<std::size_t>& parabolic,
                                        CosetSide side = CosetSide::Right);
std::vector<std::size_t> min_coset_reps(CoxeterType type, int n, const std::vector<int>& composition);

/// The p-cycles (1..p), (p+1..2p), ... generating a Sylow p-subgroup of
/// S_n; requires n < p^2.
SubgroupData sylow_symmetric(int n, int p);

struct DoubleCoset {
    SignedPerm rep;
    std::size_t size = 0;
};
/// Partition of G into H x K double cosets; representatives are the first
/// element of each class in G's element order.
std::vector<DoubleCoset> double_cosets(const SubgroupData& g, const SubgroupData& h, const SubgroupData& k);

struct ConjugateIntersection {
    SubgroupData group;
    bool factorized = false;
    std::vector<SubgroupData> factors; // cyclic, disjoint supports
    std::string diagnostic;
};
/// P ∩ xPx^{-1}, together with a product decomposition into cyclic groups
/// on disjoint orbits when one exists.
ConjugateIntersection conjugate_intersection(const SubgroupData& p, const SignedPerm& x);

} // namespace repdim
