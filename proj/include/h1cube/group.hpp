#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "h1cube/field.hpp"

namespace h1cube {

/// Concrete group element: a permutation of {0..d-1} in image form, or a
/// 2x2 matrix over a SmallRing (optionally taken up to scalars). Which part
/// is active is determined by the owning realization.
struct Mat2 {
    uint16_t a = 1, b = 0, c = 0, d = 1;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Element {
    std::vector<uint16_t> perm;
    Mat2 mat;
};

/// Knows how to multiply, invert and canonicalize elements of one concrete
/// realization. Projective matrices are normalized so the first nonzero
/// entry in row-major order is 1.
class Realization {
public:
    enum class Kind { Perm, Mat };

    static Realization permutation(unsigned degree);
    static Realization matrix(RingPtr ring, bool projective);

    Kind kind() const { return kind_; }
    unsigned degree() const { return degree_; }
    const RingPtr& ring() const { return ring_; }
    bool projective() const { return projective_; }

    Element identity() const;
    Element mul(const Element& x, const Element& y) const;  // (x*y): apply y, then x
    Element inv(const Element& x) const;
    Element canon(Element x) const;
    std::string key(const Element& x) const;
    std::string show(const Element& x) const;
    bool eq(const Element& x, const Element& y) const;

    Element make_perm(std::vector<uint16_t> images) const;
    /// Entries are integers, embedded through the prime subfield / Z/n.
    Element make_mat(long long a, long long b, long long c, long long d) const;
    /// Entries are raw ring element indices.
    Element make_mat_idx(uint16_t a, uint16_t b, uint16_t c, uint16_t d) const;

private:
    Kind kind_ = Kind::Perm;
    unsigned degree_ = 0;
    RingPtr ring_;
    bool projective_ = false;
};

unsigned element_order(const Realization& real, const Element& x);
std::vector<Element> cyclic_subgroup(const Realization& real, const Element& x);

struct ConjugacyClass {
    Element rep;  // lexicographically minimal canonical representative
    unsigned order = 1;
    long long size = 1;
    std::string label;  // e.g. "2a"; deterministic (see labeling rules)
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A concretely realized finite group with frozen caches: the full element
/// set (when enumerated) and deterministic conjugacy-class data. Structural
/// groups skip enumeration and answer class queries through a classifier.
class FiniteGroup {
public:
    static constexpr long long kEnumerationCap = 1'000'000;

    static GroupPtr enumerate(Realization real, std::vector<Element> gens,
                              std::string description, long long cap = kEnumerationCap);
    static GroupPtr structural(Realization real, std::vector<Element> gens,
                               std::string description, long long order,
                               std::vector<ConjugacyClass> classes,
                               std::function<int(const Element&)> classifier);

    const Realization& realization() const { return real_; }
    const std::vector<Element>& generators() const { return gens_; }
    const std::string& description() const { return description_; }
    long long order() const { return order_; }
    bool enumerated() const { return enumerated_; }

    const std::vector<Element>& elements() const;  // enumerated only
    int index_of(const Element& x) const;          // -1 if not a member (enumerated only)
    bool contains(const Element& x) const { return index_of(x) >= 0; }

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of(const Element& x) const;
    int class_of_index(int element_index) const;
    int class_by_label(const std::string& label) const;  // -1 if absent
    const std::vector<int>& class_members(int ci) const;  // enumerated only

    /// Class of rep(ci)^k.
    int class_power(int ci, unsigned long long k) const;
    int inverse_class(int ci) const;
    long long centralizer_order(int ci) const { return order_ / classes_[ci].size; }
    unsigned exponent() const;

    Element mul(const Element& x, const Element& y) const { return real_.mul(x, y); }
    Element inv(const Element& x) const { return real_.inv(x); }
    Element identity() const { return real_.identity(); }

private:
    FiniteGroup() = default;

    Realization real_;
    std::vector<Element> gens_;
    std::string description_;
    long long order_ = 1;
    bool enumerated_ = false;

    std::vector<Element> elems_;  // sorted by key
    std::unordered_map<std::string, int> index_;
    std::vector<int> elem_class_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::vector<int>> class_members_;
    std::function<int(const Element&)> classifier_;
};

// ---- subgroup and structure utilities (enumerated groups) ----

/// Closure of the given elements as a sorted list of element indices.
std::vector<int> subgroup_closure(const FiniteGroup& G, const std::vector<Element>& seed);

/// Checks closure under multiplication and inverses; all elements must lie in G.
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& indices);

std::vector<int> conjugate_subgroup(const FiniteGroup& G, const std::vector<int>& indices,
                                    const Element& g);

long long center_order(const FiniteGroup& G);

/// Derived subgroup as sorted element indices (normal closure of generator
/// commutators).
std::vector<int> derived_subgroup(const FiniteGroup& G);

struct Fingerprint {
    long long order = 1;
    std::map<unsigned, long long> order_histogram;
    long long center_order = 1;
    std::vector<long long> abelian_invariants;  // d1 | d2 | ... ascending
    long long derived_order = 1;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string str() const;
};

/// Structure summary: equal for isomorphic groups (converse not claimed).
Fingerprint fingerprint(const FiniteGroup& G);

/// Deterministic class ordering shared by the enumerated and structural
/// paths: sort by (order, size), refine by power-map profile until stable,
/// break remaining ties by the minimal representative key. Returns the map
/// raw index -> canonical position.
std::vector<int> canonical_class_positions(const std::vector<unsigned>& order,
                                           const std::vector<long long>& size,
                                           const std::vector<std::string>& repkey,
                                           const std::function<int(int, unsigned)>& powcls);

}  // namespace h1cube
