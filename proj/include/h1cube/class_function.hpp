#pragma once

#include <vector>

#include "h1cube/cyclotomic.hpp"
#include "h1cube/group.hpp"

namespace h1cube {

/// Exact-valued function on the conjugacy classes of a fixed group.
/// No genuineness assumption: virtual characters (Grothendieck-group
/// differences) are first-class values here.
struct ClassFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;  // indexed by class position

    const Cyclotomic& at_class(int ci) const { return values[ci]; }
    /// Value at the identity class (= degree for genuine characters).
    const Cyclotomic& degree() const { return values[0]; }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    ClassFunction scaled(const BigRational& r) const;
    ClassFunction conj() const;
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

ClassFunction trivial_character(const GroupPtr& G);
ClassFunction regular_character(const GroupPtr& G);

/// Character of the permutation representation on G/H, H given by element
/// indices into G (must be closed under products and inverses). Values are
/// computed by the class-intersection formula [G:H] |C \cap H| / |C| and are
/// nonnegative rational integers.
ClassFunction induced_trivial_character(const GroupPtr& G, const std::vector<int>& subgroup);

/// (1/|G|) sum_C |C| f(C) conj(h(C)); exact.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

/// Raw invariant-dimension average (1/|G|) sum_C |C| prod_t f_t(C), no
/// integrality assertion. Rational for genuine characters.
BigRational invariant_dim_rational(const std::vector<const ClassFunction*>& fs);

/// dim of the invariants of the n-th tensor power; asserts the result is a
/// nonnegative rational integer (NonIntegralResult otherwise).
long long tensor_power_invariant_dim(const ClassFunction& chi, unsigned n);

/// dim (f1 (x) f2 (x) f3)^G with the same integrality assertion.
long long triple_invariant_dim(const ClassFunction& f1, const ClassFunction& f2,
                               const ClassFunction& f3);

struct CharacterTable {
    GroupPtr group;
    std::vector<ClassFunction> irreducibles;  // sorted by (degree, value key)

    int size() const { return static_cast<int>(irreducibles.size()); }
    long long degree_of(int i) const;
    /// Exact hygiene checks: row/column orthogonality, sum of squared
    /// degrees, degree divisibility. Throws TableInconsistent.
    void verify() const;
};

/// Character table via Dixon's modular method (see dixon.cpp for the
/// algorithm notes). Requires an enumerated group of order <= 1e5.
CharacterTable dixon_character_table(const GroupPtr& G);

/// Memoized table access: per-process cache, plus an optional on-disk cache
/// in $H1CUBE_CACHE_DIR keyed by the group's recipe string and fingerprint.
const CharacterTable& character_table_for(const GroupPtr& G, const std::string& spec_key = "");

struct Decomposition {
    std::vector<BigInt> multiplicities;  // aligned with table.irreducibles
    bool any_negative = false;
};

/// Multiplicities <chi, chi_i>. NonIntegralResult if chi is not a virtual
/// character; NegativeMultiplicity if genuine decomposition was requested
/// (allow_virtual = false) and a negative multiplicity shows up.
Decomposition decompose(const ClassFunction& chi, const CharacterTable& table,
                        bool allow_virtual = true);

/// sum_i mult_i * irreducible_i as a class function.
ClassFunction rebuild(const Decomposition& dec, const CharacterTable& table);

std::string table_to_json_string(const CharacterTable& table);
CharacterTable table_from_json_string(const GroupPtr& G, const std::string& text);

}  // namespace h1cube
