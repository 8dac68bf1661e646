#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "h1cube/class_function.hpp"
#include "h1cube/structural.hpp"

namespace h1cube {

/// Label of a generic irreducible representation of PGL2(F_q): principal
/// series Ind(eta) with eta != eta^{-1}, a Steinberg twist St (x) eta with
/// eta^2 = 1, or a cuspidal pi_chi with chi != chi^{-1}. Torus characters
/// are stored as exponents, normalized up to inversion: min(k, m - k).
struct GenericRepLabel {
    enum class Kind { PrincipalSeries, SteinbergTwist, Cuspidal };
    Kind kind = Kind::SteinbergTwist;
    long long exponent = 0;  // PS: mod q-1; St: 0/1 (trivial/quadratic); Cusp: mod q+1

    std::string str() const;
    friend bool operator==(const GenericRepLabel&, const GenericRepLabel&) = default;
    friend auto operator<=>(const GenericRepLabel&, const GenericRepLabel&) = default;
};

GenericRepLabel make_principal_series(unsigned q, long long exponent);
GenericRepLabel make_steinberg_twist(unsigned q, int quadratic);
GenericRepLabel make_cuspidal(unsigned q, long long exponent);

/// Transfer of a generic representation to the normalizer S' of the split
/// torus or T' of the non-split torus; possibly the zero function.
struct TransferredRep {
    enum class Target { SPrime, TPrime };
    Target target = Target::SPrime;
    bool zero = false;
    ClassFunction character;  // on the dihedral group; empty when zero
};

struct TrilinearSample {
    std::string triple;
    long long m_G = 0, m_Sprime = 0, m_Tprime = 0;
};

struct TrilinearReport {
    unsigned q = 0;
    long long triples_checked = 0;
    std::map<std::string, long long> pattern_counts;
    std::vector<TrilinearSample> samples;     // deterministic selection
    std::vector<TrilinearSample> violations;  // expected empty
};

/// Explicit character theory of PGL2(F_q) built on the structural class
/// data; q >= 4, both parities. Construction is deterministic and cached.
class Pgl2Theory {
public:
    explicit Pgl2Theory(unsigned q);

    unsigned q() const { return q_; }
    const StructuralPsl2& structure() const { return G_; }
    const GroupPtr& group() const { return G_.group; }
    const CharacterTable& table() const { return table_; }
    const std::vector<GenericRepLabel>& generic_labels() const { return labels_; }

    /// Table row for a generic label.
    const ClassFunction& character_of(const GenericRepLabel& label) const;

    const GroupPtr& s_prime() const { return sprime_; }
    const GroupPtr& t_prime() const { return tprime_; }

    TransferredRep transfer(const GenericRepLabel& label, TransferredRep::Target target) const;

    long long m_H_G(const GenericRepLabel& a, const GenericRepLabel& b,
                    const GenericRepLabel& c) const;
    long long m_H_dihedral(const GenericRepLabel& a, const GenericRepLabel& b,
                           const GenericRepLabel& c, TransferredRep::Target target) const;

    /// Values along the tori (restriction helpers; k is the torus exponent).
    Cyclotomic value_at_split(const ClassFunction& f, long long k) const;
    Cyclotomic value_at_nonsplit(const ClassFunction& f, long long j) const;
    Cyclotomic dihedral_rotation_value(const TransferredRep& rep, long long k) const;

    static std::shared_ptr<const Pgl2Theory> get(unsigned q);  // cached

private:
    unsigned q_;
    StructuralPsl2 G_;
    std::vector<GenericRepLabel> labels_;
    CharacterTable table_;
    std::map<GenericRepLabel, int> row_of_label_;
    GroupPtr sprime_, tprime_;
    std::vector<int> rot_class_s_, rot_class_t_;    // rotation exponent -> class
    std::vector<int> refl_class_s_, refl_class_t_;  // reflection j -> class

    ClassFunction build_generic_character(const GenericRepLabel& label) const;
};

/// m_H over H in {G, S', T'}; the trilinear verification drives this.
long long m_H(unsigned q, const GenericRepLabel& a, const GenericRepLabel& b,
              const GenericRepLabel& c, const std::string& H);

/// Checks sum_H sgn(H) m_H = 1 over every unordered triple of generic
/// labels; violations are collected (tests and the CLI treat any as fatal).
TrilinearReport verify_trilinear(unsigned q);

/// Symbolic proof of the 4-variable rational identity behind the trilinear
/// statement: clears denominators over Q[q, x1, x2, x3] and compares
/// coefficient maps.
bool verify_identity_polynomial();

/// Exact numeric evaluation of the same identity's left-hand side.
BigRational identity_lhs_value(const BigRational& q, const BigRational& x1,
                               const BigRational& x2, const BigRational& x3);

}  // namespace h1cube
