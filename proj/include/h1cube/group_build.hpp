#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "h1cube/group.hpp"

namespace h1cube {

/// Construction recipe for a concrete finite group. Products nest through
/// `factors`; semidirect actions map acting-group generators to images of
/// the normal group's generators (as words in those generators).
struct GroupSpec {
    enum class Kind {
        Symmetric,       // n
        Cyclic,          // n
        Dihedral,        // n (order 2n, n >= 3)
        PermGens,        // perm_gens
        MatGens,         // ring + projective + mat_gens
        Pgl2,            // n = q
        Psl2,            // n = q
        Gl2Mod,          // n
        DirectProduct,   // factors (>= 2)
        Semidirect,      // factors = {normal, acting}, action
        Wreath2,         // factors = {base}; base wr Z/2
        CentralProduct,  // factors = {a, b}; unique central involutions identified
    };

    Kind kind = Kind::Symmetric;
    unsigned n = 1;
    std::vector<std::vector<uint16_t>> perm_gens;
    std::string ring;  // "gf(q)" or "zmod(n)" for MatGens
    bool projective = false;
    std::vector<std::array<long long, 4>> mat_gens;
    std::vector<GroupSpec> factors;
    // action[h_gen][n_gen] = word over normal generators; entry k means
    // generator k, entry -(k+1) means its inverse.
    std::vector<std::vector<std::vector<int>>> action;

    // optional declared expectations (validated on build) and metadata
    std::optional<long long> expect_order;
    std::optional<long long> expect_center;
    std::optional<long long> expect_derived;
    std::vector<long long> expect_abelian;
    std::string meta_id;  // e.g. a Small Groups ID; recorded, never verified

    std::string str() const;  // canonical recipe string
};

/// Builds the concrete group, enumerating it (cap 10^6) and validating any
/// declared expectations (FingerprintMismatch on failure).
GroupPtr build_group(const GroupSpec& spec);

/// Faithful permutation version of a group (identity if already one;
/// otherwise the left-regular action).
GroupPtr as_permutation_group(const GroupPtr& G);

/// Direct product of permutation-realized groups on the disjoint union of
/// their domains.
GroupPtr direct_product(const std::vector<GroupPtr>& factors, const std::string& description);

/// Quotient of G by the central subgroup generated by z, realized by the
/// action on the cosets of <z>.
GroupPtr quotient_by_central(const GroupPtr& G, const Element& z, const std::string& description);

}  // namespace h1cube
