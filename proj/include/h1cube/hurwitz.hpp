#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h1cube/class_function.hpp"
#include "h1cube/group.hpp"

namespace h1cube {

/// Ordered tuple of nontrivial conjugacy classes (C_1, ..., C_r) of a fixed
/// group; the signature is the sorted list of the representatives' orders.
struct RamificationType {
    GroupPtr group;
    std::vector<int> class_indices;

    static RamificationType from_labels(const GroupPtr& G, const std::vector<std::string>& labels);
    static RamificationType from_indices(const GroupPtr& G, std::vector<int> indices);

    std::vector<unsigned> signature() const;  // ascending
    std::vector<std::string> labels() const;
    size_t branch_count() const { return class_indices.size(); }
};

/// Solves (2g-2)/|G| = -2 + sum(1 - 1/e_i) for g, exactly.
/// NonIntegralGenus when g is not an integer, GenusTooSmall when g < 2.
long long genus_from_signature(long long group_order, const std::vector<unsigned>& signature);

/// Character of H^1 of a G-cover of the line with the given ramification:
///   -2(Ind_1^G 1 - Ind_G^G 1) + sum_i (Ind_1^G 1 - Ind_{G_i}^G 1)
/// with G_i the cyclic subgroup generated by the representative of C_i.
/// Integer-valued; the identity value is 2g.
ClassFunction hurwitz_character(const GroupPtr& G, const RamificationType& ram);

struct ExistenceReport {
    BigInt count;  // Frobenius count of product-one tuples
    bool product_one = false;
    enum class Generating { Yes, No, Undetermined } generating = Generating::No;
    std::vector<std::string> witness;  // product-one generating tuple, if found
};

/// Counts tuples (g_1, ..., g_r) in C_1 x ... x C_r with product 1 by the
/// Frobenius class-algebra formula, and searches for one that generates G
/// (deterministic backtracking with class-algebra pruning, capped at
/// `node_cap` visits -> Undetermined).
ExistenceReport existence_check(const GroupPtr& G, const std::vector<int>& class_indices,
                                long long node_cap = 10'000'000);

struct VanishingCertificate {
    std::string group;
    std::vector<std::string> classes;
    std::vector<unsigned> signature;
    long long genus = 0;
    long long dim_h1 = 0;
    std::optional<long long> d3;  // dim (H^1 tensor^3)^G when defined
    std::string d3_raw;           // exact rational (diagnostic when not a dimension)
    ExistenceReport existence;
    bool hur_genuine = false;
    // (degree, multiplicity) of the nonzero constituents, table order
    std::vector<std::pair<long long, BigInt>> decomposition;
    std::string verdict;
    ClassFunction hur;  // kept for downstream checks
};

VanishingCertificate vanishing_certificate(const GroupPtr& G, const RamificationType& ram);

/// One certificate per class assignment consistent with the signature
/// (all assignments are emitted; none is silently picked).
std::vector<VanishingCertificate> certify_signature(const GroupPtr& G,
                                                    const std::vector<unsigned>& signature);

std::string certificate_to_json_string(const VanishingCertificate& cert);
std::string certificate_to_markdown(const VanishingCertificate& cert);

}  // namespace h1cube
