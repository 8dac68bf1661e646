#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h1cube/group_build.hpp"
#include "h1cube/hurwitz.hpp"

namespace h1cube {

/// One curve (or family) from the built-in catalog: group recipe, signature,
/// declared genus, and the expected verdict for every class assignment that
/// admits a generating product-one tuple.
struct CatalogEntry {
    std::string name;   // CLI handle, e.g. "bring"
    std::string title;  // human description
    GroupSpec group;
    long long genus = 0;
    std::vector<unsigned> signature;
    // explicit ramification pin, as permutation elements (empty = enumerate
    // all assignments consistent with the signature)
    std::vector<std::vector<uint16_t>> pinned_elements;
    bool expect_vanishing = true;
    // expected nonzero constituents as (degree, multiplicity), empty = d3-only
    std::vector<std::pair<long long, long long>> expected_decomposition;
    long long moduli_dim = 0;  // r - 3, checked arithmetically
    std::string note;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);  // InvalidInput if unknown

struct EntryResult {
    std::string name;
    bool pass = false;
    std::string detail;  // populated on failure (and for notes)
    long long realizable_assignments = 0;
    std::vector<VanishingCertificate> certificates;  // all assignments, in order
};

struct ReproduceReport {
    std::vector<EntryResult> entries;
    bool all_pass = false;
};

/// Certifies every catalog entry against its expected verdict; per-entry
/// errors are collected, not fatal to the batch.
ReproduceReport reproduce_all();

/// Certificates for one entry (the pinned assignment when set, otherwise
/// every assignment consistent with the signature).
std::vector<VanishingCertificate> certify_entry(const CatalogEntry& entry);

std::string reproduce_report_to_json_string(const ReproduceReport& report);
std::string reproduce_report_to_markdown(const ReproduceReport& report);

struct SearchHit {
    std::vector<std::string> classes;
    std::vector<unsigned> signature;
    long long genus = 0;
    long long d3 = 0;
    bool generating = false;
};

struct SearchReport {
    std::string group;
    unsigned max_branches = 4;
    long long candidates = 0;  // class multisets examined
    long long realizable = 0;  // with a product-one tuple and integral genus
    std::vector<SearchHit> hits;  // d3 = 0, labeled "criterion satisfied"
};

/// Enumerates ramification types up to the branch bound and reports every
/// d3 = 0 hit. The verdict wording is deliberate: a hit certifies the
/// invariant-vanishing criterion, nothing more.
SearchReport search_vanishing(const GroupPtr& G, unsigned max_branches);

std::string search_report_to_json_string(const SearchReport& report);

}  // namespace h1cube
