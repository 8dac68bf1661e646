#include "h1cube/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "h1cube/class_function.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

GroupSpec sym_spec(unsigned n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Symmetric;
    s.n = n;
    return s;
}

GroupSpec cyc_spec(unsigned n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Cyclic;
    s.n = n;
    return s;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e;
        e.name = "fricke-macbeath";
        e.title = "Fricke-Macbeath curve: the genus-7 curve with 504 automorphisms";
        e.group.kind = GroupSpec::Kind::Psl2;
        e.group.n = 8;
        e.group.expect_order = 504;
        e.genus = 7;
        e.signature = {2, 3, 7};
        e.expect_vanishing = true;
        e.expected_decomposition = {{7, 2}};
        e.note =
            "H^1 is twice the cuspidal representation attached to the cubic character of the "
            "non-split torus. The genus-3 quotient by an involution is non-hyperelliptic and "
            "carries nonzero (H^1)^{x3} invariants for its own automorphism group; recorded "
            "as metadata only, no quotient computation is performed here.";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "bring";
        e.title = "Bring curve: the genus-4 curve with the largest automorphism group (S5)";
        e.group.kind = GroupSpec::Kind::Pgl2;
        e.group.n = 5;
        e.group.expect_order = 120;
        e.genus = 4;
        e.signature = {2, 4, 5};
        e.expect_vanishing = true;
        e.expected_decomposition = {{4, 2}};
        e.note = "H^1 is twice the degree-4 cuspidal attached to the cubic character of the "
                 "non-split torus of PGL(2,5).";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "genus3-48-33";
        e.title = "Genus-3 plane quartic y^4 = x^3 - 1 (central product SL(2,3) o Z/4)";
        e.group.kind = GroupSpec::Kind::CentralProduct;
        GroupSpec sl23;
        sl23.kind = GroupSpec::Kind::MatGens;
        sl23.ring = "gf(3)";
        sl23.projective = false;
        sl23.mat_gens = {{1, 1, 0, 1}, {0, -1, 1, 0}};
        e.group.factors = {sl23, cyc_spec(4)};
        e.group.expect_order = 48;
        e.group.expect_center = 4;
        e.group.expect_derived = 8;
        e.group.expect_abelian = {6};
        e.group.meta_id = "(48,33)";
        e.genus = 3;
        e.signature = {2, 3, 12};
        e.expect_vanishing = true;
        e.note = "Realized as the central product identifying the unique central involutions; "
                 "non-splitness certified by the abelianization (Z/6, against Z/12 for the "
                 "direct product).";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "genus4-72-40";
        e.title = "Genus-4 trigonal curve y^3 = (x^3-1)^2 (x^3+1) with S3 wr Z/2 action";
        e.group.kind = GroupSpec::Kind::Wreath2;
        e.group.factors = {sym_spec(3)};
        e.group.expect_order = 72;
        e.group.meta_id = "(72,40)";
        e.genus = 4;
        e.signature = {2, 4, 6};
        e.expect_vanishing = true;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "wiman-160-234";
        e.title = "Genus-5 Wiman curve with (Z/2)^4 : D5 action";
        e.group.kind = GroupSpec::Kind::PermGens;
        // sum-zero subspace of (Z/2)^5 as sign flips on {(i, +-)}, plus D5
        e.group.perm_gens = {
            {5, 6, 2, 3, 4, 0, 1, 7, 8, 9},  // flip coords 0,1
            {0, 6, 7, 3, 4, 5, 1, 2, 8, 9},  // flip coords 1,2
            {0, 1, 7, 8, 4, 5, 6, 2, 3, 9},  // flip coords 2,3
            {0, 1, 2, 8, 9, 5, 6, 7, 3, 4},  // flip coords 3,4
            {1, 2, 3, 4, 0, 6, 7, 8, 9, 5},  // 5-cycle
            {0, 4, 3, 2, 1, 5, 9, 8, 7, 6},  // reflection
        };
        e.group.expect_order = 160;
        e.group.expect_abelian = {2};
        e.group.meta_id = "(160,234)";
        e.genus = 5;
        e.signature = {2, 4, 5};
        e.expect_vanishing = true;
        e.note = "Realized as the index-2 subgroup construction: D5 acting on the sum-zero "
                 "subspace of (Z/2)^5.";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "wiman-96-195";
        e.title = "Genus-5 Wiman curve with GL(2,Z/4) action";
        e.group.kind = GroupSpec::Kind::Gl2Mod;
        e.group.n = 4;
        e.group.expect_order = 96;
        e.group.meta_id = "(96,195)";
        e.genus = 5;
        e.signature = {2, 4, 6};
        e.expect_vanishing = true;
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "family-36-10";
        e.title = "Genus-4 one-parameter family with S3 x S3 action, signature (2,2,2,3)";
        e.group.kind = GroupSpec::Kind::DirectProduct;
        e.group.factors = {sym_spec(3), sym_spec(3)};
        e.group.expect_order = 36;
        e.group.meta_id = "(36,10)";
        e.genus = 4;
        e.signature = {2, 2, 2, 3};
        e.moduli_dim = 1;
        // the distinguished assignment: (t,1), (1,t), (t,t), (c,c)
        e.pinned_elements = {
            {1, 0, 2, 3, 4, 5},
            {0, 1, 2, 4, 3, 5},
            {1, 0, 2, 4, 3, 5},
            {1, 2, 0, 4, 5, 3},
        };
        e.expect_vanishing = true;
        e.expected_decomposition = {{2, 2}, {2, 2}};
        e.note = "H^1 = 2(sgn x rho) + 2(rho x sgn); the moduli dimension is r - 3 = 1.";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "family-32-27";
        e.title = "Genus-5 one-parameter family with (Z/2)^2 wr Z/2 action, signature (2,2,2,4)";
        e.group.kind = GroupSpec::Kind::Wreath2;
        GroupSpec v4;
        v4.kind = GroupSpec::Kind::PermGens;
        v4.perm_gens = {{1, 0, 3, 2}, {2, 3, 0, 1}};
        e.group.factors = {v4};
        e.group.expect_order = 32;
        e.group.meta_id = "(32,27)";
        e.genus = 5;
        e.signature = {2, 2, 2, 4};
        e.moduli_dim = 1;
        e.expect_vanishing = true;
        e.note = "The moduli dimension is r - 3 = 1.";
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "klein-quartic";
        e.title = "Klein quartic (negative control): genus 3 with PSL(2,7) action";
        e.group.kind = GroupSpec::Kind::Psl2;
        e.group.n = 7;
        e.group.expect_order = 168;
        e.genus = 3;
        e.signature = {2, 3, 7};
        e.expect_vanishing = false;
        e.note = "d3 = 2 here, so the vanishing criterion does not apply; the modified "
                 "diagonal class of the Klein quartic is not addressed by this method.";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e;
    std::string names;
    for (const auto& e : catalog_entries()) names += (names.empty() ? "" : ", ") + e.name;
    throw InvalidInput("unknown builtin '" + name + "' (available: " + names + ")");
}

std::vector<VanishingCertificate> certify_entry(const CatalogEntry& entry) {
    GroupPtr G = build_group(entry.group);
    if (!entry.pinned_elements.empty()) {
        std::vector<int> indices;
        for (const auto& img : entry.pinned_elements)
            indices.push_back(G->class_of(G->realization().make_perm(img)));
        return {vanishing_certificate(G, RamificationType::from_indices(G, indices))};
    }
    return certify_signature(G, entry.signature);
}

namespace {

bool check_decomposition(const CatalogEntry& entry, const VanishingCertificate& cert,
                         std::string& detail) {
    if (entry.expected_decomposition.empty()) return true;
    std::multiset<std::pair<long long, long long>> want(entry.expected_decomposition.begin(),
                                                        entry.expected_decomposition.end());
    std::multiset<std::pair<long long, long long>> got;
    for (const auto& [deg, mult] : cert.decomposition)
        got.insert({deg, mult.convert_to<long long>()});
    if (want != got) {
        detail += "decomposition mismatch; ";
        return false;
    }
    return true;
}

EntryResult run_entry(const CatalogEntry& entry) {
    EntryResult res;
    res.name = entry.name;
    try {
        long long genus = genus_from_signature(
            build_group(entry.group)->order(), entry.signature);
        if (genus != entry.genus) {
            res.detail = "genus from the signature (" + std::to_string(genus) +
                         ") does not match the declared genus";
            return res;
        }
        if ((long long)entry.signature.size() - 3 != entry.moduli_dim) {
            res.detail = "moduli dimension r - 3 does not match the declared value";
            return res;
        }
        res.certificates = certify_entry(entry);
        bool ok = true;
        std::string detail;
        for (const auto& cert : res.certificates) {
            if (cert.genus != entry.genus) {
                ok = false;
                detail += "certificate genus mismatch; ";
            }
            if (cert.existence.generating != ExistenceReport::Generating::Yes) continue;
            ++res.realizable_assignments;
            bool vanish = cert.d3 && *cert.d3 == 0;
            if (vanish != entry.expect_vanishing) {
                ok = false;
                detail += "verdict mismatch on classes ";
                for (const auto& l : cert.classes) detail += l + " ";
                detail += "(d3 = " + (cert.d3 ? std::to_string(*cert.d3) : cert.d3_raw) + "); ";
            }
            ok &= check_decomposition(entry, cert, detail);
        }
        if (res.realizable_assignments == 0) {
            ok = false;
            detail += "no class assignment admits a generating product-one tuple; ";
        }
        res.pass = ok;
        res.detail = detail;
    } catch (const Error& e) {
        res.pass = false;
        res.detail = std::string("error: ") + e.what();
    }
    return res;
}

}  // namespace

ReproduceReport reproduce_all() {
    ReproduceReport report;
    report.all_pass = true;
    for (const auto& entry : catalog_entries()) {
        report.entries.push_back(run_entry(entry));
        report.all_pass &= report.entries.back().pass;
    }
    return report;
}

std::string reproduce_report_to_json_string(const ReproduceReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& r : report.entries) {
        const CatalogEntry& e = catalog_entry(r.name);
        nlohmann::ordered_json je;
        je["name"] = r.name;
        je["title"] = e.title;
        je["group"] = e.group.str();
        if (!e.group.meta_id.empty()) je["small_group_id"] = e.group.meta_id;
        je["signature"] = e.signature;
        je["genus"] = e.genus;
        je["expected"] = e.expect_vanishing ? "d3 = 0" : "d3 > 0";
        je["pass"] = r.pass;
        if (!r.detail.empty()) je["detail"] = r.detail;
        je["realizable_assignments"] = r.realizable_assignments;
        nlohmann::ordered_json certs = nlohmann::ordered_json::array();
        for (const auto& c : r.certificates)
            certs.push_back(nlohmann::ordered_json::parse(certificate_to_json_string(c)));
        je["certificates"] = certs;
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["all_pass"] = report.all_pass;
    return j.dump(2);
}

std::string reproduce_report_to_markdown(const ReproduceReport& report) {
    std::ostringstream os;
    os << "| entry | group | signature | genus | expected | result |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : report.entries) {
        const CatalogEntry& e = catalog_entry(r.name);
        os << "| " << r.name << " | " << e.group.str() << " | (";
        for (size_t i = 0; i < e.signature.size(); ++i) os << (i ? "," : "") << e.signature[i];
        os << ") | " << e.genus << " | " << (e.expect_vanishing ? "d3 = 0" : "d3 > 0") << " | "
           << (r.pass ? "pass" : "FAIL " + r.detail) << " |\n";
    }
    os << "\n" << (report.all_pass ? "all entries pass" : "MISMATCHES PRESENT") << "\n";
    return os.str();
}

SearchReport search_vanishing(const GroupPtr& G, unsigned max_branches) {
    if (max_branches < 3) throw InvalidInput("search needs a branch bound >= 3");
    SearchReport report;
    report.group = G->description();
    report.max_branches = max_branches;
    std::vector<int> nontrivial;
    for (int c = 0; c < G->class_count(); ++c)
        if (G->classes()[c].order > 1) nontrivial.push_back(c);

    // multisets of classes, sizes 3..max_branches
    std::vector<int> pick;
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t remaining) {
        if (remaining == 0) {
            ++report.candidates;
            try {
                RamificationType ram = RamificationType::from_indices(G, pick);
                genus_from_signature(G->order(), ram.signature());
                auto cert = vanishing_certificate(G, ram);
                if (!cert.existence.product_one) return;
                ++report.realizable;
                if (cert.d3 && *cert.d3 == 0) {
                    SearchHit hit;
                    hit.classes = cert.classes;
                    hit.signature = cert.signature;
                    hit.genus = cert.genus;
                    hit.d3 = 0;
                    hit.generating =
                        cert.existence.generating == ExistenceReport::Generating::Yes;
                    report.hits.push_back(std::move(hit));
                }
            } catch (const NonIntegralGenus&) {
            } catch (const GenusTooSmall&) {
            }
            return;
        }
        for (size_t i = start; i < nontrivial.size(); ++i) {
            pick.push_back(nontrivial[i]);
            rec(i, remaining - 1);
            pick.pop_back();
        }
    };
    for (unsigned r = 3; r <= max_branches; ++r) rec(0, r);
    return report;
}

std::string search_report_to_json_string(const SearchReport& report) {
    nlohmann::ordered_json j;
    j["group"] = report.group;
    j["max_branches"] = report.max_branches;
    j["candidates"] = report.candidates;
    j["realizable"] = report.realizable;
    nlohmann::ordered_json hits = nlohmann::ordered_json::array();
    for (const auto& h : report.hits) {
        nlohmann::ordered_json jh;
        jh["classes"] = h.classes;
        jh["signature"] = h.signature;
        jh["genus"] = h.genus;
        jh["verdict"] = "criterion satisfied";
        jh["generating"] = h.generating;
        hits.push_back(jh);
    }
    j["hits"] = hits;
    return j.dump(2);
}

}  // namespace h1cube
