#include "h1cube/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "h1cube/errors.hpp"

namespace h1cube {

RamificationType RamificationType::from_labels(const GroupPtr& G,
                                               const std::vector<std::string>& labels) {
    std::vector<int> idx;
    for (const auto& l : labels) {
        int c = G->class_by_label(l);
        if (c < 0) throw InvalidInput("unknown class label '" + l + "'");
        idx.push_back(c);
    }
    return from_indices(G, std::move(idx));
}

RamificationType RamificationType::from_indices(const GroupPtr& G, std::vector<int> indices) {
    for (int c : indices) {
        if (c < 0 || c >= G->class_count()) throw InvalidInput("class index out of range");
        if (G->classes()[c].order == 1)
            throw InvalidInput("ramification type requires nontrivial classes");
    }
    RamificationType r;
    r.group = G;
    r.class_indices = std::move(indices);
    return r;
}

std::vector<unsigned> RamificationType::signature() const {
    std::vector<unsigned> sig;
    for (int c : class_indices) sig.push_back(group->classes()[c].order);
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::vector<std::string> RamificationType::labels() const {
    std::vector<std::string> out;
    for (int c : class_indices) out.push_back(group->classes()[c].label);
    return out;
}

long long genus_from_signature(long long group_order, const std::vector<unsigned>& signature) {
    if (signature.size() < 3) throw InvalidInput("signature needs r >= 3 branch points");
    BigRational rhs(-2);
    for (unsigned e : signature) {
        if (e < 2) throw InvalidInput("signature entries must be >= 2");
        rhs += BigRational(1) - BigRational(1, e);
    }
    BigRational two_g = BigRational(group_order) * rhs + 2;  // 2g
    if (!is_integer(two_g) || numerator(two_g) % 2 != 0)
        throw NonIntegralGenus("Riemann-Hurwitz gives non-integral genus " +
                               to_string(two_g / 2));
    long long g = (numerator(two_g) / 2).convert_to<long long>();
    if (g < 2) throw GenusTooSmall("genus " + std::to_string(g) + " < 2");
    return g;
}

ClassFunction hurwitz_character(const GroupPtr& G, const RamificationType& ram) {
    if (ram.group != G) throw GroupMismatch("ramification type belongs to a different group");
    // validates the genus (and the r >= 3 requirement) up front
    genus_from_signature(G->order(), ram.signature());
    ClassFunction reg = regular_character(G);
    ClassFunction triv = trivial_character(G);
    ClassFunction acc = (reg - triv).scaled(BigRational(-2));
    for (int c : ram.class_indices) {
        std::vector<int> sub;
        for (const auto& el : cyclic_subgroup(G->realization(), G->classes()[c].rep))
            sub.push_back(G->index_of(el));
        acc = acc + reg - induced_trivial_character(G, sub);
    }
    return acc;
}

namespace {

/// Frobenius count of tuples from the given classes with product equal to a
/// fixed element of class `target` (identity class by default):
///   |C_1|...|C_r| / |G| * sum_chi chi(C_1)...chi(C_r) chi(z^-1) / chi(1)^{r-1}
/// specializing to the product-one count when z = 1.
BigRational frobenius_count(const GroupPtr& G, const CharacterTable& table,
                            const std::vector<int>& classes, int target) {
    BigRational scale(1);
    for (int c : classes) scale *= BigRational(G->classes()[c].size);
    scale /= BigRational(G->order());
    Cyclotomic sum;
    int target_inv = G->inverse_class(target);
    for (int i = 0; i < table.size(); ++i) {
        const auto& chi = table.irreducibles[i];
        Cyclotomic prod = chi.values[target_inv];
        bool zero = prod.is_zero();
        for (int c : classes) {
            if (zero) break;
            if (chi.values[c].is_zero()) {
                zero = true;
                break;
            }
            prod *= chi.values[c];
        }
        if (zero) continue;
        BigRational d(table.degree_of(i));
        BigRational dpow(1);
        for (size_t t = 1; t < classes.size(); ++t) dpow *= d;  // chi(1)^{r-1}
        sum += prod.scaled(BigRational(1) / dpow);
    }
    auto r = sum.try_rational();
    if (!r) throw NonIntegralResult("Frobenius count is not rational");
    return scale * (*r);
}

}  // namespace

ExistenceReport existence_check(const GroupPtr& G, const std::vector<int>& class_indices,
                                long long node_cap) {
    if (class_indices.empty()) throw InvalidInput("existence_check: empty class list");
    if (!G->enumerated())
        throw TableUnavailable("existence_check requires an enumerated group");
    const CharacterTable& table = character_table_for(G);

    ExistenceReport report;
    BigRational count = frobenius_count(G, table, class_indices, /*target=*/0);
    if (!is_integer(count) || numerator(count) < 0)
        throw NonIntegralResult("Frobenius count must be a nonnegative integer, got " +
                                to_string(count));
    report.count = numerator(count);
    report.product_one = report.count > 0;
    if (!report.product_one) {
        report.generating = ExistenceReport::Generating::No;
        return report;
    }

    const size_t r = class_indices.size();
    // suffix feasibility: can classes i..r-1 multiply to a representative of
    // class c? (by the same count with a prescribed product)
    std::vector<std::vector<bool>> feasible(r + 1, std::vector<bool>(G->class_count(), false));
    feasible[r][0] = true;  // empty product is the identity
    for (size_t i = r; i-- > 0;) {
        std::vector<int> suffix(class_indices.begin() + i, class_indices.end());
        for (int c = 0; c < G->class_count(); ++c)
            feasible[i][c] = frobenius_count(G, table, suffix, c) > 0;
    }

    // depth-first search with the first entry pinned to the class
    // representative (every product-one tuple is simultaneously conjugate to
    // one of this form, and generation is conjugation-invariant)
    long long nodes = 0;
    std::vector<Element> tuple(r);
    tuple[0] = G->classes()[class_indices[0]].rep;
    std::vector<const std::vector<int>*> members;
    for (int c : class_indices) members.push_back(&G->class_members(c));

    std::vector<std::string> witness;
    bool undetermined = false;
    auto generates = [&](const std::vector<Element>& tup) {
        return (long long)subgroup_closure(*G, tup).size() == G->order();
    };

    std::function<bool(size_t, const Element&)> dfs = [&](size_t depth,
                                                          const Element& partial) -> bool {
        if (++nodes > node_cap) {
            undetermined = true;
            return false;
        }
        if (depth == r - 1) {
            Element last = G->inv(partial);
            if (G->class_of(last) != class_indices[depth]) return false;
            tuple[depth] = last;
            if (generates(tuple)) {
                for (const auto& t : tuple) witness.push_back(G->realization().show(t));
                return true;
            }
            return false;
        }
        for (int idx : *members[depth]) {
            tuple[depth] = G->elements()[idx];
            Element next = G->mul(partial, tuple[depth]);
            if (!feasible[depth + 1][G->class_of(G->inv(next))]) continue;
            if (dfs(depth + 1, next)) return true;
            if (undetermined) return false;
        }
        return false;
    };

    bool found;
    if (r == 1) {
        found = G->classes()[class_indices[0]].order == 1 && generates({tuple[0]});
    } else {
        found = dfs(1, tuple[0]);
    }
    if (found) {
        report.generating = ExistenceReport::Generating::Yes;
        report.witness = std::move(witness);
    } else {
        report.generating = undetermined ? ExistenceReport::Generating::Undetermined
                                         : ExistenceReport::Generating::No;
    }
    return report;
}

VanishingCertificate vanishing_certificate(const GroupPtr& G, const RamificationType& ram) {
    VanishingCertificate cert;
    cert.group = G->description();
    cert.classes = ram.labels();
    cert.signature = ram.signature();
    cert.genus = genus_from_signature(G->order(), cert.signature);
    cert.hur = hurwitz_character(G, ram);

    auto deg = cert.hur.degree().try_rational();
    if (!deg || !is_integer(*deg))
        throw Error("Hurwitz character has non-integral degree (internal error)");
    cert.dim_h1 = numerator(*deg).convert_to<long long>();
    if (cert.dim_h1 != 2 * cert.genus)
        throw Error("Hurwitz character degree does not equal 2g (internal error)");

    BigRational d3raw = invariant_dim_rational({&cert.hur, &cert.hur, &cert.hur});
    cert.d3_raw = to_string(d3raw);
    if (is_integer(d3raw) && numerator(d3raw) >= 0)
        cert.d3 = numerator(d3raw).convert_to<long long>();

    const CharacterTable& table = character_table_for(G);
    Decomposition dec = decompose(cert.hur, table, /*allow_virtual=*/true);
    cert.hur_genuine = !dec.any_negative;
    for (size_t i = 0; i < dec.multiplicities.size(); ++i)
        if (dec.multiplicities[i] != 0)
            cert.decomposition.emplace_back(table.degree_of((int)i), dec.multiplicities[i]);

    cert.existence = existence_check(G, ram.class_indices);

    if (cert.d3 && *cert.d3 == 0 && cert.genus >= 2)
        cert.verdict = "criterion satisfied";
    else if (cert.d3)
        cert.verdict = "criterion NOT satisfied";
    else
        cert.verdict = "not applicable (Hurwitz class function is not a genuine character)";
    return cert;
}

std::vector<VanishingCertificate> certify_signature(const GroupPtr& G,
                                                    const std::vector<unsigned>& signature) {
    std::vector<unsigned> sig = signature;
    std::sort(sig.begin(), sig.end());
    genus_from_signature(G->order(), sig);  // validates early (r, integrality)

    // candidate classes per distinct order, then multiset choices per block
    std::vector<std::vector<std::vector<int>>> block_choices;
    size_t i = 0;
    while (i < sig.size()) {
        size_t j = i;
        while (j < sig.size() && sig[j] == sig[i]) ++j;
        const size_t count = j - i;
        std::vector<int> candidates;
        for (int c = 0; c < G->class_count(); ++c)
            if (G->classes()[c].order == sig[i]) candidates.push_back(c);
        if (candidates.empty())
            throw InvalidInput("group has no class of order " + std::to_string(sig[i]));
        // combinations with repetition
        std::vector<std::vector<int>> choices;
        std::vector<int> cur(count, 0);
        while (true) {
            std::vector<int> pick;
            for (size_t t = 0; t < count; ++t) pick.push_back(candidates[cur[t]]);
            choices.push_back(pick);
            size_t pos = count;
            while (pos-- > 0) {
                if (cur[pos] + 1 < (int)candidates.size()) {
                    ++cur[pos];
                    for (size_t t = pos + 1; t < count; ++t) cur[t] = cur[pos];
                    break;
                }
                if (pos == 0) {
                    pos = SIZE_MAX;
                    break;
                }
            }
            if (pos == SIZE_MAX) break;
        }
        block_choices.push_back(std::move(choices));
        i = j;
    }
    std::vector<VanishingCertificate> out;
    std::vector<size_t> pick(block_choices.size(), 0);
    while (true) {
        std::vector<int> indices;
        for (size_t b = 0; b < block_choices.size(); ++b)
            for (int c : block_choices[b][pick[b]]) indices.push_back(c);
        out.push_back(vanishing_certificate(G, RamificationType::from_indices(G, indices)));
        size_t b = block_choices.size();
        while (b-- > 0) {
            if (++pick[b] < block_choices[b].size()) break;
            pick[b] = 0;
            if (b == 0) return out;
        }
    }
}

// ----------------------------------------------------------------- rendering

std::string certificate_to_json_string(const VanishingCertificate& cert) {
    nlohmann::ordered_json j;
    j["group"] = cert.group;
    j["classes"] = cert.classes;
    j["signature"] = cert.signature;
    j["genus"] = cert.genus;
    j["dim_h1"] = cert.dim_h1;
    if (cert.d3)
        j["d3"] = *cert.d3;
    else
        j["d3"] = nullptr;
    j["exists"] = cert.existence.product_one;
    j["generating"] = cert.existence.generating == ExistenceReport::Generating::Yes
                          ? "yes"
                          : cert.existence.generating == ExistenceReport::Generating::No
                                ? "no"
                                : "undetermined";
    nlohmann::ordered_json dec = nlohmann::ordered_json::array();
    for (const auto& [degree, mult] : cert.decomposition) {
        nlohmann::ordered_json d;
        d["degree"] = degree;
        d["multiplicity"] = to_string(mult);
        dec.push_back(d);
    }
    j["decomposition"] = dec;
    j["verdict"] = cert.verdict;
    j["tuple_count"] = to_string(cert.existence.count);
    j["hur_genuine"] = cert.hur_genuine;
    if (!cert.d3) j["d3_raw"] = cert.d3_raw;
    if (!cert.existence.witness.empty()) j["witness"] = cert.existence.witness;
    return j.dump(2);
}

std::string certificate_to_markdown(const VanishingCertificate& cert) {
    std::ostringstream os;
    os << "### " << cert.group << "\n\n";
    os << "| field | value |\n|---|---|\n";
    os << "| classes | ";
    for (size_t i = 0; i < cert.classes.size(); ++i) os << (i ? ", " : "") << cert.classes[i];
    os << " |\n| signature | (";
    for (size_t i = 0; i < cert.signature.size(); ++i)
        os << (i ? "," : "") << cert.signature[i];
    os << ") |\n| genus | " << cert.genus << " |\n";
    os << "| dim H^1 | " << cert.dim_h1 << " |\n";
    os << "| d3 = dim (H^1)^{x3} invariants | " << (cert.d3 ? std::to_string(*cert.d3) : cert.d3_raw)
       << " |\n";
    os << "| product-one tuples | " << to_string(cert.existence.count) << " |\n";
    os << "| generating tuple | "
       << (cert.existence.generating == ExistenceReport::Generating::Yes
               ? "yes"
               : cert.existence.generating == ExistenceReport::Generating::No ? "no"
                                                                              : "undetermined")
       << " |\n";
    if (!cert.decomposition.empty()) {
        os << "| decomposition | ";
        bool first = true;
        for (const auto& [degree, mult] : cert.decomposition) {
            if (!first) os << " + ";
            os << to_string(mult) << " x (deg " << degree << ")";
            first = false;
        }
        os << " |\n";
    }
    os << "| verdict | " << cert.verdict << " |\n";
    return os.str();
}

}  // namespace h1cube
