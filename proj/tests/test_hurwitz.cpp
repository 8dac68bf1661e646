#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "h1cube/errors.hpp"
#include "h1cube/group_build.hpp"
#include "h1cube/hurwitz.hpp"

using namespace h1cube;

namespace {

GroupPtr make(GroupSpec::Kind kind, unsigned n) {
    GroupSpec s;
    s.kind = kind;
    s.n = n;
    return build_group(s);
}

GroupPtr s3xs3() {
    GroupSpec s3;
    s3.kind = GroupSpec::Kind::Symmetric;
    s3.n = 3;
    GroupSpec s;
    s.kind = GroupSpec::Kind::DirectProduct;
    s.factors = {s3, s3};
    return build_group(s);
}

std::multiset<long long> value_multiset(const ClassFunction& f) {
    std::multiset<long long> out;
    for (const auto& v : f.values) {
        auto r = v.try_rational();
        REQUIRE(r.has_value());
        REQUIRE(is_integer(*r));
        out.insert(numerator(*r).convert_to<long long>());
    }
    return out;
}

/// Element-wise brute-force invariant cube sum (the independent oracle).
BigRational brute_d3(const ClassFunction& hur) {
    const auto& G = *hur.group;
    BigRational acc;
    for (int i = 0; i < (int)G.elements().size(); ++i) {
        auto v = hur.values[G.class_of_index(i)].try_rational();
        REQUIRE(v.has_value());
        acc += (*v) * (*v) * (*v);
    }
    return acc / BigRational(G.order());
}

}  // namespace

TEST_CASE("genus from signature") {
    CHECK(genus_from_signature(504, {2, 3, 7}) == 7);
    CHECK(genus_from_signature(120, {2, 4, 5}) == 4);
    CHECK(genus_from_signature(36, {2, 2, 2, 3}) == 4);
    CHECK(genus_from_signature(48, {2, 3, 12}) == 3);
    CHECK(genus_from_signature(72, {2, 4, 6}) == 4);
    CHECK(genus_from_signature(96, {2, 4, 6}) == 5);
    CHECK(genus_from_signature(160, {2, 4, 5}) == 5);
    CHECK(genus_from_signature(32, {2, 2, 2, 4}) == 5);
    CHECK_THROWS_AS(genus_from_signature(10, {2, 3, 7}), NonIntegralGenus);
    CHECK_THROWS_AS(genus_from_signature(24, {2, 2, 2}), GenusTooSmall);
    CHECK_THROWS_AS(genus_from_signature(504, {2, 3}), InvalidInput);
}

TEST_CASE("Fricke-Macbeath cover: PSL2(F8), signature (2,3,7)") {
    auto G = make(GroupSpec::Kind::Psl2, 8);
    auto certs = certify_signature(G, {2, 3, 7});
    // three order-7 classes give three assignments; the Hurwitz character
    // only depends on the generated cyclic subgroup, so all agree
    REQUIRE(certs.size() == 3);
    for (const auto& cert : certs) {
        CHECK(cert.genus == 7);
        CHECK(cert.dim_h1 == 14);
        REQUIRE(cert.d3.has_value());
        CHECK(*cert.d3 == 0);
        CHECK(cert.hur_genuine);
        CHECK(cert.existence.product_one);
        CHECK(cert.existence.generating == ExistenceReport::Generating::Yes);
        CHECK(cert.verdict == "criterion satisfied");
        // decomposition: 2 x (a single irreducible of degree 7)
        REQUIRE(cert.decomposition.size() == 1);
        CHECK(cert.decomposition[0].first == 7);
        CHECK(cert.decomposition[0].second == 2);
        // frozen value profile of the Hurwitz character
        CHECK(value_multiset(cert.hur) ==
              std::multiset<long long>{14, -2, 0, 0, 0, -4, 2, 2, 2});
        CHECK(inner_product(cert.hur, trivial_character(G)) == Cyclotomic(0));
        CHECK(brute_d3(cert.hur) == BigRational(0));
    }
}

TEST_CASE("Bring cover: PGL2(F5), signature (2,4,5)") {
    auto G = make(GroupSpec::Kind::Pgl2, 5);
    auto certs = certify_signature(G, {2, 4, 5});
    // two involution classes -> two assignments; only one admits tuples
    REQUIRE(certs.size() == 2);
    int realizable = 0, empty = 0;
    for (const auto& cert : certs) {
        CHECK(cert.genus == 4);
        CHECK(cert.dim_h1 == 8);
        if (cert.existence.product_one) {
            ++realizable;
            CHECK(cert.existence.generating == ExistenceReport::Generating::Yes);
            REQUIRE(cert.d3.has_value());
            CHECK(*cert.d3 == 0);
            CHECK(cert.verdict == "criterion satisfied");
            REQUIRE(cert.decomposition.size() == 1);
            CHECK(cert.decomposition[0].first == 4);  // 2 x (degree-4 cuspidal)
            CHECK(cert.decomposition[0].second == 2);
        } else {
            ++empty;
            CHECK(cert.existence.count == 0);
            // the other assignment is a virtual character: d3 is undefined
            CHECK(!cert.hur_genuine);
            CHECK(!cert.d3.has_value());
            CHECK(cert.d3_raw == "-2");
        }
    }
    CHECK(realizable == 1);
    CHECK(empty == 1);
}

TEST_CASE("S3 x S3 family: signature (2,2,2,3) with the diagonal classes") {
    auto G = s3xs3();
    // build the specific assignment: (t,1), (1,t), (t,t), (c,c)
    const Realization& real = G->realization();
    Element t1 = real.make_perm({1, 0, 2, 3, 4, 5});
    Element t2 = real.make_perm({0, 1, 2, 4, 3, 5});
    Element tt = real.make_perm({1, 0, 2, 4, 3, 5});
    Element cc = real.make_perm({1, 2, 0, 4, 5, 3});
    RamificationType ram = RamificationType::from_indices(
        G, {G->class_of(t1), G->class_of(t2), G->class_of(tt), G->class_of(cc)});
    CHECK(ram.signature() == std::vector<unsigned>{2, 2, 2, 3});
    auto cert = vanishing_certificate(G, ram);
    CHECK(cert.genus == 4);
    CHECK(cert.dim_h1 == 8);
    REQUIRE(cert.d3.has_value());
    CHECK(*cert.d3 == 0);
    CHECK(cert.existence.generating == ExistenceReport::Generating::Yes);
    CHECK(cert.verdict == "criterion satisfied");
    // 2 (sgn x rho) + 2 (rho x sgn): two degree-2 constituents, each twice
    REQUIRE(cert.decomposition.size() == 2);
    for (const auto& [deg, mult] : cert.decomposition) {
        CHECK(deg == 2);
        CHECK(mult == 2);
    }
    CHECK(value_multiset(cert.hur) ==
          std::multiset<long long>{8, -4, -4, -4, 0, 2, 2, 2, 2});
    CHECK(brute_d3(cert.hur) == BigRational(0));
}

TEST_CASE("Klein quartic negative control: PSL2(F7), signature (2,3,7)") {
    auto G = make(GroupSpec::Kind::Psl2, 7);
    auto certs = certify_signature(G, {2, 3, 7});
    REQUIRE(certs.size() == 2);  // two order-7 classes, same cyclic subgroup
    for (const auto& cert : certs) {
        CHECK(cert.genus == 3);
        CHECK(cert.dim_h1 == 6);
        REQUIRE(cert.d3.has_value());
        CHECK(*cert.d3 == 2);  // frozen via the element-wise brute force below
        CHECK(brute_d3(cert.hur) == BigRational(2));
        CHECK(cert.verdict == "criterion NOT satisfied");
        CHECK(cert.existence.generating == ExistenceReport::Generating::Yes);
        CHECK(value_multiset(cert.hur) == std::multiset<long long>{6, -2, 0, 2, -1, -1});
    }
}

TEST_CASE("multiplicities match the fixed-space count dim pi - sum dim pi^{G_i}") {
    // independent algebraic route for r = 3: the multiplicity of a
    // nontrivial irreducible pi in H^1 equals dim pi - sum_i dim pi^{G_i},
    // where dim pi^{H} = <pi, Ind_H^G 1>
    auto G = make(GroupSpec::Kind::Psl2, 8);
    auto cert = certify_signature(G, {2, 3, 7})[0];
    const CharacterTable& t = character_table_for(G);
    auto dec = decompose(cert.hur, t, false);

    RamificationType ram = RamificationType::from_labels(G, cert.classes);
    std::vector<ClassFunction> inds;
    for (int c : ram.class_indices) {
        std::vector<int> H;
        for (const auto& el : cyclic_subgroup(G->realization(), G->classes()[c].rep))
            H.push_back(G->index_of(el));
        inds.push_back(induced_trivial_character(G, H));
    }
    for (int i = 0; i < t.size(); ++i) {
        const ClassFunction& chi = t.irreducibles[i];
        if (chi == trivial_character(G)) {
            CHECK(dec.multiplicities[i] == 0);
            continue;
        }
        Cyclotomic expected(BigRational(t.degree_of(i)));
        for (const auto& ind : inds) expected -= inner_product(chi, ind);
        CHECK(Cyclotomic(BigRational(dec.multiplicities[i])) == expected);
    }
}

TEST_CASE("Hurwitz character is invariant under replacing a class by inverses") {
    auto G = make(GroupSpec::Kind::Psl2, 7);
    // the two order-7 classes are mutually inverse
    int c7a = G->class_by_label("7a"), c7b = G->class_by_label("7b");
    REQUIRE(c7a >= 0);
    REQUIRE(c7b >= 0);
    CHECK(G->inverse_class(c7a) == c7b);
    int c2 = G->class_by_label("2a"), c3 = G->class_by_label("3a");
    auto h1 = hurwitz_character(G, RamificationType::from_indices(G, {c2, c3, c7a}));
    auto h2 = hurwitz_character(G, RamificationType::from_indices(G, {c2, c3, c7b}));
    CHECK(h1 == h2);
}

TEST_CASE("existence: single involution class cannot multiply to 1") {
    GroupSpec v4;
    v4.kind = GroupSpec::Kind::DirectProduct;
    GroupSpec z2;
    z2.kind = GroupSpec::Kind::Cyclic;
    z2.n = 2;
    v4.factors = {z2, z2};
    auto G = build_group(v4);
    int invol = -1;
    for (int c = 0; c < G->class_count(); ++c)
        if (G->classes()[c].order == 2) invol = c;
    auto rep = existence_check(G, {invol});
    CHECK(rep.count == 0);
    CHECK(!rep.product_one);
    CHECK(rep.generating == ExistenceReport::Generating::No);
}

TEST_CASE("search cap reports undetermined instead of guessing") {
    auto G = make(GroupSpec::Kind::Psl2, 8);
    std::vector<int> cls{G->class_by_label("2a"), G->class_by_label("3a"),
                         G->class_by_label("7a")};
    auto rep = existence_check(G, cls, /*node_cap=*/1);
    CHECK(rep.product_one);  // the exact count is unaffected by the cap
    CHECK(rep.generating == ExistenceReport::Generating::Undetermined);
}

TEST_CASE("Frobenius count is a nonnegative integer, invariant under permutations") {
    auto G = make(GroupSpec::Kind::Psl2, 7);
    std::vector<int> cls{G->class_by_label("2a"), G->class_by_label("3a"),
                         G->class_by_label("7a")};
    auto base = existence_check(G, cls);
    CHECK(base.count > 0);
    std::vector<int> perm = {cls[2], cls[0], cls[1]};
    CHECK(existence_check(G, perm).count == base.count);
    std::vector<int> perm2 = {cls[1], cls[2], cls[0]};
    CHECK(existence_check(G, perm2).count == base.count);
}

TEST_CASE("certificate serialization has the documented keys in order") {
    auto G = make(GroupSpec::Kind::Psl2, 7);
    auto cert = certify_signature(G, {2, 3, 7})[0];
    std::string json = certificate_to_json_string(cert);
    const char* keys[] = {"\"group\"",    "\"classes\"",    "\"signature\"",
                          "\"genus\"",    "\"dim_h1\"",     "\"d3\"",
                          "\"exists\"",   "\"generating\"", "\"decomposition\"",
                          "\"verdict\""};
    size_t pos = 0;
    for (const char* k : keys) {
        size_t next = json.find(k, pos);
        REQUIRE(next != std::string::npos);
        pos = next;
    }
    std::string md = certificate_to_markdown(cert);
    CHECK(md.find("criterion NOT satisfied") != std::string::npos);
}

TEST_CASE("signature with no class of a required order is rejected") {
    auto G = s3xs3();
    CHECK_THROWS_AS(certify_signature(G, {2, 2, 2, 9}), InvalidInput);
}
