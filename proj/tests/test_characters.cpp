#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "h1cube/class_function.hpp"
#include "h1cube/errors.hpp"
#include "h1cube/group_build.hpp"

using namespace h1cube;

namespace {

GroupSpec sym(unsigned n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Symmetric;
    s.n = n;
    return s;
}

std::vector<int> whole_group(const GroupPtr& G) {
    std::vector<int> all(G->elements().size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
    return all;
}

std::vector<int> trivial_subgroup(const GroupPtr& G) { return {G->index_of(G->identity())}; }

/// Independent oracle: element-by-element average of the product of values.
BigRational elementwise_invariant_avg(const std::vector<const ClassFunction*>& fs) {
    const auto& G = *fs[0]->group;
    Cyclotomic acc;
    for (int i = 0; i < (int)G.elements().size(); ++i) {
        int c = G.class_of_index(i);
        Cyclotomic prod(BigRational(1));
        for (const auto* f : fs) prod *= f->values[c];
        acc += prod;
    }
    auto r = acc.scaled(BigRational(1, G.order())).try_rational();
    REQUIRE(r.has_value());
    return *r;
}

std::multiset<long long> table_degrees(const CharacterTable& t) {
    std::multiset<long long> out;
    for (int i = 0; i < t.size(); ++i) out.insert(t.degree_of(i));
    return out;
}

}  // namespace

TEST_CASE("induced character: H = G gives the trivial character") {
    auto G = build_group(sym(4));
    auto f = induced_trivial_character(G, whole_group(G));
    CHECK(f == trivial_character(G));
}

TEST_CASE("induced character: H = 1 gives the regular character") {
    auto G = build_group(sym(4));
    auto f = induced_trivial_character(G, trivial_subgroup(G));
    CHECK(f == regular_character(G));
}

TEST_CASE("induced character of S3 from an order-2 subgroup is (3, 1, 0)") {
    auto G = build_group(sym(3));
    Element t = G->realization().make_perm({1, 0, 2});
    std::vector<int> H{G->index_of(G->identity()), G->index_of(t)};
    auto f = induced_trivial_character(G, H);
    // classes in canonical order: 1a, 2a, 3a
    CHECK(f.values[0] == Cyclotomic(3));
    CHECK(f.values[1] == Cyclotomic(1));
    CHECK(f.values[2] == Cyclotomic(0));
}

TEST_CASE("induced character is invariant under conjugating the subgroup") {
    auto G = build_group(sym(4));
    Element c4 = G->realization().make_perm({1, 2, 3, 0});
    auto H = subgroup_closure(*G, {c4});
    auto f = induced_trivial_character(G, H);
    for (const auto& g : G->elements()) {
        auto Hc = conjugate_subgroup(*G, H, g);
        CHECK(induced_trivial_character(G, Hc) == f);
    }
}

TEST_CASE("inner products") {
    auto G = build_group(sym(3));
    CHECK(inner_product(regular_character(G), trivial_character(G)) == Cyclotomic(1));
    // <Ind_H^G 1, 1> = 1 for every subgroup (Frobenius reciprocity)
    Element t = G->realization().make_perm({1, 0, 2});
    Element c = G->realization().make_perm({1, 2, 0});
    for (auto& H : {trivial_subgroup(G), subgroup_closure(*G, {t}), subgroup_closure(*G, {c}),
                    whole_group(G)}) {
        CHECK(inner_product(induced_trivial_character(G, H), trivial_character(G)) ==
              Cyclotomic(1));
    }
    // rho = (2, 0, -1): <rho, rho> = 1
    ClassFunction rho{G, {Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)}};
    CHECK(inner_product(rho, rho) == Cyclotomic(1));
}

TEST_CASE("tensor power invariants") {
    auto G = build_group(sym(3));
    CHECK(tensor_power_invariant_dim(trivial_character(G), 5) == 1);
    ClassFunction rho{G, {Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)}};
    // (1/6)(8 + 0 + 2*(-1)) = 1, and it matches the element-wise oracle
    CHECK(tensor_power_invariant_dim(rho, 3) == 1);
    CHECK(elementwise_invariant_avg({&rho, &rho, &rho}) == BigRational(1));

    ClassFunction fake{G, {Cyclotomic(1), Cyclotomic(1), Cyclotomic(0)}};
    CHECK_THROWS_AS(tensor_power_invariant_dim(fake, 3), NonIntegralResult);
}

TEST_CASE("triple invariants: Schur orthogonality instances") {
    auto G = build_group(sym(3));
    ClassFunction rho{G, {Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)}};
    CHECK(triple_invariant_dim(trivial_character(G), trivial_character(G),
                               trivial_character(G)) == 1);
    CHECK(triple_invariant_dim(rho, rho.conj(), trivial_character(G)) == 1);
}

TEST_CASE("Dixon table: S3 degrees {1,1,2} and frozen golden values") {
    auto G = build_group(sym(3));
    auto t = dixon_character_table(G);
    CHECK(table_degrees(t) == std::multiset<long long>{1, 1, 2});
    // classes in order 1a, 2a, 3a; rows sorted by degree then value key
    REQUIRE(t.size() == 3);
    CHECK(t.irreducibles[0].values ==
          std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1)});
    CHECK(t.irreducibles[1].values ==
          std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)});
    CHECK(t.irreducibles[2].values ==
          std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)});
    // bit-reproducible: a second run serializes identically
    CHECK(table_to_json_string(t) == table_to_json_string(dixon_character_table(G)));
}

TEST_CASE("Dixon table: S5 degrees {1,1,4,4,5,5,6}") {
    auto G = build_group(sym(5));
    auto t = dixon_character_table(G);
    CHECK(table_degrees(t) == std::multiset<long long>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("Dixon table: S3 x S3 irreducibles are external products") {
    auto S3 = build_group(sym(3));
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::DirectProduct;
    prod.factors = {sym(3), sym(3)};
    auto G = build_group(prod);
    auto tG = dixon_character_table(G);
    auto t3 = dixon_character_table(S3);
    REQUIRE(tG.size() == 9);

    // class correspondence (a, b) -> class of the concatenated permutation
    auto product_class = [&](int ca, int cb) {
        Element e = G->identity();
        const Element& a = S3->classes()[ca].rep;
        const Element& b = S3->classes()[cb].rep;
        for (int i = 0; i < 3; ++i) {
            e.perm[i] = a.perm[i];
            e.perm[3 + i] = static_cast<uint16_t>(3 + b.perm[i]);
        }
        return G->class_of(e);
    };
    std::set<int> matched;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ClassFunction expect{G, std::vector<Cyclotomic>(9)};
            for (int ca = 0; ca < 3; ++ca)
                for (int cb = 0; cb < 3; ++cb)
                    expect.values[product_class(ca, cb)] =
                        t3.irreducibles[i].values[ca] * t3.irreducibles[j].values[cb];
            bool found = false;
            for (int r = 0; r < tG.size(); ++r)
                if (tG.irreducibles[r] == expect) {
                    matched.insert(r);
                    found = true;
                }
            CHECK(found);
        }
    CHECK(matched.size() == 9);
}

TEST_CASE("Dixon table hygiene on assorted groups") {
    for (auto spec : {sym(3), sym(4), sym(5)}) {
        auto t = dixon_character_table(build_group(spec));
        CHECK_NOTHROW(t.verify());
    }
    GroupSpec psl7;
    psl7.kind = GroupSpec::Kind::Psl2;
    psl7.n = 7;
    auto t = dixon_character_table(build_group(psl7));
    CHECK_NOTHROW(t.verify());
    CHECK(table_degrees(t) == std::multiset<long long>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("decompose: regular character of S3 = (1, 1, 2)") {
    auto G = build_group(sym(3));
    auto t = dixon_character_table(G);
    auto dec = decompose(regular_character(G), t, /*allow_virtual=*/false);
    std::vector<BigInt> want;
    for (int i = 0; i < t.size(); ++i) want.push_back(BigInt(t.degree_of(i)));
    CHECK(dec.multiplicities == want);
    CHECK(!dec.any_negative);
    CHECK(rebuild(dec, t) == regular_character(G));
}

TEST_CASE("decompose flags virtual characters distinctly") {
    auto G = build_group(sym(3));
    auto t = dixon_character_table(G);
    ClassFunction virt = trivial_character(G) - regular_character(G);
    auto dec = decompose(virt, t, /*allow_virtual=*/true);
    CHECK(dec.any_negative);
    CHECK_THROWS_AS(decompose(virt, t, /*allow_virtual=*/false), NegativeMultiplicity);
    ClassFunction nonvirt{G, {Cyclotomic(BigRational(1, 2)), Cyclotomic(0), Cyclotomic(0)}};
    CHECK_THROWS_AS(decompose(nonvirt, t, true), NonIntegralResult);
}

TEST_CASE("decompose-rebuild is the identity on genuine characters") {
    auto G = build_group(sym(4));
    auto t = dixon_character_table(G);
    // natural permutation character of S4: fix(g)
    ClassFunction perm{G, {}};
    perm.values.resize(G->class_count());
    for (int c = 0; c < G->class_count(); ++c) {
        long long fix = 0;
        for (unsigned i = 0; i < 4; ++i)
            if (G->classes()[c].rep.perm[i] == i) ++fix;
        perm.values[c] = Cyclotomic(fix);
    }
    auto dec = decompose(perm, t, false);
    CHECK(rebuild(dec, t) == perm);
}

TEST_CASE("class-sum invariants equal element-wise brute force on small groups") {
    for (auto spec : {sym(3), sym(4), sym(5)}) {
        auto G = build_group(spec);
        auto t = dixon_character_table(G);
        for (const auto& chi : t.irreducibles) {
            std::vector<const ClassFunction*> fs{&chi, &chi, &chi};
            CHECK(invariant_dim_rational(fs) == elementwise_invariant_avg(fs));
        }
    }
}

TEST_CASE("tensor cube via decomposition: sum over irreducible triples") {
    // dim (chi^x3)^G = sum_{i,j,k} m_i m_j m_k dim (chi_i x chi_j x chi_k)^G
    GroupSpec s3;
    s3.kind = GroupSpec::Kind::Symmetric;
    s3.n = 3;
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::DirectProduct;
    prod.factors = {s3, s3};
    for (const GroupSpec& spec : {s3, prod}) {
        auto G = build_group(spec);
        auto t = dixon_character_table(G);
        // test character: permutation character of the regular-ish action
        Element g = G->classes()[1].rep;
        std::vector<int> H;
        for (const auto& el : cyclic_subgroup(G->realization(), g))
            H.push_back(G->index_of(el));
        ClassFunction chi = induced_trivial_character(G, H);
        auto dec = decompose(chi, t, false);
        long long direct = tensor_power_invariant_dim(chi, 3);
        BigInt total = 0;
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j)
                for (int k = 0; k < t.size(); ++k) {
                    if (dec.multiplicities[i] == 0 || dec.multiplicities[j] == 0 ||
                        dec.multiplicities[k] == 0)
                        continue;
                    total += dec.multiplicities[i] * dec.multiplicities[j] *
                             dec.multiplicities[k] *
                             triple_invariant_dim(t.irreducibles[i], t.irreducibles[j],
                                                  t.irreducibles[k]);
                }
        CHECK(total == BigInt(direct));
    }
}

TEST_CASE("table JSON round trip") {
    auto G = build_group(sym(4));
    auto t = dixon_character_table(G);
    std::string text = table_to_json_string(t);
    auto t2 = table_from_json_string(G, text);
    REQUIRE(t2.size() == t.size());
    for (int i = 0; i < t.size(); ++i) CHECK(t2.irreducibles[i] == t.irreducibles[i]);
    CHECK_NOTHROW(t2.verify());
}

TEST_CASE("character_table_for memoizes and honors the disk cache") {
    auto tmp = std::filesystem::temp_directory_path() / "h1cube_cache_test";
    std::filesystem::remove_all(tmp);
    setenv("H1CUBE_CACHE_DIR", tmp.c_str(), 1);
    auto G = build_group(sym(4));
    const auto& t1 = character_table_for(G, "s4-test");
    const auto& t2 = character_table_for(G, "s4-test");
    CHECK(&t1 == &t2);
    bool wrote = false;
    for (auto& p : std::filesystem::directory_iterator(tmp))
        if (p.path().extension() == ".json") wrote = true;
    CHECK(wrote);
    // a fresh (distinct) group object of the same construction hits the disk cache
    auto H = build_group(sym(4));
    const auto& t3 = character_table_for(H, "s4-test");
    CHECK(table_degrees(t3) == table_degrees(t1));
    unsetenv("H1CUBE_CACHE_DIR");
    std::filesystem::remove_all(tmp);
}
