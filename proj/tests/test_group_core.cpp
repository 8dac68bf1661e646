#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"
#include "h1cube/group.hpp"
#include "h1cube/group_build.hpp"
#include "h1cube/structural.hpp"

using namespace h1cube;

namespace {

GroupSpec sym(unsigned n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Symmetric;
    s.n = n;
    return s;
}

GroupSpec cyc(unsigned n) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Cyclic;
    s.n = n;
    return s;
}

GroupSpec psl2_spec(unsigned q) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Psl2;
    s.n = q;
    return s;
}

GroupSpec pgl2_spec(unsigned q) {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Pgl2;
    s.n = q;
    return s;
}

GroupSpec sl2_3_spec() {
    GroupSpec s;
    s.kind = GroupSpec::Kind::MatGens;
    s.ring = "gf(3)";
    s.projective = false;
    s.mat_gens = {{1, 1, 0, 1}, {0, -1, 1, 0}};
    return s;
}

void check_class_sanity(const GroupPtr& G) {
    long long total = 0;
    for (const auto& c : G->classes()) {
        total += c.size;
        CHECK(G->order() % c.size == 0);
        CHECK(element_order(G->realization(), c.rep) == c.order);
    }
    CHECK(total == G->order());
    CHECK(G->classes()[0].order == 1);
    CHECK(G->classes()[0].size == 1);
    // conjugation closure: generator conjugates of a representative stay put
    for (int c = 0; c < G->class_count(); ++c)
        for (const auto& g : G->generators()) {
            Element x = G->mul(G->mul(g, G->classes()[c].rep), G->inv(g));
            CHECK(G->class_of(x) == c);
        }
}

}  // namespace

TEST_CASE("symmetric groups: orders and S3 classes") {
    CHECK(build_group(sym(5))->order() == 120);
    auto S3 = build_group(sym(3));
    CHECK(S3->order() == 6);
    REQUIRE(S3->class_count() == 3);
    std::multiset<std::pair<unsigned, long long>> got;
    for (const auto& c : S3->classes()) got.insert({c.order, c.size});
    std::multiset<std::pair<unsigned, long long>> want{{1, 1}, {2, 3}, {3, 2}};
    CHECK(got == want);
    check_class_sanity(S3);
}

TEST_CASE("psl2(8) has order 504; pgl2(5) has 7 classes") {
    auto G8 = build_group(psl2_spec(8));
    CHECK(G8->order() == 504);
    auto G5 = build_group(pgl2_spec(5));
    CHECK(G5->order() == 120);
    CHECK(G5->class_count() == 7);  // PGL2(F5) ~ S5
    check_class_sanity(G5);
    // cross-check against S5 class data (isomorphic group)
    auto S5 = build_group(sym(5));
    std::multiset<std::pair<unsigned, long long>> a, b;
    for (const auto& c : G5->classes()) a.insert({c.order, c.size});
    for (const auto& c : S5->classes()) b.insert({c.order, c.size});
    CHECK(a == b);
}

TEST_CASE("gl2_mod(4) has order 96") {
    auto G = build_group([&] {
        GroupSpec s;
        s.kind = GroupSpec::Kind::Gl2Mod;
        s.n = 4;
        return s;
    }());
    CHECK(G->order() == 96);
    check_class_sanity(G);
}

TEST_CASE("element orders and cyclic subgroups") {
    auto S7 = build_group(sym(7));
    Element id = S7->identity();
    CHECK(element_order(S7->realization(), id) == 1);
    CHECK(cyclic_subgroup(S7->realization(), id).size() == 1);
    Element seven = S7->realization().make_perm({1, 2, 3, 4, 5, 6, 0});
    CHECK(element_order(S7->realization(), seven) == 7);
    CHECK(cyclic_subgroup(S7->realization(), seven).size() == 7);

    auto G8 = build_group(psl2_spec(8));
    Element u = G8->realization().make_mat(1, 1, 0, 1);
    CHECK(element_order(G8->realization(), u) == 2);
}

TEST_CASE("PSL2(F7) class data matches the torus/unipotent counting rules") {
    auto G = build_group(psl2_spec(7));
    CHECK(G->order() == 168);
    std::multiset<std::pair<unsigned, long long>> got;
    for (const auto& c : G->classes()) got.insert({c.order, c.size});
    // unique involution class of size |G|/(q+1)=21 (2 divides (q+1)/2),
    // order-3 class of size 2|G|/(q-1)=56, order-4 of size 2|G|/(q+1)=42,
    // two unipotent order-7 classes of size |G|/q=24
    std::multiset<std::pair<unsigned, long long>> want{
        {1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 24}, {7, 24}};
    CHECK(got == want);
}

TEST_CASE("structural classes agree with brute force for q in 3..13") {
    for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        for (bool pgl : {false, true}) {
            auto st = pgl ? structural_pgl2(q) : structural_psl2(q);
            auto bf = build_group(pgl ? pgl2_spec(q) : psl2_spec(q));
            INFO((pgl ? "PGL2(" : "PSL2("), q, ")");
            REQUIRE(st.group->order() == bf->order());
            REQUIRE(st.group->class_count() == bf->class_count());
            // bijective correspondence via membership of representatives
            std::set<int> seen;
            for (int c = 0; c < st.group->class_count(); ++c) {
                const auto& sc = st.group->classes()[c];
                int bc = bf->class_of(sc.rep);
                CHECK(bf->classes()[bc].size == sc.size);
                CHECK(bf->classes()[bc].order == sc.order);
                seen.insert(bc);
            }
            CHECK((int)seen.size() == bf->class_count());
            // classifier agrees with brute-force classes on every element
            if (q <= 9) {
                for (int bc = 0; bc < bf->class_count(); ++bc) {
                    const Element& rep = bf->classes()[bc].rep;
                    int sc = st.group->class_of(rep);
                    CHECK(st.group->classes()[sc].size == bf->classes()[bc].size);
                    CHECK(st.group->classes()[sc].order == bf->classes()[bc].order);
                }
            }
        }
    }
}

TEST_CASE("structural PSL2(F7) unipotent and involution sizes (q=7)") {
    auto st = structural_psl2(7);
    int unip = 0, invol = 0;
    for (int c = 0; c < st.group->class_count(); ++c) {
        const auto& cc = st.group->classes()[c];
        if (cc.order == 7) {
            CHECK(cc.size == 24);  // |G|/q
            ++unip;
        }
        if (cc.order == 2) {
            CHECK(cc.size == 21);  // |G|/(q+1), since 2 | (q+1)/2
            ++invol;
        }
    }
    CHECK(unip == 2);
    CHECK(invol == 1);
}

TEST_CASE("structural PGL2(F5) has 7 classes matching brute force") {
    auto st = structural_pgl2(5);
    CHECK(st.group->class_count() == 7);
}

TEST_CASE("fingerprint: Z/4") {
    auto G = build_group(cyc(4));
    Fingerprint fp = fingerprint(*G);
    CHECK(fp.order == 4);
    CHECK(fp.center_order == 4);
    std::map<unsigned, long long> want{{1, 1}, {2, 1}, {4, 2}};
    CHECK(fp.order_histogram == want);
    CHECK(fp.abelian_invariants == std::vector<long long>{4});
    CHECK(fp.derived_order == 1);
}

TEST_CASE("central product SL2(F3) o Z/4: order 48, center Z/4, G/Z of order 12") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::CentralProduct;
    s.factors = {sl2_3_spec(), cyc(4)};
    auto G = build_group(s);
    CHECK(G->order() == 48);
    Fingerprint fp = fingerprint(*G);
    CHECK(fp.center_order == 4);
    // non-split: the direct product Z/4 x A4 has abelianization Z/12, the
    // central product has Z/6 (and derived subgroup Q8 instead of V4)
    CHECK(fp.abelian_invariants == std::vector<long long>{6});
    CHECK(fp.derived_order == 8);

    GroupSpec split;
    split.kind = GroupSpec::Kind::DirectProduct;
    GroupSpec a4;  // A4 as permutation generators
    a4.kind = GroupSpec::Kind::PermGens;
    a4.perm_gens = {{1, 0, 3, 2}, {1, 2, 0, 3}};
    split.factors = {cyc(4), a4};
    auto D = build_group(split);
    CHECK(D->order() == 48);
    Fingerprint fps = fingerprint(*D);
    CHECK(fps.order_histogram == fp.order_histogram);  // histograms coincide
    CHECK(fps.abelian_invariants != fp.abelian_invariants);
    CHECK(!(fps == fp));
}

TEST_CASE("wreath product S3 wr Z/2 has order 72") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Wreath2;
    s.factors = {sym(3)};
    auto G = build_group(s);
    CHECK(G->order() == 72);
    check_class_sanity(G);
}

TEST_CASE("semidirect product: Z/7 : Z/3 (Frobenius group of order 21)") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Semidirect;
    s.factors = {cyc(7), cyc(3)};
    // the acting generator sends the rotation to its square (2 has order 3 mod 7)
    s.action = {{{0, 0}}};
    auto G = build_group(s);
    CHECK(G->order() == 21);
    Fingerprint fp = fingerprint(*G);
    CHECK(fp.center_order == 1);
    CHECK(fp.derived_order == 7);
}

TEST_CASE("semidirect with an inconsistent action table is rejected") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Semidirect;
    s.factors = {cyc(7), cyc(3)};
    // x -> x^3 has order 6 as an automorphism of Z/7, not 3
    s.action = {{{0, 0, 0}}};
    CHECK_THROWS_AS(build_group(s), NonFaithfulAction);
}

TEST_CASE("enumeration cap") {
    Realization real = Realization::permutation(12);
    std::vector<uint16_t> c12(12);
    for (unsigned i = 0; i < 12; ++i) c12[i] = static_cast<uint16_t>((i + 1) % 12);
    std::vector<uint16_t> t12(12);
    for (unsigned i = 0; i < 12; ++i) t12[i] = static_cast<uint16_t>(i);
    std::swap(t12[0], t12[1]);
    CHECK_THROWS_AS(FiniteGroup::enumerate(
                        real, {real.make_perm(c12), real.make_perm(t12)}, "S12", 1000),
                    OrderCapExceeded);
}

TEST_CASE("invalid prime powers are rejected") {
    CHECK_THROWS_AS(build_group(psl2_spec(6)), InvalidPrimePower);
    CHECK_THROWS_AS(structural_psl2(10), InvalidPrimePower);
}

TEST_CASE("fingerprint is invariant under relabeling the permutation domain") {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Wreath2;
    s.factors = {cyc(2)};
    GroupSpec v4 = s;  // (Z/2) wr Z/2 = D4, order 8
    auto G = build_group(v4);
    Fingerprint fp = fingerprint(*G);

    std::mt19937 rng(5);
    unsigned d = G->realization().degree();
    std::vector<uint16_t> relabel(d);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    Realization real = G->realization();
    Element sigma = real.make_perm(relabel);
    std::vector<Element> gens;
    for (const auto& g : G->generators())
        gens.push_back(real.mul(real.mul(sigma, g), real.inv(sigma)));
    auto H = FiniteGroup::enumerate(real, gens, "relabelled");
    CHECK(fingerprint(*H) == fp);
}

TEST_CASE("subgroup utilities") {
    auto S4 = build_group(sym(4));
    Element a = S4->realization().make_perm({1, 0, 3, 2});
    Element b = S4->realization().make_perm({2, 3, 0, 1});
    auto V = subgroup_closure(*S4, {a, b});
    CHECK(V.size() == 4);
    CHECK(is_subgroup(*S4, V));
    auto conj = conjugate_subgroup(*S4, V, S4->realization().make_perm({1, 2, 0, 3}));
    CHECK(conj == V);  // V4 is normal in S4
    CHECK(derived_subgroup(*S4).size() == 12);
    CHECK(center_order(*S4) == 1);
}

TEST_CASE("deterministic class labels") {
    auto G = build_group(sym(3));
    std::vector<std::string> labels;
    for (const auto& c : G->classes()) labels.push_back(c.label);
    CHECK(labels == std::vector<std::string>{"1a", "2a", "3a"});
    auto H = build_group(sym(3));
    std::vector<std::string> labels2;
    for (const auto& c : H->classes()) labels2.push_back(c.label);
    CHECK(labels == labels2);
}
