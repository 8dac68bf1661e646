#pragma once

#include "h1cube/group.hpp"

namespace h1cube {

/// Class data of PSL2(F_q) / PGL2(F_q) assembled from the torus/unipotent
/// counting rules, without enumerating the group. Representatives are
/// explicit matrices drawn from the split torus S, the non-split torus T and
/// the unipotent subgroup U. Must agree with brute-force class data for
/// small q (tested for q <= 13).
struct StructuralPsl2 {
    enum class Tag { Id, Unip, UnipSquare, UnipNonsquare, Split, Nonsplit };
    struct ClassInfo {
        Tag tag = Tag::Id;
        long long param = 0;  // torus exponent k (split) / j (nonsplit); unipotent witness
    };

    GroupPtr group;               // structural FiniteGroup (classes + classifier)
    std::vector<ClassInfo> info;  // aligned with group->classes()
    unsigned q = 0, p = 0, m = 1;
    bool pgl = false;
    long long split_order = 0;     // projective order of the split rotation s
    long long nonsplit_order = 0;  // projective order of the non-split rotation tau
    Element split_gen, nonsplit_gen, unip_gen;

    int class_for(Tag tag, long long param) const;
};

StructuralPsl2 structural_psl2(unsigned q);
StructuralPsl2 structural_pgl2(unsigned q);

/// Spec surface: the plain class lists.
std::vector<ConjugacyClass> structural_classes_psl2(unsigned q);
std::vector<ConjugacyClass> structural_classes_pgl2(unsigned q);

}  // namespace h1cube
