#include "h1cube/group_build.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

RingPtr parse_ring(const std::string& s) {
    if (s.rfind("gf(", 0) == 0 && s.back() == ')')
        return SmallRing::gf(static_cast<unsigned>(std::stoul(s.substr(3, s.size() - 4))));
    if (s.rfind("zmod(", 0) == 0 && s.back() == ')')
        return SmallRing::zmod(static_cast<unsigned>(std::stoul(s.substr(5, s.size() - 6))));
    throw InvalidInput("unknown ring descriptor: " + s);
}

std::vector<uint16_t> cycle_perm(unsigned n) {
    std::vector<uint16_t> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = static_cast<uint16_t>((i + 1) % n);
    return img;
}

GroupPtr build_symmetric(unsigned n, long long cap) {
    Realization real = Realization::permutation(std::max(1u, n));
    std::vector<Element> gens;
    if (n >= 2) {
        std::vector<uint16_t> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.push_back(real.make_perm(t));
    }
    if (n >= 3) gens.push_back(real.make_perm(cycle_perm(n)));
    return FiniteGroup::enumerate(real, gens, "S" + std::to_string(n), cap);
}

GroupPtr build_cyclic(unsigned n, long long cap) {
    Realization real = Realization::permutation(std::max(1u, n));
    std::vector<Element> gens;
    if (n >= 2) gens.push_back(real.make_perm(cycle_perm(n)));
    return FiniteGroup::enumerate(real, gens, "Z/" + std::to_string(n), cap);
}

GroupPtr build_dihedral(unsigned n, long long cap) {
    if (n < 3) throw InvalidInput("dihedral: rotation order must be >= 3");
    Realization real = Realization::permutation(n);
    std::vector<uint16_t> refl(n);
    for (unsigned i = 0; i < n; ++i) refl[i] = static_cast<uint16_t>((n - i) % n);
    std::vector<Element> gens{real.make_perm(cycle_perm(n)), real.make_perm(refl)};
    return FiniteGroup::enumerate(real, gens, "D" + std::to_string(n), cap);
}

std::vector<Element> sl2_generators(const Realization& real) {
    const SmallRing& R = *real.ring();
    std::vector<Element> gens;
    // upper unipotents over an F_p-basis of the field, plus the Weyl element
    unsigned p = R.char_p();
    for (unsigned i = 0, idx = 1; i < R.ext_degree(); ++i, idx *= p)
        gens.push_back(real.make_mat_idx(1, static_cast<uint16_t>(idx), 0, 1));
    gens.push_back(real.make_mat(0, -1, 1, 0));
    return gens;
}

GroupPtr build_pgl2(unsigned q, long long cap, bool psl) {
    if (!prime_power(q)) throw InvalidPrimePower("pgl2/psl2: q must be a prime power");
    RingPtr ring = SmallRing::gf(q);
    Realization real = Realization::matrix(ring, /*projective=*/true);
    std::vector<Element> gens = sl2_generators(real);
    if (!psl) gens.push_back(real.make_mat_idx(ring->generator(), 0, 0, 1));
    std::string name = (psl ? "PSL(2," : "PGL(2,") + std::to_string(q) + ")";
    return FiniteGroup::enumerate(real, gens, name, cap);
}

GroupPtr build_gl2_mod(unsigned n, long long cap) {
    RingPtr ring = SmallRing::zmod(n);
    Realization real = Realization::matrix(ring, /*projective=*/false);
    std::vector<Element> gens{real.make_mat(1, 1, 0, 1), real.make_mat(1, 0, 1, 1)};
    for (unsigned u = 2; u < n; ++u)
        if (ring->is_unit(static_cast<uint16_t>(u))) gens.push_back(real.make_mat(u, 0, 0, 1));
    return FiniteGroup::enumerate(real, gens, "GL(2,Z/" + std::to_string(n) + ")", cap);
}

GroupPtr build_perm_gens(const std::vector<std::vector<uint16_t>>& gens_in,
                         const std::string& name, long long cap) {
    if (gens_in.empty()) throw InvalidInput("perm_gens: at least one generator required");
    size_t degree = gens_in[0].size();
    Realization real = Realization::permutation(static_cast<unsigned>(degree));
    std::vector<Element> gens;
    for (const auto& img : gens_in) {
        if (img.size() != degree) throw InvalidInput("perm_gens: inconsistent degrees");
        gens.push_back(real.make_perm(img));
    }
    return FiniteGroup::enumerate(real, gens, name, cap);
}

Element embed_block(const Realization& big, const Element& small, unsigned offset,
                    unsigned small_degree) {
    Element e = big.identity();
    for (unsigned i = 0; i < small_degree; ++i)
        e.perm[offset + i] = static_cast<uint16_t>(offset + small.perm[i]);
    return e;
}

GroupPtr build_wreath2(const GroupPtr& base_in, long long cap) {
    GroupPtr base = as_permutation_group(base_in);
    unsigned d = base->realization().degree();
    Realization real = Realization::permutation(2 * d);
    std::vector<Element> gens;
    for (const auto& g : base->generators()) gens.push_back(embed_block(real, g, 0, d));
    Element swap = real.identity();
    for (unsigned i = 0; i < d; ++i) {
        swap.perm[i] = static_cast<uint16_t>(i + d);
        swap.perm[i + d] = static_cast<uint16_t>(i);
    }
    gens.push_back(swap);
    return FiniteGroup::enumerate(real, gens, base->description() + " wr Z/2", cap);
}

Element decode_word(const FiniteGroup& N, const std::vector<int>& word) {
    Element out = N.identity();
    for (int t : word) {
        const auto& gens = N.generators();
        Element g;
        if (t >= 0) {
            if (t >= (int)gens.size()) throw InvalidInput("semidirect action word: bad index");
            g = gens[t];
        } else {
            int k = -t - 1;
            if (k >= (int)gens.size()) throw InvalidInput("semidirect action word: bad index");
            g = N.inv(gens[k]);
        }
        out = N.mul(out, g);
    }
    return out;
}

/// Extends generator images to an automorphism table of N (element index ->
/// element index), checking multiplicative consistency along the way.
std::vector<int> automorphism_table(const FiniteGroup& N, const std::vector<Element>& gen_images) {
    const auto& elems = N.elements();
    const int n = (int)elems.size();
    std::vector<int> phi(n, -1);
    int id = N.index_of(N.identity());
    phi[id] = id;
    std::deque<int> frontier{id};
    std::vector<int> gen_idx, img_idx;
    for (size_t i = 0; i < N.generators().size(); ++i) {
        gen_idx.push_back(N.index_of(N.generators()[i]));
        int ii = N.index_of(gen_images[i]);
        if (ii < 0) throw NonFaithfulAction("action image is not an element of the normal group");
        img_idx.push_back(ii);
    }
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop_front();
        for (size_t i = 0; i < gen_idx.size(); ++i) {
            int y = N.index_of(N.mul(elems[x], elems[gen_idx[i]]));
            int fy = N.index_of(N.mul(elems[phi[x]], elems[img_idx[i]]));
            if (phi[y] < 0) {
                phi[y] = fy;
                frontier.push_back(y);
            } else if (phi[y] != fy) {
                throw NonFaithfulAction("semidirect action table is not a homomorphism on N");
            }
        }
    }
    std::set<int> image(phi.begin(), phi.end());
    if ((int)image.size() != n || image.count(-1))
        throw NonFaithfulAction("semidirect action image is not a bijection of N");
    return phi;
}

GroupPtr build_semidirect(const GroupPtr& N, const GroupPtr& H_in,
                          const std::vector<std::vector<std::vector<int>>>& action,
                          long long cap) {
    if (!N->enumerated()) throw InvalidInput("semidirect: normal factor must be enumerable");
    GroupPtr H = as_permutation_group(H_in);
    if (action.size() != H->generators().size())
        throw NonFaithfulAction("semidirect: one action row per acting generator required");

    unsigned nN = static_cast<unsigned>(N->order());
    unsigned dH = H->realization().degree();
    Realization real = Realization::permutation(nN + dH);

    std::vector<Element> gens;
    // normal generators act on N by left translation, trivially on the H part
    for (const auto& g : N->generators()) {
        Element e = real.identity();
        for (unsigned i = 0; i < nN; ++i)
            e.perm[i] = static_cast<uint16_t>(N->index_of(N->mul(g, N->elements()[i])));
        gens.push_back(e);
    }
    // acting generators act on N via the automorphism, on the H part naturally
    for (size_t t = 0; t < H->generators().size(); ++t) {
        if (action[t].size() != N->generators().size())
            throw NonFaithfulAction("semidirect: one image per normal generator required");
        std::vector<Element> images;
        for (const auto& word : action[t]) images.push_back(decode_word(*N, word));
        std::vector<int> phi = automorphism_table(*N, images);
        Element e = real.identity();
        for (unsigned i = 0; i < nN; ++i) e.perm[i] = static_cast<uint16_t>(phi[i]);
        for (unsigned i = 0; i < dH; ++i)
            e.perm[nN + i] = static_cast<uint16_t>(nN + H->generators()[t].perm[i]);
        gens.push_back(e);
    }
    GroupPtr G = FiniteGroup::enumerate(
        real, gens, N->description() + " : " + H->description(), cap);
    if (G->order() != N->order() * H->order())
        throw NonFaithfulAction("semidirect: action does not extend to a homomorphism of the "
                                "acting group (order mismatch)");
    return G;
}

std::vector<Element> central_involutions(const FiniteGroup& G) {
    std::vector<Element> out;
    for (const auto& x : G.elements()) {
        if (element_order(G.realization(), x) != 2) continue;
        bool central = true;
        for (const auto& g : G.generators())
            if (!G.realization().eq(G.mul(x, g), G.mul(g, x))) {
                central = false;
                break;
            }
        if (central) out.push_back(x);
    }
    return out;
}

GroupPtr build_central_product(const GroupPtr& A_in, const GroupPtr& B_in, long long cap) {
    GroupPtr A = as_permutation_group(A_in);
    GroupPtr B = as_permutation_group(B_in);
    auto za = central_involutions(*A), zb = central_involutions(*B);
    if (za.size() != 1 || zb.size() != 1)
        throw InvalidInput("central_product: factors must each have a unique central involution");
    GroupPtr D = direct_product({A, B}, A->description() + " x " + B->description());
    unsigned dA = A->realization().degree();
    Element z = D->realization().identity();
    for (unsigned i = 0; i < dA; ++i) z.perm[i] = za[0].perm[i];
    for (unsigned i = 0; i < B->realization().degree(); ++i)
        z.perm[dA + i] = static_cast<uint16_t>(dA + zb[0].perm[i]);
    GroupPtr Q = quotient_by_central(D, z, A->description() + " o " + B->description());
    if (Q->order() != A->order() * B->order() / 2)
        throw Error("central_product: unexpected quotient order");
    (void)cap;
    return Q;
}

void check_expectations(const GroupSpec& spec, const GroupPtr& G) {
    if (spec.expect_order && G->order() != *spec.expect_order)
        throw FingerprintMismatch("group " + spec.str() + ": order " + std::to_string(G->order()) +
                                  " != declared " + std::to_string(*spec.expect_order));
    if (!spec.expect_center && !spec.expect_derived && spec.expect_abelian.empty()) return;
    Fingerprint fp = fingerprint(*G);
    if (spec.expect_center && fp.center_order != *spec.expect_center)
        throw FingerprintMismatch("group " + spec.str() + ": center order mismatch");
    if (spec.expect_derived && fp.derived_order != *spec.expect_derived)
        throw FingerprintMismatch("group " + spec.str() + ": derived subgroup order mismatch");
    if (!spec.expect_abelian.empty() && fp.abelian_invariants != spec.expect_abelian)
        throw FingerprintMismatch("group " + spec.str() + ": abelianization mismatch");
}

}  // namespace

GroupPtr as_permutation_group(const GroupPtr& G) {
    if (G->realization().kind() == Realization::Kind::Perm) return G;
    const auto& elems = G->elements();
    unsigned n = static_cast<unsigned>(elems.size());
    Realization real = Realization::permutation(n);
    std::vector<Element> gens;
    for (const auto& g : G->generators()) {
        Element e = real.identity();
        for (unsigned i = 0; i < n; ++i)
            e.perm[i] = static_cast<uint16_t>(G->index_of(G->mul(g, elems[i])));
        gens.push_back(e);
    }
    return FiniteGroup::enumerate(real, gens, G->description(), FiniteGroup::kEnumerationCap);
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, const std::string& description) {
    unsigned total = 0;
    for (const auto& f : factors) {
        if (f->realization().kind() != Realization::Kind::Perm)
            throw InvalidInput("direct_product requires permutation factors");
        total += f->realization().degree();
    }
    Realization real = Realization::permutation(total);
    std::vector<Element> gens;
    unsigned offset = 0;
    for (const auto& f : factors) {
        unsigned d = f->realization().degree();
        for (const auto& g : f->generators()) gens.push_back(embed_block(real, g, offset, d));
        offset += d;
    }
    return FiniteGroup::enumerate(real, gens, description, FiniteGroup::kEnumerationCap);
}

GroupPtr quotient_by_central(const GroupPtr& G, const Element& z, const std::string& description) {
    // cosets of <z>; z central makes the left action on cosets well-defined
    for (const auto& g : G->generators())
        if (!G->realization().eq(G->mul(z, g), G->mul(g, z)))
            throw InvalidInput("quotient_by_central: element is not central");
    std::vector<Element> zpow = cyclic_subgroup(G->realization(), z);
    const auto& elems = G->elements();
    std::vector<int> coset_id(elems.size(), -1);
    std::vector<int> coset_min;
    for (int i = 0; i < (int)elems.size(); ++i) {
        if (coset_id[i] >= 0) continue;
        int id = (int)coset_min.size();
        int mn = i;
        for (const auto& zp : zpow) {
            int j = G->index_of(G->mul(elems[i], zp));
            coset_id[j] = id;
            mn = std::min(mn, j);
        }
        coset_min.push_back(mn);
    }
    unsigned n = static_cast<unsigned>(coset_min.size());
    Realization real = Realization::permutation(n);
    std::vector<Element> gens;
    for (const auto& g : G->generators()) {
        Element e = real.identity();
        for (unsigned c = 0; c < n; ++c)
            e.perm[c] = static_cast<uint16_t>(coset_id[G->index_of(G->mul(g, elems[coset_min[c]]))]);
        gens.push_back(e);
    }
    return FiniteGroup::enumerate(real, gens, description, FiniteGroup::kEnumerationCap);
}

GroupPtr build_group(const GroupSpec& spec) {
    const long long cap = FiniteGroup::kEnumerationCap;
    GroupPtr G;
    switch (spec.kind) {
        case GroupSpec::Kind::Symmetric:
            G = build_symmetric(spec.n, cap);
            break;
        case GroupSpec::Kind::Cyclic:
            G = build_cyclic(spec.n, cap);
            break;
        case GroupSpec::Kind::Dihedral:
            G = build_dihedral(spec.n, cap);
            break;
        case GroupSpec::Kind::PermGens:
            G = build_perm_gens(spec.perm_gens, spec.str(), cap);
            break;
        case GroupSpec::Kind::MatGens: {
            RingPtr ring = parse_ring(spec.ring);
            Realization real = Realization::matrix(ring, spec.projective);
            std::vector<Element> gens;
            for (const auto& m : spec.mat_gens) gens.push_back(real.make_mat(m[0], m[1], m[2], m[3]));
            G = FiniteGroup::enumerate(real, gens, spec.str(), cap);
            break;
        }
        case GroupSpec::Kind::Pgl2:
            G = build_pgl2(spec.n, cap, /*psl=*/false);
            break;
        case GroupSpec::Kind::Psl2:
            G = build_pgl2(spec.n, cap, /*psl=*/true);
            break;
        case GroupSpec::Kind::Gl2Mod:
            G = build_gl2_mod(spec.n, cap);
            break;
        case GroupSpec::Kind::DirectProduct: {
            if (spec.factors.size() < 2) throw InvalidInput("direct_product: need >= 2 factors");
            std::vector<GroupPtr> fs;
            std::string name;
            for (const auto& f : spec.factors) {
                fs.push_back(as_permutation_group(build_group(f)));
                if (!name.empty()) name += " x ";
                name += fs.back()->description();
            }
            G = direct_product(fs, name);
            break;
        }
        case GroupSpec::Kind::Semidirect: {
            if (spec.factors.size() != 2)
                throw InvalidInput("semidirect: exactly two factors (normal, acting) required");
            G = build_semidirect(build_group(spec.factors[0]), build_group(spec.factors[1]),
                                 spec.action, cap);
            break;
        }
        case GroupSpec::Kind::Wreath2: {
            if (spec.factors.size() != 1) throw InvalidInput("wreath2: exactly one factor required");
            G = build_wreath2(build_group(spec.factors[0]), cap);
            break;
        }
        case GroupSpec::Kind::CentralProduct: {
            if (spec.factors.size() != 2) throw InvalidInput("central_product: two factors required");
            G = build_central_product(build_group(spec.factors[0]), build_group(spec.factors[1]),
                                      cap);
            break;
        }
    }
    check_expectations(spec, G);
    return G;
}

std::string GroupSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Symmetric: os << "symmetric(" << n << ")"; break;
        case Kind::Cyclic: os << "cyclic(" << n << ")"; break;
        case Kind::Dihedral: os << "dihedral(" << n << ")"; break;
        case Kind::Pgl2: os << "pgl2(" << n << ")"; break;
        case Kind::Psl2: os << "psl2(" << n << ")"; break;
        case Kind::Gl2Mod: os << "gl2_mod(" << n << ")"; break;
        case Kind::PermGens: {
            os << "perm_gens(";
            for (size_t i = 0; i < perm_gens.size(); ++i) {
                if (i) os << '|';
                for (size_t j = 0; j < perm_gens[i].size(); ++j) {
                    if (j) os << ' ';
                    os << perm_gens[i][j];
                }
            }
            os << ")";
            break;
        }
        case Kind::MatGens: {
            os << "mat_gens(" << ring << (projective ? ",proj" : "") << ";";
            for (size_t i = 0; i < mat_gens.size(); ++i) {
                if (i) os << '|';
                os << mat_gens[i][0] << ' ' << mat_gens[i][1] << ' ' << mat_gens[i][2] << ' '
                   << mat_gens[i][3];
            }
            os << ")";
            break;
        }
        case Kind::DirectProduct:
        case Kind::Semidirect:
        case Kind::Wreath2:
        case Kind::CentralProduct: {
            const char* names[] = {"direct_product", "semidirect", "wreath2", "central_product"};
            int idx = kind == Kind::DirectProduct ? 0
                      : kind == Kind::Semidirect  ? 1
                      : kind == Kind::Wreath2     ? 2
                                                  : 3;
            os << names[idx] << "(";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << ',';
                os << factors[i].str();
            }
            if (kind == Kind::Semidirect) {
                os << ";act=";
                for (size_t t = 0; t < action.size(); ++t) {
                    if (t) os << '|';
                    for (size_t j = 0; j < action[t].size(); ++j) {
                        if (j) os << ',';
                        for (size_t w = 0; w < action[t][j].size(); ++w) {
                            if (w) os << ' ';
                            os << action[t][j][w];
                        }
                    }
                }
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

}  // namespace h1cube
