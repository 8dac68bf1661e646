#include "h1cube/structural.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

using Tag = StructuralPsl2::Tag;

struct RawClass {
    Element rep;
    unsigned order;
    long long size;
    Tag tag;
    long long param;
};

Element mat_pow(const Realization& real, Element x, unsigned long long e) {
    Element out = real.identity();
    while (e) {
        if (e & 1) out = real.mul(out, x);
        x = real.mul(x, x);
        e >>= 1;
    }
    return out;
}

// Invariant key identifying a class among the structural representatives.
// PSL2 (odd q): (order, canonical SL2 trace). Otherwise: (order, tr^2/det,
// split flag) where the flag disambiguates the two involution classes of
// PGL2 for odd q.
struct Classifier {
    Realization real;
    RingPtr R;
    unsigned q, p;
    bool sl_trace;  // PSL2 with odd q
    std::map<std::tuple<unsigned, int, int>, int> lookup;

    // order_hint = 0 computes the order; callers that know ord(x) pass it
    std::tuple<unsigned, int, int> key(const Element& x, unsigned order_hint = 0) const {
        const SmallRing& F = *R;
        Element cx = real.canon(x);
        unsigned ord = order_hint ? order_hint : element_order(real, cx);
        if (ord == 1) return {1, 0, 0};
        const Mat2& M = cx.mat;
        uint16_t tr = F.add(M.a, M.d);
        uint16_t det = F.sub(F.mul(M.a, M.d), F.mul(M.b, M.c));
        if (ord == p) {
            // unipotent; for PSL2 with odd q the two classes are separated by
            // whether the transvection parameter is a square
            if (!sl_trace) return {ord, -1, 0};
            uint16_t s = F.inv(F.sqrt(det));
            Mat2 N{F.mul(M.a, s), F.mul(M.b, s), F.mul(M.c, s), F.mul(M.d, s)};
            if (F.add(N.a, N.d) != F.from_int(2)) {
                N = {F.neg(N.a), F.neg(N.b), F.neg(N.c), F.neg(N.d)};
            }
            N.a = F.sub(N.a, 1);
            N.d = F.sub(N.d, 1);  // N = M - I, rank 1
            uint16_t e0, e1;
            if (N.a || N.c) {
                e0 = N.a;
                e1 = N.c;
            } else {
                e0 = N.b;
                e1 = N.d;
            }
            uint16_t f0, f1;
            if (e0) {
                f0 = 0;
                f1 = F.inv(e0);
            } else {
                f0 = F.neg(F.inv(e1));
                f1 = 0;
            }
            // (M - I) f = K e
            uint16_t d0 = F.add(F.mul(N.a, f0), F.mul(N.b, f1));
            uint16_t d1 = F.add(F.mul(N.c, f0), F.mul(N.d, f1));
            uint16_t K = e0 ? F.mul(d0, F.inv(e0)) : F.mul(d1, F.inv(e1));
            return {ord, -1, F.is_square(K) ? 0 : 1};
        }
        if (sl_trace) {
            uint16_t s = F.inv(F.sqrt(det));
            uint16_t t = F.mul(tr, s);
            uint16_t tc = std::min<uint16_t>(t, F.neg(t));
            return {ord, (int)tc, 0};
        }
        uint16_t jinv = F.mul(F.mul(tr, tr), F.inv(det));
        int split_flag = 0;
        if (ord == 2 && p != 2) {
            // involutions all have trace 0; split iff -det is a square
            split_flag = F.is_square(F.neg(det)) ? 1 : 2;
        }
        return {ord, (int)jinv, split_flag};
    }

    int operator()(const Element& x) const {
        auto it = lookup.find(key(x));
        if (it == lookup.end()) throw Error("structural classifier: unrecognized class invariant");
        return it->second;
    }
};

StructuralPsl2 build_structural(unsigned q, bool pgl) {
    auto pp = prime_power(q);
    if (!pp || q < 3) throw InvalidPrimePower("structural classes: q must be a prime power >= 3");
    unsigned p = static_cast<unsigned>(pp->first), m = pp->second;
    const bool even = (p == 2);

    RingPtr R = SmallRing::gf(q);
    Realization real = Realization::matrix(R, /*projective=*/true);
    const SmallRing& F = *R;

    long long order = (long long)q * (q - 1) * (q + 1);
    if (!pgl && !even) order /= 2;

    // split rotation
    Element s;
    long long S;
    if (pgl) {
        s = real.make_mat_idx(F.generator(), 0, 0, 1);
        S = q - 1;
    } else {
        s = real.make_mat_idx(F.generator(), 0, 0, F.inv(F.generator()));
        S = even ? q - 1 : (q - 1) / 2;
    }
    // non-split rotation via the multiplication matrix of a generator of
    // GF(q^2)^x on the basis (1, beta)
    QuadExt ext(R);
    auto gamma = ext.generator();
    Element Mg;
    {
        uint16_t a = gamma.first, b = gamma.second;
        Mg = real.make_mat_idx(a, F.mul(b, ext.v), b, F.add(a, F.mul(b, ext.u)));
    }
    Element tau = pgl ? Mg : mat_pow(real, Mg, q - 1);
    long long T = pgl ? q + 1 : (even ? q + 1 : (q + 1) / 2);

    if (element_order(real, s) != (unsigned)S && S > 1)
        throw Error("structural classes: split rotation has wrong order");
    if (element_order(real, tau) != (unsigned)T)
        throw Error("structural classes: non-split rotation has wrong order");

    std::vector<RawClass> raw;
    raw.push_back({real.identity(), 1, 1, Tag::Id, 0});

    Element u1 = real.make_mat(1, 1, 0, 1);
    if (!pgl && !even) {
        uint16_t nu = F.nonsquare();
        raw.push_back({u1, p, order / q, Tag::UnipSquare, 1});
        raw.push_back({real.make_mat_idx(1, nu, 0, 1), p, order / q, Tag::UnipNonsquare, nu});
    } else {
        raw.push_back({u1, p, (long long)q * q - 1, Tag::Unip, 1});
    }

    for (long long k = 1; 2 * k <= S; ++k) {
        Element rep = mat_pow(real, s, k);
        unsigned ord = static_cast<unsigned>(S / gcd_ull(k, S));
        long long size = (2 * k == S) ? order / (2 * S) : order / S;
        raw.push_back({rep, ord, size, Tag::Split, k});
    }
    for (long long j = 1; 2 * j <= T; ++j) {
        Element rep = mat_pow(real, tau, j);
        unsigned ord = static_cast<unsigned>(T / gcd_ull(j, T));
        long long size = (2 * j == T) ? order / (2 * T) : order / T;
        raw.push_back({rep, ord, size, Tag::Nonsplit, j});
    }

    long long total = 0;
    for (const auto& c : raw) total += c.size;
    if (total != order) throw Error("structural classes: sizes do not sum to the group order");

    Classifier cls{real, R, q, p, /*sl_trace=*/(!pgl && !even), {}};
    for (int i = 0; i < (int)raw.size(); ++i) {
        auto key = cls.key(raw[i].rep);
        if (std::get<0>(key) != raw[i].order)
            throw Error("structural classes: representative order mismatch");
        if (!cls.lookup.emplace(key, i).second)
            throw Error("structural classes: class invariant collision");
    }

    // canonical ordering: same deterministic rules as the brute-force path
    const int nc = (int)raw.size();
    std::vector<unsigned> orders(nc);
    std::vector<long long> sizes(nc);
    std::vector<std::string> repkeys(nc);
    for (int i = 0; i < nc; ++i) {
        orders[i] = raw[i].order;
        sizes[i] = raw[i].size;
        repkeys[i] = real.key(raw[i].rep);
    }
    // power-class tables, computed once (the refinement below replays them)
    std::vector<std::vector<int>> pow_class(nc);
    for (int i = 0; i < nc; ++i) {
        pow_class[i].assign(raw[i].order + 1, 0);
        Element cur = raw[i].rep;
        pow_class[i][1] = i;
        for (unsigned k = 2; k <= raw[i].order; ++k) {
            cur = real.mul(cur, raw[i].rep);
            unsigned ord = raw[i].order / (unsigned)gcd_ull(k, raw[i].order);
            auto it = cls.lookup.find(cls.key(cur, ord));
            if (it == cls.lookup.end()) throw Error("structural classes: power map failed");
            pow_class[i][k] = it->second;
        }
    }
    auto powcls = [&](int i, unsigned k) { return pow_class[i][k % raw[i].order == 0
                                                                   ? raw[i].order
                                                                   : k % raw[i].order]; };
    std::vector<int> pos = canonical_class_positions(orders, sizes, repkeys, powcls);

    std::vector<ConjugacyClass> classes(nc);
    std::vector<StructuralPsl2::ClassInfo> info(nc);
    for (int i = 0; i < nc; ++i) {
        ConjugacyClass cc;
        cc.rep = raw[i].rep;
        cc.order = raw[i].order;
        cc.size = raw[i].size;
        classes[pos[i]] = std::move(cc);
        info[pos[i]] = {raw[i].tag, raw[i].param};
    }
    std::map<unsigned, int> counter;
    for (auto& c : classes) {
        std::string suffix;
        int k2 = counter[c.order]++;
        do {
            suffix.insert(suffix.begin(), static_cast<char>('a' + k2 % 26));
            k2 = k2 / 26 - 1;
        } while (k2 >= 0);
        c.label = std::to_string(c.order) + suffix;
    }

    // final classifier returns positions in the canonical order
    auto final_lookup = cls;
    for (auto& kv : final_lookup.lookup) kv.second = pos[kv.second];

    std::string name = (pgl ? "PGL(2," : "PSL(2,") + std::to_string(q) + ") [structural]";
    std::vector<Element> gens{s, tau, u1};

    StructuralPsl2 out;
    out.group = FiniteGroup::structural(real, gens, name, order, std::move(classes),
                                        [final_lookup](const Element& x) { return final_lookup(x); });
    out.info = std::move(info);
    out.q = q;
    out.p = p;
    out.m = m;
    out.pgl = pgl;
    out.split_order = S;
    out.nonsplit_order = T;
    out.split_gen = s;
    out.nonsplit_gen = tau;
    out.unip_gen = u1;
    return out;
}

}  // namespace

int StructuralPsl2::class_for(Tag tag, long long param) const {
    for (int i = 0; i < (int)info.size(); ++i)
        if (info[i].tag == tag && info[i].param == param) return i;
    return -1;
}

StructuralPsl2 structural_psl2(unsigned q) { return build_structural(q, /*pgl=*/false); }
StructuralPsl2 structural_pgl2(unsigned q) { return build_structural(q, /*pgl=*/true); }

std::vector<ConjugacyClass> structural_classes_psl2(unsigned q) {
    return structural_psl2(q).group->classes();
}
std::vector<ConjugacyClass> structural_classes_pgl2(unsigned q) {
    return structural_pgl2(q).group->classes();
}

}  // namespace h1cube
