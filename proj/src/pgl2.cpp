#include "h1cube/pgl2.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <cstring>
#include <sstream>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"
#include "h1cube/group_build.hpp"

namespace h1cube {

namespace {

long long normalize_exponent(long long k, long long modulus) {
    k %= modulus;
    if (k < 0) k += modulus;
    return std::min(k, modulus - k);
}

int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::string GenericRepLabel::str() const {
    switch (kind) {
        case Kind::PrincipalSeries: return "ps:" + std::to_string(exponent);
        case Kind::SteinbergTwist: return "st:" + std::to_string(exponent);
        case Kind::Cuspidal: return "cusp:" + std::to_string(exponent);
    }
    return "?";
}

GenericRepLabel make_principal_series(unsigned q, long long exponent) {
    long long m = normalize_exponent(exponent, q - 1);
    if (m == 0 || 2 * m == (long long)q - 1)
        throw InvalidInput("principal series requires eta != eta^{-1}");
    return {GenericRepLabel::Kind::PrincipalSeries, m};
}

GenericRepLabel make_steinberg_twist(unsigned q, int quadratic) {
    if (quadratic != 0 && quadratic != 1)
        throw InvalidInput("steinberg twist parameter must be 0 or 1");
    if (quadratic == 1 && q % 2 == 0)
        throw InvalidInput("even q has no nontrivial quadratic character");
    return {GenericRepLabel::Kind::SteinbergTwist, quadratic};
}

GenericRepLabel make_cuspidal(unsigned q, long long exponent) {
    long long m = normalize_exponent(exponent, q + 1);
    if (m == 0 || 2 * m == (long long)q + 1)
        throw InvalidInput("cuspidal requires chi != chi^{-1}");
    return {GenericRepLabel::Kind::Cuspidal, m};
}

Pgl2Theory::Pgl2Theory(unsigned q) : q_(q), G_(structural_pgl2(q)) {
    if (q < 4) throw InvalidInput("Pgl2Theory requires q >= 4");
    const bool odd = (q % 2 == 1);

    for (long long m = 1; 2 * m < (long long)q - 1; ++m)
        if (2 * m % (long long)(q - 1) != 0)
            labels_.push_back({GenericRepLabel::Kind::PrincipalSeries, m});
    labels_.push_back({GenericRepLabel::Kind::SteinbergTwist, 0});
    if (odd) labels_.push_back({GenericRepLabel::Kind::SteinbergTwist, 1});
    for (long long m = 1; 2 * m < (long long)q + 1; ++m)
        labels_.push_back({GenericRepLabel::Kind::Cuspidal, m});

    // full irreducible table: one-dimensional eta o det plus the generic rows
    std::vector<ClassFunction> rows;
    rows.push_back(trivial_character(G_.group));
    if (odd) {
        ClassFunction f;
        f.group = G_.group;
        f.values.resize(G_.group->class_count());
        for (int c = 0; c < G_.group->class_count(); ++c) {
            const auto& in = G_.info[c];
            switch (in.tag) {
                case StructuralPsl2::Tag::Split:
                    f.values[c] = Cyclotomic(sign_pow(in.param));
                    break;
                case StructuralPsl2::Tag::Nonsplit:
                    f.values[c] = Cyclotomic(sign_pow(in.param));
                    break;
                default:
                    f.values[c] = Cyclotomic(1);
            }
        }
        rows.push_back(std::move(f));
    }
    for (const auto& l : labels_) rows.push_back(build_generic_character(l));

    std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
        auto da = a.degree().try_rational(), db = b.degree().try_rational();
        if (*da != *db) return *da < *db;
        for (size_t i = 0; i < a.values.size(); ++i) {
            std::string sa = a.values[i].str(), sb = b.values[i].str();
            if (sa != sb) return sa < sb;
        }
        return false;
    });
    table_.group = G_.group;
    table_.irreducibles = std::move(rows);
    if ((int)table_.irreducibles.size() != G_.group->class_count())
        throw TableInconsistent("pgl2_table: row count does not match class count");
    if (q <= 13) table_.verify();

    for (const auto& l : labels_) {
        ClassFunction f = build_generic_character(l);
        for (int i = 0; i < table_.size(); ++i)
            if (table_.irreducibles[i] == f) {
                row_of_label_[l] = i;
                break;
            }
    }
    if (row_of_label_.size() != labels_.size())
        throw TableInconsistent("pgl2_table: generic rows not found in the table");

    // abstract dihedral normalizers: rotations = S (order q-1) / T (order q+1)
    GroupSpec ds;
    ds.kind = GroupSpec::Kind::Dihedral;
    ds.n = q - 1;
    sprime_ = build_group(ds);
    GroupSpec dt;
    dt.kind = GroupSpec::Kind::Dihedral;
    dt.n = q + 1;
    tprime_ = build_group(dt);

    auto rotation_map = [](const GroupPtr& D, unsigned m, std::vector<int>& rot,
                           std::vector<int>& refl) {
        const Realization& real = D->realization();
        std::vector<uint16_t> r(m), s(m);
        for (unsigned i = 0; i < m; ++i) {
            r[i] = static_cast<uint16_t>((i + 1) % m);
            s[i] = static_cast<uint16_t>((m - i) % m);
        }
        Element rot_g = real.make_perm(r), refl_g = real.make_perm(s);
        rot.resize(m);
        refl.resize(m);
        Element cur = real.identity();
        for (unsigned k = 0; k < m; ++k) {
            rot[k] = D->class_of(cur);
            refl[k] = D->class_of(real.mul(refl_g, cur));
            cur = real.mul(rot_g, cur);
        }
    };
    rotation_map(sprime_, q - 1, rot_class_s_, refl_class_s_);
    rotation_map(tprime_, q + 1, rot_class_t_, refl_class_t_);
}

ClassFunction Pgl2Theory::build_generic_character(const GenericRepLabel& label) const {
    ClassFunction f;
    f.group = G_.group;
    f.values.resize(G_.group->class_count());
    for (int c = 0; c < G_.group->class_count(); ++c) {
        const auto& in = G_.info[c];
        Cyclotomic v;
        switch (label.kind) {
            case GenericRepLabel::Kind::PrincipalSeries: {
                long long m = label.exponent;
                switch (in.tag) {
                    case StructuralPsl2::Tag::Id: v = Cyclotomic((long long)q_ + 1); break;
                    case StructuralPsl2::Tag::Unip: v = Cyclotomic(1); break;
                    case StructuralPsl2::Tag::Split:
                        v = Cyclotomic::zeta(q_ - 1, m * in.param) +
                            Cyclotomic::zeta(q_ - 1, -m * in.param);
                        break;
                    default: v = Cyclotomic(0);
                }
                break;
            }
            case GenericRepLabel::Kind::SteinbergTwist: {
                long long e = label.exponent;
                switch (in.tag) {
                    case StructuralPsl2::Tag::Id: v = Cyclotomic((long long)q_); break;
                    case StructuralPsl2::Tag::Unip: v = Cyclotomic(0); break;
                    case StructuralPsl2::Tag::Split:
                        v = Cyclotomic(sign_pow(e * in.param));
                        break;
                    case StructuralPsl2::Tag::Nonsplit:
                        v = Cyclotomic(-sign_pow(e * in.param));
                        break;
                    default: break;
                }
                break;
            }
            case GenericRepLabel::Kind::Cuspidal: {
                long long m = label.exponent;
                switch (in.tag) {
                    case StructuralPsl2::Tag::Id: v = Cyclotomic((long long)q_ - 1); break;
                    case StructuralPsl2::Tag::Unip: v = Cyclotomic(-1); break;
                    case StructuralPsl2::Tag::Nonsplit:
                        v = -(Cyclotomic::zeta(q_ + 1, m * in.param) +
                              Cyclotomic::zeta(q_ + 1, -m * in.param));
                        break;
                    default: v = Cyclotomic(0);
                }
                break;
            }
        }
        f.values[c] = std::move(v);
    }
    return f;
}

const ClassFunction& Pgl2Theory::character_of(const GenericRepLabel& label) const {
    auto it = row_of_label_.find(label);
    if (it == row_of_label_.end()) throw InvalidInput("unknown generic label " + label.str());
    return table_.irreducibles[it->second];
}

TransferredRep Pgl2Theory::transfer(const GenericRepLabel& label,
                                    TransferredRep::Target target) const {
    const bool to_s = (target == TransferredRep::Target::SPrime);
    const GroupPtr& D = to_s ? sprime_ : tprime_;
    const unsigned m = to_s ? q_ - 1 : q_ + 1;
    const auto& rot = to_s ? rot_class_s_ : rot_class_t_;
    const auto& refl = to_s ? refl_class_s_ : refl_class_t_;

    TransferredRep out;
    out.target = target;
    if ((label.kind == GenericRepLabel::Kind::PrincipalSeries && !to_s) ||
        (label.kind == GenericRepLabel::Kind::Cuspidal && to_s)) {
        out.zero = true;
        return out;
    }
    ClassFunction f;
    f.group = D;
    f.values.assign(D->class_count(), Cyclotomic());
    if (label.kind == GenericRepLabel::Kind::SteinbergTwist) {
        // eta o det restricted to the normalizer; eta0(-1) = (-1)^((q-1)/2)
        long long e = label.exponent;
        int eta_minus1 = (e == 1 && ((q_ - 1) / 2) % 2 == 1) ? -1 : 1;
        for (unsigned k = 0; k < m; ++k) {
            f.values[rot[k]] = Cyclotomic(sign_pow(e * k));
            f.values[refl[k]] = Cyclotomic(eta_minus1 * sign_pow(e * k));
        }
    } else {
        // Ind from the rotation subgroup: zeta^{mk} + zeta^{-mk} on rotations,
        // zero on reflections
        long long expo = label.exponent;
        for (unsigned k = 0; k < m; ++k)
            f.values[rot[k]] =
                Cyclotomic::zeta(m, expo * k) + Cyclotomic::zeta(m, -expo * (long long)k);
        for (unsigned k = 0; k < m; ++k)
            if (f.values[refl[k]].is_zero()) f.values[refl[k]] = Cyclotomic(0);
    }
    out.character = std::move(f);
    return out;
}

long long Pgl2Theory::m_H_G(const GenericRepLabel& a, const GenericRepLabel& b,
                            const GenericRepLabel& c) const {
    return triple_invariant_dim(character_of(a), character_of(b), character_of(c));
}

long long Pgl2Theory::m_H_dihedral(const GenericRepLabel& a, const GenericRepLabel& b,
                                   const GenericRepLabel& c,
                                   TransferredRep::Target target) const {
    TransferredRep ta = transfer(a, target), tb = transfer(b, target), tc = transfer(c, target);
    if (ta.zero || tb.zero || tc.zero) return 0;
    return triple_invariant_dim(ta.character, tb.character, tc.character);
}

Cyclotomic Pgl2Theory::value_at_split(const ClassFunction& f, long long k) const {
    Element s = G_.split_gen;
    Element cur = G_.group->identity();
    long long kk = ((k % (long long)(q_ - 1)) + (q_ - 1)) % (q_ - 1);
    for (long long i = 0; i < kk; ++i) cur = G_.group->mul(cur, s);
    return f.values[G_.group->class_of(cur)];
}

Cyclotomic Pgl2Theory::value_at_nonsplit(const ClassFunction& f, long long j) const {
    Element t = G_.nonsplit_gen;
    Element cur = G_.group->identity();
    long long jj = ((j % (long long)(q_ + 1)) + (q_ + 1)) % (q_ + 1);
    for (long long i = 0; i < jj; ++i) cur = G_.group->mul(cur, t);
    return f.values[G_.group->class_of(cur)];
}

Cyclotomic Pgl2Theory::dihedral_rotation_value(const TransferredRep& rep, long long k) const {
    if (rep.zero) return Cyclotomic(0);
    const bool to_s = (rep.target == TransferredRep::Target::SPrime);
    const auto& rot = to_s ? rot_class_s_ : rot_class_t_;
    long long m = to_s ? q_ - 1 : q_ + 1;
    long long kk = ((k % m) + m) % m;
    return rep.character.values[rot[kk]];
}

namespace {
std::mutex g_pgl2_mu;
std::map<unsigned, std::shared_ptr<const Pgl2Theory>> g_pgl2_memo;
}  // namespace

std::shared_ptr<const Pgl2Theory> Pgl2Theory::get(unsigned q) {
    std::lock_guard lock(g_pgl2_mu);
    auto it = g_pgl2_memo.find(q);
    if (it != g_pgl2_memo.end()) return it->second;
    auto th = std::make_shared<Pgl2Theory>(q);
    g_pgl2_memo.emplace(q, th);
    return th;
}

long long m_H(unsigned q, const GenericRepLabel& a, const GenericRepLabel& b,
              const GenericRepLabel& c, const std::string& H) {
    auto th = Pgl2Theory::get(q);
    if (H == "G") return th->m_H_G(a, b, c);
    if (H == "S'") return th->m_H_dihedral(a, b, c, TransferredRep::Target::SPrime);
    if (H == "T'") return th->m_H_dihedral(a, b, c, TransferredRep::Target::TPrime);
    throw InvalidInput("m_H: H must be one of G, S', T'");
}

namespace {

const char* kind_word(GenericRepLabel::Kind k) {
    switch (k) {
        case GenericRepLabel::Kind::PrincipalSeries: return "ps";
        case GenericRepLabel::Kind::SteinbergTwist: return "st";
        case GenericRepLabel::Kind::Cuspidal: return "cusp";
    }
    return "?";
}

}  // namespace

TrilinearReport verify_trilinear(unsigned q) {
    auto th = Pgl2Theory::get(q);
    const auto& labels = th->generic_labels();
    TrilinearReport report;
    report.q = q;
    const size_t n = labels.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) {
                const auto &a = labels[i], &b = labels[j], &c = labels[k];
                long long mg = th->m_H_G(a, b, c);
                long long ms = th->m_H_dihedral(a, b, c, TransferredRep::Target::SPrime);
                long long mt = th->m_H_dihedral(a, b, c, TransferredRep::Target::TPrime);
                ++report.triples_checked;
                std::array<const char*, 3> kinds{kind_word(a.kind), kind_word(b.kind),
                                                 kind_word(c.kind)};
                std::sort(kinds.begin(), kinds.end(),
                          [](const char* x, const char* y) { return std::strcmp(x, y) < 0; });
                std::string pattern =
                    std::string(kinds[0]) + "+" + kinds[1] + "+" + kinds[2];
                ++report.pattern_counts[pattern];
                TrilinearSample sample{a.str() + "," + b.str() + "," + c.str(), mg, ms, mt};
                if (mg - ms + mt != 1) report.violations.push_back(sample);
                if (report.samples.size() < 5 || mg != 1 || ms != 0 || mt != 0)
                    if (report.samples.size() < 24) report.samples.push_back(sample);
            }
    return report;
}

// ------------------------------------------------ 4-variable identity check

namespace {

using Mono = std::array<int, 4>;  // exponents of (q, x1, x2, x3)
using MPoly = std::map<Mono, BigRational>;

MPoly mono(const BigRational& c, int eq, int e1, int e2, int e3) {
    MPoly p;
    if (c != 0) p[{eq, e1, e2, e3}] = c;
    return p;
}

MPoly add(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [m, c] : b) {
        out[m] += c;
        if (out[m] == 0) out.erase(m);
    }
    return out;
}

MPoly mul(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
            out[m] += ca * cb;
            if (out[m] == 0) out.erase(m);
        }
    return out;
}

MPoly constant(long long c) { return mono(BigRational(c), 0, 0, 0, 0); }
MPoly var(int which) {
    return mono(BigRational(1), which == 0, which == 1, which == 2, which == 3);
}

}  // namespace

bool verify_identity_polynomial() {
    // (q+x1)(q+x2)(q+x3)/((q-1)q(q+1)) + x1x2x3/q
    //   - (1+x1)(1+x2)(1+x3)/(2(q-1)) + (1-x1)(1-x2)(1-x3)/(2(q+1)) = 1
    // cleared by 2(q-1)q(q+1):
    MPoly Q = var(0), X1 = var(1), X2 = var(2), X3 = var(3);
    MPoly qm1 = add(Q, constant(-1)), qp1 = add(Q, constant(1));
    MPoly lhs = mul(constant(2), mul(add(Q, X1), mul(add(Q, X2), add(Q, X3))));
    lhs = add(lhs, mul(constant(2), mul(qm1, mul(qp1, mul(X1, mul(X2, X3))))));
    MPoly ones = mul(add(constant(1), X1), mul(add(constant(1), X2), add(constant(1), X3)));
    lhs = add(lhs, mul(constant(-1), mul(Q, mul(qp1, ones))));
    MPoly alt = mul(add(constant(1), mul(constant(-1), X1)),
                    mul(add(constant(1), mul(constant(-1), X2)),
                        add(constant(1), mul(constant(-1), X3))));
    lhs = add(lhs, mul(Q, mul(qm1, alt)));
    MPoly rhs = mul(constant(2), mul(qm1, mul(Q, qp1)));
    return add(lhs, mul(constant(-1), rhs)).empty();
}

BigRational identity_lhs_value(const BigRational& q, const BigRational& x1,
                               const BigRational& x2, const BigRational& x3) {
    BigRational a = (q + x1) * (q + x2) * (q + x3) / ((q - 1) * q * (q + 1));
    BigRational b = x1 * x2 * x3 / q;
    BigRational c = (1 + x1) * (1 + x2) * (1 + x3) / (2 * (q - 1));
    BigRational d = (1 - x1) * (1 - x2) * (1 - x3) / (2 * (q + 1));
    return a + b - c + d;
}

}  // namespace h1cube
