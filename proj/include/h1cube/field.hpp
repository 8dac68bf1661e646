#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace h1cube {

/// Finite coefficient ring for 2x2 matrix realizations: either Z/nZ or a
/// finite field GF(p^m) in a fixed polynomial basis. Elements are indices
/// 0..size-1; for GF the index encodes the coefficient vector in base p,
/// so 0 and 1 are always the additive and multiplicative identities.
/// All operations are table lookups; instances are immutable and shared.
class SmallRing {
public:
    enum class Kind { ModN, GF };

    static std::shared_ptr<const SmallRing> zmod(unsigned n);
    static std::shared_ptr<const SmallRing> gf(unsigned q);

    Kind kind() const { return kind_; }
    unsigned size() const { return q_; }
    unsigned char_p() const { return p_; }  // GF only; ModN returns n
    unsigned ext_degree() const { return m_; }

    uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add_[a * q_ + neg_[b]]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    bool is_unit(uint16_t a) const { return inv_[a] != 0 || (a == 1); }
    uint16_t inv(uint16_t a) const { return inv_[a]; }  // 0 if not a unit

    uint16_t from_int(long long v) const;
    uint16_t pow(uint16_t a, unsigned long long e) const;

    /// GF only: a fixed generator of the multiplicative group (deterministic).
    uint16_t generator() const { return generator_; }
    /// GF only.
    bool is_square(uint16_t a) const;
    /// GF only: smallest non-square by index (odd q).
    uint16_t nonsquare() const { return nonsquare_; }
    /// GF only: a square root of a, 0 allowed; requires is_square(a).
    uint16_t sqrt(uint16_t a) const { return sqrt_[a]; }

    const std::string& name() const { return name_; }

private:
    SmallRing() = default;

    Kind kind_ = Kind::ModN;
    unsigned q_ = 0, p_ = 0, m_ = 1;
    std::vector<uint16_t> add_, mul_, neg_, inv_, sqrt_;
    uint16_t generator_ = 0, nonsquare_ = 0;
    std::string name_;
};

using RingPtr = std::shared_ptr<const SmallRing>;

/// Quadratic extension GF(q)[x]/(x^2 - u*x - v) used to realize the
/// non-split torus: elements are pairs (a, b) = a + b*beta over GF(q).
struct QuadExt {
    RingPtr base;
    uint16_t u = 0, v = 0;  // beta^2 = u*beta + v, x^2 - u*x - v irreducible

    explicit QuadExt(RingPtr gf_base);

    using E = std::pair<uint16_t, uint16_t>;
    E one() const { return {1, 0}; }
    E mul(E x, E y) const;
    E pow(E x, unsigned long long e) const;
    bool is_one(E x) const { return x.first == 1 && x.second == 0; }
    /// Deterministic generator of the multiplicative group (order q^2-1).
    E generator() const;
};

}  // namespace h1cube
