#include "h1cube/field.hpp"

#include <map>
#include <mutex>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

constexpr unsigned kMaxRingSize = 1024;

std::mutex g_ring_mu;
std::map<std::pair<int, unsigned>, RingPtr> g_ring_cache;

using Poly = std::vector<unsigned>;  // coefficients mod p, ascending

Poly poly_from_index(unsigned idx, unsigned p, unsigned m) {
    Poly c(m);
    for (unsigned i = 0; i < m; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

unsigned poly_to_index(const Poly& c, unsigned p) {
    unsigned idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
}

// Remainder of a modulo monic f over F_p.
Poly poly_mod(Poly a, const Poly& f, unsigned p) {
    const size_t m = f.size() - 1;
    while (a.size() > m) {
        unsigned lead = a.back();
        size_t shift = a.size() - 1 - m;
        if (lead != 0)
            for (size_t j = 0; j <= m; ++j)
                a[shift + j] = (a[shift + j] + (p - 1) * lead % p * f[j]) % p;
        a.pop_back();
    }
    a.resize(m, 0);
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), f, p);
}

bool poly_is_zero(const Poly& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

// Plain long division check: does monic g divide monic-ish a over F_p?
bool poly_divides(const Poly& g, Poly a, unsigned p) {
    unsigned glead_inv = 1;
    {
        unsigned lead = g.back();
        for (unsigned x = 1; x < p; ++x)
            if (lead * x % p == 1) glead_inv = x;
    }
    while (a.size() >= g.size() && !poly_is_zero(a)) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() < g.size()) break;
        unsigned coef = a.back() * glead_inv % p;
        size_t shift = a.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j)
            a[shift + j] = (a[shift + j] + (p - coef) * g[j]) % p;
    }
    return poly_is_zero(a);
}

// Deterministic search for a monic irreducible of degree m over F_p:
// smallest constant-part encoding first.
Poly find_irreducible(unsigned p, unsigned m) {
    unsigned pm = 1;
    for (unsigned i = 0; i < m; ++i) pm *= p;
    for (unsigned low = 0; low < pm; ++low) {
        Poly f = poly_from_index(low, p, m);
        f.push_back(1);  // monic x^m + ...
        // roots in F_p rule out linear factors
        bool has_root = false;
        for (unsigned x = 0; x < p && !has_root; ++x) {
            unsigned val = 0, xp = 1;
            for (unsigned i = 0; i <= m; ++i) {
                val = (val + f[i] * xp) % p;
                xp = xp * x % p;
            }
            if (val == 0) has_root = true;
        }
        if (has_root) continue;
        if (m <= 3) return f;
        bool reducible = false;
        for (unsigned d = 2; d <= m / 2 && !reducible; ++d) {
            unsigned pd = 1;
            for (unsigned i = 0; i < d; ++i) pd *= p;
            for (unsigned low2 = 0; low2 < pd && !reducible; ++low2) {
                Poly g = poly_from_index(low2, p, d);
                g.push_back(1);
                if (poly_divides(g, f, p)) reducible = true;
            }
        }
        if (!reducible) return f;
    }
    throw Error("find_irreducible: exhausted search space");
}

}  // namespace

RingPtr SmallRing::zmod(unsigned n) {
    if (n < 2 || n > kMaxRingSize) throw InvalidInput("SmallRing::zmod: n out of range");
    std::lock_guard lock(g_ring_mu);
    auto key = std::make_pair(0, n);
    if (auto it = g_ring_cache.find(key); it != g_ring_cache.end()) return it->second;

    auto ring = std::shared_ptr<SmallRing>(new SmallRing());
    ring->kind_ = Kind::ModN;
    ring->q_ = n;
    ring->p_ = n;
    ring->m_ = 1;
    ring->name_ = "Z/" + std::to_string(n);
    ring->add_.resize(n * n);
    ring->mul_.resize(n * n);
    ring->neg_.resize(n);
    ring->inv_.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        ring->neg_[a] = static_cast<uint16_t>((n - a) % n);
        for (unsigned b = 0; b < n; ++b) {
            ring->add_[a * n + b] = static_cast<uint16_t>((a + b) % n);
            ring->mul_[a * n + b] = static_cast<uint16_t>(a * b % n);
            if (a * b % n == 1) ring->inv_[a] = static_cast<uint16_t>(b);
        }
    }
    g_ring_cache[key] = ring;
    return ring;
}

RingPtr SmallRing::gf(unsigned q) {
    auto pp = prime_power(q);
    if (!pp || q > kMaxRingSize) throw InvalidPrimePower("SmallRing::gf: q must be a prime power");
    std::lock_guard lock(g_ring_mu);
    auto key = std::make_pair(1, q);
    if (auto it = g_ring_cache.find(key); it != g_ring_cache.end()) return it->second;

    unsigned p = static_cast<unsigned>(pp->first), m = pp->second;
    auto ring = std::shared_ptr<SmallRing>(new SmallRing());
    ring->kind_ = Kind::GF;
    ring->q_ = q;
    ring->p_ = p;
    ring->m_ = m;
    ring->name_ = "GF(" + std::to_string(q) + ")";
    Poly f = (m == 1) ? Poly{0, 1} : find_irreducible(p, m);

    ring->add_.resize(q * q);
    ring->mul_.resize(q * q);
    ring->neg_.resize(q);
    ring->inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        Poly pa = poly_from_index(a, p, m);
        Poly na(m);
        for (unsigned i = 0; i < m; ++i) na[i] = (p - pa[i]) % p;
        ring->neg_[a] = static_cast<uint16_t>(poly_to_index(na, p));
        for (unsigned b = 0; b < q; ++b) {
            Poly pb = poly_from_index(b, p, m);
            Poly s(m);
            for (unsigned i = 0; i < m; ++i) s[i] = (pa[i] + pb[i]) % p;
            ring->add_[a * q + b] = static_cast<uint16_t>(poly_to_index(s, p));
            if (a && b) {
                Poly prod = poly_mul_mod(pa, pb, f, p);
                unsigned idx = poly_to_index(prod, p);
                ring->mul_[a * q + b] = static_cast<uint16_t>(idx);
                if (idx == 1) ring->inv_[a] = static_cast<uint16_t>(b);
            } else {
                ring->mul_[a * q + b] = 0;
            }
        }
    }
    // deterministic multiplicative generator: smallest index of full order
    auto fac = factorize(q - 1);
    for (unsigned g = 1; g < q; ++g) {
        bool ok = true;
        for (auto [l, e] : fac)
            if (ring->pow(static_cast<uint16_t>(g), (q - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            ring->generator_ = static_cast<uint16_t>(g);
            break;
        }
    }
    // squares, square roots, smallest nonsquare
    ring->sqrt_.assign(q, 0);
    std::vector<bool> seen(q, false);
    for (unsigned a = 0; a < q; ++a) {
        unsigned sq = ring->mul(static_cast<uint16_t>(a), static_cast<uint16_t>(a));
        if (!seen[sq]) {
            seen[sq] = true;
            ring->sqrt_[sq] = static_cast<uint16_t>(a);
        }
    }
    for (unsigned a = 1; a < q; ++a)
        if (!seen[a]) {
            ring->nonsquare_ = static_cast<uint16_t>(a);
            break;
        }
    g_ring_cache[key] = ring;
    return ring;
}

uint16_t SmallRing::from_int(long long v) const {
    long long base = (kind_ == Kind::GF) ? p_ : q_;
    long long r = ((v % base) + base) % base;
    return static_cast<uint16_t>(r);
}

uint16_t SmallRing::pow(uint16_t a, unsigned long long e) const {
    uint16_t result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

bool SmallRing::is_square(uint16_t a) const {
    if (a == 0) return true;
    if (p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

QuadExt::QuadExt(RingPtr gf_base) : base(std::move(gf_base)) {
    const unsigned q = base->size();
    bool found = false;
    for (unsigned uu = 0; uu < q && !found; ++uu) {
        for (unsigned vv = 0; vv < q && !found; ++vv) {
            // irreducible iff x^2 - u x - v has no root in GF(q)
            bool has_root = false;
            for (unsigned x = 0; x < q; ++x) {
                uint16_t lhs = base->mul(static_cast<uint16_t>(x), static_cast<uint16_t>(x));
                uint16_t rhs = base->add(base->mul(static_cast<uint16_t>(uu), static_cast<uint16_t>(x)),
                                         static_cast<uint16_t>(vv));
                if (lhs == rhs) {
                    has_root = true;
                    break;
                }
            }
            if (!has_root) {
                u = static_cast<uint16_t>(uu);
                v = static_cast<uint16_t>(vv);
                found = true;
            }
        }
    }
    if (!found) throw Error("QuadExt: no irreducible quadratic found");
}

QuadExt::E QuadExt::mul(E x, E y) const {
    // (a + b B)(c + d B) = ac + bd v + (ad + bc + bd u) B
    const auto& R = *base;
    uint16_t a = x.first, b = x.second, c = y.first, d = y.second;
    uint16_t bd = R.mul(b, d);
    uint16_t re = R.add(R.mul(a, c), R.mul(bd, v));
    uint16_t im = R.add(R.add(R.mul(a, d), R.mul(b, c)), R.mul(bd, u));
    return {re, im};
}

QuadExt::E QuadExt::pow(E x, unsigned long long e) const {
    E result = one();
    while (e) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

QuadExt::E QuadExt::generator() const {
    const unsigned q = base->size();
    const unsigned long long n = (unsigned long long)q * q - 1;
    auto fac = factorize(n);
    for (unsigned idx = 1; idx < q * q; ++idx) {
        E cand{static_cast<uint16_t>(idx % q), static_cast<uint16_t>(idx / q)};
        if (cand.second == 0) continue;  // base-field elements never generate
        bool ok = true;
        for (auto [l, e] : fac)
            if (is_one(pow(cand, n / l))) {
                ok = false;
                break;
            }
        if (ok) return cand;
    }
    throw Error("QuadExt: no generator found");
}

}  // namespace h1cube
