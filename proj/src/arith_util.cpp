#include "h1cube/arith_util.hpp"

#include <numeric>

namespace h1cube {

bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::map<unsigned long long, unsigned> factorize(unsigned long long n) {
    std::map<unsigned long long, unsigned> out;
    for (unsigned long long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

std::optional<std::pair<unsigned long long, unsigned>> prime_power(unsigned long long n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f.begin()->first, f.begin()->second);
}

unsigned long long euler_phi(unsigned long long n) {
    unsigned long long out = n;
    for (auto [p, e] : factorize(n)) out = out / p * (p - 1);
    return out;
}

std::vector<unsigned long long> divisors(unsigned long long n) {
    std::vector<unsigned long long> out;
    for (unsigned long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long gcd_ull(unsigned long long a, unsigned long long b) { return std::gcd(a, b); }
unsigned long long lcm_ull(unsigned long long a, unsigned long long b) {
    return a / std::gcd(a, b) * b;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = (__uint128_t)result * base % mod;
        base = (__uint128_t)base * base % mod;
        exp >>= 1;
    }
    return result;
}

uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a % p, p - 2, p); }

uint64_t smallest_primitive_root(uint64_t p) {
    if (p == 2) return 1;
    auto factors = factorize(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [q, e] : factors) {
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 0;  // unreachable for prime p
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
    // Tonelli--Shanks with the smallest non-residue as the auxiliary element.
    uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    uint64_t z = 2;
    while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
    uint64_t m = s;
    uint64_t c = mod_pow(z, q, p);
    uint64_t t = mod_pow(a, q, p);
    uint64_t r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = (__uint128_t)tt * tt % p;
            ++i;
        }
        uint64_t b = mod_pow(c, uint64_t(1) << (m - i - 1), p);
        m = i;
        c = (__uint128_t)b * b % p;
        t = (__uint128_t)t * c % p;
        r = (__uint128_t)r * b % p;
    }
    return r;
}

}  // namespace h1cube
