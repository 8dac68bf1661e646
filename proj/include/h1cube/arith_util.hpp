#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace h1cube {

bool is_prime(unsigned long long n);

/// Prime factorization as {prime: multiplicity}, ascending primes.
std::map<unsigned long long, unsigned> factorize(unsigned long long n);

/// Returns (p, m) with n = p^m, or nullopt if n is not a prime power (n >= 2).
std::optional<std::pair<unsigned long long, unsigned>> prime_power(unsigned long long n);

unsigned long long euler_phi(unsigned long long n);

/// Divisors of n in increasing order.
std::vector<unsigned long long> divisors(unsigned long long n);

unsigned long long gcd_ull(unsigned long long a, unsigned long long b);
unsigned long long lcm_ull(unsigned long long a, unsigned long long b);

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);
uint64_t mod_inv(uint64_t a, uint64_t p);  // p prime

/// Smallest primitive root modulo prime p (deterministic).
uint64_t smallest_primitive_root(uint64_t p);

/// Square root of a modulo odd prime p via Tonelli--Shanks; nullopt if a is a non-residue.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p);

}  // namespace h1cube
