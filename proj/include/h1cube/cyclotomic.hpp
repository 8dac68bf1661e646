#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "h1cube/numbers.hpp"

namespace h1cube {

/// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic,
/// computed by dividing x^n - 1 by Phi_d over all proper divisors d | n.
std::vector<BigInt> cyclotomic_polynomial(unsigned n);

/// Exact element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1)
/// reduced modulo Phi_n. The representation is canonical per conductor;
/// elements of different conductors compare equal after lifting to the lcm.
/// Values are immutable; all operations are pure.
class Cyclotomic {
public:
    Cyclotomic();  // zero at conductor 1
    explicit Cyclotomic(const BigRational& r);
    explicit Cyclotomic(long long n) : Cyclotomic(BigRational(n)) {}

    static Cyclotomic zeta(unsigned n, long long k = 1);
    /// Builds from raw power-basis coefficients (must have length phi(n)).
    static Cyclotomic from_coeffs(unsigned n, std::vector<BigRational> coeffs);

    unsigned conductor() const { return n_; }
    const std::vector<BigRational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<BigRational> try_rational() const;

    Cyclotomic conj() const;  // zeta_n -> zeta_n^(-1)
    Cyclotomic pow(unsigned long long k) const;
    Cyclotomic lifted_to(unsigned n) const;  // conductor() | n required

    /// Float evaluation at zeta_n = exp(2*pi*i/n); advisory only.
    std::complex<double> to_complex() const;

    std::string str() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    Cyclotomic scaled(const BigRational& r) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

private:
    unsigned n_ = 1;
    std::vector<BigRational> c_;  // length phi(n_)
};

inline Cyclotomic operator*(const BigRational& r, const Cyclotomic& a) { return a.scaled(r); }

}  // namespace h1cube
