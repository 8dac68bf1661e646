#include "h1cube/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "h1cube/arith_util.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

using Zpoly = std::vector<BigInt>;  // ascending degree

void trim(Zpoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; the remainder must vanish.
Zpoly zdiv_exact(Zpoly a, const Zpoly& b) {
    if (a.size() < b.size()) {
        trim(a);
        if (!a.empty()) throw Error("zdiv_exact: nonzero remainder");
        return {};
    }
    Zpoly q(a.size() - b.size() + 1);
    for (size_t shift = q.size(); shift-- > 0;) {
        BigInt coef = a[shift + b.size() - 1];
        q[shift] = coef;
        if (coef != 0)
            for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= coef * b[j];
    }
    trim(a);
    if (!a.empty()) throw Error("zdiv_exact: nonzero remainder");
    trim(q);
    return q;
}

std::mutex g_mu;
std::map<unsigned, Zpoly> g_phi;
// x^k mod Phi_n for k = 0 .. max(2*phi(n)-2, n-1); integer coefficients.
std::map<unsigned, std::vector<Zpoly>> g_powers;

const Zpoly& phi_poly_locked(unsigned n) {
    auto it = g_phi.find(n);
    if (it != g_phi.end()) return it->second;
    // x^n - 1 divided by all Phi_d for proper divisors d of n.
    Zpoly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (auto d : divisors(n)) {
        if (d == n) continue;
        num = zdiv_exact(num, phi_poly_locked(static_cast<unsigned>(d)));
    }
    return g_phi.emplace(n, std::move(num)).first->second;
}

const std::vector<Zpoly>& power_table_locked(unsigned n) {
    auto it = g_powers.find(n);
    if (it != g_powers.end()) return it->second;
    const Zpoly& phi = phi_poly_locked(n);
    const size_t deg = phi.size() - 1;  // = euler_phi(n)
    size_t maxk = std::max<size_t>(2 * deg, n) + 1;
    std::vector<Zpoly> tab;
    tab.reserve(maxk);
    tab.push_back(Zpoly{1});
    for (size_t k = 1; k < maxk; ++k) {
        Zpoly next(deg + 1);
        const Zpoly& prev = tab.back();
        for (size_t i = 0; i < prev.size(); ++i) next[i + 1] = prev[i];
        if (next.size() > deg && next[deg] != 0) {
            BigInt lead = next[deg];
            for (size_t i = 0; i < phi.size(); ++i) next[i] -= lead * phi[i];
        }
        next.resize(deg);
        tab.push_back(std::move(next));
    }
    return g_powers.emplace(n, std::move(tab)).first->second;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(unsigned n) {
    if (n < 1) throw InvalidInput("cyclotomic_polynomial: n must be >= 1");
    std::lock_guard lock(g_mu);
    return phi_poly_locked(n);
}

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}

Cyclotomic::Cyclotomic(const BigRational& r) : n_(1), c_{r} {}

Cyclotomic Cyclotomic::from_coeffs(unsigned n, std::vector<BigRational> coeffs) {
    if (n < 1) throw InvalidInput("Cyclotomic: conductor must be >= 1");
    if (coeffs.size() != euler_phi(n))
        throw InvalidInput("Cyclotomic: coefficient vector must have length phi(n)");
    Cyclotomic out;
    out.n_ = n;
    out.c_ = std::move(coeffs);
    return out;
}

Cyclotomic Cyclotomic::zeta(unsigned n, long long k) {
    if (n < 1) throw InvalidInput("zeta: conductor must be >= 1");
    long long kk = ((k % (long long)n) + n) % (long long)n;
    std::lock_guard lock(g_mu);
    const auto& tab = power_table_locked(n);
    const Zpoly& pw = tab[(size_t)kk];
    std::vector<BigRational> c(euler_phi(n));
    for (size_t i = 0; i < pw.size(); ++i) c[i] = BigRational(pw[i]);
    Cyclotomic out;
    out.n_ = n;
    out.c_ = std::move(c);
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigRational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<BigRational> Cyclotomic::try_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

Cyclotomic Cyclotomic::lifted_to(unsigned n) const {
    if (n == n_) return *this;
    if (n % n_ != 0) throw InvalidInput("lifted_to: target conductor must be a multiple");
    if (n > 2000000) throw InvalidInput("lifted_to: conductor too large");
    unsigned step = n / n_;
    std::lock_guard lock(g_mu);
    const auto& tab = power_table_locked(n);
    std::vector<BigRational> out(euler_phi(n));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const Zpoly& pw = tab[i * step];
        for (size_t j = 0; j < pw.size(); ++j)
            if (pw[j] != 0) out[j] += c_[i] * BigRational(pw[j]);
    }
    Cyclotomic r;
    r.n_ = n;
    r.c_ = std::move(out);
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned n = (unsigned)lcm_ull(a.n_, b.n_);
    Cyclotomic x = a.lifted_to(n), y = b.lifted_to(n);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned n = (unsigned)lcm_ull(a.n_, b.n_);
    Cyclotomic x = a.lifted_to(n), y = b.lifted_to(n);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
}

Cyclotomic Cyclotomic::scaled(const BigRational& r) const {
    Cyclotomic x = *this;
    for (auto& v : x.c_) v *= r;
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    // Rational fast paths keep conductors small through long summations.
    if (a.is_rational()) return b.scaled(a.c_[0]);
    if (b.is_rational()) return a.scaled(b.c_[0]);
    unsigned n = (unsigned)lcm_ull(a.n_, b.n_);
    Cyclotomic x = a.lifted_to(n), y = b.lifted_to(n);
    size_t deg = x.c_.size();
    std::vector<BigRational> prod(2 * deg - 1);
    for (size_t i = 0; i < deg; ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (y.c_[j] == 0) continue;
            prod[i + j] += x.c_[i] * y.c_[j];
        }
    }
    std::lock_guard lock(g_mu);
    const auto& tab = power_table_locked(n);
    std::vector<BigRational> out(deg);
    for (size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < deg) {
            out[k] += prod[k];
        } else {
            const auto& pw = tab[k];
            for (size_t j = 0; j < pw.size(); ++j)
                if (pw[j] != 0) out[j] += prod[k] * BigRational(pw[j]);
        }
    }
    Cyclotomic r;
    r.n_ = n;
    r.c_ = std::move(out);
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    if (is_rational()) return *this;
    std::lock_guard lock(g_mu);
    const auto& tab = power_table_locked(n_);
    std::vector<BigRational> out(c_.size());
    out[0] = c_[0];
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& pw = tab[n_ - i];
        for (size_t j = 0; j < pw.size(); ++j)
            if (pw[j] != 0) out[j] += c_[i] * BigRational(pw[j]);
    }
    Cyclotomic r;
    r.n_ = n_;
    r.c_ = std::move(out);
    return r;
}

Cyclotomic Cyclotomic::pow(unsigned long long k) const {
    Cyclotomic result{BigRational(1)};
    Cyclotomic base = *this;
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    unsigned n = (unsigned)lcm_ull(a.n_, b.n_);
    return a.lifted_to(n).c_ == b.lifted_to(n).c_;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> out = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double v = static_cast<double>(numerator(c_[i])) / static_cast<double>(denominator(c_[i]));
        double arg = 2.0 * std::numbers::pi * double(i) / double(n_);
        out += v * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return out;
}

std::string Cyclotomic::str() const {
    if (auto r = try_rational()) return to_string(*r);
    std::string s;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) s += " + ";
        first = false;
        s += to_string(c_[i]);
        if (i > 0) s += "*z" + std::to_string(n_) + "^" + std::to_string(i);
    }
    if (first) s = "0";
    return s;
}

}  // namespace h1cube
