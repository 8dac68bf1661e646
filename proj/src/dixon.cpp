// Character tables via Dixon's modular method:
//   * pick a prime p = 1 (mod exponent(G)) with p > 2*floor(sqrt(|G|)) so
//     integer character data lifts uniquely from F_p,
//   * diagonalize the class-sum multiplication matrices simultaneously over
//     F_p, splitting eigenspaces matrix by matrix until all are lines,
//   * read off the central-character values, recover degrees through the
//     orthogonality relation, and lift values to cyclotomic integers by a
//     discrete Fourier sum over the power map of each class.
// The lift uses the smallest primitive root mod p so tables are
// bit-reproducible.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "h1cube/arith_util.hpp"
#include "h1cube/class_function.hpp"
#include "h1cube/errors.hpp"

namespace h1cube {

namespace {

using Vec = std::vector<uint64_t>;
using Mtx = std::vector<Vec>;          // row-major, square
using Subspace = std::vector<Vec>;     // list of ambient column vectors

std::vector<Vec> apply_matrix(const Mtx& M, const Subspace& cols, uint64_t p) {
    std::vector<Vec> out(cols.size(), Vec(M.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t i = 0; i < M.size(); ++i) {
            __uint128_t acc = 0;
            for (size_t j = 0; j < M.size(); ++j) acc += (__uint128_t)M[i][j] * cols[c][j];
            out[c][i] = (uint64_t)(acc % p);
        }
    return out;
}

/// Coordinates X with B * X = Y; B's columns (the basis) are independent and
/// Y's columns must lie in their span.
Mtx solve_in_basis(const Subspace& basis, const std::vector<Vec>& ys, uint64_t p) {
    const size_t n = basis[0].size(), d = basis.size(), m = ys.size();
    Mtx a(n, Vec(d + m, 0));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = basis[j][i];
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) a[i][d + j] = ys[j][i];
    size_t row = 0;
    std::vector<size_t> pivot_row_of_col(d, SIZE_MAX);
    for (size_t col = 0; col < d && row < n; ++col) {
        size_t pr = row;
        while (pr < n && a[pr][col] == 0) ++pr;
        if (pr == n) throw TableInconsistent("dixon: basis columns are dependent");
        std::swap(a[pr], a[row]);
        uint64_t inv = mod_inv(a[row][col], p);
        for (size_t j = col; j < d + m; ++j) a[row][j] = (__uint128_t)a[row][j] * inv % p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            uint64_t f = a[i][col];
            for (size_t j = col; j < d + m; ++j)
                a[i][j] = (a[i][j] + (__uint128_t)(p - f) * a[row][j]) % p;
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        for (size_t j = d; j < d + m; ++j)
            if (a[i][j] != 0)
                throw TableInconsistent("dixon: subspace is not invariant under a class matrix");
    Mtx x(d, Vec(m, 0));
    for (size_t col = 0; col < d; ++col)
        for (size_t j = 0; j < m; ++j) x[col][j] = a[pivot_row_of_col[col]][d + j];
    return x;
}

uint64_t det_mod(Mtx a, uint64_t p) {
    const size_t n = a.size();
    uint64_t det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && a[pr][col] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != col) {
            std::swap(a[pr], a[col]);
            det = (p - det) % p;
        }
        det = (__uint128_t)det * a[col][col] % p;
        uint64_t inv = mod_inv(a[col][col], p);
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            uint64_t f = (__uint128_t)a[i][col] * inv % p;
            for (size_t j = col; j < n; ++j)
                a[i][j] = (a[i][j] + (__uint128_t)(p - f) * a[col][j]) % p;
        }
    }
    return det;
}

/// det(xI - A) by evaluation at x = 0..d and Lagrange interpolation
/// (p > d + 1 is guaranteed by the prime search).
Vec charpoly(const Mtx& A, uint64_t p) {
    const size_t d = A.size();
    std::vector<uint64_t> ys(d + 1);
    for (size_t t = 0; t <= d; ++t) {
        Mtx m(d, Vec(d));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                uint64_t v = (p - A[i][j]) % p;
                if (i == j) v = (v + t) % p;
                m[i][j] = v;
            }
        ys[t] = det_mod(std::move(m), p);
    }
    Vec coef(d + 1, 0);
    for (size_t i = 0; i <= d; ++i) {
        Vec num{1};
        uint64_t den = 1;
        for (size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            Vec next(num.size() + 1, 0);
            for (size_t k = 0; k < num.size(); ++k) {
                next[k + 1] = (next[k + 1] + num[k]) % p;
                next[k] = (next[k] + (__uint128_t)(p - j) * num[k]) % p;
            }
            num = std::move(next);
            den = (__uint128_t)den * ((i + p - j) % p) % p;
        }
        uint64_t scale = (__uint128_t)ys[i] * mod_inv(den, p) % p;
        for (size_t k = 0; k < num.size(); ++k)
            coef[k] = (coef[k] + (__uint128_t)scale * num[k]) % p;
    }
    return coef;
}

std::vector<uint64_t> poly_roots(const Vec& coef, uint64_t p) {
    std::vector<uint64_t> roots;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t acc = 0;
        for (size_t k = coef.size(); k-- > 0;) acc = ((__uint128_t)acc * x + coef[k]) % p;
        if (acc == 0) roots.push_back(x);
    }
    return roots;
}

std::vector<Vec> kernel_basis(Mtx a, uint64_t p) {
    const size_t n = a.size();
    std::vector<size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(n, false);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t pr = row;
        while (pr < n && a[pr][col] == 0) ++pr;
        if (pr == n) continue;
        std::swap(a[pr], a[row]);
        uint64_t inv = mod_inv(a[row][col], p);
        for (size_t j = 0; j < n; ++j) a[row][j] = (__uint128_t)a[row][j] * inv % p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            uint64_t f = a[i][col];
            for (size_t j = 0; j < n; ++j)
                a[i][j] = (a[i][j] + (__uint128_t)(p - f) * a[row][j]) % p;
        }
        pivot_col_of_row.push_back(col);
        is_pivot[col] = true;
        ++row;
    }
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[pivot_col_of_row[r]] = (p - a[r][free_col]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

long long isqrt_ll(long long n) {
    long long r = (long long)std::sqrt((double)n);
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

CharacterTable dixon_character_table(const GroupPtr& G) {
    if (!G->enumerated())
        throw TableUnavailable("dixon_character_table requires an enumerated group");
    if (G->order() > 100000)
        throw TableUnavailable("dixon_character_table: group order exceeds 1e5");
    const int nc = G->class_count();
    const long long n = G->order();
    const unsigned e = G->exponent();

    uint64_t p = 0;
    {
        uint64_t lower = std::max<uint64_t>(2 * (uint64_t)isqrt_ll(n), (uint64_t)nc + 1);
        for (uint64_t k = 1; k < 100000000ull / e + 2; ++k) {
            uint64_t cand = (uint64_t)e * k + 1;
            if (cand > lower && is_prime(cand)) {
                p = cand;
                break;
            }
        }
        if (!p) throw PrimeSearchFailed("dixon: no prime p = 1 mod exponent found below bound");
    }

    // class-algebra structure constants; (M_i)[j][k] = a_{ijk} satisfies
    // M_i w = omega_i(chi) w for w = (omega_k(chi))_k
    std::vector<Mtx> class_mtx(nc, Mtx(nc, Vec(nc, 0)));
    for (int k = 0; k < nc; ++k) {
        const Element& zk = G->classes()[k].rep;
        for (int i = 0; i < nc; ++i) {
            for (int x : G->class_members(i)) {
                Element y = G->mul(G->inv(G->elements()[x]), zk);
                int j = G->class_of_index(G->index_of(y));
                class_mtx[i][j][k] += 1;
            }
        }
    }

    std::vector<Subspace> finished;
    std::vector<Subspace> work;
    {
        Subspace full;
        for (int i = 0; i < nc; ++i) {
            Vec v(nc, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        work.push_back(std::move(full));
    }
    for (int i = 1; i < nc && !work.empty(); ++i) {
        std::vector<Subspace> next;
        for (auto& W : work) {
            std::vector<Vec> images = apply_matrix(class_mtx[i], W, p);
            Mtx A = solve_in_basis(W, images, p);
            Vec cp = charpoly(A, p);
            for (uint64_t lam : poly_roots(cp, p)) {
                Mtx shifted = A;
                for (size_t r = 0; r < shifted.size(); ++r)
                    shifted[r][r] = (shifted[r][r] + p - lam) % p;
                std::vector<Vec> K = kernel_basis(std::move(shifted), p);
                if (K.empty()) continue;
                Subspace sub;
                for (const Vec& kv : K) {
                    Vec amb(nc, 0);
                    for (size_t t = 0; t < kv.size(); ++t) {
                        if (kv[t] == 0) continue;
                        for (int r2 = 0; r2 < nc; ++r2)
                            amb[r2] = (amb[r2] + (__uint128_t)kv[t] * W[t][r2]) % p;
                    }
                    sub.push_back(std::move(amb));
                }
                if (sub.size() == 1)
                    finished.push_back(std::move(sub));
                else
                    next.push_back(std::move(sub));
            }
        }
        work = std::move(next);
    }
    if (!work.empty() || (int)finished.size() != nc)
        throw TableInconsistent("dixon: simultaneous diagonalization incomplete");

    // central characters omega_j = |C_j| chi(g_j) / chi(1): normalize each
    // eigenvector so the identity-class component is 1
    std::vector<Vec> omegas;
    for (auto& sub : finished) {
        Vec v = sub[0];
        if (v[0] == 0) throw TableInconsistent("dixon: eigenvector vanishes at the identity");
        uint64_t inv = mod_inv(v[0], p);
        for (auto& x : v) x = (__uint128_t)x * inv % p;
        omegas.push_back(std::move(v));
    }

    std::vector<long long> class_size(nc);
    std::vector<uint64_t> size_inv(nc);
    for (int c = 0; c < nc; ++c) {
        class_size[c] = G->classes()[c].size;
        size_inv[c] = mod_inv((uint64_t)(class_size[c] % (long long)p), p);
    }
    std::vector<int> inv_class(nc);
    for (int c = 0; c < nc; ++c) inv_class[c] = G->inverse_class(c);

    // per-class power maps (also drive the cyclotomic lift)
    std::vector<std::vector<int>> power_class(nc);
    for (int c = 0; c < nc; ++c) {
        unsigned ord = G->classes()[c].order;
        power_class[c].resize(ord);
        for (unsigned t = 0; t < ord; ++t) power_class[c][t] = G->class_power(c, t);
    }

    const uint64_t r = smallest_primitive_root(p);
    const uint64_t z_e = mod_pow(r, (p - 1) / e, p);

    std::vector<ClassFunction> rows;
    for (const Vec& w : omegas) {
        // degree: d^2 = |G| / sum_j w_j w_{j'} / |C_j|
        uint64_t s = 0;
        for (int j = 0; j < nc; ++j) {
            uint64_t term = (__uint128_t)w[j] * w[inv_class[j]] % p;
            term = (__uint128_t)term * size_inv[j] % p;
            s = (s + term) % p;
        }
        uint64_t d2 = (__uint128_t)((uint64_t)(n % (long long)p)) * mod_inv(s, p) % p;
        auto droot = sqrt_mod(d2, p);
        if (!droot) throw TableInconsistent("dixon: degree^2 has no square root mod p");
        uint64_t d = std::min<uint64_t>(*droot, p - *droot);
        if (d == 0 || d >= p / 2) throw TableInconsistent("dixon: degree lift out of range");

        // character values mod p
        std::vector<uint64_t> chi_mod(nc);
        for (int j = 0; j < nc; ++j)
            chi_mod[j] = (__uint128_t)d * w[j] % p * size_inv[j] % p;

        ClassFunction f;
        f.group = G;
        f.values.reserve(nc);
        for (int j = 0; j < nc; ++j) {
            unsigned ord = G->classes()[j].order;
            if (ord == 1) {
                f.values.emplace_back(BigRational((long long)d));
                continue;
            }
            const uint64_t z_n = mod_pow(z_e, e / ord, p);
            const uint64_t zn_inv = mod_inv(z_n, p);
            const uint64_t n_inv = mod_inv(ord % p, p);
            // m_k = (1/ord) sum_t chi(g^t) z_n^{-tk}: multiplicity of the
            // eigenvalue zeta_ord^k; each lies in [0, degree]
            Cyclotomic val;
            uint64_t msum = 0;
            for (unsigned k = 0; k < ord; ++k) {
                uint64_t acc = 0;
                uint64_t zpow = 1;  // z_n^{-tk}
                const uint64_t step = mod_pow(zn_inv, k, p);
                for (unsigned t = 0; t < ord; ++t) {
                    acc = (acc + (__uint128_t)chi_mod[power_class[j][t]] * zpow) % p;
                    zpow = (__uint128_t)zpow * step % p;
                }
                uint64_t mk = (__uint128_t)acc * n_inv % p;
                if (mk > d) throw TableInconsistent("dixon: eigenvalue multiplicity out of range");
                msum += mk;
                if (mk) val += Cyclotomic::zeta(ord, k).scaled(BigRational((long long)mk));
            }
            if (msum != d)
                throw TableInconsistent("dixon: eigenvalue multiplicities do not sum to degree");
            f.values.push_back(std::move(val));
        }
        rows.push_back(std::move(f));
    }

    // deterministic row order: degree, then the serialized value vector
    std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
        auto da = a.degree().try_rational(), db = b.degree().try_rational();
        if (*da != *db) return *da < *db;
        for (size_t i = 0; i < a.values.size(); ++i) {
            std::string sa = a.values[i].str(), sb = b.values[i].str();
            if (sa != sb) return sa < sb;
        }
        return false;
    });

    CharacterTable table;
    table.group = G;
    table.irreducibles = std::move(rows);
    table.verify();
    return table;
}

}  // namespace h1cube
