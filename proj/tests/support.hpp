#ifndef FXN_TESTS_SUPPORT_HPP
#define FXN_TESTS_SUPPORT_HPP

// Independent reference computations for the test suites. Nothing here calls
// the library's multiplication, division or factorization kernels.

#include <algorithm>
#include <random>
#include <vector>

#include "fxn/field.hpp"
#include "fxn/matrix.hpp"
#include "fxn/poly.hpp"

namespace fxn::testing {

using Vec = std::vector<u64>;

inline Vec trimmed(Vec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// Schoolbook product over a prime field with plain % arithmetic.
inline Vec naive_mul(const Vec& a, const Vec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    return trimmed(out);
}

inline u64 naive_eval(const Vec& a, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = (mulmod(acc, x, p) + a[i]) % p;
    return acc;
}

inline Poly random_poly(const FieldSpec& F, long degree, std::mt19937_64& rng, bool monic = false) {
    Vec c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = draw(rng, 0, F.order() - 1);
    if (monic) c.back() = 1;
    if (c.back() == 0) c.back() = 1;
    return Poly(F, std::move(c));
}

// Monic polynomials of degree d over a prime field, enumerated by base-q digits.
inline std::vector<Vec> monic_polys(u64 p, unsigned d) {
    std::vector<Vec> out;
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
        Vec c(d + 1, 0);
        u64 v = idx;
        for (unsigned k = 0; k < d; ++k, v /= p) c[k] = v % p;
        c[d] = 1;
        out.push_back(c);
    }
    return out;
}

// Monic irreducibles of degree d over GF(p) by sieving products of lower degrees.
inline std::vector<Vec> monic_irreducibles(u64 p, unsigned d) {
    std::vector<std::vector<Vec>> irr(d + 1);
    for (unsigned k = 1; k <= d; ++k) {
        std::vector<Vec> reducible;
        // products a * b with deg a = i <= deg b = k - i, a and b monic of any kind
        for (unsigned i = 1; 2 * i <= k; ++i)
            for (const auto& a : monic_polys(p, i))
                for (const auto& b : monic_polys(p, k - i)) reducible.push_back(naive_mul(a, b, p));
        std::sort(reducible.begin(), reducible.end());
        for (const auto& c : monic_polys(p, k))
            if (!std::binary_search(reducible.begin(), reducible.end(), c)) irr[k].push_back(c);
    }
    return irr[d];
}

// Determinant over a prime field by Gaussian elimination.
inline u64 naive_det(std::vector<Vec> a, u64 p) {
    const std::size_t n = a.size();
    u64 det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = (p - det) % p;
        }
        det = mulmod(det, a[col][col], p);
        const u64 inv = invmod(a[col][col], p);
        for (std::size_t r = col + 1; r < n; ++r) {
            const u64 factor = mulmod(a[r][col], inv, p);
            for (std::size_t c = col; c < n; ++c) a[r][c] = (a[r][c] + p - mulmod(factor, a[col][c], p)) % p;
        }
    }
    return det;
}

// det(xI - A) by evaluating at x = 0..n and Lagrange interpolation; needs p > n.
inline Vec interpolated_char_poly(const Matrix& m) {
    const u64 p = m.spec().characteristic();
    const std::size_t n = m.dim();
    Vec result(n + 1, 0);
    for (u64 xi = 0; xi <= n; ++xi) {
        std::vector<Vec> a(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = ((i == j ? xi : 0) + p - m.raw(i, j)) % p;
        const u64 yi = naive_det(a, p);
        // basis polynomial prod_{k != i} (x - k) / (xi - k)
        Vec basis{1};
        u64 denom = 1;
        for (u64 k = 0; k <= n; ++k) {
            if (k == xi) continue;
            basis = naive_mul(basis, Vec{(p - k % p) % p, 1}, p);
            denom = mulmod(denom, (xi + p - k % p) % p, p);
        }
        const u64 scale = mulmod(yi, invmod(denom, p), p);
        for (std::size_t i = 0; i < basis.size(); ++i) result[i] = (result[i] + mulmod(basis[i], scale, p)) % p;
    }
    return trimmed(result);
}

}  // namespace fxn::testing

#endif
