#ifndef FXN_CYCLOTOMIC_HPP
#define FXN_CYCLOTOMIC_HPP

#include <vector>

#include "fxn/field.hpp"
#include "fxn/poly.hpp"

namespace fxn {

/*
    Closed-form factorization of x^{2^n p^t} - 1 over F_q for an odd prime p
    with q a primitive root modulo p^2 (modulo p when t = 1).

    x^{2^n p^t} - 1 is the product of Phi_{2^i p^j} over 0 <= i <= n,
    0 <= j <= t. For gamma a primitive 2^i-th root of unity, the polynomial

        gamma^{phi(p^j)} Phi_{p^j}(x / gamma)
            = sum_{m=0}^{p-1} gamma^{(p-1-m) p^{j-1}} x^{m p^{j-1}}      (j >= 1)
            = x - gamma                                                  (j = 0)

    is irreducible, and Phi_{2^i p^j} is its product over the 2^{i-1}
    primitive 2^i-th roots gamma (gamma = 1 for i = 0). The roots come from a
    seeded non-square theta: gamma_0 = theta^{(q-1)/2^i}, gamma = gamma_0^{1-2l}.
*/

struct CyclotomicBlock {
    unsigned i;
    unsigned j;
    /// Irreducible factors of Phi_{2^i p^j}, canonically sorted.
    std::vector<Poly> factors;
};

struct CyclotomicFactorization {
    u64 q;
    u64 p;
    unsigned t;
    unsigned n;
    /// Ordered by i, then j.
    std::vector<CyclotomicBlock> blocks;
    /// All factors, canonically sorted.
    std::vector<Poly> factors;

    u64 degree() const;  // 2^n p^t
    const CyclotomicBlock& block(unsigned i, unsigned j) const;
};

/// ord_{p^2}(q) = p(p - 1). Requires an odd prime p not dividing q.
bool check_primitive_mod_p2(u64 q, u64 p);

/// Factors of Phi_{2^i p^j} (j = 0 allowed). Throws ConditionError (kind
/// cyclotomic) for i > nu_2(q-1), for even q or p | q, and when q does not
/// generate (Z/p^j)^* for j >= 1.
std::vector<Poly> phi_block_factors(const FieldSpec& spec, u64 p, unsigned j, unsigned i, u64 seed = kDefaultSeed);

/// Every block of x^{2^n p^t} - 1, verified by product reconstruction.
/// Preconditions (ConditionError, kind cyclotomic, with a message naming the
/// failure): p odd prime, gcd(q, 2p) = 1, t >= 1, n <= nu_2(q-1), q primitive
/// modulo p^2 (modulo p when t = 1).
CyclotomicFactorization factor_x2npt_minus_one(const FieldSpec& spec, u64 p, unsigned t, unsigned n, u64 seed = kDefaultSeed);

}  // namespace fxn

#endif
