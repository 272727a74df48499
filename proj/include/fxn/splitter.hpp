#ifndef FXN_SPLITTER_HPP
#define FXN_SPLITTER_HPP

#include <cstddef>
#include <vector>

#include "fxn/field.hpp"
#include "fxn/poly.hpp"

namespace fxn {

/*
    Factorization of f(x^n) for a monic irreducible f of degree m and
    exponent e over F_q.

    The core step handles a prime power n = p^t under the reducible condition
    nu_p(q-1) >= t + nu_p(e). With e = p^k r and gcd(r, p) = 1:

      c  = x^r mod f                 (a constant, c = b^{p^t})
      b  = a p^t-th root of c        (a primitive p^t-th root of unity if c = 1)
      s  = r^{-1} mod p^t,  l = (s r - 1) / p^t
      g  = charpoly of b^s A^{-l}    (A any matrix with charpoly f)
      a  = b^{p^k}                   (order exactly p^t)

    and f(x^{p^t}) is the product of a^{-mj} g(a^j x) for j = 0 .. p^t - 1.
    For a root alpha of f, (alpha^l b^{-s})^{p^t} = alpha^{-1}, so
    charpoly(b^{-s} A^l) is the reciprocal of g; the two agree only for
    self-reciprocal f.

    Every factor has degree m. Its exponent divides p^t e and equals it when
    p | e; for p not dividing e the factors have exponents e p^i, 0 <= i <= t.
    Prime powers of n are processed one after another on each factor, with
    exponents recomputed from the known multiple.
*/

/// Intermediate values of one prime-power step.
struct SplitPlan {
    u64 p;
    unsigned t;
    u64 e;       // exponent of the polynomial being split
    unsigned k;  // nu_p(e)
    u64 r;       // e / p^k
    u64 s;       // r^{-1} mod p^t, in (0, p^t)
    u64 l;       // (s r - 1) / p^t
    FieldElement c;
    FieldElement b;
    FieldElement a;

    u64 prime_power() const;
};

struct SplitOptions {
    u64 seed = kDefaultSeed;
    /// Product reconstruction, Rabin test per factor, and the matrix route
    /// cross-checked against the quotient-ring route.
    bool verify = true;
};

struct SplitResult {
    IrreducibleInfo input;
    u64 n = 1;
    /// Monic irreducible factors of f(x^n), canonically sorted.
    std::vector<Poly> factors;
    std::vector<SplitPlan> plans;
    bool verified = false;

    // Quadratic-extension route only.
    std::size_t lifted_factors = 0;
    std::size_t conjugate_pairs = 0;
    std::size_t base_field_factors = 0;
};

/// f(x^n) irreducible iff rad(n) | e, gcd(n, (q^m-1)/e) = 1, and 4 | n
/// implies 4 | q^m - 1.
bool is_fxn_irreducible(const IrreducibleInfo& info, u64 n);

/// nu_p(q-1) >= nu_p(n) + nu_p(e) for every prime p | n.
bool check_reducible_condition(const IrreducibleInfo& info, u64 n);

/// The weaker sufficient condition for f(x^n) to split into n factors of
/// degree m: nu_p(n) + nu_p(e) <= nu_p(q-1) + nu_p(ord_{r_p} q) for primes
/// p | n, with r_p the p-free part of e. Requires n | q - 1 and n > 1.
bool check_orbit_condition(const IrreducibleInfo& info, u64 n);

/// One prime power p^t. Throws ConditionError if the reducible condition
/// fails, InternalError if a guaranteed identity does not hold.
SplitResult split_prime_power(const IrreducibleInfo& info, u64 p, unsigned t, const SplitOptions& opts = {});

/// All prime powers of n in increasing order of the prime.
SplitResult split_general(const IrreducibleInfo& info, u64 n, const SplitOptions& opts = {});

/// prod_{p | n} p^{min(nu_p(n), nu_p(q-1) - nu_p(e))}: the largest divisor of
/// n for which the reducible condition holds. Requires rad(n) | q - 1 and
/// gcd(m, n) = 1 (ConditionError with distinct kinds otherwise).
u64 largest_reducible_divisor(const IrreducibleInfo& info, u64 n);

/// Throws ConditionError unless rad(n) | q - 1, gcd(m, n) = 1, and (for even
/// n) nu_2(n) + nu_2(e) >= nu_2(q-1) + 2 implies q = 1 mod 4. The last
/// failure has kind q3mod4_obstruction.
void check_radical_conditions(const IrreducibleInfo& info, u64 n);

/// Factors h of f(x^rho), rho = largest_reducible_divisor(info, n), lifted
/// to h(x^{n/rho}). A lifted factor that fails is_fxn_irreducible (possible
/// when h has exponent below e rho) is split again by the same procedure.
SplitResult split_radical(const IrreducibleInfo& info, u64 n, const SplitOptions& opts = {});

/// n = 2^t over a prime field with q = 3 mod 4, odd m and
/// t + nu_2(e) >= nu_2(q-1) + 2: split over GF(q)(sqrt(-1)) and multiply each
/// non-rational factor by its conjugate.
SplitResult split_via_quadratic_extension(const IrreducibleInfo& info, unsigned t, const SplitOptions& opts = {});

/// Whether the preconditions of split_via_quadratic_extension hold for n.
bool quadratic_extension_applies(const IrreducibleInfo& info, u64 n);

}  // namespace fxn

#endif
