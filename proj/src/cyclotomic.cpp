#include "fxn/cyclotomic.hpp"

#include <string>

#include "fxn/errors.hpp"

namespace fxn {

namespace {

[[noreturn]] void reject(const std::string& why) { throw ConditionError(ConditionError::Kind::cyclotomic, why); }

u64 pow_u64(u64 base, unsigned e) {
    auto v = checked_pow(base, e);
    if (!v) reject("2^n p^t exceeds 2^63");
    return *v;
}

void require_odd_prime_coprime(u64 q, u64 p) {
    if (p < 3 || !is_prime(p)) reject("p = " + std::to_string(p) + " is not an odd prime");
    if (q % 2 == 0) reject("q = " + std::to_string(q) + " is even");
    if (q % p == 0) reject("p divides q");
}

// q generates (Z/p^j)^*; generating mod p^2 implies generating mod every p^j.
void require_primitive(u64 q, u64 p, unsigned j) {
    if (j == 0) return;
    if (j == 1) {
        if (multiplicative_order(q % p, p) != p - 1) reject("q = " + std::to_string(q) + " is not a primitive root modulo p = " + std::to_string(p));
        return;
    }
    if (!check_primitive_mod_p2(q, p)) reject("q = " + std::to_string(q) + " is not a primitive root modulo p^2 = " + std::to_string(p * p));
}

}  // namespace

u64 CyclotomicFactorization::degree() const { return pow_u64(2, n) * pow_u64(p, t); }

const CyclotomicBlock& CyclotomicFactorization::block(unsigned i, unsigned j) const {
    for (const auto& b : blocks)
        if (b.i == i && b.j == j) return b;
    throw std::out_of_range("CyclotomicFactorization::block: no block (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

bool check_primitive_mod_p2(u64 q, u64 p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("check_primitive_mod_p2: p must be an odd prime");
    if (q % p == 0) throw std::invalid_argument("check_primitive_mod_p2: p divides q");
    const u64 p2 = p * p;
    return multiplicative_order(q % p2, p2) == p * (p - 1);
}

std::vector<Poly> phi_block_factors(const FieldSpec& spec, u64 p, unsigned j, unsigned i, u64 seed) {
    const u64 q = spec.order();
    require_odd_prime_coprime(q, p);
    if (i > valuation(2, q - 1)) reject("i = " + std::to_string(i) + " exceeds nu_2(q-1) = " + std::to_string(valuation(2, q - 1)));
    require_primitive(q, p, j);

    std::vector<FieldElement> gammas;
    if (i == 0) {
        gammas.push_back(FieldElement::one(spec));
    } else {
        const FieldElement theta = non_square(spec, seed);
        const FieldElement gamma0 = theta.pow((q - 1) >> i);
        const FieldElement gamma0_sq_inv = (gamma0 * gamma0).inverse();
        FieldElement gamma = gamma0;  // gamma0^{1-2l}
        for (u64 l = 0; l < (u64{1} << (i - 1)); ++l) {
            gammas.push_back(gamma);
            gamma *= gamma0_sq_inv;
        }
    }

    std::vector<Poly> out;
    out.reserve(gammas.size());
    for (const auto& gamma : gammas) {
        if (j == 0) {
            out.push_back(Poly(spec, {spec.neg(gamma.value()), 1}));
            continue;
        }
        const u64 step = pow_u64(p, j - 1);
        std::vector<u64> coeffs(step * (p - 1) + 1, 0);
        const FieldElement gs = gamma.pow(step);
        FieldElement c = FieldElement::one(spec);  // gs^{p-1-m}, from m = p-1 down
        for (u64 m = p; m-- > 0;) {
            coeffs[m * step] = c.value();
            c *= gs;
        }
        out.emplace_back(spec, std::move(coeffs));
    }
    sort_canonical(out);
    return out;
}

CyclotomicFactorization factor_x2npt_minus_one(const FieldSpec& spec, u64 p, unsigned t, unsigned n, u64 seed) {
    const u64 q = spec.order();
    require_odd_prime_coprime(q, p);
    if (t == 0) reject("t must be at least 1");
    if (n > valuation(2, q - 1)) reject("n = " + std::to_string(n) + " exceeds nu_2(q-1) = " + std::to_string(valuation(2, q - 1)));
    require_primitive(q, p, t == 1 ? 1 : 2);

    CyclotomicFactorization out{q, p, t, n, {}, {}};
    const u64 total = out.degree();
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j <= t; ++j) {
            CyclotomicBlock b{i, j, phi_block_factors(spec, p, j, i, seed)};
            out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
            out.blocks.push_back(std::move(b));
        }
    sort_canonical(out.factors);

    std::vector<u64> target(total + 1, 0);
    target[0] = spec.neg(1);
    target[total] = 1;
    if (product(out.factors, spec) != Poly(spec, std::move(target)))
        throw InternalError("factor_x2npt_minus_one: factors do not multiply to x^(2^n p^t) - 1");
    return out;
}

}  // namespace fxn
