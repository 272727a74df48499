#include "fxn/splitter.hpp"

#include <algorithm>
#include <string>

#include "fxn/errors.hpp"
#include "fxn/matrix.hpp"

namespace fxn {

namespace {

u64 power_of(u64 p, unsigned t) {
    auto v = checked_pow(p, t);
    if (!v) throw std::invalid_argument("prime power exceeds 2^63");
    return *v;
}

// Product reconstruction, degree bookkeeping, pairwise distinctness and a
// Rabin test on each factor.
void verify_split(const Poly& target, const std::vector<Poly>& sorted_factors, const char* where) {
    const FieldSpec& F = target.spec();
    if (product(sorted_factors, F) != target) throw InternalError(std::string(where) + ": factors do not multiply back to the target");
    for (std::size_t i = 0; i < sorted_factors.size(); ++i) {
        if (!sorted_factors[i].is_monic()) throw InternalError(std::string(where) + ": factor is not monic");
        if (i > 0 && sorted_factors[i] == sorted_factors[i - 1]) throw InternalError(std::string(where) + ": repeated factor");
        if (!is_irreducible(sorted_factors[i])) throw InternalError(std::string(where) + ": factor is reducible");
    }
}

// Exponent of the irreducible h from a known multiple E of it.
IrreducibleInfo refine_exponent(const Poly& h, unsigned m, u64 E, const Factorization& fe) {
    u64 e = E;
    std::vector<Factorization::Entry> kept;
    for (auto [w, v] : fe) {
        unsigned keep = v;
        while (keep > 0) {
            const Poly xp = modpow_x(e / w, h);
            if (!(xp.degree() == 0 && xp.is_monic())) break;
            e /= w;
            --keep;
        }
        if (keep > 0) kept.emplace_back(w, keep);
    }
    return IrreducibleInfo{h, m, e, Factorization(std::move(kept))};
}

// Every factor of f(x^{p^t}) has exponent dividing e p^t.
IrreducibleInfo child_info(const Poly& g, const IrreducibleInfo& parent, u64 p, unsigned t) {
    return refine_exponent(g, parent.m, parent.e * power_of(p, t), parent.e_factorization.merged(Factorization({{p, t}})));
}

Poly reciprocal_monic(const Poly& g) {
    std::vector<u64> c(g.coeffs().rbegin(), g.coeffs().rend());
    return Poly(g.spec(), std::move(c)).monic();
}

// The Frobenius-form route: g = det(xI - b^s A^{-l}) with A the companion
// matrix, and det(xI - b^{-s} A^l) is its reciprocal.
void check_matrix_route(const IrreducibleInfo& info, const SplitPlan& plan, const Poly& g) {
    const Matrix A = companion_matrix(info.poly);
    const u64 neg_l = (info.e - plan.l % info.e) % info.e;
    if (char_poly(plan.b.pow(plan.s) * matrix_pow(A, neg_l)) != g)
        throw InternalError("matrix and quotient-ring characteristic polynomials disagree");
    if (reciprocal_monic(char_poly(plan.b.inverse().pow(plan.s) * matrix_pow(A, plan.l))) != g)
        throw InternalError("det(xI - b^-s A^l) is not the reciprocal of the factor");
}

}  // namespace

u64 SplitPlan::prime_power() const { return power_of(p, t); }

bool is_fxn_irreducible(const IrreducibleInfo& info, u64 n) {
    if (n == 0) throw std::invalid_argument("is_fxn_irreducible: n must be positive");
    if (n == 1) return true;
    const u64 qm1 = info.splitting_order();
    if (info.e % radical(n) != 0) return false;
    if (gcd(n, qm1 / info.e) != 1) return false;
    if (n % 4 == 0 && qm1 % 4 != 0) return false;
    return true;
}

bool check_reducible_condition(const IrreducibleInfo& info, u64 n) {
    if (n == 0) throw std::invalid_argument("check_reducible_condition: n must be positive");
    if (n == 1) return true;
    const u64 q1 = info.spec().order() - 1;
    for (auto [p, vn] : factorize(n)) {
        if (q1 % p != 0) return false;
        if (valuation(p, q1) < vn + valuation(p, info.e)) return false;
    }
    return true;
}

bool check_orbit_condition(const IrreducibleInfo& info, u64 n) {
    const u64 q = info.spec().order();
    if (n <= 1 || (q - 1) % n != 0) throw std::invalid_argument("check_orbit_condition: needs n > 1 dividing q - 1");
    for (auto [p, vn] : factorize(n)) {
        const unsigned ve = valuation(p, info.e);
        u64 r_p = info.e;
        for (unsigned i = 0; i < ve; ++i) r_p /= p;
        const unsigned v_ord = valuation(p, multiplicative_order(q % r_p, r_p));
        if (vn + ve > valuation(p, q - 1) + v_ord) return false;
    }
    return true;
}

SplitResult split_prime_power(const IrreducibleInfo& info, u64 p, unsigned t, const SplitOptions& opts) {
    if (!is_prime(p)) throw std::invalid_argument("split_prime_power: " + std::to_string(p) + " is not prime");
    if (t == 0) throw std::invalid_argument("split_prime_power: t must be positive");
    const u64 pt = power_of(p, t);
    if (!check_reducible_condition(info, pt))
        throw ConditionError(ConditionError::Kind::reducible_condition,
                             "reducible condition fails for n = " + std::to_string(pt) + ": nu_" + std::to_string(p) + "(q-1) < nu_" +
                                 std::to_string(p) + "(n) + nu_" + std::to_string(p) + "(e)");
    const FieldSpec& F = info.spec();
    const Poly& f = info.poly;

    SplitPlan plan{p, t, info.e, valuation(p, info.e), info.e, 0, 0, FieldElement::one(F), FieldElement::one(F), FieldElement::one(F)};
    for (unsigned i = 0; i < plan.k; ++i) plan.r /= p;

    const Poly xr = modpow_x(plan.r, f);
    if (xr.degree() != 0) throw InternalError("x^r mod f is not a nonzero constant; the exponent certificate is inconsistent");
    plan.c = xr.coefficient(0);

    if (plan.c.is_one()) {
        plan.b = primitive_kth_root(F, pt, opts.seed);
    } else {
        auto root = nth_root(plan.c, pt, opts.seed);
        if (!root) throw InternalError("c has no p^t-th root although the reducible condition holds");
        plan.b = *root;
    }
    if (element_order(plan.b) != pt * power_of(p, plan.k)) throw InternalError("b does not have order p^(t+k)");

    plan.s = invmod(plan.r % pt, pt);
    plan.l = static_cast<u64>((static_cast<u128>(plan.s) * plan.r - 1) / pt);
    plan.a = plan.b.pow(power_of(p, plan.k));

    // beta = b^s alpha^{-l} satisfies beta^{p^t} = alpha
    const u64 neg_l = (info.e - plan.l % info.e) % info.e;
    Poly g = min_poly_in_quotient(info, plan.b.pow(plan.s), neg_l);
    if (opts.verify) check_matrix_route(info, plan, g);

    SplitResult result{info, pt, {}, {plan}, false};
    result.factors.reserve(pt);
    for (u64 j = 0; j < pt; ++j) result.factors.push_back(transform_factor(g, plan.a, static_cast<std::int64_t>(j)));
    sort_canonical(result.factors);
    if (opts.verify) {
        verify_split(compose_xn(f, pt), result.factors, "split_prime_power");
        result.verified = true;
    }
    return result;
}

SplitResult split_general(const IrreducibleInfo& info, u64 n, const SplitOptions& opts) {
    if (n == 0) throw std::invalid_argument("split_general: n must be positive");
    SplitResult result{info, n, {info.poly}, {}, opts.verify};
    if (n == 1) return result;
    if (!check_reducible_condition(info, n))
        throw ConditionError(ConditionError::Kind::reducible_condition, "reducible condition fails for n = " + std::to_string(n));

    // stage-wise: every current factor has degree m and exponent e * (processed part of n)
    SplitOptions inner = opts;
    inner.verify = false;
    std::vector<IrreducibleInfo> current{info};
    for (auto [p, t] : factorize(n)) {
        std::vector<IrreducibleInfo> next;
        next.reserve(current.size() * power_of(p, t));
        for (const auto& h : current) {
            SplitResult step = split_prime_power(h, p, t, inner);
            if (opts.verify) {
                const SplitPlan& plan = step.plans.front();
                const u64 neg_l = (h.e - plan.l % h.e) % h.e;
                check_matrix_route(h, plan, min_poly_in_quotient(h, plan.b.pow(plan.s), neg_l));
            }
            result.plans.insert(result.plans.end(), step.plans.begin(), step.plans.end());
            for (auto& g : step.factors) next.push_back(child_info(g, h, p, t));
        }
        current = std::move(next);
    }
    result.factors.clear();
    for (auto& h : current) result.factors.push_back(std::move(h.poly));
    sort_canonical(result.factors);
    if (result.factors.size() != n) throw InternalError("split_general: factor count differs from n");
    if (opts.verify) {
        verify_split(compose_xn(info.poly, n), result.factors, "split_general");
        result.verified = true;
    }
    return result;
}

u64 largest_reducible_divisor(const IrreducibleInfo& info, u64 n) {
    if (n == 0) throw std::invalid_argument("largest_reducible_divisor: n must be positive");
    const u64 q1 = info.spec().order() - 1;
    if (n == 1) return 1;
    auto fac = factorize(n);
    for (auto [p, v] : fac) {
        (void)v;
        if (q1 % p != 0)
            throw ConditionError(ConditionError::Kind::radical_not_dividing,
                                 "rad(n) does not divide q - 1 (prime " + std::to_string(p) + ")");
    }
    if (gcd(info.m, n) != 1) throw ConditionError(ConditionError::Kind::degree_not_coprime, "gcd(m, n) != 1");
    u64 rho = 1;
    for (auto [p, vn] : fac) {
        const unsigned vq = valuation(p, q1), ve = valuation(p, info.e);
        if (ve > vq) throw InternalError("nu_p(e) > nu_p(q-1) although gcd(m, n) = 1");
        rho *= power_of(p, std::min(vn, vq - ve));
    }
    return rho;
}

void check_radical_conditions(const IrreducibleInfo& info, u64 n) {
    (void)largest_reducible_divisor(info, n);
    if (n % 2 != 0) return;
    const u64 q = info.spec().order();
    if (valuation(2, n) + valuation(2, info.e) >= valuation(2, q - 1) + 2 && q % 4 != 1)
        throw ConditionError(ConditionError::Kind::q3mod4_obstruction,
                             "nu_2(n) + nu_2(e) >= nu_2(q-1) + 2 with q = 3 (mod 4); use the quadratic-extension route");
}

SplitResult split_radical(const IrreducibleInfo& info, u64 n, const SplitOptions& opts) {
    check_radical_conditions(info, n);
    const u64 rho = largest_reducible_divisor(info, n);
    const u64 lift = n / rho;
    SplitOptions inner = opts;
    inner.verify = false;
    SplitResult result{info, n, {}, {}, false};
    if (rho == 1) {
        if (!is_fxn_irreducible(info, n)) throw InternalError("split_radical: rho = 1 but f(x^n) fails the irreducibility criterion");
        result.factors.push_back(compose_xn(info.poly, n));
    } else {
        SplitResult base = split_general(info, rho, inner);
        result.plans = std::move(base.plans);
        for (auto& h : base.factors) {
            IrreducibleInfo h_info = refine_exponent(h, info.m, info.e * rho, info.e_factorization.merged(factorize(rho)));
            if (is_fxn_irreducible(h_info, lift)) {
                result.factors.push_back(compose_xn(h, lift));
                continue;
            }
            // h has a smaller exponent than e * rho; split h(x^lift) again
            SplitResult deeper = split_radical(h_info, lift, inner);
            result.plans.insert(result.plans.end(), deeper.plans.begin(), deeper.plans.end());
            for (auto& g : deeper.factors) result.factors.push_back(std::move(g));
        }
    }
    sort_canonical(result.factors);
    if (opts.verify) {
        verify_split(compose_xn(info.poly, n), result.factors, "split_radical");
        result.verified = true;
    }
    return result;
}

bool quadratic_extension_applies(const IrreducibleInfo& info, u64 n) {
    const FieldSpec& F = info.spec();
    if (!F.is_prime_field() || F.order() % 4 != 3) return false;
    if (info.m % 2 == 0) return false;
    if (n < 2 || (n & (n - 1)) != 0) return false;
    return valuation(2, n) + valuation(2, info.e) >= valuation(2, F.order() - 1) + 2;
}

SplitResult split_via_quadratic_extension(const IrreducibleInfo& info, unsigned t, const SplitOptions& opts) {
    if (t == 0 || t > 62) throw std::invalid_argument("split_via_quadratic_extension: t out of range");
    const u64 n = u64{1} << t;
    if (!quadratic_extension_applies(info, n))
        throw ConditionError(ConditionError::Kind::extension_route,
                             "quadratic-extension route needs a prime q = 3 (mod 4), odd m and t + nu_2(e) >= nu_2(q-1) + 2");
    const FieldSpec& F = info.spec();
    const FieldSpec E = quadratic_extension(F);

    // prime-field representatives embed unchanged
    Poly lifted(E, info.poly.coeffs());
    if (!is_irreducible(lifted)) throw InternalError("odd-degree irreducible polynomial became reducible over GF(q^2)");
    IrreducibleInfo lifted_info{lifted, info.m, info.e, info.e_factorization};
    SplitResult over_e = split_radical(lifted_info, n, opts);

    SplitResult result{info, n, {}, over_e.plans, false};
    result.lifted_factors = over_e.factors.size();
    std::vector<bool> used(over_e.factors.size(), false);
    auto conj_of = [&](const Poly& h) {
        std::vector<u64> c = h.coeffs();
        for (auto& v : c) v = E.frobenius(v);
        return Poly(E, std::move(c));
    };
    auto rational = [&](const Poly& h) {
        return std::all_of(h.coeffs().begin(), h.coeffs().end(), [&](u64 v) { return E.in_prime_subfield(v); });
    };
    for (std::size_t i = 0; i < over_e.factors.size(); ++i) {
        if (used[i]) continue;
        const Poly& h = over_e.factors[i];
        used[i] = true;
        if (rational(h)) {
            result.factors.emplace_back(F, h.coeffs());
            ++result.base_field_factors;
            continue;
        }
        const Poly hbar = conj_of(h);
        auto it = std::find(over_e.factors.begin(), over_e.factors.end(), hbar);
        auto idx = static_cast<std::size_t>(it - over_e.factors.begin());
        if (it == over_e.factors.end() || used[idx]) throw InternalError("conjugate factor missing or already paired");
        used[idx] = true;
        Poly pair = h * hbar;
        if (!rational(pair)) throw InternalError("h * conj(h) has a coefficient outside GF(q)");
        result.factors.emplace_back(F, pair.coeffs());
        ++result.conjugate_pairs;
    }
    sort_canonical(result.factors);
    if (opts.verify) {
        verify_split(compose_xn(info.poly, n), result.factors, "split_via_quadratic_extension");
        result.verified = true;
    }
    return result;
}

}  // namespace fxn
