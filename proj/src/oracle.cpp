#include "fxn/oracle.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "fxn/errors.hpp"
#include "fxn/text.hpp"

namespace fxn {

namespace {

using Vec = std::vector<u64>;

Poly one_poly(const FieldSpec& F) { return Poly::constant(FieldElement::one(F)); }

bool is_one(const Poly& f) { return f.degree() == 0 && f.is_monic(); }

// g(x) with g(x)^p = f(x); f' = 0 is required.
Poly pth_root(const Poly& f) {
    const FieldSpec& F = f.spec();
    const u64 p = F.characteristic();
    const u64 root_exp = F.order() / p;  // a -> a^{q/p} inverts a -> a^p
    const auto& c = f.coeffs();
    Vec out(c.size() / p + 1, 0);
    for (std::size_t k = 0; k < c.size(); k += p) out[k / p] = F.pow(c[k], root_exp);
    return Poly(F, std::move(out));
}

// Monic f -> (squarefree part, multiplicity) pairs.
void squarefree(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.degree() < 1) return;
    Poly c = gcd(f, derivative(f));
    Poly w = f / c;
    for (unsigned i = 1; !is_one(w); ++i) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac, mult * i);
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree(pth_root(c).monic(), mult * static_cast<unsigned>(f.spec().characteristic()), out);
}

// Squarefree monic f -> (product of all degree-d factors, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
    const FieldSpec& F = f.spec();
    const u64 q = F.order();
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly x = Poly::x(F);
    Poly h = x % f;
    for (unsigned d = 1; 2 * static_cast<long>(d) <= f.degree(); ++d) {
        h = pow_mod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

Poly random_below(const FieldSpec& F, long degree, std::mt19937_64& rng) {
    Vec c(static_cast<std::size_t>(degree), 0);
    for (auto& v : c) v = draw(rng, 0, F.order() - 1);
    return Poly(F, std::move(c));
}

// Splitting element: a^{(q^d-1)/2} - 1 for odd q, the trace to GF(2) for even q.
Poly splitter_element(const Poly& a, unsigned d, const Poly& g) {
    const FieldSpec& F = a.spec();
    const u64 q = F.order();
    if (F.characteristic() == 2) {
        Poly acc = a, term = a;
        for (unsigned k = 1; k < F.degree() * d; ++k) {
            term = (term * term) % g;
            acc += term;
        }
        return acc;
    }
    // (q^d - 1)/2 = (1 + q + ... + q^{d-1}) (q - 1)/2
    Poly norm = a, conj = a;
    for (unsigned k = 1; k < d; ++k) {
        conj = pow_mod(conj, q, g);
        norm = (norm * conj) % g;
    }
    return pow_mod(norm, (q - 1) / 2, g) - one_poly(F);
}

void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<long>(d)) {
        out.push_back(g);
        return;
    }
    for (;;) {
        Poly a = random_below(g.spec(), g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly h = gcd(splitter_element(a, d, g), g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

void check_budget(const Poly& f) {
    if (f.degree() > kOracleMaxDegree || f.spec().order() > kOracleMaxOrder)
        throw BudgetExceeded("reference factorization is limited to degree <= 4096 and q <= 10^6");
}

bool within_budget(const Poly& f) { return f.degree() <= kOracleMaxDegree && f.spec().order() <= kOracleMaxOrder; }

}  // namespace

ReferenceFactorization reference_factor(const Poly& f, u64 seed) {
    if (f.is_zero()) throw std::invalid_argument("reference_factor: zero polynomial");
    check_budget(f);
    ReferenceFactorization out{f.leading(), {}};
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree(f.monic(), 1, parts);
    for (const auto& [part, mult] : parts)
        for (const auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> irreducibles;
            equal_degree(block, d, rng, irreducibles);
            for (const auto& h : irreducibles)
                for (unsigned k = 0; k < mult; ++k) out.factors.push_back(h);
        }
    sort_canonical(out.factors);
    return out;
}

ReferenceFactorization trial_division_factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("trial_division_factor: zero polynomial");
    const FieldSpec& F = f.spec();
    const u64 q = F.order();
    auto space = checked_pow(q, static_cast<unsigned>(std::max(f.degree(), 0L)));
    if (!space || *space > (u64{1} << 16)) throw BudgetExceeded("trial division is limited to q^deg <= 2^16");

    ReferenceFactorization out{f.leading(), {}};
    Poly rest = f.monic();
    for (long d = 1; 2 * d <= rest.degree(); ++d) {
        const u64 count = *checked_pow(q, static_cast<unsigned>(d));
        for (u64 idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
            Vec c(static_cast<std::size_t>(d) + 1, 0);
            u64 v = idx;
            for (long k = 0; k < d; ++k, v /= q) c[static_cast<std::size_t>(k)] = v % q;
            c.back() = 1;
            Poly cand(F, std::move(c));
            for (;;) {
                auto [quot, rem] = divmod(rest, cand);
                if (!rem.is_zero()) break;
                out.factors.push_back(cand);
                rest = std::move(quot);
            }
        }
    }
    if (rest.degree() > 0) out.factors.push_back(rest);
    sort_canonical(out.factors);
    return out;
}

VerificationReport verify(const Poly& target, const std::vector<Poly>& factors, u64 seed) {
    VerificationReport report{target, factors, false, false, std::nullopt, {}};
    const FieldSpec& F = target.spec();
    report.product_ok = product(factors, F) == target;
    if (!report.product_ok) report.notes.push_back("product of the factors differs from the target");

    report.all_irreducible = true;
    for (const auto& h : factors) {
        if (h.degree() >= 1 && is_irreducible(h)) continue;
        report.all_irreducible = false;
        report.notes.push_back("not irreducible: " + to_string(h));
    }

    if (target.is_zero() || !within_budget(target)) {
        report.notes.push_back("target outside the reference budget; multiset comparison skipped");
        return report;
    }
    auto expected = reference_factor(target, seed);
    std::vector<Poly> claimed = factors;
    sort_canonical(claimed);
    report.multiset_match = expected.factors == claimed && expected.unit.is_one();
    if (!*report.multiset_match) report.notes.push_back("factor multiset differs from the reference factorization");
    return report;
}

}  // namespace fxn
