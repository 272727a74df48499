#ifndef FXN_POLY_HPP
#define FXN_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fxn/field.hpp"
#include "fxn/numtheory.hpp"

namespace fxn {

/// Dense univariate polynomial over a FieldSpec. Coefficients are packed
/// field representatives, constant term first, without trailing zeros.
class Poly {
   public:
    explicit Poly(FieldSpec spec) : spec_(std::move(spec)) {}
    /// Raw representatives; throws std::invalid_argument if one is out of range.
    Poly(FieldSpec spec, std::vector<u64> coeffs);
    /// Integer coefficients reduced into the prime subfield, constant term first.
    static Poly from_integers(const FieldSpec& spec, std::span<const std::int64_t> coeffs);
    static Poly from_integers(const FieldSpec& spec, std::initializer_list<std::int64_t> coeffs) {
        return from_integers(spec, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
    }
    static Poly constant(const FieldElement& c);
    static Poly monomial(const FieldElement& c, std::size_t k);
    static Poly x(const FieldSpec& spec) { return Poly(spec, {0, 1}); }

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of x^i (zero past the degree).
    FieldElement coefficient(std::size_t i) const;
    FieldElement leading() const;
    FieldElement operator()(const FieldElement& at) const;

    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const FieldElement& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
    friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.coeffs_ == b.coeffs_ && a.spec_ == b.spec_; }

   private:
    void trim() noexcept;
    void require_same_field(const Poly& o) const;

    FieldSpec spec_;
    std::vector<u64> coeffs_;
};

/// (quotient, remainder) with deg r < deg b. Throws std::domain_error if b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// base^e mod m by square-and-multiply.
Poly pow_mod(const Poly& base, u64 e, const Poly& m);

/// x^r mod f, f nonconstant.
Poly modpow_x(u64 r, const Poly& f);

Poly derivative(const Poly& f);

/// f(x^n).
Poly compose_xn(const Poly& f, u64 n);

/// c^{-mj} g(c^j x) for monic g of degree m: coefficient k is scaled by
/// c^{j(k-m)}, so the result stays monic.
Poly transform_factor(const Poly& g, const FieldElement& c, std::int64_t j);

/// Rabin test: x^{q^m} = x mod f and gcd(x^{q^{m/w}} - x, f) = 1 for primes w | m.
bool is_irreducible(const Poly& f);

/// d-th cyclotomic polynomial over the field, by exact division of x^d - 1
/// by the cyclotomic polynomials of the proper divisors. Requires p not dividing d.
Poly cyclotomic_poly(u64 d, const FieldSpec& spec);

/// Product of a list, balanced so the multiplications stay even-sized.
Poly product(std::span<const Poly> factors, const FieldSpec& spec);

/// Canonical factor order: lexicographic on coefficient representatives,
/// constant term first.
bool canonical_less(const Poly& a, const Poly& b);
void sort_canonical(std::vector<Poly>& polys);

/// Certificate for a monic irreducible f: degree m, exponent e (order of x
/// modulo f) and the factorization of e.
struct IrreducibleInfo {
    Poly poly;
    unsigned m;
    u64 e;
    Factorization e_factorization;

    const FieldSpec& spec() const noexcept { return poly.spec(); }
    /// q^m - 1; throws std::overflow_error past 2^63.
    u64 splitting_order() const;
};

/// Exponent of a monic irreducible f with f(0) != 0, by factoring q^m - 1 and
/// stripping primes while x^candidate = 1 mod f. Throws std::invalid_argument
/// for f(0) = 0, non-monic or reducible f, or q^m - 1 >= 2^63.
IrreducibleInfo poly_exponent(const Poly& f);

}  // namespace fxn

#endif
