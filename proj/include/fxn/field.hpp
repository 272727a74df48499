#ifndef FXN_FIELD_HPP
#define FXN_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fxn/numtheory.hpp"

namespace fxn {

/*
    Finite field F_q, q = p^u < 2^63.

    Elements are handled as packed representatives in [0, q): an element with
    coefficient vector (c_0, ..., c_{u-1}) over the prime subfield (constant
    term first, reduced modulo the extension modulus) is stored as
    c_0 + c_1 p + ... + c_{u-1} p^{u-1}. For prime fields the representative is
    the residue itself, and the prime subfield of an extension is exactly the
    range [0, p).

    FieldSpec is a cheap-to-copy immutable handle; all raw arithmetic lives
    here so Poly and Matrix can store bare representatives.
*/
class FieldSpec {
   public:
    /// GF(p). Throws std::invalid_argument unless p is a prime below 2^63.
    static FieldSpec prime(u64 p);

    /// GF(p^u) as GF(p)[y]/(modulus). `modulus` is constant-term first, monic,
    /// of degree u >= 2 and irreducible over GF(p) (checked).
    static FieldSpec extension(u64 p, std::vector<u64> modulus);

    u64 characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return u_; }
    u64 order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return u_ == 1; }
    /// Extension modulus, constant term first; empty for prime fields.
    const std::vector<u64>& modulus() const noexcept;
    FieldSpec prime_subfield() const { return prime(p_); }

    u64 zero() const noexcept { return 0; }
    u64 one() const noexcept { return 1; }

    u64 add(u64 a, u64 b) const noexcept {
        if (u_ == 1) return addmod(a, b, p_);
        return add_ext(a, b);
    }
    u64 sub(u64 a, u64 b) const noexcept {
        if (u_ == 1) return submod(a, b, p_);
        return sub_ext(a, b);
    }
    u64 neg(u64 a) const noexcept { return sub(0, a); }
    u64 mul(u64 a, u64 b) const noexcept {
        if (u_ == 1) return p_ < (u64{1} << 32) ? a * b % p_ : mulmod(a, b, p_);
        return mul_ext(a, b);
    }
    u64 pow(u64 a, u64 e) const noexcept;
    /// Throws std::domain_error on zero.
    u64 inv(u64 a) const;

    /// Image of an integer under Z -> GF(p) -> GF(q).
    u64 from_integer(std::int64_t v) const noexcept;
    std::vector<u64> digits(u64 v) const;
    u64 from_digits(std::span<const u64> coeffs) const;
    bool in_prime_subfield(u64 v) const noexcept { return v < p_; }
    /// a -> a^p
    u64 frobenius(u64 a) const noexcept { return pow(a, p_); }
    /// Lexicographic comparison of coefficient vectors, constant term first.
    std::strong_ordering compare(u64 a, u64 b) const;

    bool contains(u64 v) const noexcept { return v < q_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

   private:
    FieldSpec(u64 p, unsigned u, u64 q, std::shared_ptr<const std::vector<u64>> modulus)
        : p_(p), u_(u), q_(q), modulus_(std::move(modulus)) {}

    u64 add_ext(u64 a, u64 b) const noexcept;
    u64 sub_ext(u64 a, u64 b) const noexcept;
    u64 mul_ext(u64 a, u64 b) const noexcept;

    u64 p_;
    unsigned u_;
    u64 q_;
    std::shared_ptr<const std::vector<u64>> modulus_;
};

/// An element of a FieldSpec, always in canonical packed form.
class FieldElement {
   public:
    /// Throws std::invalid_argument if value is not a canonical representative.
    FieldElement(FieldSpec spec, u64 value);
    static FieldElement from_integer(const FieldSpec& spec, std::int64_t v) { return {spec, spec.from_integer(v)}; }
    static FieldElement from_coefficients(const FieldSpec& spec, std::span<const u64> coeffs) {
        return {spec, spec.from_digits(coeffs)};
    }
    static FieldElement zero(const FieldSpec& spec) { return {spec, 0}; }
    static FieldElement one(const FieldSpec& spec) { return {spec, 1}; }

    const FieldSpec& spec() const noexcept { return spec_; }
    u64 value() const noexcept { return value_; }
    std::vector<u64> coefficients() const { return spec_.digits(value_); }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FieldElement pow(u64 e) const { return {spec_, spec_.pow(value_, e), Trusted{}}; }
    /// a^e for signed e; negative exponents need a != 0.
    FieldElement pow_signed(std::int64_t e) const;
    FieldElement inverse() const { return {spec_, spec_.inv(value_), Trusted{}}; }

    FieldElement operator-() const { return {spec_, spec_.neg(value_), Trusted{}}; }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.value_ == b.value_ && a.spec_ == b.spec_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
        return a.spec_.compare(a.value_, b.value_);
    }

   private:
    struct Trusted {};
    FieldElement(FieldSpec spec, u64 value, Trusted) : spec_(std::move(spec)), value_(value) {}
    void require_same_field(const FieldElement& o) const;

    FieldSpec spec_;
    u64 value_;
};

/// Multiplicative order of a nonzero element. Throws std::invalid_argument on 0.
u64 element_order(const FieldElement& beta);

/// An element of order exactly k: draws theta until theta^((q-1)/w) != 1 for
/// every prime w | k, then returns theta^((q-1)/k). Throws std::invalid_argument
/// if k does not divide q - 1.
FieldElement primitive_kth_root(const FieldSpec& spec, u64 k, u64 seed = kDefaultSeed);

/// Tonelli-Shanks square root; the lexicographically smaller of the two roots.
std::optional<FieldElement> sqrt(const FieldElement& a, u64 seed = kDefaultSeed);

/// Some r with r^n = a, or nullopt. Adleman-Manders-Miller per prime power
/// of gcd(n, q - 1); deterministic for a given seed.
std::optional<FieldElement> nth_root(const FieldElement& a, u64 n, u64 seed = kDefaultSeed);

/// GF(q^2) = GF(q)(sqrt(-1)) with modulus y^2 + 1. Requires a prime q = 3 mod 4.
FieldSpec quadratic_extension(const FieldSpec& base);

/// Frobenius a -> a^p of the field over its prime subfield; on GF(p)(sqrt(-1))
/// this is the conjugation sqrt(-1) -> -sqrt(-1).
FieldElement conjugate(const FieldElement& a);

/// A nonzero element that is not a square (odd q only).
FieldElement non_square(const FieldSpec& spec, u64 seed = kDefaultSeed);

}  // namespace fxn

#endif
