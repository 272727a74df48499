#include "fxn/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fxn/poly.hpp"

namespace fxn {

namespace {

const std::vector<u64> kNoModulus;

}  // namespace

FieldSpec FieldSpec::prime(u64 p) {
    if (p >= kIntegerBound) throw std::invalid_argument("field characteristic must be below 2^63");
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p, 1, p, nullptr);
}

FieldSpec FieldSpec::extension(u64 p, std::vector<u64> modulus) {
    FieldSpec base = prime(p);
    while (!modulus.empty() && modulus.back() % p == 0) modulus.pop_back();
    if (modulus.size() < 3) throw std::invalid_argument("extension modulus must have degree at least 2");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw std::invalid_argument("extension modulus must be monic");
    auto u = static_cast<unsigned>(modulus.size() - 1);
    auto q = checked_pow(p, u);
    if (!q) throw std::invalid_argument("field order p^u must be below 2^63");
    if (!is_irreducible(Poly(base, modulus))) throw std::invalid_argument("extension modulus is reducible over GF(" + std::to_string(p) + ")");
    return FieldSpec(p, u, *q, std::make_shared<const std::vector<u64>>(std::move(modulus)));
}

const std::vector<u64>& FieldSpec::modulus() const noexcept { return modulus_ ? *modulus_ : kNoModulus; }

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    if (a.p_ != b.p_ || a.u_ != b.u_) return false;
    if (a.modulus_ == b.modulus_) return true;
    return a.modulus() == b.modulus();
}

u64 FieldSpec::add_ext(u64 a, u64 b) const noexcept {
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < u_; ++i) {
        out += addmod(a % p_, b % p_, p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

u64 FieldSpec::sub_ext(u64 a, u64 b) const noexcept {
    u64 out = 0, scale = 1;
    for (unsigned i = 0; i < u_; ++i) {
        out += submod(a % p_, b % p_, p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

u64 FieldSpec::mul_ext(u64 a, u64 b) const noexcept {
    const auto& mod = *modulus_;
    std::vector<u64> da(u_), db(u_), prod(2 * u_ - 1, 0);
    for (unsigned i = 0; i < u_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < u_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < u_; ++j) prod[i + j] = addmod(prod[i + j], mulmod(da[i], db[j], p_), p_);
    }
    // reduce by the monic modulus, top degree down
    for (std::size_t k = prod.size() - 1; k >= u_; --k) {
        u64 c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < u_; ++i) prod[k - u_ + i] = submod(prod[k - u_ + i], mulmod(c, mod[i], p_), p_);
    }
    u64 out = 0;
    for (unsigned i = u_; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

u64 FieldSpec::pow(u64 a, u64 e) const noexcept {
    u64 result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

u64 FieldSpec::inv(u64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (u_ == 1) return invmod(a, p_);
    return pow(a, q_ - 2);
}

u64 FieldSpec::from_integer(std::int64_t v) const noexcept {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

std::vector<u64> FieldSpec::digits(u64 v) const {
    std::vector<u64> out(u_);
    for (unsigned i = 0; i < u_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

u64 FieldSpec::from_digits(std::span<const u64> coeffs) const {
    if (coeffs.size() > u_) {
        if (u_ == 1) throw std::invalid_argument("from_digits: prime field elements have a single coefficient");
        // reduce a longer vector modulo the extension modulus
        std::vector<u64> tmp(coeffs.begin(), coeffs.end());
        for (auto& c : tmp) c %= p_;
        const auto& mod = *modulus_;
        for (std::size_t k = tmp.size() - 1; k >= u_; --k) {
            u64 c = tmp[k];
            tmp[k] = 0;
            for (unsigned i = 0; i < u_; ++i) tmp[k - u_ + i] = submod(tmp[k - u_ + i], mulmod(c, mod[i], p_), p_);
        }
        tmp.resize(u_);
        return from_digits(tmp);
    }
    u64 out = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) out = out * p_ + coeffs[i] % p_;
    return out;
}

std::strong_ordering FieldSpec::compare(u64 a, u64 b) const {
    if (u_ == 1 || a == b) return a <=> b;
    for (unsigned i = 0; i < u_; ++i) {
        auto c = (a % p_) <=> (b % p_);
        if (c != 0) return c;
        a /= p_;
        b /= p_;
    }
    return std::strong_ordering::equal;
}

FieldElement::FieldElement(FieldSpec spec, u64 value) : spec_(std::move(spec)), value_(value) {
    if (!spec_.contains(value_)) throw std::invalid_argument("field element representative out of range");
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("field elements belong to different fields");
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same_field(o);
    value_ = spec_.add(value_, o.value_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    require_same_field(o);
    value_ = spec_.sub(value_, o.value_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same_field(o);
    value_ = spec_.mul(value_, o.value_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    require_same_field(o);
    value_ = spec_.mul(value_, spec_.inv(o.value_));
    return *this;
}

FieldElement FieldElement::pow_signed(std::int64_t e) const {
    if (e >= 0) return pow(static_cast<u64>(e));
    // -e fits: |INT64_MIN| handled through the group order
    u64 mag = static_cast<u64>(-(e + 1)) + 1;
    return inverse().pow(mag);
}

u64 element_order(const FieldElement& beta) {
    if (beta.is_zero()) throw std::invalid_argument("element_order: zero has no multiplicative order");
    const FieldSpec& F = beta.spec();
    u64 group = F.order() - 1;
    if (group == 1) return 1;
    u64 order = group;
    for (auto [w, mult] : factorize(group)) {
        (void)mult;
        while (order % w == 0 && F.pow(beta.value(), order / w) == 1) order /= w;
    }
    return order;
}

FieldElement primitive_kth_root(const FieldSpec& spec, u64 k, u64 seed) {
    u64 group = spec.order() - 1;
    if (k == 0 || group % k != 0)
        throw std::invalid_argument("primitive_kth_root: " + std::to_string(k) + " does not divide q - 1 = " + std::to_string(group));
    if (k == 1) return FieldElement::one(spec);
    auto primes = factorize(k).primes();
    std::mt19937_64 rng(seed);
    for (;;) {
        u64 theta = draw(rng, 1, group);
        bool ok = std::all_of(primes.begin(), primes.end(), [&](u64 w) { return spec.pow(theta, group / w) != 1; });
        if (ok) return FieldElement(spec, spec.pow(theta, group / k));
    }
}

FieldElement non_square(const FieldSpec& spec, u64 seed) {
    if (spec.characteristic() == 2) throw std::invalid_argument("non_square: every element is a square in characteristic 2");
    u64 group = spec.order() - 1;
    std::mt19937_64 rng(seed);
    for (;;) {
        u64 theta = draw(rng, 1, group);
        if (spec.pow(theta, group / 2) != 1) return FieldElement(spec, theta);
    }
}

std::optional<FieldElement> sqrt(const FieldElement& a, u64 seed) {
    const FieldSpec& F = a.spec();
    if (a.is_zero()) return a;
    u64 group = F.order() - 1;
    if (F.characteristic() == 2) return a.pow((group + 2) / 2);  // squaring is a bijection
    if (F.pow(a.value(), group / 2) != 1) return std::nullopt;

    // Tonelli-Shanks: q - 1 = 2^s * t, t odd
    unsigned s = valuation(2, group);
    u64 t = group >> s;
    FieldElement z = non_square(F, seed).pow(t);
    FieldElement x = a.pow((t + 1) / 2);
    FieldElement b = a.pow(t);
    unsigned m = s;
    while (!b.is_one()) {
        unsigned i = 0;
        FieldElement b2 = b;
        while (!b2.is_one()) {
            b2 = b2 * b2;
            ++i;
        }
        FieldElement c = z;
        for (unsigned j = 0; j + 1 < m - i; ++j) c = c * c;
        x *= c;
        z = c * c;
        b *= z;
        m = i;
    }
    FieldElement other = -x;
    return other < x ? other : x;
}

namespace {

// Discrete log of h to base zeta, where zeta has prime order ell.
u64 small_log(const FieldElement& zeta, const FieldElement& h, u64 ell) {
    const FieldSpec& F = zeta.spec();
    u64 step = 1;
    while (step * step < ell) ++step;
    std::unordered_map<u64, u64> baby;
    u64 cur = 1;
    for (u64 j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = F.mul(cur, zeta.value());
    }
    u64 giant = F.inv(F.pow(zeta.value(), step));
    cur = h.value();
    for (u64 i = 0; i <= step; ++i) {
        if (auto it = baby.find(cur); it != baby.end()) return (i * step + it->second) % ell;
        cur = F.mul(cur, giant);
    }
    throw std::logic_error("small_log: element outside the subgroup");
}

// ell^e-th root of a nonzero a, where ell^e divides q - 1.
std::optional<FieldElement> prime_power_root(const FieldElement& a, u64 ell, unsigned e, std::mt19937_64& rng) {
    const FieldSpec& F = a.spec();
    u64 group = F.order() - 1;
    u64 ell_e = *checked_pow(ell, e);
    if (F.pow(a.value(), group / ell_e) != 1) return std::nullopt;

    unsigned s = valuation(ell, group);
    u64 t = group;
    for (unsigned i = 0; i < s; ++i) t /= ell;

    // x0^(ell^e) = a * eps with eps in the Sylow ell-subgroup
    u64 inv_exp = t == 1 ? 0 : invmod(ell_e % t, t);
    FieldElement x0 = a.pow(inv_exp);
    FieldElement target = a / x0.pow(ell_e);  // = eps^{-1}
    if (target.is_one()) return x0;

    // generator of the Sylow subgroup from an ell-th power non-residue
    FieldElement rho = FieldElement::one(F);
    for (;;) {
        rho = FieldElement(F, draw(rng, 1, group));
        if (F.pow(rho.value(), group / ell) != 1) break;
    }
    FieldElement z = rho.pow(t);
    FieldElement zeta = z;
    for (unsigned i = 0; i + 1 < s; ++i) zeta = zeta.pow(ell);

    // target = z^E, digits of E in base ell
    u64 exponent = 0, place = 1;
    FieldElement z_inv = z.inverse();
    for (unsigned i = 0; i < s; ++i) {
        FieldElement rest = target * z_inv.pow(exponent);
        for (unsigned j = 0; j + 1 < s - i; ++j) rest = rest.pow(ell);
        u64 digit = small_log(zeta, rest, ell);
        exponent += digit * place;
        if (i + 1 < s) place *= ell;
    }
    if (exponent % ell_e != 0) throw std::logic_error("nth_root: Sylow component is not a power");
    return x0 * z.pow(exponent / ell_e);
}

}  // namespace

std::optional<FieldElement> nth_root(const FieldElement& a, u64 n, u64 seed) {
    if (n == 0) throw std::invalid_argument("nth_root: n must be positive");
    if (a.is_zero() || n == 1) return a;
    const FieldSpec& F = a.spec();
    u64 group = F.order() - 1;
    if (group == 1) return a;
    u64 g = gcd(n, group);

    // reduce to a g-th root: with u*n = g (mod q-1), (y^u)^n = y^g
    u64 u = 0;
    {
        u64 ng = (n / g) % (group / g);
        u = group / g == 1 ? 0 : invmod(ng, group / g);
    }
    std::mt19937_64 rng(seed);
    // combine prime-power roots by CRT on exponents: if ell^e * h = g with
    // alpha*ell^e + beta*h = 1, then (y1^beta * y2^alpha)^g = a
    FieldElement y = a;
    u64 done = 1;  // y is a done-th root of a so far
    bool first = true;
    if (g > 1) {
        for (auto [ell, e] : factorize(g)) {
            auto root = prime_power_root(a, ell, e, rng);
            if (!root) return std::nullopt;
            u64 ell_e = *checked_pow(ell, e);
            if (first) {
                y = *root;
                done = ell_e;
                first = false;
                continue;
            }
            // alpha*ell_e + beta*done = 1
            u64 beta = invmod(done % ell_e, ell_e);
            __int128 alpha = (1 - static_cast<__int128>(beta) * done) / static_cast<__int128>(ell_e);
            FieldElement part1 = root->pow(beta);
            FieldElement part2 = alpha >= 0 ? y.pow(static_cast<u64>(alpha)) : y.inverse().pow(static_cast<u64>(-alpha));
            y = part1 * part2;
            done *= ell_e;
        }
    }
    FieldElement r = y.pow(u);
    if (r.pow(n) != a) throw std::logic_error("nth_root: internal verification failed");
    return r;
}

FieldSpec quadratic_extension(const FieldSpec& base) {
    if (!base.is_prime_field()) throw std::invalid_argument("quadratic_extension: base field must be a prime field");
    if (base.order() % 4 != 3) throw std::invalid_argument("quadratic_extension: requires q = 3 (mod 4)");
    return FieldSpec::extension(base.characteristic(), {1, 0, 1});
}

FieldElement conjugate(const FieldElement& a) { return FieldElement(a.spec(), a.spec().frobenius(a.value())); }

}  // namespace fxn
