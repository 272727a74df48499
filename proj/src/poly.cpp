#include "fxn/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fxn/errors.hpp"

namespace fxn {

namespace {

using Vec = std::vector<u64>;

constexpr std::size_t kKaratsubaThreshold = 64;

void trim_vec(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Prime fields with p < 2^40 can sum ~2^48 products in 128 bits before reducing.
bool lazy_reduction(const FieldSpec& F) { return F.is_prime_field() && F.characteristic() < (u64{1} << 40); }

void schoolbook_into(const FieldSpec& F, std::span<const u64> a, std::span<const u64> b, std::span<u64> out) {
    if (a.empty() || b.empty()) return;
    if (F.is_prime_field() && F.characteristic() < (u64{1} << 20) && b.size() < (std::size_t{1} << 20)) {
        // products stay below 2^40, so a u64 sum of up to 2^20 of them cannot overflow
        const u64 p = F.characteristic();
        std::vector<u64> acc(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u64 ai = a[i];
            if (ai == 0) continue;
            u64* row = acc.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
        }
        for (std::size_t k = 0; k < acc.size(); ++k) out[k] = addmod(out[k], acc[k] % p, p);
        return;
    }
    if (lazy_reduction(F)) {
        const u64 p = F.characteristic();
        std::vector<u128> acc(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u128 ai = a[i];
            if (ai == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
        }
        for (std::size_t k = 0; k < acc.size(); ++k) out[k] = addmod(out[k], static_cast<u64>(acc[k] % p), p);
        return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
}

void add_into(const FieldSpec& F, std::span<const u64> src, std::span<u64> dst) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = F.add(dst[i], src[i]);
}

// out += a * b; out has room for a.size() + b.size() - 1 entries
void karatsuba_into(const FieldSpec& F, std::span<const u64> a, std::span<const u64> b, std::span<u64> out) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return;
    if (b.size() <= kKaratsubaThreshold) {
        schoolbook_into(F, a, b, out);
        return;
    }
    const std::size_t h = a.size() / 2;
    if (b.size() <= h) {
        // unbalanced: slice a into chunks the size of b
        for (std::size_t off = 0; off < a.size(); off += b.size()) {
            std::size_t len = std::min(b.size(), a.size() - off);
            karatsuba_into(F, a.subspan(off, len), b, out.subspan(off));
        }
        return;
    }
    auto a0 = a.first(h), a1 = a.subspan(h);
    auto b0 = b.first(h), b1 = b.subspan(h);

    Vec z0(2 * h - 1, 0), z2(a1.size() + b1.size() - 1, 0);
    karatsuba_into(F, a0, b0, z0);
    karatsuba_into(F, a1, b1, z2);

    Vec sa(std::max(a0.size(), a1.size()), 0), sb(std::max(b0.size(), b1.size()), 0);
    add_into(F, a0, sa);
    add_into(F, a1, sa);
    add_into(F, b0, sb);
    add_into(F, b1, sb);
    Vec z1(sa.size() + sb.size() - 1, 0);
    karatsuba_into(F, sa, sb, z1);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);

    add_into(F, z0, out);
    // z1 may carry zero padding past the true product length
    std::size_t z1_len = std::min(z1.size(), out.size() - h);
    add_into(F, std::span<const u64>(z1).first(z1_len), out.subspan(h));
    add_into(F, z2, out.subspan(2 * h));
}

Vec mul_vec(const FieldSpec& F, const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec out(a.size() + b.size() - 1, 0);
    karatsuba_into(F, a, b, out);
    trim_vec(out);
    return out;
}

// Above this modulus size, reduction goes through a power series inverse.
constexpr std::size_t kNewtonThreshold = 128;

Vec truncated(Vec v, std::size_t len) {
    if (v.size() > len) v.resize(len);
    trim_vec(v);
    return v;
}

// 1/f mod x^prec, f[0] != 0
Vec series_inverse(const FieldSpec& F, const Vec& f, std::size_t prec) {
    Vec g{F.inv(f[0])};
    for (std::size_t k = 1; k < prec;) {
        k = std::min(2 * k, prec);
        Vec e = truncated(mul_vec(F, truncated(f, k), g), k);
        for (auto& v : e) v = F.neg(v);
        if (e.empty()) e.push_back(0);
        e[0] = F.add(e[0], F.from_integer(2));
        g = truncated(mul_vec(F, g, e), k);
    }
    return g;
}

// inverse of the reversal of b, to precision deg b
Vec reversed_inverse(const FieldSpec& F, const Vec& b, std::size_t prec) {
    Vec rb(b.rbegin(), b.rend());
    return series_inverse(F, rb, prec);
}

// a <- a mod b using inv = 1/rev(b) mod x^k, k >= deg a - deg b + 1
void newton_divmod(const FieldSpec& F, Vec& a, const Vec& b, const Vec& inv, Vec* quotient) {
    const std::size_t n = b.size() - 1;
    const std::size_t ql = a.size() - n;
    Vec ra(ql);
    for (std::size_t i = 0; i < ql; ++i) ra[i] = a[a.size() - 1 - i];
    Vec qr = truncated(mul_vec(F, ra, truncated(inv, ql)), ql);
    qr.resize(ql, 0);
    Vec q(qr.rbegin(), qr.rend());
    trim_vec(q);
    Vec qb = mul_vec(F, q, b);
    a.resize(n);
    for (std::size_t i = 0; i < n && i < qb.size(); ++i) a[i] = F.sub(a[i], qb[i]);
    trim_vec(a);
    if (quotient) *quotient = std::move(q);
}

void schoolbook_divmod(const FieldSpec& F, Vec& a, const Vec& b, Vec* quotient);

// a <- a mod b, returning the quotient when wanted
void divmod_vec(const FieldSpec& F, Vec& a, const Vec& b, Vec* quotient) {
    const std::size_t nb = b.size();
    if (a.size() < nb) {
        if (quotient) quotient->clear();
        return;
    }
    const std::size_t ql = a.size() - nb + 1;
    if (nb > kNewtonThreshold && ql > kNewtonThreshold / 2) {
        newton_divmod(F, a, b, reversed_inverse(F, b, ql), quotient);
        return;
    }
    schoolbook_divmod(F, a, b, quotient);
}

void schoolbook_divmod(const FieldSpec& F, Vec& a, const Vec& b, Vec* quotient) {
    const std::size_t nb = b.size();
    const u64 lead_inv = F.inv(b.back());
    const bool monic = b.back() == 1;
    if (quotient) quotient->assign(a.size() - nb + 1, 0);
    for (std::size_t k = a.size(); k-- >= nb;) {
        u64 c = a[k];
        if (c == 0) continue;
        if (!monic) c = F.mul(c, lead_inv);
        if (quotient) (*quotient)[k - nb + 1] = c;
        const std::size_t shift = k - nb + 1;
        for (std::size_t i = 0; i + 1 < nb; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        a[k] = 0;
    }
    a.resize(nb - 1);
    trim_vec(a);
    if (quotient) trim_vec(*quotient);
}

}  // namespace

Poly::Poly(FieldSpec spec, std::vector<u64> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (u64 c : coeffs_)
        if (!spec_.contains(c)) throw std::invalid_argument("polynomial coefficient out of range");
    trim();
}

Poly Poly::from_integers(const FieldSpec& spec, std::span<const std::int64_t> coeffs) {
    Vec raw(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), raw.begin(), [&](std::int64_t v) { return spec.from_integer(v); });
    return Poly(spec, std::move(raw));
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.spec(), {c.value()}); }

Poly Poly::monomial(const FieldElement& c, std::size_t k) {
    Vec raw(k + 1, 0);
    raw[k] = c.value();
    return Poly(c.spec(), std::move(raw));
}

void Poly::trim() noexcept { trim_vec(coeffs_); }

void Poly::require_same_field(const Poly& o) const {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("polynomials over different fields");
}

FieldElement Poly::coefficient(std::size_t i) const { return FieldElement(spec_, i < coeffs_.size() ? coeffs_[i] : 0); }

FieldElement Poly::leading() const {
    if (coeffs_.empty()) return FieldElement::zero(spec_);
    return FieldElement(spec_, coeffs_.back());
}

FieldElement Poly::operator()(const FieldElement& at) const {
    if (!(at.spec() == spec_)) throw std::invalid_argument("evaluation point from a different field");
    u64 acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = spec_.add(spec_.mul(acc, at.value()), coeffs_[i]);
    return FieldElement(spec_, acc);
}

Poly Poly::monic() const {
    if (coeffs_.empty()) throw std::domain_error("the zero polynomial has no monic associate");
    if (coeffs_.back() == 1) return *this;
    return *this * leading().inverse();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = spec_.neg(c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = spec_.add(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = spec_.sub(coeffs_[i], o.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    require_same_field(o);
    coeffs_ = mul_vec(spec_, coeffs_, o.coeffs_);
    return *this;
}

Poly& Poly::operator*=(const FieldElement& c) {
    if (!(c.spec() == spec_)) throw std::invalid_argument("scalar from a different field");
    for (auto& v : coeffs_) v = spec_.mul(v, c.value());
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    Poly out(a.spec_);
    out.coeffs_ = mul_vec(a.spec_, a.coeffs_, b.coeffs_);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (!(a.spec() == b.spec())) throw std::invalid_argument("polynomials over different fields");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Vec rem = a.coeffs(), quot;
    divmod_vec(a.spec(), rem, b.coeffs(), &quot);
    return {Poly(a.spec(), std::move(quot)), Poly(a.spec(), std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly operator%(const Poly& a, const Poly& b) {
    if (!(a.spec() == b.spec())) throw std::invalid_argument("polynomials over different fields");
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Vec rem = a.coeffs();
    divmod_vec(a.spec(), rem, b.coeffs(), nullptr);
    return Poly(a.spec(), std::move(rem));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

Poly pow_mod(const Poly& base, u64 e, const Poly& m) {
    if (m.is_zero()) throw std::domain_error("pow_mod: zero modulus");
    const FieldSpec& F = m.spec();
    const Vec& mc = m.coeffs();
    Vec b = (base % m).coeffs();
    Vec result{1};
    divmod_vec(F, result, mc, nullptr);  // 1 mod a unit is 0
    Vec inv;
    if (mc.size() > kNewtonThreshold) inv = reversed_inverse(F, mc, mc.size() - 1);
    auto reduce = [&](Vec& v) {
        if (inv.empty() || v.size() < mc.size()) {
            divmod_vec(F, v, mc, nullptr);
        } else {
            newton_divmod(F, v, mc, inv, nullptr);
        }
    };
    while (e > 0) {
        if (e & 1) {
            result = mul_vec(F, result, b);
            reduce(result);
        }
        e >>= 1;
        if (e > 0) {
            b = mul_vec(F, b, b);
            reduce(b);
        }
    }
    return Poly(F, std::move(result));
}

Poly modpow_x(u64 r, const Poly& f) {
    if (f.degree() < 1) throw std::invalid_argument("modpow_x: modulus must be nonconstant");
    return pow_mod(Poly::x(f.spec()), r, f);
}

Poly derivative(const Poly& f) {
    const FieldSpec& F = f.spec();
    if (f.degree() < 1) return Poly(F);
    Vec out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = F.mul(f.coeffs()[i], F.from_integer(static_cast<std::int64_t>(i % F.characteristic())));
    return Poly(F, std::move(out));
}

Poly compose_xn(const Poly& f, u64 n) {
    if (n == 0) throw std::invalid_argument("compose_xn: n must be positive");
    if (f.is_constant()) return f;
    Vec out(static_cast<std::size_t>(f.degree()) * n + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i * n] = f.coeffs()[i];
    return Poly(f.spec(), std::move(out));
}

Poly transform_factor(const Poly& g, const FieldElement& c, std::int64_t j) {
    if (!g.is_monic()) throw std::invalid_argument("transform_factor: g must be monic");
    if (c.is_zero()) throw std::invalid_argument("transform_factor: c must be nonzero");
    if (!(c.spec() == g.spec())) throw std::invalid_argument("transform_factor: scalar from a different field");
    const FieldSpec& F = g.spec();
    // coefficient k gets c^{j(k-m)} = (c^{-j})^{m-k}
    const u64 step = c.pow_signed(-j).value();
    Vec out = g.coeffs();
    u64 scale = 1;
    for (std::size_t k = out.size(); k-- > 0;) {
        out[k] = F.mul(out[k], scale);
        scale = F.mul(scale, step);
    }
    return Poly(F, std::move(out));
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Poly g = f.monic();
    const auto m = static_cast<u64>(g.degree());
    const u64 q = g.spec().order();
    const Poly x = Poly::x(g.spec());

    auto primes = factorize(m).primes();
    std::vector<u64> checkpoints;
    for (u64 w : primes) checkpoints.push_back(m / w);

    Poly h = x;  // x^{q^i} mod g
    for (u64 i = 1; i <= m; ++i) {
        h = pow_mod(h, q, g);
        if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
            if (gcd(h - x, g).degree() != 0) return false;
        }
    }
    return h == x;
}

Poly cyclotomic_poly(u64 d, const FieldSpec& spec) {
    if (d == 0) throw std::invalid_argument("cyclotomic_poly: d must be positive");
    if (d % spec.characteristic() == 0)
        throw std::invalid_argument("cyclotomic_poly: gcd(d, q) > 1 for d = " + std::to_string(d));
    const auto divs = divisors(d);
    std::map<u64, Poly> phi;
    for (u64 dd : divs) {
        Vec raw(dd + 1, 0);
        raw[0] = spec.neg(1);
        raw[dd] = 1;
        Poly num(spec, std::move(raw));
        Poly den = Poly::constant(FieldElement::one(spec));
        for (const auto& [k, v] : phi)
            if (dd % k == 0) den *= v;
        auto [quot, rem] = divmod(num, den);
        if (!rem.is_zero()) throw InternalError("cyclotomic_poly: inexact division");
        phi.emplace(dd, std::move(quot));
    }
    return phi.at(d);
}

Poly product(std::span<const Poly> factors, const FieldSpec& spec) {
    if (factors.empty()) return Poly::constant(FieldElement::one(spec));
    if (factors.size() == 1) return factors.front();
    std::size_t half = factors.size() / 2;
    return product(factors.first(half), spec) * product(factors.subspan(half), spec);
}

bool canonical_less(const Poly& a, const Poly& b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    const FieldSpec& F = a.spec();
    std::size_t n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = F.compare(ca[i], cb[i]);
        if (c != 0) return c < 0;
    }
    return ca.size() < cb.size();
}

void sort_canonical(std::vector<Poly>& polys) { std::sort(polys.begin(), polys.end(), canonical_less); }

u64 IrreducibleInfo::splitting_order() const {
    auto qm = checked_pow(spec().order(), m);
    if (!qm) throw std::overflow_error("q^m - 1 exceeds 2^63");
    return *qm - 1;
}

IrreducibleInfo poly_exponent(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("poly_exponent: polynomial must be monic");
    if (f.degree() < 1) throw std::invalid_argument("poly_exponent: polynomial must be nonconstant");
    if (f.coeffs().front() == 0) throw std::invalid_argument("poly_exponent: f(0) = 0, exponent undefined");
    if (!is_irreducible(f)) throw std::invalid_argument("poly_exponent: polynomial is reducible");
    const auto m = static_cast<unsigned>(f.degree());
    auto qm = checked_pow(f.spec().order(), m);
    if (!qm) throw std::invalid_argument("poly_exponent: q^m - 1 must be below 2^63");
    const u64 group = *qm - 1;
    if (group == 1) return IrreducibleInfo{f, m, 1, Factorization{}};

    u64 e = group;
    std::vector<Factorization::Entry> kept;
    for (auto [w, mult] : factorize(group)) {
        unsigned left = mult;
        while (left > 0 && modpow_x(e / w, f) == Poly::constant(FieldElement::one(f.spec()))) {
            e /= w;
            --left;
        }
        kept.emplace_back(w, left);
    }
    return IrreducibleInfo{f, m, e, Factorization(std::move(kept))};
}

}  // namespace fxn
