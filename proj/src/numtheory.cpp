#include "fxn/numtheory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace fxn {

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 invmod(u64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("invmod: modulus must be at least 2");
    // extended Euclid on signed 128-bit to avoid overflow of the cofactors
    __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 quot = old_r / r;
        std::swap(old_r, r);
        r -= quot * old_r;
        std::swap(old_s, s);
        s -= quot * old_s;
    }
    if (old_r != 1) throw std::invalid_argument("invmod: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    __int128 res = old_s % static_cast<__int128>(m);
    if (res < 0) res += m;
    return static_cast<u64>(res);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // witness set valid for every n < 2^64
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 w = a % n;
        if (w == 0) continue;
        u64 x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization::Factorization(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    std::vector<Entry> merged;
    for (const auto& [p, k] : entries_) {
        if (k == 0) continue;
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += k;
        else
            merged.emplace_back(p, k);
    }
    entries_ = std::move(merged);
}

u64 Factorization::value() const {
    u64 v = 1;
    for (const auto& [p, k] : entries_) {
        auto pk = checked_pow(p, k);
        auto next = pk ? checked_mul(v, *pk) : std::nullopt;
        if (!next) throw std::overflow_error("Factorization::value: product exceeds 2^63");
        v = *next;
    }
    return v;
}

unsigned Factorization::multiplicity(u64 prime) const noexcept {
    for (const auto& [p, k] : entries_)
        if (p == prime) return k;
    return 0;
}

std::vector<u64> Factorization::primes() const {
    std::vector<u64> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
}

Factorization Factorization::merged(const Factorization& other) const {
    auto all = entries_;
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    return Factorization(std::move(all));
}

u64 draw(std::mt19937_64& rng, u64 lo, u64 hi) {
    if (hi < lo) throw std::invalid_argument("draw: empty range");
    u64 span = hi - lo;
    if (span == ~u64{0}) return rng();
    return lo + rng() % (span + 1);
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial divisor of composite n.
u64 pollard_brent(u64 n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    for (;;) {
        u64 y = draw(rng, 1, n - 1);
        u64 c = draw(rng, 1, n - 1);
        const u64 m = 128;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](u64 v) { return addmod(mulmod(v, v, n), c, n); };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::mt19937_64& rng, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n, rng);
    factor_into(d, rng, out);
    factor_into(n / d, rng, out);
}

}  // namespace

Factorization factorize(u64 n, u64 seed) {
    if (n < 2) throw std::invalid_argument("factorize: input must be at least 2");
    if (n >= kIntegerBound) throw std::invalid_argument("factorize: input must be below 2^63");
    std::map<u64, unsigned> found;
    for (u64 d = 2; d <= 1'000'000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (n % d == 0) {
            ++found[d];
            n /= d;
        }
    }
    if (n > 1) {
        std::mt19937_64 rng(seed);
        factor_into(n, rng, found);
    }
    return Factorization({found.begin(), found.end()});
}

unsigned valuation(u64 p, u64 k) {
    if (k == 0) throw std::invalid_argument("valuation: undefined for k = 0");
    if (p < 2) throw std::invalid_argument("valuation: base must be a prime");
    unsigned v = 0;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return v;
}

u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    auto v = checked_mul(a / gcd(a, b), b);
    if (!v) throw std::overflow_error("lcm exceeds 2^63");
    return *v;
}

u64 radical(u64 n) {
    if (n == 0) throw std::invalid_argument("radical: undefined for 0");
    if (n == 1) return 1;
    u64 r = 1;
    for (u64 p : factorize(n).primes()) r *= p;
    return r;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: undefined for 0");
    if (n == 1) return 1;
    u64 phi = n;
    for (u64 p : factorize(n).primes()) phi = phi / p * (p - 1);
    return phi;
}

std::optional<u64> checked_mul(u64 a, u64 b) {
    u128 prod = static_cast<u128>(a) * b;
    if (prod >= kIntegerBound) return std::nullopt;
    return static_cast<u64>(prod);
}

std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        auto next = checked_mul(result, base);
        if (!next) return std::nullopt;
        result = *next;
    }
    return result;
}

u64 multiplicative_order(u64 a, u64 k) {
    if (k == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (k == 1) return 1;
    if (gcd(a % k, k) != 1) throw std::invalid_argument("multiplicative_order: base not coprime to modulus");
    u64 order = euler_phi(k);
    if (order == 1) return 1;
    for (auto [p, mult] : factorize(order)) {
        (void)mult;
        while (order % p == 0 && powmod(a, order / p, k) == 1) order /= p;
    }
    return order;
}

std::vector<u64> divisors(u64 n) {
    if (n == 0) throw std::invalid_argument("divisors: undefined for 0");
    std::vector<u64> divs{1};
    if (n == 1) return divs;
    for (auto [p, mult] : factorize(n)) {
        std::size_t current = divs.size();
        u64 pk = 1;
        for (unsigned i = 0; i < mult; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < current; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace fxn
