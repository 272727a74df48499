#ifndef FXN_NUMTHEORY_HPP
#define FXN_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace fxn {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Library-wide default seed for every randomized search.
inline constexpr u64 kDefaultSeed = 0x5EED;

/// Largest modulus / integer the library accepts (exclusive): 2^63.
inline constexpr u64 kIntegerBound = u64{1} << 63;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) { return a >= m - b ? a - (m - b) : a + b; }
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of a modulo m; requires gcd(a, m) = 1 and m >= 2.
u64 invmod(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization as (prime, multiplicity) pairs, primes strictly increasing.
class Factorization {
   public:
    using Entry = std::pair<u64, unsigned>;

    Factorization() = default;
    explicit Factorization(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Re-multiplied value. Throws std::overflow_error past 2^63.
    u64 value() const;
    unsigned multiplicity(u64 prime) const noexcept;
    std::vector<u64> primes() const;

    /// Product of the two factorizations.
    Factorization merged(const Factorization& other) const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

   private:
    std::vector<Entry> entries_;
};

/// Trial division to 10^6, then Pollard-Brent rho. 2 <= n < 2^63.
Factorization factorize(u64 n, u64 seed = kDefaultSeed);

/// Largest v with p^v | k. Throws std::invalid_argument for k = 0.
unsigned valuation(u64 p, u64 k);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Product of the distinct primes dividing n.
u64 radical(u64 n);
u64 euler_phi(u64 n);

/// base^exp, or nullopt if the result reaches 2^63.
std::optional<u64> checked_pow(u64 base, unsigned exp);
std::optional<u64> checked_mul(u64 a, u64 b);

/// Multiplicative order of a modulo k (gcd(a, k) = 1, k >= 1).
u64 multiplicative_order(u64 a, u64 k);

/// Sorted positive divisors of n.
std::vector<u64> divisors(u64 n);

/// Draw in [lo, hi] by plain modular reduction of the engine output, so the
/// sequence is identical on every standard library.
u64 draw(std::mt19937_64& rng, u64 lo, u64 hi);

}  // namespace fxn

#endif
