#ifndef FXN_ORACLE_HPP
#define FXN_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fxn/field.hpp"
#include "fxn/poly.hpp"

namespace fxn {

/// Inputs past the reference factorizer's budget (deg <= 4096, q <= 10^6).
class BudgetExceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

inline constexpr long kOracleMaxDegree = 4096;
inline constexpr u64 kOracleMaxOrder = 1000000;

/// f = unit * prod factors, factors monic irreducible, repeated by
/// multiplicity and canonically sorted.
struct ReferenceFactorization {
    FieldElement unit;
    std::vector<Poly> factors;
};

/// Squarefree decomposition, distinct-degree factorization, then
/// Cantor-Zassenhaus equal-degree splitting. The factor multiset does not
/// depend on the seed. Throws std::invalid_argument for f = 0 and
/// BudgetExceeded past the budget.
ReferenceFactorization reference_factor(const Poly& f, u64 seed = kDefaultSeed);

/// Exhaustive trial division by monic polynomials of increasing degree.
/// Throws BudgetExceeded unless q^deg f <= 2^16.
ReferenceFactorization trial_division_factor(const Poly& f);

struct VerificationReport {
    Poly target;
    std::vector<Poly> claimed_factors;
    bool product_ok = false;
    bool all_irreducible = false;
    /// Unset when the target is past the reference budget.
    std::optional<bool> multiset_match;
    std::vector<std::string> notes;

    bool ok() const noexcept { return product_ok && all_irreducible && multiset_match.value_or(true); }
};

/// Product equality, Rabin test per factor, and multiset equality against
/// reference_factor when the target is within budget.
VerificationReport verify(const Poly& target, const std::vector<Poly>& factors, u64 seed = kDefaultSeed);

}  // namespace fxn

#endif
