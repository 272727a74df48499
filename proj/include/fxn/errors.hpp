#ifndef FXN_ERRORS_HPP
#define FXN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fxn {

/// Malformed field or polynomial text.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The input lies outside the hypotheses a factorization method needs
/// (reducible condition, radical conditions, primitivity, ...).
class ConditionError : public std::domain_error {
   public:
    enum class Kind {
        reducible_condition,
        radical_not_dividing,   // rad(n) does not divide q - 1
        degree_not_coprime,     // gcd(m, n) != 1
        q3mod4_obstruction,     // needs the quadratic-extension route
        extension_route,        // preconditions of the quadratic-extension route
        cyclotomic,             // closed-form factorization preconditions
        other
    };

    ConditionError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

   private:
    Kind kind_;
};

/// A guaranteed mathematical fact failed to hold. Signals a bug or an
/// inconsistent certificate, never bad user input.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace fxn

#endif
