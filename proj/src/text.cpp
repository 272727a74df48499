#include "fxn/text.hpp"

#include <cctype>
#include <string>

#include "fxn/errors.hpp"

namespace fxn {

namespace {

constexpr u64 kMaxParsedDegree = 1u << 24;

std::string element_body(const FieldSpec& F, u64 v) {
    if (F.in_prime_subfield(v)) return std::to_string(v);
    auto digits = F.digits(v);
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(digits[i]);
            continue;
        }
        if (digits[i] != 1) out += std::to_string(digits[i]) + "*";
        out += i == 1 ? "y" : "y^" + std::to_string(i);
    }
    return "(" + out + ")";
}

class Parser {
   public:
    Parser(std::string_view text, const FieldSpec& spec) : text_(text), F_(spec) {}

    Poly parse_all() {
        Poly value = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

   private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + why + " in \"" + std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '('; }

    Poly expression() {
        Poly sum(F_);
        bool first = true;
        for (;;) {
            char c = peek();
            bool negate = false;
            if (c == '+' || c == '-') {
                negate = c == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Poly t = term();
            sum += negate ? -t : t;
            first = false;
        }
        return sum;
    }

    Poly term() {
        Poly value = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                value *= factor();
            } else if (starts_factor(c)) {
                value *= factor();
            } else {
                return value;
            }
        }
    }

    Poly factor() {
        char c = peek();
        Poly base(F_);
        u64 x_degree = 0;  // atoms x^k are kept symbolic until the exponent is known
        bool is_x = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            base = Poly::constant(FieldElement(F_, integer_mod_p()));
        } else if (c == 'x') {
            ++pos_;
            is_x = true;
            x_degree = 1;
        } else if (c == 'y') {
            ++pos_;
            if (F_.is_prime_field()) fail("'y' only exists in extension fields");
            std::vector<u64> gen{0, 1};
            base = Poly::constant(FieldElement::from_coefficients(F_, gen));
        } else if (c == '(') {
            ++pos_;
            base = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else {
            fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
        }
        if (peek() == '^') {
            ++pos_;
            skip_space();
            u64 k = exponent();
            if (is_x) {
                x_degree = k;
            } else {
                base = power(base, k);
            }
        }
        if (is_x) {
            if (x_degree > kMaxParsedDegree) fail("degree too large");
            return Poly::monomial(FieldElement::one(F_), x_degree);
        }
        return base;
    }

    Poly power(const Poly& base, u64 k) {
        if (base.degree() > 0 && static_cast<u64>(base.degree()) * k > kMaxParsedDegree) fail("degree too large");
        Poly result = Poly::constant(FieldElement::one(F_));
        Poly b = base;
        while (k > 0) {
            if (k & 1) result *= b;
            k >>= 1;
            if (k > 0) b *= b;
        }
        return result;
    }

    u64 integer_mod_p() {
        const u64 p = F_.characteristic();
        u64 value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = addmod(mulmod(value, 10 % p, p), static_cast<u64>(text_[pos_] - '0') % p, p);
            ++pos_;
        }
        return value;
    }

    u64 exponent() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a nonnegative exponent");
        u64 value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<u64>(text_[pos_] - '0');
            if (value > kMaxParsedDegree) fail("exponent too large");
            ++pos_;
        }
        return value;
    }

    std::string_view text_;
    const FieldSpec& F_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const FieldSpec& spec) {
    if (spec.is_prime_field()) return "GF(" + std::to_string(spec.characteristic()) + ")";
    Poly mod(spec.prime_subfield(), spec.modulus());
    return "GF(" + std::to_string(spec.characteristic()) + "^" + std::to_string(spec.degree()) + "; " + to_string(mod) + ")";
}

std::string to_string(const FieldElement& e) { return element_body(e.spec(), e.value()); }

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const FieldSpec& F = f.spec();
    std::string out;
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += element_body(F, c[k]);
            continue;
        }
        if (c[k] != 1) out += element_body(F, c[k]) + "*";
        out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    return out;
}

FieldSpec parse_field(std::string_view text) {
    auto fail = [&](const std::string& why) -> FieldSpec {
        throw ParseError("field parse error: " + why + " in \"" + std::string(text) + "\"");
    };
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    };
    auto number = [&]() -> u64 {
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected an integer");
        u128 v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<u64>(text[pos] - '0');
            if (v >= kIntegerBound) fail("integer too large");
            ++pos;
        }
        return static_cast<u64>(v);
    };

    skip();
    if (text.substr(pos, 2) != "GF") return fail("expected 'GF'");
    pos += 2;
    expect('(');
    u64 p = number();
    skip();
    try {
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            u64 u = number();
            expect(';');
            auto close = text.rfind(')');
            if (close == std::string_view::npos || close < pos) return fail("expected ')'");
            FieldSpec base = FieldSpec::prime(p);
            Poly mod = parse_poly(text.substr(pos, close - pos), base);
            pos = close + 1;
            skip();
            if (pos != text.size()) return fail("trailing characters");
            if (mod.degree() != static_cast<long>(u)) return fail("modulus degree does not match the exponent");
            if (u == 1) return fail("use GF(p) for prime fields");
            return FieldSpec::extension(p, mod.coeffs());
        }
        expect(')');
        skip();
        if (pos != text.size()) return fail("trailing characters");
        return FieldSpec::prime(p);
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("field parse error: ") + err.what());
    }
}

Poly parse_poly(std::string_view text, const FieldSpec& spec) { return Parser(text, spec).parse_all(); }

}  // namespace fxn
