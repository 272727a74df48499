#include "fxn/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "fxn/cyclotomic.hpp"
#include "fxn/errors.hpp"
#include "fxn/oracle.hpp"
#include "fxn/splitter.hpp"
#include "fxn/text.hpp"

namespace fxn::cli {

namespace {

using nlohmann::json;

struct Outcome {
    std::string field;
    std::string poly;
    u64 n = 1;
    std::string method;
    std::vector<Poly> factors;
    bool verified = false;
    std::vector<std::string> details;  // extra "# key: value" lines in text output
    std::optional<Poly> target;
};

struct Common {
    u64 seed = kDefaultSeed;
    std::string output = "text";
    bool verify = false;
};

void emit(const Outcome& o, const Common& c, std::ostream& out) {
    std::optional<VerificationReport> report;
    if (c.verify) report = verify(*o.target, o.factors, c.seed);

    if (c.output == "json") {
        json j{{"field", o.field}, {"poly", o.poly}, {"n", o.n}, {"method", o.method}, {"seed", c.seed}, {"verified", o.verified}};
        json list = json::array();
        for (const auto& f : o.factors) list.push_back(to_string(f));
        j["factors"] = std::move(list);
        if (report) {
            j["verification"] = {{"product_ok", report->product_ok},
                                 {"all_irreducible", report->all_irreducible},
                                 {"multiset_match", report->multiset_match ? json(*report->multiset_match) : json(nullptr)},
                                 {"notes", report->notes}};
        }
        out << j.dump(2) << '\n';
    } else {
        out << "# field: " << o.field << '\n'
            << "# poly: " << o.poly << '\n'
            << "# n: " << o.n << '\n'
            << "# method: " << o.method << '\n'
            << "# seed: " << c.seed << '\n'
            << "# verified: " << (o.verified ? "true" : "false") << '\n';
        for (const auto& d : o.details) out << "# " << d << '\n';
        out << "# factors: " << o.factors.size() << '\n';
        for (const auto& f : o.factors) out << to_string(f) << '\n';
        if (report) {
            out << "# verification: product " << (report->product_ok ? "ok" : "FAILED") << ", irreducibility "
                << (report->all_irreducible ? "ok" : "FAILED") << ", reference multiset "
                << (report->multiset_match ? (*report->multiset_match ? "ok" : "FAILED") : "skipped") << '\n';
            for (const auto& note : report->notes) out << "# note: " << note << '\n';
        }
    }
    if (report && !report->ok()) throw InternalError("verification failed");
}

IrreducibleInfo certify(const Poly& f) {
    if (!f.is_monic()) throw ParseError("the polynomial must be monic");
    try {
        return poly_exponent(f);
    } catch (const std::invalid_argument& e) {
        throw ConditionError(ConditionError::Kind::other, e.what());
    }
}

// n = 2^a p^b with at most one odd prime p.
bool split_two_and_odd(u64 n, unsigned& a, u64& p, unsigned& b) {
    a = 0;
    p = 0;
    b = 0;
    for (auto [w, v] : factorize(n)) {
        if (w == 2) {
            a = v;
        } else if (p == 0) {
            p = w;
            b = v;
        } else {
            return false;
        }
    }
    return true;
}

Outcome cyclotomic_outcome(const FieldSpec& F, u64 p, unsigned t, unsigned n, u64 seed) {
    auto result = factor_x2npt_minus_one(F, p, t, n, seed);
    Outcome o;
    o.field = to_string(F);
    o.poly = "x - 1";
    o.n = result.degree();
    o.method = "cyclotomic";
    o.factors = result.factors;
    o.verified = true;
    o.details.push_back("blocks: " + std::to_string(result.blocks.size()));
    o.target = compose_xn(Poly::from_integers(F, {-1, 1}), o.n);
    return o;
}

Outcome factor_outcome(const FieldSpec& F, const Poly& f, u64 n, const std::string& mode, u64 seed) {
    if (n == 0) throw ParseError("--n must be positive");
    Outcome o;
    o.field = to_string(F);
    o.poly = to_string(f);
    o.n = n;

    if (mode == "cyclotomic") {
        if (f != Poly::from_integers(F, {-1, 1})) throw ConditionError(ConditionError::Kind::cyclotomic, "mode cyclotomic factors x^n - 1 only; use --poly \"x - 1\"");
        unsigned a = 0, t = 0;
        u64 p = 0;
        if (!split_two_and_odd(n, a, p, t) || p == 0)
            throw ConditionError(ConditionError::Kind::cyclotomic, "mode cyclotomic needs n = 2^a p^t with one odd prime p and t >= 1");
        return cyclotomic_outcome(F, p, t, a, seed);
    }

    const IrreducibleInfo info = certify(f);
    o.target = compose_xn(f, n);
    o.details.push_back("m: " + std::to_string(info.m));
    o.details.push_back("e: " + std::to_string(info.e));
    SplitOptions opts{seed, true};
    auto take = [&](SplitResult r, const char* method) {
        o.method = method;
        o.factors = std::move(r.factors);
        o.verified = r.verified;
        if (r.conjugate_pairs + r.base_field_factors > 0) {
            o.details.push_back("lifted factors: " + std::to_string(r.lifted_factors));
            o.details.push_back("conjugate pairs: " + std::to_string(r.conjugate_pairs));
            o.details.push_back("base-field factors: " + std::to_string(r.base_field_factors));
        }
        return o;
    };
    auto q3mod4 = [&] {
        if (n < 2 || (n & (n - 1)) != 0) throw ConditionError(ConditionError::Kind::extension_route, "mode q3mod4 needs n to be a power of two");
        return take(split_via_quadratic_extension(info, valuation(2, n), opts), "q3mod4");
    };

    if (mode == "prime-power") return take(split_general(info, n, opts), "prime-power");
    if (mode == "radical") return take(split_radical(info, n, opts), "radical");
    if (mode == "q3mod4") return q3mod4();
    if (mode != "auto") throw ParseError("unknown mode " + mode);

    if (is_fxn_irreducible(info, n)) {
        o.method = "irreducible";
        o.factors = {*o.target};
        o.verified = is_irreducible(*o.target);
        if (!o.verified) throw InternalError("irreducibility criterion and Rabin test disagree");
        o.details.push_back("result: irreducible, no factorization needed");
        return o;
    }
    if (check_reducible_condition(info, n)) return take(split_general(info, n, opts), "prime-power");
    try {
        check_radical_conditions(info, n);
        return take(split_radical(info, n, opts), "radical");
    } catch (const ConditionError& e) {
        if (e.kind() == ConditionError::Kind::q3mod4_obstruction && quadratic_extension_applies(info, n)) return q3mod4();
        throw ConditionError(e.kind(), std::string("out of method scope: ") + e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factor f(x^n) over finite fields", "fxnsplit"};
    app.require_subcommand(1);
    Common common;
    std::string field_text, poly_text, mode = "auto";
    u64 n = 1, q = 0, p = 0;
    unsigned t = 0, n2 = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "Seed for every randomized search")->capture_default_str();
        sub->add_option("--output", common.output, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_flag("--verify", common.verify, "Check the result against the reference factorizer");
    };

    auto* factor = app.add_subcommand("factor", "Factor f(x^n) for a monic irreducible f");
    factor->add_option("--field", field_text, "GF(p) or GF(p^u; modulus)")->required();
    factor->add_option("--poly", poly_text, "Monic irreducible f")->required();
    factor->add_option("--n", n, "Exponent substitution x -> x^n")->required()->check(CLI::PositiveNumber);
    factor->add_option("--mode", mode, "auto | prime-power | radical | q3mod4 | cyclotomic")
        ->check(CLI::IsMember({"auto", "prime-power", "radical", "q3mod4", "cyclotomic"}))
        ->capture_default_str();
    add_common(factor);

    auto* cyclo = app.add_subcommand("cyclotomic", "Factor x^(2^n p^t) - 1 in closed form");
    cyclo->add_option("--q", q, "Field order")->required();
    cyclo->add_option("--p", p, "Odd prime")->required();
    cyclo->add_option("--t", t, "Exponent of p")->required();
    cyclo->add_option("--n", n2, "Exponent of 2")->required();
    cyclo->add_option("--field", field_text, "Field of order q (default GF(q) for prime q)");
    add_common(cyclo);

    auto* check = app.add_subcommand("irreducible-check", "Decide whether f(x^n) is irreducible");
    check->add_option("--field", field_text)->required();
    check->add_option("--poly", poly_text)->required();
    check->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    check->add_option("--output", common.output)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : parse_error;
    }

    try {
        if (cyclo->parsed()) {
            FieldSpec F = field_text.empty() ? FieldSpec::prime(q) : parse_field(field_text);
            if (F.order() != q) throw ParseError("--field has order " + std::to_string(F.order()) + ", not q = " + std::to_string(q));
            emit(cyclotomic_outcome(F, p, t, n2, common.seed), common, out);
            return ok;
        }
        const FieldSpec F = parse_field(field_text);
        const Poly f = parse_poly(poly_text, F);
        if (check->parsed()) {
            const IrreducibleInfo info = certify(f);
            const bool irreducible = is_fxn_irreducible(info, n);
            if (common.output == "json") {
                out << json{{"field", to_string(F)}, {"poly", to_string(f)}, {"n", n}, {"m", info.m}, {"e", info.e}, {"irreducible", irreducible}}.dump(2)
                    << '\n';
            } else {
                out << "# field: " << to_string(F) << "\n# poly: " << to_string(f) << "\n# n: " << n << "\n# m: " << info.m
                    << "\n# e: " << info.e << '\n'
                    << (irreducible ? "irreducible" : "reducible") << '\n';
            }
            return ok;
        }
        emit(factor_outcome(F, f, n, mode, common.seed), common, out);
        return ok;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const ConditionError& e) {
        err << "error: " << e.what() << '\n';
        return out_of_scope;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return out_of_scope;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return parse_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

}  // namespace fxn::cli
