#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fxn/cli.hpp"
#include "fxn/oracle.hpp"
#include "fxn/text.hpp"

using namespace fxn;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> factor_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

std::string header(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    const std::string prefix = "# " + key + ": ";
    for (std::string line; std::getline(in, line);)
        if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
    return {};
}

std::vector<std::string> json_factors(const std::string& text) { return json::parse(text).at("factors").get<std::vector<std::string>>(); }

std::vector<Poly> parse_all(const std::vector<std::string>& lines, const FieldSpec& F) {
    std::vector<Poly> out;
    for (const auto& l : lines) out.push_back(parse_poly(l, F));
    return out;
}

}  // namespace

TEST_CASE("the 29 quadratics over GF(59)") {
    auto r = run_cli({"factor", "--field", "GF(59)", "--poly", "x^2 - 11*x + 1", "--n", "29", "--verify"});
    REQUIRE(r.status == cli::ok);
    auto F = FieldSpec::prime(59);
    auto factors = parse_all(factor_lines(r.out), F);
    CHECK(factors.size() == 29);
    CHECK(header(r.out, "method") == "prime-power");
    CHECK(header(r.out, "verification") == "product ok, irreducibility ok, reference multiset ok");
    CHECK(factors == reference_factor(parse_poly("x^58 - 11*x^29 + 1", F)).factors);
}

TEST_CASE("the Phi_5 orbit over GF(257)") {
    auto r = run_cli({"factor", "--field", "GF(257)", "--poly", "x^4+x^3+x^2+x+1", "--n", "256"});
    REQUIRE(r.status == cli::ok);
    auto lines = factor_lines(r.out);
    CHECK(lines.size() == 256);
    CHECK(std::find(lines.begin(), lines.end(), "x^4 + 203*x^3 + 89*x^2 + 77*x + 211") != lines.end());
}

TEST_CASE("cyclotomic subcommand") {
    auto r = run_cli({"cyclotomic", "--q", "5", "--p", "3", "--t", "2", "--n", "2", "--verify"});
    REQUIRE(r.status == cli::ok);
    auto F = FieldSpec::prime(5);
    CHECK(header(r.out, "n") == "36");
    CHECK(parse_all(factor_lines(r.out), F) == reference_factor(parse_poly("x^36 - 1", F)).factors);
    auto rejected = run_cli({"cyclotomic", "--q", "13", "--p", "3", "--t", "1", "--n", "2"});
    CHECK(rejected.status == cli::out_of_scope);
    CHECK(rejected.err.find("primitive root") != std::string::npos);
    auto ext = run_cli({"cyclotomic", "--q", "27", "--p", "5", "--t", "1", "--n", "1", "--field", "GF(3^3; x^3 + 2*x + 1)"});
    CHECK(ext.status == cli::ok);
    CHECK(run_cli({"cyclotomic", "--q", "25", "--p", "3", "--t", "1", "--n", "1", "--field", "GF(7)"}).status == cli::parse_error);
}

TEST_CASE("text and JSON carry the same factors") {
    const std::vector<std::vector<std::string>> requests{
        {"factor", "--field", "GF(59)", "--poly", "x^2 - 11*x + 1", "--n", "29"},
        {"factor", "--field", "GF(13)", "--poly", "x - 3", "--n", "8", "--mode", "radical"},
        {"factor", "--field", "GF(7)", "--poly", "x + 1", "--n", "8"},
        {"factor", "--field", "GF(7^2; x^2 + 1)", "--poly", "x - y", "--n", "4"},
        {"cyclotomic", "--q", "11", "--p", "3", "--t", "2", "--n", "1"},
    };
    for (const auto& req : requests) {
        CAPTURE(req[2]);
        auto text = run_cli(req);
        auto with_json = req;
        with_json.insert(with_json.end(), {"--output", "json"});
        auto js = run_cli(with_json);
        REQUIRE(text.status == cli::ok);
        REQUIRE(js.status == cli::ok);
        CHECK(factor_lines(text.out) == json_factors(js.out));
        auto doc = json::parse(js.out);
        for (const char* key : {"field", "poly", "n", "method", "seed", "verified", "factors"}) CHECK(doc.contains(key));
        CHECK(doc.at("method").get<std::string>() == header(text.out, "method"));
    }
}

TEST_CASE("printed factors and fields round-trip through the parser") {
    auto r = run_cli({"factor", "--field", "GF(7^2; x^2 + 1)", "--poly", "x - y", "--n", "4", "--output", "json"});
    REQUIRE(r.status == cli::ok);
    auto doc = json::parse(r.out);
    FieldSpec F = parse_field(doc.at("field").get<std::string>());
    CHECK(to_string(F) == doc.at("field").get<std::string>());
    Poly f = parse_poly(doc.at("poly").get<std::string>(), F);
    CHECK(to_string(f) == doc.at("poly").get<std::string>());
    std::vector<Poly> factors;
    for (const auto& s : doc.at("factors")) {
        Poly h = parse_poly(s.get<std::string>(), F);
        CHECK(to_string(h) == s.get<std::string>());
        factors.push_back(h);
    }
    CHECK(verify(compose_xn(f, 4), factors).ok());
}

TEST_CASE("auto dispatch") {
    auto irr = run_cli({"factor", "--field", "GF(59)", "--poly", "x^2 - 11*x + 1", "--n", "3"});
    REQUIRE(irr.status == cli::ok);
    CHECK(header(irr.out, "method") == "irreducible");
    CHECK(factor_lines(irr.out) == std::vector<std::string>{"x^6 + 48*x^3 + 1"});

    auto radical = run_cli({"factor", "--field", "GF(13)", "--poly", "x - 3", "--n", "8", "--verify"});
    REQUIRE(radical.status == cli::ok);
    CHECK(header(radical.out, "method") == "radical");
    CHECK(factor_lines(radical.out).size() == 6);

    auto ext = run_cli({"factor", "--field", "GF(7)", "--poly", "x + 1", "--n", "8", "--verify"});
    REQUIRE(ext.status == cli::ok);
    CHECK(header(ext.out, "method") == "q3mod4");
    CHECK(header(ext.out, "conjugate pairs") == "4");

    auto check = run_cli({"irreducible-check", "--field", "GF(59)", "--poly", "x^2 - 11*x + 1", "--n", "29", "--output", "json"});
    REQUIRE(check.status == cli::ok);
    CHECK(json::parse(check.out).at("irreducible") == false);
    check = run_cli({"irreducible-check", "--field", "GF(59)", "--poly", "x^2 - 11*x + 1", "--n", "9"});
    CHECK(factor_lines(check.out) == std::vector<std::string>{"irreducible"});
}

TEST_CASE("exit statuses") {
    CHECK(run_cli({"factor", "--field", "GF(59)", "--poly", "x^2 +* 1", "--n", "29"}).status == cli::parse_error);
    CHECK(run_cli({"factor", "--field", "GF(58)", "--poly", "x + 1", "--n", "2"}).status == cli::parse_error);
    CHECK(run_cli({"factor", "--field", "GF(59)", "--poly", "x + 1", "--n", "0"}).status == cli::parse_error);
    CHECK(run_cli({"factor", "--field", "GF(59)", "--poly", "x + 1"}).status == cli::parse_error);
    CHECK(run_cli({"factor", "--field", "GF(59)", "--poly", "x + 1", "--n", "2", "--output", "xml"}).status == cli::parse_error);
    CHECK(run_cli({"factor", "--field", "GF(59)", "--poly", "2*x + 1", "--n", "2"}).status == cli::parse_error);
    CHECK(run_cli({"frobnicate"}).status == cli::parse_error);
    CHECK(run_cli({"--help"}).status == cli::ok);

    // reducible input
    auto reducible = run_cli({"factor", "--field", "GF(59)", "--poly", "x^2 - 1", "--n", "2"});
    CHECK(reducible.status == cli::out_of_scope);
    auto scope = run_cli({"factor", "--field", "GF(13)", "--poly", "x - 2", "--n", "5"});
    CHECK(scope.status == cli::out_of_scope);
    CHECK(scope.err.find("out of method scope") != std::string::npos);
    CHECK(run_cli({"factor", "--field", "GF(13)", "--poly", "x - 3", "--n", "8", "--mode", "prime-power"}).status == cli::out_of_scope);
    CHECK(run_cli({"factor", "--field", "GF(13)", "--poly", "x - 3", "--n", "8", "--mode", "q3mod4"}).status == cli::out_of_scope);
    CHECK(run_cli({"factor", "--field", "GF(13)", "--poly", "x + 1", "--n", "9", "--mode", "cyclotomic"}).status == cli::out_of_scope);
}
