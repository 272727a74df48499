#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fxn/poly.hpp"
#include "support.hpp"

using namespace fxn;
using fxn::testing::Vec;

namespace {

Poly P(const FieldSpec& F, std::initializer_list<std::int64_t> c) { return Poly::from_integers(F, c); }

Poly x_pow_minus_one(const FieldSpec& F, u64 n) {
    Vec c(n + 1, 0);
    c[0] = F.neg(1);
    c[n] = 1;
    return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("construction trims and validates") {
    auto F = FieldSpec::prime(13);
    CHECK(Poly(F, {1, 2, 0, 0}).degree() == 1);
    CHECK(Poly(F).degree() == -1);
    CHECK(Poly(F, {0, 0}).is_zero());
    CHECK_THROWS_AS(Poly(F, {13}), std::invalid_argument);
    CHECK(P(F, {-1, 0, 1}).coeffs() == Vec{12, 0, 1});
    CHECK(P(F, {3, 0, 2}).monic() == P(F, {8, 0, 1}));
    CHECK(P(F, {1, 1})(FieldElement(F, 4)).value() == 5);
}

TEST_CASE("golden ring arithmetic") {
    auto F13 = FieldSpec::prime(13);
    CHECK(P(F13, {-1, 1}) * P(F13, {1, 1}) == P(F13, {-1, 0, 1}));
    CHECK(gcd(P(F13, {-1, 0, 1}), P(F13, {-1, 1})) == P(F13, {-1, 1}));
    auto F59 = FieldSpec::prime(59);
    CHECK(P(F59, {1, -11, 1}) * P(F59, {1, 11, 1}) == P(F59, {1, 0, -1, 0, 1}));
    CHECK_THROWS_AS(divmod(P(F13, {1, 1}), Poly(F13)), std::domain_error);
}

TEST_CASE("multiplication matches the schoolbook reference across the Karatsuba threshold") {
    std::mt19937_64 rng(1);
    for (u64 q : {2ULL, 59ULL, 1000003ULL, 2305843009213693951ULL}) {
        auto F = FieldSpec::prime(q);
        for (long da : {0L, 1L, 5L, 63L, 64L, 65L, 130L, 301L})
            for (long db : {0L, 3L, 64L, 100L, 257L}) {
                Poly a = fxn::testing::random_poly(F, da, rng), b = fxn::testing::random_poly(F, db, rng);
                REQUIRE((a * b).coeffs() == fxn::testing::naive_mul(a.coeffs(), b.coeffs(), q));
            }
    }
}

TEST_CASE("extension-field products agree with pointwise evaluation") {
    auto F = FieldSpec::extension(7, {1, 0, 1});
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        Poly a = fxn::testing::random_poly(F, 70 + trial, rng), b = fxn::testing::random_poly(F, 90, rng);
        Poly c = a * b;
        for (u64 v = 0; v < 49; ++v) {
            FieldElement x(F, v);
            REQUIRE(c(x) == a(x) * b(x));
        }
    }
}

TEST_CASE("divmod reconstruction and gcd divisibility") {
    std::mt19937_64 rng(3);
    for (u64 q : {2ULL, 13ULL, 257ULL, 49ULL}) {
        FieldSpec F = q == 49 ? FieldSpec::extension(7, {1, 0, 1}) : FieldSpec::prime(q);
        for (int trial = 0; trial < 60; ++trial) {
            Poly a = fxn::testing::random_poly(F, draw(rng, 0, 150), rng);
            Poly b = fxn::testing::random_poly(F, draw(rng, 0, 80), rng);
            auto [quot, rem] = divmod(a, b);
            REQUIRE(quot * b + rem == a);
            REQUIRE(rem.degree() < b.degree());
            Poly common = fxn::testing::random_poly(F, draw(rng, 1, 6), rng, true);
            Poly g = gcd(a * common, b * common);
            REQUIRE(g.is_monic());
            REQUIRE((a * common % g).is_zero());
            REQUIRE((b * common % g).is_zero());
            REQUIRE((g % common).is_zero());
        }
    }
}

TEST_CASE("division by large moduli matches a schoolbook reconstruction") {
    std::mt19937_64 rng(31);
    for (u64 q : {2ULL, 59ULL, 1000003ULL, 2305843009213693951ULL}) {
        FieldSpec F = FieldSpec::prime(q);
        for (int trial = 0; trial < 12; ++trial) {
            Poly b = fxn::testing::random_poly(F, draw(rng, 129, 400), rng);
            Poly a = fxn::testing::random_poly(F, b.degree() + draw(rng, 0, 500), rng);
            auto [quot, rem] = divmod(a, b);
            REQUIRE(rem.degree() < b.degree());
            Vec back = fxn::testing::naive_mul(quot.coeffs(), b.coeffs(), q);
            back.resize(std::max(back.size(), rem.coeffs().size()), 0);
            for (std::size_t i = 0; i < rem.coeffs().size(); ++i) back[i] = addmod(back[i], rem.coeffs()[i], q);
            REQUIRE(fxn::testing::trimmed(back) == a.coeffs());
        }
    }
    FieldSpec F49 = FieldSpec::extension(7, {1, 0, 1});
    Poly b = fxn::testing::random_poly(F49, 300, rng);
    Poly a = fxn::testing::random_poly(F49, 777, rng);
    auto [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
}

TEST_CASE("pow_mod with a large modulus agrees with repeated multiplication") {
    auto F = FieldSpec::prime(59);
    std::mt19937_64 rng(32);
    Poly m = fxn::testing::random_poly(F, 260, rng, true);
    Poly base = fxn::testing::random_poly(F, 300, rng);
    Poly slow = Poly::constant(FieldElement::one(F)) % m;
    for (u64 e = 0; e <= 20; ++e) {
        REQUIRE(pow_mod(base, e, m) == slow);
        slow = slow * base % m;
    }
}

TEST_CASE("modpow_x and pow_mod") {
    auto F59 = FieldSpec::prime(59);
    Poly f = P(F59, {1, -11, 1});
    CHECK(modpow_x(0, f) == P(F59, {1}));
    CHECK(modpow_x(12, f) == P(F59, {1}));
    auto F257 = FieldSpec::prime(257);
    CHECK(modpow_x(5, P(F257, {1, 1, 1, 1, 1})) == P(F257, {1}));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        Poly m = fxn::testing::random_poly(F59, draw(rng, 1, 10), rng, true);
        Poly base = fxn::testing::random_poly(F59, 12, rng);
        Poly slow = P(F59, {1}) % m;
        const u64 e = draw(rng, 0, 40);
        for (u64 i = 0; i < e; ++i) slow = slow * base % m;
        REQUIRE(pow_mod(base, e, m) == slow);
    }
}

TEST_CASE("is_irreducible agrees with a sieve of products") {
    for (u64 q : {2u, 3u, 5u, 13u}) {
        auto F = FieldSpec::prime(q);
        const unsigned top = q == 13 ? 3 : (q == 2 ? 8 : 4);
        for (unsigned d = 1; d <= top; ++d) {
            auto irr = fxn::testing::monic_irreducibles(q, d);
            std::set<Vec> irr_set(irr.begin(), irr.end());
            for (const auto& c : fxn::testing::monic_polys(q, d)) REQUIRE(is_irreducible(Poly(F, c)) == (irr_set.count(c) == 1));
        }
    }
    CHECK(is_irreducible(P(FieldSpec::prime(59), {1, -11, 1})));
    CHECK_FALSE(is_irreducible(P(FieldSpec::prime(13), {-1, 0, 1})));
    CHECK(is_irreducible(P(FieldSpec::prime(257), {1, 1, 1, 1, 1})));
}

TEST_CASE("poly_exponent golden values and errors") {
    auto F59 = FieldSpec::prime(59);
    CHECK(poly_exponent(P(F59, {-1, 1})).e == 1);
    auto info = poly_exponent(P(F59, {1, -11, 1}));
    CHECK(info.e == 12);
    CHECK(info.m == 2);
    CHECK(info.e_factorization == Factorization({{2, 2}, {3, 1}}));
    CHECK(poly_exponent(P(FieldSpec::prime(257), {1, 1, 1, 1, 1})).e == 5);
    CHECK_THROWS_AS(poly_exponent(P(F59, {0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(poly_exponent(P(F59, {-1, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(poly_exponent(P(F59, {2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(poly_exponent(P(FieldSpec::prime(1000003), {3, 0, 0, 0, 1, 1})), std::invalid_argument);
}

TEST_CASE("exponent is the order of x and the degree is ord_e q, by exhaustion") {
    for (u64 q : {2u, 3u, 5u, 7u, 13u}) {
        auto F = FieldSpec::prime(q);
        for (unsigned d = 1; checked_pow(q, d).value_or(kIntegerBound) <= 2500; ++d)
            for (const auto& c : fxn::testing::monic_irreducibles(q, d)) {
                if (c[0] == 0) continue;
                Poly f(F, c);
                auto info = poly_exponent(f);
                // brute force: first power of x congruent to 1
                Poly xp = Poly::x(F) % f;
                u64 brute = 1;
                while (!(xp.degree() == 0 && xp.is_monic())) {
                    xp = xp * Poly::x(F) % f;
                    ++brute;
                }
                REQUIRE(info.e == brute);
                REQUIRE(info.splitting_order() % info.e == 0);
                REQUIRE(multiplicative_order(q, info.e) == d);
                REQUIRE(info.e_factorization.value() == info.e);
            }
    }
}

TEST_CASE("cyclotomic polynomials") {
    auto F59 = FieldSpec::prime(59);
    CHECK(cyclotomic_poly(1, F59) == P(F59, {-1, 1}));
    CHECK(cyclotomic_poly(12, F59) == P(F59, {1, 0, -1, 0, 1}));
    CHECK(cyclotomic_poly(18, F59) == compose_xn(cyclotomic_poly(6, F59), 3));
    CHECK_THROWS_AS(cyclotomic_poly(59, F59), std::invalid_argument);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^n - 1") {
    for (u64 q : {13ULL, 1000003ULL}) {
        auto F = FieldSpec::prime(q);
        for (u64 n = 1; n <= 200; ++n) {
            if (n % q == 0) continue;
            Poly prod = P(F, {1});
            for (u64 d : divisors(n)) prod *= cyclotomic_poly(d, F);
            REQUIRE(prod == x_pow_minus_one(F, n));
        }
    }
}

TEST_CASE("cyclotomic identities under x -> -x and x -> x^p") {
    auto F = FieldSpec::prime(1000003);
    auto negate_x = [&](const Poly& f) {
        Vec c = f.coeffs();
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = F.neg(c[i]);
        return Poly(F, std::move(c));
    };
    for (u64 d = 3; d <= 99; d += 2) REQUIRE(cyclotomic_poly(2 * d, F) == negate_x(cyclotomic_poly(d, F)));
    for (u64 p : {2u, 3u, 5u})
        for (u64 m = 1; m * p * p <= 200; ++m)
            REQUIRE(cyclotomic_poly(m * p * p, F) == compose_xn(cyclotomic_poly(m * p, F), p));
}

TEST_CASE("compose_xn") {
    auto F59 = FieldSpec::prime(59);
    Poly f = P(F59, {1, -11, 1});
    CHECK(compose_xn(f, 1) == f);
    Vec c(59, 0);
    c[0] = 1;
    c[29] = 48;
    c[58] = 1;
    CHECK(compose_xn(f, 29) == Poly(F59, c));
    auto F257 = FieldSpec::prime(257);
    Vec d(1025, 0);
    for (u64 k : {0u, 256u, 512u, 768u, 1024u}) d[k] = 1;
    CHECK(compose_xn(P(F257, {1, 1, 1, 1, 1}), 256) == Poly(F257, d));
}

TEST_CASE("transform_factor") {
    auto F59 = FieldSpec::prime(59);
    Poly g = P(F59, {29, -21, 1});
    FieldElement five(F59, 5);
    CHECK(transform_factor(g, five, 0) == g);
    CHECK(transform_factor(g, five, 1) == P(F59, {46, -16, 1}));
    CHECK(transform_factor(g, FieldElement::one(F59), 17) == g);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Poly h = fxn::testing::random_poly(F59, draw(rng, 1, 8), rng, true);
        FieldElement c(F59, draw(rng, 1, 58));
        auto i = static_cast<std::int64_t>(draw(rng, 0, 60)) - 30, j = static_cast<std::int64_t>(draw(rng, 0, 60)) - 30;
        Poly once = transform_factor(h, c, i);
        REQUIRE(once.is_monic());
        REQUIRE(once.degree() == h.degree());
        REQUIRE(transform_factor(once, c, j) == transform_factor(h, c, i + j));
        // c^{-mj} h(c^j x) evaluated pointwise
        FieldElement cj = c.pow_signed(j);
        for (u64 v = 0; v < 59; v += 7) {
            FieldElement x(F59, v);
            REQUIRE(transform_factor(h, c, j)(x) == cj.pow(static_cast<u64>(h.degree())).inverse() * h(cj * x));
        }
    }
    CHECK_THROWS_AS(transform_factor(P(F59, {1, 2}) * FieldElement(F59, 2), five, 1), std::invalid_argument);
    CHECK_THROWS_AS(transform_factor(g, FieldElement::zero(F59), 1), std::invalid_argument);
}

TEST_CASE("derivative and canonical order") {
    auto F = FieldSpec::prime(5);
    CHECK(derivative(P(F, {1, 2, 3, 0, 0, 1})) == P(F, {2, 1, 0, 0, 0}));
    CHECK(derivative(P(F, {1, 0, 0, 0, 0, 1})) == P(F, {}));
    std::vector<Poly> v{P(F, {2, 1}), P(F, {1, 0, 1}), P(F, {1, 1})};
    sort_canonical(v);
    CHECK(v[0] == P(F, {1, 0, 1}));
    CHECK(v[1] == P(F, {1, 1}));
    CHECK(v[2] == P(F, {2, 1}));
    CHECK(product(v, F) == P(F, {2, 1}) * P(F, {1, 0, 1}) * P(F, {1, 1}));
    CHECK(product(std::vector<Poly>{}, F) == P(F, {1}));
}
