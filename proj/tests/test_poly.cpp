#include <doctest.h>

#include <random>

#include "fqlc/poly.hpp"
#include "fqlc/textio.hpp"
#include "support.hpp"

using namespace fqlc;
using namespace fqlc::testing;

TEST_SUITE_BEGIN("poly");

TEST_CASE("ring arithmetic") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    CHECK(PB(f2, "x+1") * PB(f2, "x+1") == PB(f2, "x^2+1"));

    TowerPtr t = f4();
    CHECK(P(t, "x+a") * P(t, "x+a+1") == P(t, "x^2+x+1"));

    auto [q, r] = divrem(P(t, "x^3+a^2*x^2+a^2"), P(t, "x+a"));
    CHECK(r.is_zero());
    CHECK(q == P(t, "x^2+x+a"));
}

TEST_CASE("divrem round-trips and bounds the remainder") {
    std::mt19937_64 rng(7);
    for (const auto& tower : standard_towers()) {
        Level top = tower->top_level();
        for (int iter = 0; iter < 50; ++iter) {
            Poly f = random_monic(tower, top, 1 + int(rng() % 8), rng) *
                     Poly::constant(random_element(tower, top, rng));
            Poly g = random_monic(tower, top, 1 + int(rng() % 4), rng);
            auto [q, r] = divrem(f, g);
            CHECK(q * g + r == f);
            CHECK((r.is_zero() || r.degree() < g.degree()));
        }
    }
    TowerPtr t = f4();
    CHECK_THROWS_AS(divrem(P(t, "x"), Poly::zero(t, Level::Ext)), Error);
}

TEST_CASE("gcd and lcm") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    CHECK(gcd(PB(f2, "x^2+1"), PB(f2, "x+1")) == PB(f2, "x+1"));
    CHECK(gcd(PB(f2, "x^2+x+1"), PB(f2, "x^4+x+1")) == Poly::one(f2, Level::Base));

    TowerPtr t = f4();
    CHECK(lcm(P(t, "x+a"), P(t, "x+a")) == P(t, "x+a"));
    CHECK(gcd(P(t, "x+a"), Poly::zero(t, Level::Ext)) == P(t, "x+a"));
    CHECK_THROWS_AS(gcd(Poly::zero(t, Level::Ext), Poly::zero(t, Level::Ext)), Error);

    // gcd divides both arguments and every common divisor divides the gcd
    for_each_monic(f2, Level::Base, 3, [&](const Poly& f) {
        for_each_monic(f2, Level::Base, 2, [&](const Poly& g) {
            Poly d = gcd(f, g);
            CHECK(divides(d, f));
            CHECK(divides(d, g));
            for (int k = 1; k <= 2; ++k)
                for_each_monic(f2, Level::Base, k, [&](const Poly& h) {
                    if (divides(h, f) && divides(h, g)) CHECK(divides(h, d));
                });
        });
    });
}

TEST_CASE("derivative, powmod, eval, make_monic") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    CHECK(derivative(PB(f2, "x^4+x+1")) == Poly::one(f2, Level::Base));
    CHECK(powmod(PB(f2, "x"), 4, PB(f2, "x^2+x+1")) == PB(f2, "x"));

    TowerPtr t = f4();
    CHECK(eval(P(t, "x^2+x+a"), E(t, "a")) == E(t, "a+1"));
    CHECK(eval(P(t, "x^2+x+a"), t->zero(Level::Ext)) == E(t, "a"));

    TowerPtr f3 = build_tower_text(3, std::nullopt, std::nullopt);
    CHECK(make_monic(PB(f3, "2*x^2+1")) == PB(f3, "x^2+2"));
    CHECK_THROWS_AS(make_monic(Poly::zero(f3, Level::Base)), Error);
    CHECK_THROWS_AS(Poly::zero(f3, Level::Base).degree(), Error);
}

TEST_CASE("eval is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (const auto& tower : standard_towers()) {
        Level top = tower->top_level();
        for (int iter = 0; iter < 30; ++iter) {
            Poly f = random_monic(tower, top, int(rng() % 5), rng);
            Poly g = random_monic(tower, top, int(rng() % 5), rng);
            FieldElement c = random_element(tower, top, rng);
            CHECK(eval(f * g, c) == eval(f, c) * eval(g, c));
            CHECK(eval(f + g, c) == eval(f, c) + eval(g, c));
        }
    }
}

TEST_CASE("canonical polynomial order is degree then constant-first lex") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    CHECK(poly_less(PB(f2, "x+1"), PB(f2, "x^2")));
    CHECK(poly_less(PB(f2, "x^2+x"), PB(f2, "x^2+1")));  // (0,1,1) before (1,0,1)
    CHECK(!poly_less(PB(f2, "x"), PB(f2, "x")));
    CHECK(poly_less(Poly::zero(f2, Level::Base), PB(f2, "x")));
}

TEST_SUITE_END();
