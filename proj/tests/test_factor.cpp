#include <doctest.h>

#include <random>

#include "fqlc/factor.hpp"
#include "fqlc/textio.hpp"
#include "support.hpp"

using namespace fqlc;
using namespace fqlc::testing;

TEST_SUITE_BEGIN("factor");

TEST_CASE("squarefree decomposition") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    auto parts = squarefree_decomposition(PB(f2, "(x+1)^2"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == PB(f2, "x+1"));
    CHECK(parts[0].second == 2);

    // derivative vanishes: p-th root path
    parts = squarefree_decomposition(PB(f2, "x^2+1"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == PB(f2, "x+1"));
    CHECK(parts[0].second == 2);

    TowerPtr t = f4();
    parts = squarefree_decomposition(P(t, "x^3+a^2*x^2+a^2"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == P(t, "x^3+a^2*x^2+a^2"));
    CHECK(parts[0].second == 1);

    // mixed multiplicities re-expand exactly
    Poly mixed = PB(f2, "(x+1)^3") * PB(f2, "x^2+x+1");
    parts = squarefree_decomposition(mixed);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair{PB(f2, "x^2+x+1"), 1});
    CHECK(parts[1] == std::pair{PB(f2, "x+1"), 3});
    Poly rebuilt = Poly::one(f2, Level::Base);
    for (const auto& [part, mult] : parts) rebuilt = rebuilt * part.pow(std::uint64_t(mult));
    CHECK(rebuilt == mixed);

    CHECK_THROWS_AS(squarefree_decomposition(Poly::zero(f2, Level::Base)), Error);
}

TEST_CASE("distinct-degree split") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    auto parts = distinct_degree_split(PB(f2, "x^6+x^5+x^4+x^3+1"));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair{PB(f2, "x^2+x+1"), 2});
    CHECK(parts[1] == std::pair{PB(f2, "x^4+x+1"), 4});

    TowerPtr t = f4();
    parts = distinct_degree_split(P(t, "x^2+x+a"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == std::pair{P(t, "x^2+x+a"), 2});

    parts = distinct_degree_split(PB(f2, "x^2+x"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == std::pair{PB(f2, "x^2+x"), 1});

    CHECK_THROWS_WITH_AS(distinct_degree_split(PB(f2, "(x+1)^2")), doctest::Contains("NotSquarefree"), Error);
    CHECK_THROWS_WITH_AS(distinct_degree_split(PB(f2, "x^2+1")), doctest::Contains("NotSquarefree"), Error);
}

TEST_CASE("equal-degree split") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    auto factors = equal_degree_split(PB(f2, "x^2+x"), 1, 0);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == PB(f2, "x"));
    CHECK(factors[1] == PB(f2, "x+1"));

    TowerPtr t = f4();
    // oracle: the roots of x^2+x+1 in F_4 by exhaustive evaluation
    std::vector<FieldElement> roots;
    for (const auto& c : enumerate_elements(t, Level::Ext))
        if (eval(P(t, "x^2+x+1"), c).is_zero()) roots.push_back(c);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == E(t, "a"));
    CHECK(roots[1] == E(t, "a+1"));

    factors = equal_degree_split(P(t, "x^2+x+1"), 1, 0);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == P(t, "x+a"));
    CHECK(factors[1] == P(t, "x+a+1"));

    factors = equal_degree_split(P(t, "x^4+x+1"), 2, 0);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == P(t, "x^2+x+a"));
    CHECK(factors[1] == P(t, "x^2+x+a+1"));

    // deterministic for a fixed seed, canonical across seeds
    CHECK(equal_degree_split(P(t, "x^4+x+1"), 2, 123) == factors);
    CHECK_THROWS_AS(equal_degree_split(PB(f2, "x^2+x"), 3, 0), Error);
}

TEST_CASE("odd-characteristic splitting") {
    TowerPtr f3 = build_tower_text(3, std::nullopt, std::nullopt);
    auto factors = equal_degree_split(PB(f3, "x^2+x"), 1, 0);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == PB(f3, "x"));
    CHECK(factors[1] == PB(f3, "x+1"));

    TowerPtr f9 = build_tower_text(3, std::nullopt, std::string("a^2+1"));
    Factorization fz = factor_canonical(P(f9, "x^2+1"));  // splits over F_9: (x+a)(x-a)
    REQUIRE(fz.factors.size() == 2);
    CHECK(fz.factors[0].first == P(f9, "x+a"));
    CHECK(fz.factors[1].first == P(f9, "x+2*a"));
}

TEST_CASE("canonical factorization") {
    TowerPtr t = f4();
    Factorization fz = factor_canonical(P(t, "x^3+a^2*x^2+a^2"));
    CHECK(fz.unit.is_one());
    REQUIRE(fz.factors.size() == 2);
    CHECK(fz.factors[0] == std::pair{P(t, "x+a"), 1});
    CHECK(fz.factors[1] == std::pair{P(t, "x^2+x+a"), 1});
    CHECK(fz.expand() == P(t, "x^3+a^2*x^2+a^2"));

    fz = factor_canonical(Poly::one(t, Level::Ext));
    CHECK(fz.unit.is_one());
    CHECK(fz.factors.empty());

    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    fz = factor_canonical(PB(f2, "x^6+x^5+x^4+x^3+1"));
    REQUIRE(fz.factors.size() == 2);
    CHECK(fz.factors[0] == std::pair{PB(f2, "x^2+x+1"), 1});
    CHECK(fz.factors[1] == std::pair{PB(f2, "x^4+x+1"), 1});

    TowerPtr f3 = build_tower_text(3, std::nullopt, std::nullopt);
    fz = factor_canonical(PB(f3, "2*x^2+2*x"));
    CHECK(format_element(fz.unit) == "2");
    REQUIRE(fz.factors.size() == 2);
    CHECK(fz.expand() == PB(f3, "2*x^2+2*x"));

    CHECK_THROWS_AS(factor_canonical(Poly::zero(f3, Level::Base)), Error);
}

TEST_CASE("irreducibility") {
    TowerPtr f2 = build_tower_text(2, std::nullopt, std::nullopt);
    TowerPtr t = f4();
    CHECK(is_irreducible(PB(f2, "x^2+x+1")));
    CHECK(!is_irreducible(P(t, "x^2+x+1")));
    CHECK(is_irreducible(PB(f2, "x^4+x+1")));
    CHECK(!is_irreducible(PB(f2, "x^4+x^2+1")));
    CHECK_THROWS_AS(is_irreducible(PB(f2, "0")), Error);
}

TEST_CASE("factorization re-expands on random inputs") {
    std::mt19937_64 rng(42);
    std::vector<TowerPtr> towers = {
        build_tower_text(2, std::nullopt, std::nullopt),
        build_tower_text(3, std::nullopt, std::nullopt),
        f4(),
        build_tower_text(2, std::nullopt, std::string("a^3+a+1")),
        build_tower_text(3, std::nullopt, std::string("a^2+1")),
    };
    for (const auto& tower : towers) {
        Level top = tower->top_level();
        for (int iter = 0; iter < 100; ++iter) {
            int deg = 1 + int(rng() % 10);
            Poly f = random_monic(tower, top, deg, rng);
            FieldElement unit = random_element(tower, top, rng);
            if (unit.is_zero()) unit = tower->one(top);
            f = f * Poly::constant(unit);
            Factorization fz = factor_canonical(f);
            CHECK(fz.expand() == f);
            for (std::size_t i = 0; i < fz.factors.size(); ++i) {
                CHECK(fz.factors[i].second >= 1);
                CHECK(is_irreducible(fz.factors[i].first));
                if (i > 0) CHECK(poly_less(fz.factors[i - 1].first, fz.factors[i].first));
            }
        }
    }
}

TEST_CASE("factorization matches the trial-division oracle") {
    std::mt19937_64 rng(99);
    std::vector<TowerPtr> towers = {
        build_tower_text(2, std::nullopt, std::nullopt),
        build_tower_text(3, std::nullopt, std::nullopt),
        f4(),
        build_tower_text(5, std::nullopt, std::nullopt),
        build_tower_text(2, std::nullopt, std::string("a^3+a+1")),
        build_tower_text(3, std::nullopt, std::string("a^2+1")),
    };
    for (const auto& tower : towers) {
        Level top = tower->top_level();
        std::uint64_t size = tower->level_size(top);
        int max_exhaustive = size <= 5 ? 4 : 3;
        for (int deg = 1; deg <= max_exhaustive; ++deg) {
            for_each_monic(tower, top, deg, [&](const Poly& f) {
                auto expected = brute_force_factor(f);
                Factorization fz = factor_canonical(f);
                CHECK(fz.factors == expected);
            });
        }
        if (size > 5) {
            for (int iter = 0; iter < 150; ++iter) {
                Poly f = random_monic(tower, top, 4, rng);
                CHECK(factor_canonical(f).factors == brute_force_factor(f));
            }
        }
    }
}

TEST_CASE("irreducibility agrees with trial division up to F_16") {
    std::mt19937_64 rng(5);
    TowerPtr f16 = build_tower_text(2, std::nullopt, std::string("a^4+a+1"));
    for (int deg = 1; deg <= 3; ++deg)
        for_each_monic(f16, Level::Ext, deg,
                       [&](const Poly& f) { CHECK(is_irreducible(f) == trial_division_irreducible(f)); });
    for (int iter = 0; iter < 100; ++iter) {
        Poly f = random_monic(f16, Level::Ext, 4, rng);
        CHECK(is_irreducible(f) == trial_division_irreducible(f));
    }
}

TEST_SUITE_END();
