#ifndef FQLC_TESTS_SUPPORT_HPP
#define FQLC_TESTS_SUPPORT_HPP

#include <functional>
#include <random>
#include <vector>

#include "fqlc/factor.hpp"
#include "fqlc/fields.hpp"
#include "fqlc/poly.hpp"
#include "fqlc/textio.hpp"

namespace fqlc::testing {

inline TowerPtr f4() { return build_tower_text(2, std::nullopt, std::string("a^2+a+1")); }

// the tower set used by the randomized suites: (q, m) with default moduli
inline std::vector<TowerPtr> standard_towers() {
    return {
        build_tower_text(2, std::nullopt, std::string("a^2+a+1")),          // (2,2)
        build_tower_text(2, std::nullopt, std::string("a^3+a+1")),          // (2,3)
        build_tower_text(2, std::nullopt, std::string("a^4+a+1")),          // (2,4)
        build_tower_text(3, std::nullopt, std::string("a^2+1")),            // (3,2)
        build_tower_text(2, std::string("t^2+t+1"), std::string("a^2+t*a+1")),  // (4,2)
    };
}

inline Poly P(const TowerPtr& tower, const std::string& text) {
    return parse_poly(text, tower, tower->top_level());
}
inline Poly PB(const TowerPtr& tower, const std::string& text) {
    return parse_poly(text, tower, Level::Base);
}
inline FieldElement E(const TowerPtr& tower, const std::string& text) {
    return parse_element(text, tower, tower->top_level());
}

inline FieldElement random_element(const TowerPtr& tower, Level level, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, tower->level_size(level) - 1);
    return tower->from_encoding(level, dist(rng));
}

// uniformly random monic polynomial of exactly this degree
inline Poly random_monic(const TowerPtr& tower, Level level, int deg, std::mt19937_64& rng) {
    std::vector<FieldElement> coeffs;
    for (int i = 0; i < deg; ++i) coeffs.push_back(random_element(tower, level, rng));
    coeffs.push_back(tower->one(level));
    return Poly::from_coeffs(tower, level, std::move(coeffs));
}

inline Poly random_irreducible(const TowerPtr& tower, Level level, int deg, std::mt19937_64& rng) {
    while (true) {
        Poly candidate = random_monic(tower, level, deg, rng);
        if (is_irreducible(candidate)) return candidate;
    }
}

// all monic polynomials of exact degree, constant-first lex order
inline void for_each_monic(const TowerPtr& tower, Level level, int deg,
                           const std::function<void(const Poly&)>& fn) {
    std::uint64_t size = tower->level_size(level);
    std::vector<std::uint64_t> codes(std::size_t(deg), 0);
    while (true) {
        std::vector<FieldElement> coeffs;
        for (auto code : codes) coeffs.push_back(tower->from_encoding(level, code));
        coeffs.push_back(tower->one(level));
        fn(Poly::from_coeffs(tower, level, std::move(coeffs)));
        int pos = deg - 1;
        while (pos >= 0 && codes[std::size_t(pos)] == size - 1) codes[std::size_t(pos--)] = 0;
        if (pos < 0) break;
        ++codes[std::size_t(pos)];
    }
}

// independent irreducibility oracle: trial division by every monic polynomial
// of degree 1 .. deg(f)/2
inline bool trial_division_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    bool reducible = false;
    for (int d = 1; 2 * d <= f.degree() && !reducible; ++d)
        for_each_monic(f.tower(), f.level(), d, [&](const Poly& g) {
            if (!reducible && divides(g, f)) reducible = true;
        });
    return !reducible;
}

// independent factorization oracle: peel off the canonically-smallest monic
// divisor repeatedly (the smallest-degree divisor is automatically irreducible)
inline std::vector<std::pair<Poly, int>> brute_force_factor(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly rest = make_monic(f);
    while (rest.degree() >= 1) {
        Poly divisor = rest;  // fallback: rest itself is irreducible
        bool found = false;
        for (int d = 1; 2 * d <= rest.degree() && !found; ++d)
            for_each_monic(rest.tower(), rest.level(), d, [&](const Poly& g) {
                if (!found && divides(g, rest)) {
                    divisor = g;
                    found = true;
                }
            });
        int mult = 0;
        while (divides(divisor, rest)) {
            rest = rest / divisor;
            ++mult;
        }
        out.emplace_back(divisor, mult);
    }
    return out;
}

}  // namespace fqlc::testing

#endif
