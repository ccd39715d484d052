#include "fqlc/frobenius.hpp"

#include <algorithm>
#include <cassert>

namespace fqlc {

namespace {

void check_top_level(const Poly& f, const char* what) {
    require(f.level() == f.tower()->top_level(), ErrorCode::LevelMismatch,
            std::string(what) + " acts on the tower's top level");
}

}  // namespace

Poly embed(const Poly& f) {
    require(f.level() == Level::Base, ErrorCode::LevelMismatch, "embed takes a base-level polynomial");
    if (!f.tower()->has_ext_modulus()) return f;
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(embed(c));
    return Poly::from_coeffs(f.tower(), Level::Ext, std::move(coeffs));
}

Poly project(const Poly& f) {
    check_top_level(f, "project");
    if (!f.tower()->has_ext_modulus()) return f;
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(project(c));
    return Poly::from_coeffs(f.tower(), Level::Base, std::move(coeffs));
}

Poly sigma(const Poly& f) {
    check_top_level(f, "sigma");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs.push_back(frobenius_q(c));
    return Poly::from_coeffs(f.tower(), f.level(), std::move(coeffs));
}

Poly sigma_iter(const Poly& f, std::uint64_t j) {
    check_top_level(f, "sigma");
    std::uint64_t m = std::uint64_t(f.tower()->ext_degree());
    Poly out = f;
    for (std::uint64_t i = 0; i < j % m; ++i) out = sigma(out);
    return out;
}

int orbit_order(const Poly& f) {
    check_top_level(f, "orbit_order");
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "orbit order of the zero polynomial is undefined");
    int m = f.tower()->ext_degree();
    Poly g = sigma(f);
    for (int k = 1; k <= m; ++k) {
        if (g == f) {
            assert(m % k == 0);
            return k;
        }
        g = sigma(g);
    }
    assert(false && "sigma^m must fix every polynomial");
    return m;
}

SigmaOrbit orbit(const Poly& f) {
    check_top_level(f, "orbit");
    require(is_irreducible(f), ErrorCode::NotIrreducible, "orbits are materialized for monic irreducibles only");
    std::vector<Poly> members;
    Poly g = f;
    do {
        members.push_back(g);
        g = sigma(g);
    } while (!(g == f));
    auto least = std::min_element(members.begin(), members.end(), poly_less);
    std::rotate(members.begin(), least, members.end());
    SigmaOrbit out{members.front(), std::move(members), 0};
    out.k = int(out.members.size());
    return out;
}

Poly orbit_product(const Poly& f) {
    SigmaOrbit orb = orbit(f);
    Poly prod = Poly::one(f.tower(), f.level());
    for (const auto& member : orb.members) prod = prod * member;
    // Theorem guarantee: the orbit product is fixed by sigma, so every
    // coefficient lies in the embedded base field.
    return project(prod);
}

SigmaClassPartition partition_classes(const Factorization& fz) {
    SigmaClassPartition out;
    for (const auto& [factor, mult] : fz.factors) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (std::any_of(cls.orbit.members.begin(), cls.orbit.members.end(),
                            [&](const Poly& member) { return member == factor; })) {
                cls.present.emplace_back(factor, mult);
                placed = true;
                break;
            }
        }
        if (!placed) {
            SigmaClass cls{orbit(factor), {}};
            cls.present.emplace_back(factor, mult);
            out.classes.push_back(std::move(cls));
        }
    }
    std::sort(out.classes.begin(), out.classes.end(), [](const SigmaClass& a, const SigmaClass& b) {
        return poly_less(a.orbit.representative, b.orbit.representative);
    });
    for (auto& cls : out.classes) {
        auto& members = cls.orbit.members;
        std::sort(cls.present.begin(), cls.present.end(), [&](const auto& a, const auto& b) {
            auto pos = [&](const Poly& f) {
                return std::find_if(members.begin(), members.end(), [&](const Poly& g) { return g == f; }) -
                       members.begin();
            };
            return pos(a.first) < pos(b.first);
        });
    }
    return out;
}

SigmaOrbit factor_over_extension(const Poly& f) {
    require(f.level() == Level::Base, ErrorCode::LevelMismatch,
            "factor_over_extension takes a base-level polynomial");
    require(is_irreducible(f), ErrorCode::NotIrreducible, "input must be a monic irreducible over F_q");
    Poly lifted = embed(f);
    Factorization fz = factor_canonical(lifted);
    assert(!fz.factors.empty());
    return orbit(fz.factors.front().first);  // factors are canonically sorted: front is lex-least
}

}  // namespace fqlc
