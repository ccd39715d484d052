// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every check is exact arithmetic; each criterion carries a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fqlc/factor.hpp"
#include "fqlc/fields.hpp"
#include "fqlc/frobenius.hpp"
#include "fqlc/sequences.hpp"
#include "fqlc/subfield.hpp"
#include "fqlc/textio.hpp"
#include "support.hpp"

using namespace fqlc;
using namespace fqlc::testing;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool expect(bool ok, std::string& detail, const std::string& what) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

// ---- 1: worked-example golden path, end to end ------------------------------

bool golden_example(std::string& detail) {
    TowerPtr t = build_tower_text(2, std::nullopt, std::string("a^2+a+1"));
    Poly h = P(t, "x^3+a^2*x^2+a^2");
    std::vector<FieldElement> state = {E(t, "a^2"), E(t, "a"), E(t, "a")};
    Sequence seq = lfsr_generate(h, state, 30);

    bool ok = expect(berlekamp_massey(seq) == h, detail, "measured minimal polynomial differs");

    Factorization fz = factor_canonical(h);
    ok = expect(fz.factors.size() == 2, detail, "factor count") && ok;
    ok = expect(fz.factors[0] == std::pair{P(t, "x+a"), 1}, detail, "first factor") && ok;
    ok = expect(fz.factors[1] == std::pair{P(t, "x^2+x+a"), 1}, detail, "second factor") && ok;
    ok = expect(orbit_order(P(t, "x+a")) == 2, detail, "k(x+a)") && ok;
    ok = expect(orbit_order(P(t, "x^2+x+a")) == 2, detail, "k(x^2+x+a)") && ok;

    SubfieldResult result = min_poly_over_base(h);
    ok = expect(result.H == PB(t, "x^6+x^5+x^4+x^3+1"), detail, "H differs") && ok;
    ok = expect(result.L == 6, detail, "L differs") && ok;
    ok = expect(joint_min_poly(decompose_to_base(seq)) == result.H, detail, "oracle disagrees") && ok;
    return ok;
}

// ---- 2: orbit products over the tower set -----------------------------------

bool orbit_product_suite(std::string& detail) {
    std::mt19937_64 rng(1002);
    bool ok = true;
    for (const auto& tower : standard_towers()) {
        int m = tower->ext_degree();
        for (int trial = 0; trial < 200; ++trial) {
            int deg = 1 + int(rng() % 5);
            Poly f = random_irreducible(tower, tower->top_level(), deg, rng);
            SigmaOrbit orb = orbit(f);
            Poly product = orbit_product(f);
            ok = expect(is_irreducible(product), detail, "orbit product not irreducible") && ok;
            ok = expect(product.degree() == orb.k * deg, detail, "orbit product degree") && ok;
            ok = expect(m % orb.k == 0, detail, "orbit order does not divide m") && ok;
            for (const auto& member : orb.members)
                ok = expect(orbit_product(member) == product, detail, "member dependence") && ok;
            if (!ok) return ok;
        }
    }
    return ok;
}

// ---- 3: factoring base irreducibles over the extension ----------------------

bool extension_factor_suite(std::string& detail) {
    std::mt19937_64 rng(1003);
    bool ok = true;
    for (const auto& tower : standard_towers()) {
        int m = tower->ext_degree();
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + int(rng() % 8);
            Poly f = random_irreducible(tower, Level::Base, n, rng);
            int u = std::gcd(n, m);
            SigmaOrbit orb = factor_over_extension(f);
            ok = expect(int(orb.members.size()) == u, detail, "orbit size is not gcd(n, m)") && ok;
            ok = expect(orb.k == u, detail, "orbit order is not gcd(n, m)") && ok;
            Poly product = Poly::one(tower, tower->top_level());
            for (const auto& member : orb.members) {
                ok = expect(member.degree() == n / u, detail, "member degree") && ok;
                product = product * member;
            }
            ok = expect(product == embed(f), detail, "orbit product is not f") && ok;
            if (!ok) return ok;
        }
    }
    return ok;
}

// ---- 4: differential transport suite -----------------------------------------

bool differential_suite(std::string& detail) {
    std::mt19937_64 rng(1004);
    bool ok = true;
    for (const auto& tower : standard_towers()) {
        Level top = tower->top_level();
        int m = tower->ext_degree();
        for (int trial = 0; trial < 300; ++trial) {
            int deg = 1 + int(rng() % 5);
            Poly h = random_monic(tower, top, deg, rng);
            std::vector<FieldElement> state;
            for (int i = 0; i < deg; ++i) state.push_back(random_element(tower, top, rng));
            Sequence seq = lfsr_generate(h, state, std::size_t(2 * m * deg + 2));
            Poly measured = berlekamp_massey(seq);
            SubfieldResult result = min_poly_over_base(measured);
            Poly oracle = joint_min_poly(decompose_to_base(seq));
            ok = expect(result.H == oracle, detail, "transport disagrees with the joint-BM oracle") && ok;
            ok = expect((embed(result.H) % measured).is_zero(), detail, "measured h does not divide H") && ok;
            int complexity_sum = 0;
            for (const auto& row : result.classes) complexity_sum += row.e * row.k * row.deg;
            ok = expect(result.L == complexity_sum && result.L == result.H.degree(), detail,
                        "complexity sum mismatch") && ok;
            if (!ok) return ok;
        }
    }
    return ok;
}

// ---- 5: admissible-h enumeration, bound and tightness (q=2, m=2) -------------

bool enumeration_suite(std::string& detail) {
    TowerPtr t = build_tower_text(2, std::nullopt, std::string("a^2+a+1"));
    bool ok = true;
    for (int deg = 1; deg <= 4 && ok; ++deg) {
        for_each_monic(t, Level::Base, deg, [&](const Poly& f) {
            if (!ok) return;
            std::vector<Poly> all = enumerate_admissible_h(f);

            std::uint64_t expected = 1;
            for (const auto& [r, e] : factor_canonical(f).factors) {
                int u = std::gcd(r.degree(), 2);
                std::uint64_t with_cap = 1, below_cap = 1;
                for (int v = 0; v < u; ++v) {
                    with_cap *= std::uint64_t(e) + 1;
                    below_cap *= std::uint64_t(e);
                }
                expected *= with_cap - below_cap;
            }
            ok = expect(all.size() == expected, detail, "cardinality formula fails for " + format_poly(f)) && ok;

            long long bound = mo_lower_bound(f, 2).bound;
            int min_deg = -1;
            for (const auto& h : all) {
                ok = expect(min_poly_over_base(h).H == f, detail,
                            "enumerated h does not transport to " + format_poly(f)) && ok;
                if (min_deg < 0 || h.degree() < min_deg) min_deg = h.degree();
            }
            ok = expect(min_deg == bound, detail, "minimum degree differs from the bound") && ok;
            for (const auto& h : all) {
                BoundReport report = bound_tightness(f, h);
                ok = expect(report.tight.has_value() && *report.tight == (h.degree() == bound), detail,
                            "tightness predicate mismatch") && ok;
            }
        });
    }
    return ok;
}

// ---- 6: Berlekamp-Massey correctness -----------------------------------------

bool bm_suite(std::string& detail) {
    std::mt19937_64 rng(1006);
    std::vector<TowerPtr> fields = {
        build_tower_text(2, std::nullopt, std::nullopt),
        build_tower_text(3, std::nullopt, std::nullopt),
        build_tower_text(5, std::nullopt, std::nullopt),
        build_tower_text(2, std::nullopt, std::string("a^2+a+1")),
        build_tower_text(2, std::nullopt, std::string("a^3+a+1")),
        build_tower_text(3, std::nullopt, std::string("a^2+1")),
    };
    bool ok = true;
    for (const auto& tower : fields) {
        Level top = tower->top_level();
        for (int trial = 0; trial < 200; ++trial) {
            int deg = 1 + int(rng() % 8);
            Poly f = random_monic(tower, top, deg, rng);
            std::vector<FieldElement> state;
            for (int i = 0; i < deg; ++i) state.push_back(random_element(tower, top, rng));
            Sequence seq = lfsr_generate(f, state, std::size_t(2 * deg));
            Poly measured = berlekamp_massey(seq);
            ok = expect(divides(measured, f), detail, "measured polynomial does not divide the input") && ok;
            std::size_t n = std::size_t(measured.degree());
            std::vector<FieldElement> prefix(seq.terms().begin(), seq.terms().begin() + int(n));
            ok = expect(lfsr_generate(measured, prefix, seq.size()) == seq, detail,
                        "measured polynomial does not regenerate the prefix") && ok;
            if (!ok) return ok;
        }
        Sequence zeros(tower, top, std::vector<FieldElement>(6, tower->zero(top)));
        ok = expect(berlekamp_massey(zeros) == Poly::one(tower, top), detail, "zero prefix convention") && ok;
    }
    return ok;
}

// ---- 7: degenerate towers ------------------------------------------------------

bool degeneracy_suite(std::string& detail) {
    std::mt19937_64 rng(1007);
    bool ok = true;
    std::vector<TowerPtr> m1_towers = {
        build_tower_text(2, std::nullopt, std::nullopt),
        build_tower_text(3, std::nullopt, std::nullopt),
        build_tower_text(5, std::nullopt, std::nullopt),
        build_tower_text(2, std::string("t^2+t+1"), std::nullopt),
    };
    for (const auto& tower : m1_towers) {
        for (int trial = 0; trial < 25; ++trial) {
            Poly h = random_monic(tower, Level::Base, 1 + int(rng() % 6), rng);
            ok = expect(min_poly_over_base(h).H == h, detail, "m = 1 transport is not the identity") && ok;
        }
    }
    TowerPtr t = build_tower_text(2, std::nullopt, std::string("a^2+a+1"));
    for (int trial = 0; trial < 100; ++trial) {
        Poly g = random_monic(t, Level::Base, 1 + int(rng() % 6), rng);
        ok = expect(min_poly_over_base(embed(g)).H == g, detail,
                    "base-coefficient h does not transport to itself") && ok;
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"golden end-to-end worked example", 1.0, golden_example},
        {"orbit products: irreducible over F_q, degree k*deg, member-independent", 30.0, orbit_product_suite},
        {"extension factoring: gcd(n,m) conjugates of degree n/gcd(n,m)", 30.0, extension_factor_suite},
        {"differential transport vs joint-BM oracle, 300 trials per tower", 60.0, differential_suite},
        {"admissible-h enumeration, bound and tightness (q=2, m=2, deg <= 4)", 60.0, enumeration_suite},
        {"Berlekamp-Massey: divisibility, regeneration, zero convention", 10.0, bm_suite},
        {"degenerate towers: m = 1 and base-coefficient h", 5.0, degeneracy_suite},
    };

    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criteria[i].budget_seconds) {
            ok = false;
            detail = "over budget (" + std::to_string(criteria[i].budget_seconds) + " s)";
        }
        std::printf("%s  criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name.c_str(), elapsed, detail.empty() ? "" : " - ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
