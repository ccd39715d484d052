#include "fqlc/subfield.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace fqlc {

namespace {

void check_monic_top(const Poly& h) {
    require(!h.is_zero(), ErrorCode::ZeroPolynomial, "expected a monic polynomial, got zero");
    require(h.is_monic(), ErrorCode::NotMonic, "expected a monic polynomial");
    require(h.level() == h.tower()->top_level(), ErrorCode::LevelMismatch,
            "h must live at the tower's top level");
}

void check_monic_base(const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "expected a monic polynomial, got zero");
    require(f.is_monic(), ErrorCode::NotMonic, "expected a monic polynomial");
    require(f.level() == Level::Base, ErrorCode::LevelMismatch, "f must live at the base level");
}

ClassRow make_class_row(const SigmaClass& cls) {
    std::vector<int> exponents(cls.orbit.members.size(), 0);
    for (const auto& [member, mult] : cls.present) {
        auto it = std::find_if(cls.orbit.members.begin(), cls.orbit.members.end(),
                               [&](const Poly& g) { return g == member; });
        assert(it != cls.orbit.members.end());
        exponents[std::size_t(it - cls.orbit.members.begin())] = mult;
    }
    int e = *std::max_element(exponents.begin(), exponents.end());
    return ClassRow{cls.orbit.representative,
                    cls.orbit.k,
                    cls.orbit.representative.degree(),
                    cls.orbit.members,
                    std::move(exponents),
                    e,
                    orbit_product(cls.orbit.representative)};
}

// extension orbits of the factors of f, paired with f's multiplicities
struct BaseClass {
    SigmaOrbit orbit;
    int e = 0;
    int n = 0;  // degree of the base-level irreducible
};

std::vector<BaseClass> base_classes(const Poly& f) {
    std::vector<BaseClass> out;
    for (const auto& [r, e] : factor_canonical(f).factors)
        out.push_back(BaseClass{factor_over_extension(r), e, r.degree()});
    return out;
}

}  // namespace

SubfieldResult min_poly_over_base(const Poly& h) {
    check_monic_top(h);
    const TowerPtr& tower = h.tower();
    SubfieldResult out{Poly::one(tower, Level::Base), 0, {}};
    if (h.degree() == 0) return out;
    SigmaClassPartition partition = partition_classes(factor_canonical(h));
    int complexity = 0;
    for (const auto& cls : partition.classes) {
        ClassRow row = make_class_row(cls);
        out.H = out.H * row.orbit_prod.pow(std::uint64_t(row.e));
        complexity += row.e * row.k * row.deg;
        out.classes.push_back(std::move(row));
    }
    out.L = out.H.degree();
    assert(out.L == complexity);
    return out;
}

int linear_complexity_over_base(const Poly& h) {
    check_monic_top(h);
    if (h.degree() == 0) return 0;
    int complexity = 0;
    for (const auto& cls : partition_classes(factor_canonical(h)).classes) {
        int e = 0;
        for (const auto& [member, mult] : cls.present) e = std::max(e, mult);
        complexity += e * cls.orbit.k * cls.orbit.representative.degree();
    }
    assert(complexity == min_poly_over_base(h).H.degree());
    return complexity;
}

bool admissible_h(const Poly& f, const Poly& h) {
    check_monic_base(f);
    check_monic_top(h);
    require(f.tower()->same_structure(*h.tower()), ErrorCode::TowerMismatch,
            "f and h must come from the same tower");
    if (f.degree() == 0) return h.degree() == 0;
    if (h.degree() == 0) return false;

    std::vector<BaseClass> classes = base_classes(f);
    std::vector<std::vector<int>> exponents(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i)
        exponents[i].assign(classes[i].orbit.members.size(), 0);

    bool ok = true;
    for (const auto& [factor, mult] : factor_canonical(h).factors) {
        bool found = false;
        for (std::size_t i = 0; i < classes.size() && !found; ++i) {
            const auto& members = classes[i].orbit.members;
            for (std::size_t v = 0; v < members.size(); ++v) {
                if (members[v] == factor) {
                    exponents[i][v] = mult;
                    found = true;
                    break;
                }
            }
        }
        if (!found) {  // a factor of h outside every orbit of f's factors
            ok = false;
            break;
        }
    }
    if (ok) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            int mx = *std::max_element(exponents[i].begin(), exponents[i].end());
            if (mx != classes[i].e) {
                ok = false;
                break;
            }
        }
    }
    assert(ok == (min_poly_over_base(h).H == f));
    return ok;
}

std::vector<Poly> enumerate_admissible_h(const Poly& f, std::uint64_t cap) {
    check_monic_base(f);
    const TowerPtr& tower = f.tower();
    Level top = tower->top_level();
    if (f.degree() == 0) return {Poly::one(tower, top)};

    std::vector<BaseClass> classes = base_classes(f);
    std::uint64_t scan = 1;
    for (const auto& cls : classes) {
        for (std::size_t v = 0; v < cls.orbit.members.size(); ++v) {
            std::uint64_t width = std::uint64_t(cls.e) + 1;
            require(scan <= cap / width, ErrorCode::EnumerationTooLarge,
                    "admissible-h enumeration exceeds the cap");
            scan *= width;
        }
    }

    // per class: all products with exponent vectors over the orbit whose
    // maximum is exactly e
    std::vector<std::vector<Poly>> choices;
    for (const auto& cls : classes) {
        std::vector<Poly> opts;
        std::size_t u = cls.orbit.members.size();
        std::vector<int> vec(u, 0);
        while (true) {
            if (*std::max_element(vec.begin(), vec.end()) == cls.e) {
                Poly prod = Poly::one(tower, top);
                for (std::size_t v = 0; v < u; ++v)
                    if (vec[v] > 0) prod = prod * cls.orbit.members[v].pow(std::uint64_t(vec[v]));
                opts.push_back(std::move(prod));
            }
            std::size_t pos = 0;
            while (pos < u && vec[pos] == cls.e) vec[pos++] = 0;
            if (pos == u) break;
            ++vec[pos];
        }
        choices.push_back(std::move(opts));
    }

    std::vector<Poly> out = {Poly::one(tower, top)};
    for (const auto& opts : choices) {
        std::vector<Poly> next;
        next.reserve(out.size() * opts.size());
        for (const auto& partial : out)
            for (const auto& opt : opts) next.push_back(partial * opt);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

BoundReport mo_lower_bound(const Poly& f, int m) {
    check_monic_base(f);
    require(f.degree() >= 1, ErrorCode::BadInput, "bound requires deg(f) >= 1");
    require(m >= 1, ErrorCode::BadInput, "m must be >= 1");
    BoundReport report;
    for (const auto& [r, e] : factor_canonical(f).factors) {
        int n = r.degree();
        report.bound += (long long)(e) * (n / std::gcd(n, m));
    }
    return report;
}

BoundReport bound_tightness(const Poly& f, const Poly& h) {
    require(admissible_h(f, h), ErrorCode::NotAdmissible,
            "h is not a valid minimal polynomial over F_{q^m} for f");
    BoundReport report = mo_lower_bound(f, h.tower()->ext_degree());

    std::vector<BaseClass> classes = base_classes(f);
    Factorization hz = factor_canonical(h);
    bool tight = true;
    std::vector<std::pair<Poly, int>> witness;
    for (const auto& cls : classes) {
        int chosen = 0;
        std::pair<Poly, int> pick{cls.orbit.representative, 0};
        for (const auto& [factor, mult] : hz.factors) {
            for (const auto& member : cls.orbit.members) {
                if (member == factor) {
                    ++chosen;
                    pick = {factor, mult};
                }
            }
        }
        if (chosen != 1 || pick.second != cls.e) {
            tight = false;
            break;
        }
        witness.push_back(std::move(pick));
    }
    report.tight = tight;
    if (tight) report.witness = std::move(witness);
    assert(h.degree() >= report.bound && (h.degree() == report.bound) == tight);
    return report;
}

}  // namespace fqlc
