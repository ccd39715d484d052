#include "fqlc/sequences.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace fqlc {

namespace {

// inverse of a modulo mod (gcd(a, mod) = 1); zero polynomial for deg(mod) = 0
Poly inverse_mod(const Poly& a, const Poly& mod) {
    if (mod.degree() == 0) return Poly::zero(a.tower(), a.level());
    Poly r0 = mod, r1 = a % mod;
    Poly s0 = Poly::zero(a.tower(), a.level()), s1 = Poly::one(a.tower(), a.level());
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    require(r0.degree() == 0, ErrorCode::NotCoprime, "no inverse: arguments are not coprime");
    return (s0 * r0.leading().inv()) % mod;
}

// (g(T) seq)_n = sum_j g_j s_{n+j}, defined for n < N - deg(g)
std::vector<FieldElement> apply_shift_poly(const Poly& g, const Sequence& seq) {
    std::vector<FieldElement> out;
    if (g.is_zero()) {
        out.assign(seq.size(), seq.tower()->zero(seq.level()));
        return out;
    }
    int dg = g.degree();
    for (std::size_t n = 0; n + std::size_t(dg) < seq.size(); ++n) {
        FieldElement acc = seq.tower()->zero(seq.level());
        for (int j = 0; j <= dg; ++j) acc = acc + g.coeff(j) * seq[n + std::size_t(j)];
        out.push_back(std::move(acc));
    }
    return out;
}

bool satisfies_recurrence(const Poly& f, const Sequence& seq) {
    if (f.is_zero()) return false;
    std::vector<FieldElement> image = apply_shift_poly(f, seq);
    return std::all_of(image.begin(), image.end(), [](const FieldElement& c) { return c.is_zero(); });
}

}  // namespace

Sequence::Sequence(TowerPtr tower, Level level, std::vector<FieldElement> terms)
    : tower_(std::move(tower)), level_(level), terms_(std::move(terms)) {
    for (const auto& term : terms_) {
        require(term.level() == level_, ErrorCode::LevelMismatch, "sequence term at wrong level");
        require(term.tower()->same_structure(*tower_), ErrorCode::TowerMismatch,
                "sequence term from a different tower");
    }
}

Sequence lfsr_generate(const Poly& char_poly, const std::vector<FieldElement>& initial, std::size_t n_terms) {
    require(!char_poly.is_zero(), ErrorCode::ZeroPolynomial, "characteristic polynomial is zero");
    require(char_poly.is_monic(), ErrorCode::NotMonic, "characteristic polynomial must be monic");
    std::size_t n = std::size_t(char_poly.degree());
    require(initial.size() == n, ErrorCode::BadStateLength, "initial state length must equal the degree");
    const TowerPtr& tower = char_poly.tower();
    Level level = char_poly.level();
    std::vector<FieldElement> terms;
    terms.reserve(n_terms);
    for (std::size_t i = 0; i < initial.size() && i < n_terms; ++i) {
        require(initial[i].level() == level, ErrorCode::LevelMismatch, "initial state at wrong level");
        terms.push_back(initial[i]);
    }
    while (terms.size() < n_terms) {
        FieldElement acc = tower->zero(level);
        std::size_t k = terms.size() - n;
        for (std::size_t i = 0; i < n; ++i) acc = acc + char_poly.coeff(int(i)) * terms[k + i];
        terms.push_back(-acc);
    }
    return Sequence(tower, level, std::move(terms));
}

Poly berlekamp_massey(const Sequence& seq) {
    const TowerPtr& tower = seq.tower();
    Level level = seq.level();
    Poly conn = Poly::one(tower, level);  // C(x): s_n = -sum_{i>=1} C_i s_{n-i}
    Poly prev = Poly::one(tower, level);
    int complexity = 0;
    int gap = 1;
    FieldElement prev_disc = tower->one(level);
    for (std::size_t n = 0; n < seq.size(); ++n) {
        FieldElement disc = seq[n];
        for (int i = 1; i <= std::min(complexity, int(n)); ++i)
            disc = disc + conn.coeff(i) * seq[n - std::size_t(i)];
        if (disc.is_zero()) {
            ++gap;
        } else if (2 * complexity <= int(n)) {
            Poly keep = conn;
            conn = conn - Poly::monomial(disc / prev_disc, gap) * prev;
            complexity = int(n) + 1 - complexity;
            prev = std::move(keep);
            prev_disc = disc;
            gap = 1;
        } else {
            conn = conn - Poly::monomial(disc / prev_disc, gap) * prev;
            ++gap;
        }
    }
    // reciprocal: h(x) = x^L C(1/x), monic because C(0) = 1
    std::vector<FieldElement> coeffs;
    coeffs.reserve(std::size_t(complexity) + 1);
    for (int i = complexity; i >= 0; --i) coeffs.push_back(conn.coeff(i));
    return Poly::from_coeffs(tower, level, std::move(coeffs));
}

MultiSequence decompose_to_base(const Sequence& seq) {
    const TowerPtr& tower = seq.tower();
    require(seq.level() == tower->top_level(), ErrorCode::LevelMismatch,
            "decompose_to_base takes a top-level sequence");
    int m = tower->has_ext_modulus() ? tower->ext_degree() : 1;
    std::vector<std::vector<FieldElement>> columns(static_cast<std::size_t>(m));
    for (const auto& term : seq.terms()) {
        std::vector<FieldElement> coords = term.coeffs();
        for (int j = 0; j < m; ++j) columns[std::size_t(j)].push_back(coords[std::size_t(j)]);
    }
    MultiSequence out;
    for (auto& column : columns) out.components.emplace_back(tower, Level::Base, std::move(column));
    return out;
}

Poly joint_min_poly(const MultiSequence& ms) {
    require(!ms.components.empty(), ErrorCode::BadInput, "multisequence has no components");
    Poly acc = Poly::one(ms.components.front().tower(), ms.components.front().level());
    for (const auto& component : ms.components) acc = lcm(acc, berlekamp_massey(component));
    return acc;
}

std::vector<Sequence> decompose_by_coprime_factors(const Sequence& seq, const std::vector<Poly>& parts) {
    require(!parts.empty(), ErrorCode::BadInput, "no factors given");
    const TowerPtr& tower = seq.tower();
    Level level = seq.level();
    Poly product = Poly::one(tower, level);
    int max_part_deg = 0;
    for (const auto& part : parts) {
        require(!part.is_zero(), ErrorCode::ZeroPolynomial, "factor is zero");
        require(part.is_monic(), ErrorCode::NotMonic, "factors must be monic");
        require(part.level() == level && part.tower()->same_structure(*tower), ErrorCode::LevelMismatch,
                "factor at wrong level");
        product = product * part;
        max_part_deg = std::max(max_part_deg, part.degree());
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            require(gcd(parts[i], parts[j]).degree() == 0, ErrorCode::NotCoprime,
                    "factors are not pairwise coprime");

    if (product.degree() == 0) {
        // product 1 is a characteristic polynomial of the zero sequence only
        bool all_zero = std::all_of(seq.terms().begin(), seq.terms().end(),
                                    [](const FieldElement& c) { return c.is_zero(); });
        require(all_zero, ErrorCode::NotCharacteristic, "1 generates only the zero sequence");
        return std::vector<Sequence>(parts.size(), seq);
    }

    require(seq.size() >= std::size_t(product.degree() + max_part_deg), ErrorCode::PrefixTooShort,
            "prefix must hold at least deg(product) + max part degree terms");
    require(satisfies_recurrence(product, seq), ErrorCode::NotCharacteristic,
            "the product is not a characteristic polynomial of the prefix");

    std::vector<Sequence> out;
    for (const auto& part : parts) {
        // CRT idempotent: c = 1 mod part, c = 0 mod every other factor
        Poly cofactor = product / part;
        Poly idem = (inverse_mod(cofactor, part) * cofactor) % product;
        std::vector<FieldElement> raw = apply_shift_poly(idem, seq);
        if (part.degree() == 0) {
            out.emplace_back(tower, level, std::vector<FieldElement>(seq.size(), tower->zero(level)));
            continue;
        }
        // raw holds enough true terms of the component to regenerate it fully
        std::vector<FieldElement> state(raw.begin(), raw.begin() + part.degree());
        out.push_back(lfsr_generate(part, state, seq.size()));
    }
    return out;
}

VerifyReport verify_subfield_minpoly(const Poly& h, int trials, std::uint64_t seed) {
    require(!h.is_zero(), ErrorCode::ZeroPolynomial, "h is zero");
    require(h.is_monic(), ErrorCode::NotMonic, "h must be monic");
    require(h.degree() >= 1, ErrorCode::BadInput, "h must have degree >= 1");
    const TowerPtr& tower = h.tower();
    Level level = tower->top_level();
    require(h.level() == level, ErrorCode::LevelMismatch, "h must live at the tower's top level");

    int n = h.degree();
    int m = tower->has_ext_modulus() ? tower->ext_degree() : 1;
    std::size_t n_terms = std::size_t(2 * m * n + 2);
    std::uint64_t size = tower->level_size(level);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, size - 1);

    VerifyReport report;
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<FieldElement> initial;
        for (int i = 0; i < n; ++i) initial.push_back(tower->from_encoding(level, dist(rng)));
        Sequence seq = lfsr_generate(h, initial, n_terms);
        Poly measured = berlekamp_massey(seq);
        Poly theory = min_poly_over_base(measured).H;
        Poly oracle = joint_min_poly(decompose_to_base(seq));
        if (measured == h) ++report.minpoly_exact_matches;
        if (!(theory == oracle)) report.mismatches.push_back({trial, measured, theory, oracle});
    }
    return report;
}

}  // namespace fqlc
