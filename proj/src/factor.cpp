#include "fqlc/factor.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace fqlc {

namespace {

// coefficientwise p-th root of f; valid exactly when f' = 0 (every exponent
// with a nonzero coefficient is a multiple of p)
Poly pth_root(const Poly& f) {
    const TowerPtr& tower = f.tower();
    Level level = f.level();
    std::uint64_t p = tower->characteristic();
    std::uint64_t root_exp = tower->level_size(level) / p;  // c -> c^(size/p) inverts c -> c^p
    std::vector<FieldElement> coeffs;
    for (int k = 0; k <= f.degree(); k += int(p)) coeffs.push_back(f.coeff(k).pow(root_exp));
    return Poly::from_coeffs(tower, level, std::move(coeffs));
}

std::vector<std::pair<Poly, int>> squarefree_rec(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() == 0) return out;
    int p = int(f.tower()->characteristic());
    Poly fp = derivative(f);
    if (fp.is_zero()) {
        for (auto& [part, mult] : squarefree_rec(pth_root(f))) out.emplace_back(part, mult * p);
        return out;
    }
    Poly c = gcd(f, fp);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [part, mult] : squarefree_rec(pth_root(c))) out.emplace_back(part, mult * p);
    return out;
}

Poly random_poly_below(const Poly& f, std::mt19937_64& rng) {
    const TowerPtr& tower = f.tower();
    Level level = f.level();
    std::uint64_t size = tower->level_size(level);
    std::uniform_int_distribution<std::uint64_t> dist(0, size - 1);
    std::vector<FieldElement> coeffs;
    for (int k = 0; k < f.degree(); ++k) coeffs.push_back(tower->from_encoding(level, dist(rng)));
    return Poly::from_coeffs(tower, level, std::move(coeffs));
}

// one attempt at a proper splitting element for a product of distinct
// degree-d irreducibles; returns a proper monic divisor or the input
Poly edf_try_split(const Poly& f, int d, std::mt19937_64& rng) {
    const TowerPtr& tower = f.tower();
    Level level = f.level();
    std::uint64_t size = tower->level_size(level);
    Poly w = random_poly_below(f, rng);
    if (w.is_zero() || w.degree() == 0) return f;
    Poly g = gcd(f, w);
    if (g.degree() > 0 && g.degree() < f.degree()) return g;
    Poly one = Poly::one(tower, level);
    if (size % 2 == 1) {
        // w^((S^d-1)/2) = (w^(1+S+...+S^(d-1)))^((S-1)/2)
        Poly norm = w % f;
        Poly cur = norm;
        for (int i = 1; i < d; ++i) {
            cur = powmod(cur, size, f);
            norm = (norm * cur) % f;
        }
        Poly u = powmod(norm, (size - 1) / 2, f);
        Poly g2 = gcd(f, u - one);
        if (!(u - one).is_zero() && g2.degree() > 0 && g2.degree() < f.degree()) return g2;
    } else {
        // absolute trace to F_2 over the degree-d residue fields
        int bits = 0;
        for (std::uint64_t s = size; s > 1; s >>= 1) ++bits;
        Poly tr = w % f;
        Poly cur = tr;
        for (int i = 1; i < bits * d; ++i) {
            cur = (cur * cur) % f;
            tr = tr + cur;
        }
        if (!tr.is_zero()) {
            Poly g2 = gcd(f, tr);
            if (g2.degree() > 0 && g2.degree() < f.degree()) return g2;
        }
    }
    return f;
}

void edf_rec(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    constexpr int kMaxAttempts = 256;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Poly g = edf_try_split(f, d, rng);
        if (g.degree() < f.degree()) {
            edf_rec(make_monic(g), d, rng, out);
            edf_rec(make_monic(f / g), d, rng, out);
            return;
        }
    }
    raise(ErrorCode::BadInput, "equal-degree splitting stalled; input is not a product of distinct degree-d irreducibles");
}

std::uint64_t canonical_hash(const Poly& f) {
    // FNV-1a over the level tag and coefficient encodings
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(f.level() == Level::Ext ? 2 : 1);
    mix(f.is_zero() ? 0 : std::uint64_t(f.degree()) + 1);
    for (const auto& c : f.coeffs()) mix(c.encoding() + 1);
    return h;
}

}  // namespace

Poly Factorization::expand() const {
    Poly acc = Poly::constant(unit);
    for (const auto& [factor, mult] : factors) acc = acc * factor.pow(std::uint64_t(mult));
    return acc;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "cannot decompose the zero polynomial");
    require(f.is_monic(), ErrorCode::NotMonic, "squarefree decomposition expects a monic polynomial");
    auto out = squarefree_rec(f);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_split(const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "cannot split the zero polynomial");
    require(f.is_monic(), ErrorCode::NotMonic, "distinct-degree split expects a monic polynomial");
    if (f.degree() >= 1) {
        Poly fp = derivative(f);
        require(!fp.is_zero(), ErrorCode::NotSquarefree, "input is a p-th power");
        require(gcd(f, fp).degree() == 0, ErrorCode::NotSquarefree, "input has a repeated factor");
    }
    std::vector<std::pair<Poly, int>> out;
    Poly rest = f;
    Poly x = Poly::x(f.tower(), f.level());
    std::uint64_t size = f.tower()->level_size(f.level());
    Poly h = x % rest;
    int d = 0;
    while (rest.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, size, rest);
        Poly g = gcd(h - x, rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            if (rest.degree() == 0) break;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

std::vector<Poly> equal_degree_split(const Poly& f, int d, std::uint64_t rng_seed) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "cannot split the zero polynomial");
    require(f.is_monic(), ErrorCode::NotMonic, "equal-degree split expects a monic polynomial");
    require(d >= 1 && f.degree() >= 1 && f.degree() % d == 0, ErrorCode::BadInput,
            "degree must be a positive divisor of deg(f)");
    std::mt19937_64 rng(rng_seed);
    std::vector<Poly> out;
    edf_rec(f, d, rng, out);
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

Factorization factor_canonical(const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization result{f.leading(), {}};
    if (f.degree() == 0) return result;
    Poly monic = make_monic(f);
    std::uint64_t seed = canonical_hash(monic);
    for (const auto& [part, mult] : squarefree_decomposition(monic))
        for (const auto& [prod, deg] : distinct_degree_split(part))
            for (const auto& irred : equal_degree_split(prod, deg, seed))
                result.factors.emplace_back(irred, mult);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return result;
}

bool is_irreducible(const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial is undefined");
    require(f.is_monic(), ErrorCode::NotMonic, "irreducibility test expects a monic polynomial");
    int n = f.degree();
    if (n == 0) return false;
    if (n == 1) return true;
    Poly x = Poly::x(f.tower(), f.level());
    std::uint64_t size = f.tower()->level_size(f.level());
    // x^(S^n) = x mod f, and gcd(x^(S^(n/r)) - x, f) = 1 for every prime r | n
    std::vector<int> proper_powers;
    int rest = n;
    for (int r = 2; r * r <= rest; ++r)
        if (rest % r == 0) {
            proper_powers.push_back(n / r);
            while (rest % r == 0) rest /= r;
        }
    if (rest > 1) proper_powers.push_back(n / rest);
    std::sort(proper_powers.begin(), proper_powers.end());
    Poly h = x % f;
    int reached = 0;
    for (int target : proper_powers) {
        for (; reached < target; ++reached) h = powmod(h, size, f);
        if (gcd(h - x, f).degree() != 0) return false;
    }
    for (; reached < n; ++reached) h = powmod(h, size, f);
    return (h - x % f).is_zero();
}

Poly default_modulus(const TowerPtr& tower, Level level, int degree) {
    require(degree >= 1 && degree <= 4096, ErrorCode::BadInput, "degree must be in [1, 4096]");
    std::uint64_t size = tower->level_size(level);
    // odometer over (c_0, ..., c_{degree-1}) in constant-first lex order:
    // the last coordinate ticks fastest
    std::vector<std::uint64_t> codes(std::size_t(degree), 0);
    while (true) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(std::size_t(degree) + 1);
        for (auto code : codes) coeffs.push_back(tower->from_encoding(level, code));
        coeffs.push_back(tower->one(level));
        Poly candidate = Poly::from_coeffs(tower, level, std::move(coeffs));
        if (is_irreducible(candidate)) return candidate;
        int pos = degree - 1;
        while (pos >= 0 && codes[std::size_t(pos)] == size - 1) codes[std::size_t(pos--)] = 0;
        require(pos >= 0, ErrorCode::BadInput, "no irreducible of this degree");  // unreachable over a field
        ++codes[std::size_t(pos)];
    }
}

}  // namespace fqlc
