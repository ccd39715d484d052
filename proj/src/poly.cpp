#include "fqlc/poly.hpp"

#include <algorithm>

namespace fqlc {

namespace {

void check_compatible(const Poly& f, const Poly& g) {
    require(f.level() == g.level(), ErrorCode::LevelMismatch, "polynomials live at different tower levels");
    require(f.tower()->same_structure(*g.tower()), ErrorCode::TowerMismatch,
            "polynomials belong to structurally different towers");
}

void normalize(std::vector<FieldElement>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

Poly Poly::zero(TowerPtr tower, Level level) {
    tower->zero(level);  // level validity check
    return Poly(std::move(tower), level, {});
}

Poly Poly::one(TowerPtr tower, Level level) {
    FieldElement c = tower->one(level);
    return Poly(std::move(tower), level, {std::move(c)});
}

Poly Poly::x(TowerPtr tower, Level level) {
    std::vector<FieldElement> coeffs = {tower->zero(level), tower->one(level)};
    return Poly(std::move(tower), level, std::move(coeffs));
}

Poly Poly::constant(FieldElement c) {
    TowerPtr tower = c.tower();
    Level level = c.level();
    std::vector<FieldElement> coeffs;
    if (!c.is_zero()) coeffs.push_back(std::move(c));
    return Poly(std::move(tower), level, std::move(coeffs));
}

Poly Poly::monomial(FieldElement c, int k) {
    TowerPtr tower = c.tower();
    Level level = c.level();
    std::vector<FieldElement> coeffs;
    if (!c.is_zero()) {
        coeffs.assign(std::size_t(k), tower->zero(level));
        coeffs.push_back(std::move(c));
    }
    return Poly(std::move(tower), level, std::move(coeffs));
}

Poly Poly::from_coeffs(TowerPtr tower, Level level, std::vector<FieldElement> coeffs) {
    for (const auto& c : coeffs) {
        require(c.level() == level, ErrorCode::LevelMismatch, "coefficient at wrong tower level");
        require(c.tower()->same_structure(*tower), ErrorCode::TowerMismatch, "coefficient from a different tower");
    }
    normalize(coeffs);
    return Poly(std::move(tower), level, std::move(coeffs));
}

int Poly::degree() const {
    require(!is_zero(), ErrorCode::ZeroPolynomial, "the zero polynomial has no degree");
    return int(coeffs_.size()) - 1;
}

FieldElement Poly::coeff(int k) const {
    if (k < 0 || std::size_t(k) >= coeffs_.size()) return tower_->zero(level_);
    return coeffs_[std::size_t(k)];
}

FieldElement Poly::leading() const {
    require(!is_zero(), ErrorCode::ZeroPolynomial, "the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::operator-() const {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) coeffs.push_back(-c);
    return Poly(tower_, level_, std::move(coeffs));
}

Poly Poly::pow(std::uint64_t n) const {
    Poly result = Poly::one(tower_, level_);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Poly operator+(const Poly& f, const Poly& g) {
    check_compatible(f, g);
    std::vector<FieldElement> coeffs;
    std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(f.coeff(int(i)) + g.coeff(int(i)));
    normalize(coeffs);
    return Poly(f.tower_, f.level_, std::move(coeffs));
}

Poly operator-(const Poly& f, const Poly& g) {
    check_compatible(f, g);
    std::vector<FieldElement> coeffs;
    std::size_t n = std::max(f.coeffs_.size(), g.coeffs_.size());
    coeffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) coeffs.push_back(f.coeff(int(i)) - g.coeff(int(i)));
    normalize(coeffs);
    return Poly(f.tower_, f.level_, std::move(coeffs));
}

Poly operator*(const Poly& f, const Poly& g) {
    check_compatible(f, g);
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.tower_, f.level_);
    std::vector<FieldElement> coeffs(f.coeffs_.size() + g.coeffs_.size() - 1, f.tower_->zero(f.level_));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
        if (f.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            coeffs[i + j] = coeffs[i + j] + f.coeffs_[i] * g.coeffs_[j];
    }
    normalize(coeffs);
    return Poly(f.tower_, f.level_, std::move(coeffs));
}

Poly operator*(const Poly& f, const FieldElement& c) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(f.coeffs_.size());
    for (const auto& fc : f.coeffs_) coeffs.push_back(fc * c);
    normalize(coeffs);
    return Poly(f.tower_, f.level_, std::move(coeffs));
}

bool operator==(const Poly& f, const Poly& g) {
    if (f.level_ != g.level_ || !f.tower_->same_structure(*g.tower_)) return false;
    return f.coeffs_ == g.coeffs_;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    check_compatible(f, g);
    require(!g.is_zero(), ErrorCode::DivisionByZero, "polynomial division by zero");
    if (f.is_zero() || f.degree() < g.degree())
        return {Poly::zero(f.tower(), f.level()), f};
    FieldElement lead_inv = g.leading().inv();
    std::vector<FieldElement> rem = f.coeffs();
    int dg = g.degree();
    std::vector<FieldElement> quot(std::size_t(f.degree() - dg + 1), f.tower()->zero(f.level()));
    for (int i = f.degree(); i >= dg; --i) {
        FieldElement c = rem[std::size_t(i)] * lead_inv;
        if (!c.is_zero()) {
            quot[std::size_t(i - dg)] = c;
            for (int j = 0; j <= dg; ++j)
                rem[std::size_t(i - dg + j)] = rem[std::size_t(i - dg + j)] - c * g.coeff(j);
        }
        rem.pop_back();
    }
    return {Poly::from_coeffs(f.tower(), f.level(), std::move(quot)),
            Poly::from_coeffs(f.tower(), f.level(), std::move(rem))};
}

Poly operator/(const Poly& f, const Poly& g) { return divrem(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).second; }

bool divides(const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return (f % g).is_zero();
}

Poly gcd(const Poly& f, const Poly& g) {
    check_compatible(f, g);
    require(!f.is_zero() || !g.is_zero(), ErrorCode::BothZero, "gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

Poly lcm(const Poly& f, const Poly& g) {
    check_compatible(f, g);
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.tower(), f.level());
    return make_monic((f / gcd(f, g)) * g);
}

Poly derivative(const Poly& f) {
    if (f.is_zero() || f.degree() == 0) return Poly::zero(f.tower(), f.level());
    std::vector<FieldElement> coeffs;
    coeffs.reserve(std::size_t(f.degree()));
    for (int k = 1; k <= f.degree(); ++k)
        coeffs.push_back(f.coeff(k) * f.tower()->from_integer(f.level(), std::uint64_t(k)));
    return Poly::from_coeffs(f.tower(), f.level(), std::move(coeffs));
}

Poly powmod(const Poly& f, std::uint64_t n, const Poly& m) {
    check_compatible(f, m);
    require(!m.is_zero(), ErrorCode::DivisionByZero, "powmod modulus is zero");
    require(m.degree() >= 1, ErrorCode::BadInput, "powmod modulus must have degree >= 1");
    Poly result = Poly::one(f.tower(), f.level());
    Poly base = f % m;
    while (n > 0) {
        if (n & 1) result = (result * base) % m;
        n >>= 1;
        if (n) base = (base * base) % m;
    }
    return result;
}

FieldElement eval(const Poly& f, const FieldElement& x) {
    FieldElement acc = x.tower()->zero(x.level());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly make_monic(const Poly& f) {
    require(!f.is_zero(), ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
    if (f.is_monic()) return f;
    return f * f.leading().inv();
}

bool poly_less(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return !g.is_zero() && f.is_zero();
    if (f.degree() != g.degree()) return f.degree() < g.degree();
    for (int k = 0; k <= f.degree(); ++k) {
        std::uint64_t a = f.coeff(k).encoding(), b = g.coeff(k).encoding();
        if (a != b) return a < b;
    }
    return false;
}

}  // namespace fqlc
