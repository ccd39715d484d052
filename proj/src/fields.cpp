#include "fqlc/fields.hpp"

#include <algorithm>
#include <cassert>

#include "fqlc/factor.hpp"
#include "fqlc/poly.hpp"

namespace fqlc {

namespace {

// --- F_p scalar helpers -----------------------------------------------------

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t sc_add(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t sc_sub(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
    return a >= b ? a - b : std::uint32_t(p - b + a);
}

std::uint32_t sc_neg(std::uint32_t a, std::uint64_t p) { return a ? std::uint32_t(p - a) : 0; }

std::uint32_t sc_mul(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
    return std::uint32_t((std::uint64_t(a) * b) % p);
}

std::uint32_t sc_inv(std::uint32_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = std::int64_t(p), new_r = std::int64_t(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    assert(r == 1);
    if (t < 0) t += std::int64_t(p);
    return std::uint32_t(t);
}

// --- F_p[t] digit-vector helpers (constant term first) -----------------------

using Digits = std::vector<std::uint32_t>;

int dv_deg(const Digits& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Digits dv_mul(const Digits& a, const Digits& b, std::uint64_t p) {
    int da = dv_deg(a), db = dv_deg(b);
    if (da < 0 || db < 0) return {};
    Digits c(std::size_t(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (!a[std::size_t(i)]) continue;
        for (int j = 0; j <= db; ++j)
            c[std::size_t(i + j)] = sc_add(c[std::size_t(i + j)], sc_mul(a[std::size_t(i)], b[std::size_t(j)], p), p);
    }
    return c;
}

// in-place remainder by a divisor with invertible leading coefficient
void dv_rem(Digits& a, const Digits& b, std::uint64_t p) {
    int db = dv_deg(b);
    assert(db >= 0);
    std::uint32_t lead_inv = sc_inv(b[std::size_t(db)], p);
    for (int i = dv_deg(a); i >= db; i = dv_deg(a)) {
        std::uint32_t c = sc_mul(a[std::size_t(i)], lead_inv, p);
        for (int j = 0; j <= db; ++j)
            a[std::size_t(i - db + j)] = sc_sub(a[std::size_t(i - db + j)], sc_mul(c, b[std::size_t(j)], p), p);
        assert(a[std::size_t(i)] == 0);
    }
}

Digits dv_divrem(Digits& a, const Digits& b, std::uint64_t p) {
    int db = dv_deg(b);
    assert(db >= 0);
    std::uint32_t lead_inv = sc_inv(b[std::size_t(db)], p);
    int da = dv_deg(a);
    Digits q(std::size_t(std::max(da - db + 1, 0)), 0);
    for (int i = da; i >= db; i = dv_deg(a)) {
        std::uint32_t c = sc_mul(a[std::size_t(i)], lead_inv, p);
        q[std::size_t(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            a[std::size_t(i - db + j)] = sc_sub(a[std::size_t(i - db + j)], sc_mul(c, b[std::size_t(j)], p), p);
    }
    return q;
}

// inverse of a modulo mod (mod irreducible, a != 0 mod mod)
Digits dv_inv_mod(const Digits& a, const Digits& mod, std::uint64_t p) {
    Digits r0 = mod, r1 = a;
    r1.resize(std::size_t(std::max(dv_deg(r1) + 1, 1)));
    Digits s0 = {0}, s1 = {1};
    while (dv_deg(r1) >= 0) {
        Digits rem = r0;
        Digits q = dv_divrem(rem, r1, p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Digits qs = dv_mul(q, s1, p);
        Digits next(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            std::uint32_t lhs = i < s0.size() ? s0[i] : 0;
            std::uint32_t rhs = i < qs.size() ? qs[i] : 0;
            next[i] = sc_sub(lhs, rhs, p);
        }
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    int dg = dv_deg(r0);
    assert(dg == 0);  // gcd is a unit when mod is irreducible
    std::uint32_t scale = sc_inv(r0[0], p);
    Digits out = s0;
    for (auto& digit : out) digit = sc_mul(digit, scale, p);
    dv_rem(out, mod, p);
    return out;
}

// --- F_q coefficient helpers (fixed width d) ---------------------------------

Digits be_pad(Digits v, int d) {
    v.resize(std::size_t(d), 0);
    return v;
}

Digits be_add(const Digits& a, const Digits& b, std::uint64_t p) {
    Digits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = sc_add(a[i], b[i], p);
    return c;
}

Digits be_sub(const Digits& a, const Digits& b, std::uint64_t p) {
    Digits c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = sc_sub(a[i], b[i], p);
    return c;
}

Digits be_mul(const Digits& a, const Digits& b, const Digits& base_mod, std::uint64_t p, int d) {
    Digits c = dv_mul(a, b, p);
    if (dv_deg(c) >= d) dv_rem(c, base_mod, p);
    return be_pad(std::move(c), d);
}

bool be_is_zero(const Digits& a) { return dv_deg(a) < 0; }

// --- F_q[a] helpers: polynomials over F_q with width-d coefficients ----------

using BVec = std::vector<Digits>;

int qv_deg(const BVec& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (!be_is_zero(a[std::size_t(i)])) return i;
    return -1;
}

BVec qv_mul(const BVec& a, const BVec& b, const Digits& base_mod, std::uint64_t p, int d) {
    int da = qv_deg(a), db = qv_deg(b);
    if (da < 0 || db < 0) return {};
    BVec c(std::size_t(da + db + 1), Digits(std::size_t(d), 0));
    for (int i = 0; i <= da; ++i) {
        if (be_is_zero(a[std::size_t(i)])) continue;
        for (int j = 0; j <= db; ++j) {
            Digits prod = be_mul(a[std::size_t(i)], b[std::size_t(j)], base_mod, p, d);
            c[std::size_t(i + j)] = be_add(c[std::size_t(i + j)], prod, p);
        }
    }
    return c;
}

// in-place remainder; divisor leading coefficient must be invertible
void qv_rem(BVec& a, const BVec& b, const Digits& base_mod, std::uint64_t p, int d) {
    int db = qv_deg(b);
    assert(db >= 0);
    Digits lead_inv = be_pad(dv_inv_mod(b[std::size_t(db)], base_mod, p), d);
    for (int i = qv_deg(a); i >= db; i = qv_deg(a)) {
        Digits c = be_mul(a[std::size_t(i)], lead_inv, base_mod, p, d);
        for (int j = 0; j <= db; ++j) {
            Digits prod = be_mul(c, b[std::size_t(j)], base_mod, p, d);
            a[std::size_t(i - db + j)] = be_sub(a[std::size_t(i - db + j)], prod, p);
        }
    }
}

BVec qv_divrem(BVec& a, const BVec& b, const Digits& base_mod, std::uint64_t p, int d) {
    int db = qv_deg(b);
    assert(db >= 0);
    Digits lead_inv = be_pad(dv_inv_mod(b[std::size_t(db)], base_mod, p), d);
    int da = qv_deg(a);
    BVec q(std::size_t(std::max(da - db + 1, 0)), Digits(std::size_t(d), 0));
    for (int i = da; i >= db; i = qv_deg(a)) {
        Digits c = be_mul(a[std::size_t(i)], lead_inv, base_mod, p, d);
        q[std::size_t(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            Digits prod = be_mul(c, b[std::size_t(j)], base_mod, p, d);
            a[std::size_t(i - db + j)] = be_sub(a[std::size_t(i - db + j)], prod, p);
        }
    }
    return q;
}

BVec qv_inv_mod(const BVec& a, const BVec& mod, const Digits& base_mod, std::uint64_t p, int d) {
    Digits zero_c(std::size_t(d), 0);
    Digits one_c = zero_c;
    one_c[0] = 1;
    BVec r0 = mod, r1 = a;
    BVec s0 = {zero_c}, s1 = {one_c};
    while (qv_deg(r1) >= 0) {
        BVec rem = r0;
        BVec q = qv_divrem(rem, r1, base_mod, p, d);
        r0 = std::move(r1);
        r1 = std::move(rem);
        BVec qs = qv_mul(q, s1, base_mod, p, d);
        BVec next(std::max(s0.size(), qs.size()), zero_c);
        for (std::size_t i = 0; i < next.size(); ++i) {
            const Digits& lhs = i < s0.size() ? s0[i] : zero_c;
            const Digits& rhs = i < qs.size() ? qs[i] : zero_c;
            next[i] = be_sub(lhs, rhs, p);
        }
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    assert(qv_deg(r0) == 0);
    Digits scale = be_pad(dv_inv_mod(r0[0], base_mod, p), d);
    BVec out = s0;
    for (auto& coeff : out) coeff = be_mul(coeff, scale, base_mod, p, d);
    qv_rem(out, mod, base_mod, p, d);
    return out;
}

// flat digit vector <-> width-d coefficient list of an Ext element
BVec unflatten(const Digits& flat, int m, int d) {
    BVec out(std::size_t(m), Digits(std::size_t(d), 0));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < d; ++i) out[std::size_t(j)][std::size_t(i)] = flat[std::size_t(j * d + i)];
    return out;
}

Digits flatten(const BVec& coeffs, int m, int d) {
    Digits flat(std::size_t(m * d), 0);
    for (int j = 0; j < m && j < int(coeffs.size()); ++j)
        for (int i = 0; i < d && i < int(coeffs[std::size_t(j)].size()); ++i)
            flat[std::size_t(j * d + i)] = coeffs[std::size_t(j)][std::size_t(i)];
    return flat;
}

constexpr std::uint64_t kMaxTowerSize = std::uint64_t(1) << 40;
constexpr std::uint64_t kMaxEnumeration = std::uint64_t(1) << 20;

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > kMaxTowerSize / base)
            raise(ErrorCode::SizeOverflow, "field size exceeds 2^40");
        out *= base;
    }
    return out;
}

Digits validated_digits(const Digits& in, std::uint64_t p, const char* what) {
    Digits out = in;
    while (!out.empty() && out.back() == 0) out.pop_back();
    require(!out.empty(), ErrorCode::BadInput, std::string(what) + " is zero");
    for (auto digit : out)
        require(digit < p, ErrorCode::BadInput, std::string(what) + " has a coefficient not reduced mod p");
    return out;
}

}  // namespace

// --- FieldTower ---------------------------------------------------------------

TowerPtr FieldTower::build(std::uint64_t p, std::optional<std::vector<std::uint32_t>> base_modulus,
                           std::optional<std::vector<std::vector<std::uint32_t>>> ext_modulus) {
    require(p >= 2 && p < (std::uint64_t(1) << 31) && is_prime_u64(p), ErrorCode::NotPrime,
            "characteristic must be a prime below 2^31");

    auto assemble = [&](Digits base_mod, bool user_base, std::vector<Digits> ext_mod, bool has_ext) {
        auto tower = std::shared_ptr<FieldTower>(new FieldTower());
        tower->p_ = p;
        tower->d_ = int(base_mod.size()) - 1;
        tower->base_mod_ = std::move(base_mod);
        tower->user_base_ = user_base;
        tower->has_ext_ = has_ext;
        tower->m_ = has_ext ? int(ext_mod.size()) - 1 : 1;
        tower->ext_mod_ = std::move(ext_mod);
        tower->q_ = checked_pow(p, tower->d_);
        tower->Q_ = checked_pow(tower->q_, tower->m_);
        return TowerPtr(tower);
    };

    Digits base_mod = {0, 1};
    bool user_base = false;
    if (base_modulus) {
        base_mod = validated_digits(*base_modulus, p, "base modulus");
        require(base_mod.size() >= 2, ErrorCode::BadInput, "base modulus must have degree >= 1");
        require(base_mod.back() == 1, ErrorCode::NotMonic, "base modulus must be monic");
        user_base = true;
        if (base_mod.size() > 2) {
            TowerPtr prime_field = assemble({0, 1}, false, {}, false);
            std::vector<FieldElement> coeffs;
            for (auto digit : base_mod) coeffs.push_back(prime_field->from_digits(Level::Base, {digit}));
            Poly candidate = Poly::from_coeffs(prime_field, Level::Base, std::move(coeffs));
            require(is_irreducible(candidate), ErrorCode::NotIrreducible, "base modulus is not irreducible over F_p");
        }
    }

    std::vector<Digits> ext_mod;
    bool has_ext = false;
    if (ext_modulus) {
        TowerPtr base_field = assemble(base_mod, user_base, {}, false);
        int d = base_field->base_degree();
        require(ext_modulus->size() >= 2, ErrorCode::BadInput, "extension modulus must have degree >= 1");
        for (const auto& coeff : *ext_modulus) {
            Digits c = coeff;
            while (!c.empty() && c.back() == 0) c.pop_back();
            require(int(c.size()) <= d, ErrorCode::BadInput, "extension modulus coefficient is not reduced");
            for (auto digit : c)
                require(digit < p, ErrorCode::BadInput, "extension modulus coefficient not reduced mod p");
            ext_mod.push_back(be_pad(std::move(c), d));
        }
        while (ext_mod.size() > 1 && be_is_zero(ext_mod.back())) ext_mod.pop_back();
        require(ext_mod.size() >= 2, ErrorCode::BadInput, "extension modulus must have degree >= 1");
        Digits one_c(std::size_t(d), 0);
        one_c[0] = 1;
        require(ext_mod.back() == one_c, ErrorCode::NotMonic, "extension modulus must be monic");
        if (ext_mod.size() > 2) {
            std::vector<FieldElement> coeffs;
            for (const auto& c : ext_mod) coeffs.push_back(base_field->from_digits(Level::Base, c));
            Poly candidate = Poly::from_coeffs(base_field, Level::Base, std::move(coeffs));
            require(is_irreducible(candidate), ErrorCode::NotIrreducible,
                    "extension modulus is not irreducible over F_q");
        }
        has_ext = true;
    }

    return assemble(std::move(base_mod), user_base, std::move(ext_mod), has_ext);
}

FieldElement FieldTower::zero(Level level) const {
    require(level != Level::Ext || has_ext_, ErrorCode::LevelMismatch, "tower has no extension level");
    return FieldElement(shared_from_this(), level,
                        Digits(std::size_t(level == Level::Ext ? m_ * d_ : d_), 0));
}

FieldElement FieldTower::one(Level level) const { return from_integer(level, 1); }

FieldElement FieldTower::generator(Level level) const {
    if (level == Level::Base) {
        require(d_ >= 2, ErrorCode::BadInput, "prime base field has no generator symbol");
        Digits digits(std::size_t(d_), 0);
        digits[1] = 1;
        return FieldElement(shared_from_this(), Level::Base, std::move(digits));
    }
    require(has_ext_, ErrorCode::LevelMismatch, "tower has no extension level");
    Digits digits(std::size_t(m_ * d_), 0);
    digits[std::size_t(d_)] = 1;
    return FieldElement(shared_from_this(), Level::Ext, std::move(digits));
}

FieldElement FieldTower::from_integer(Level level, std::uint64_t n) const {
    FieldElement out = zero(level);
    out.digits_[0] = std::uint32_t(n % p_);
    return out;
}

FieldElement FieldTower::from_encoding(Level level, std::uint64_t code) const {
    require(code < level_size(level), ErrorCode::BadInput, "encoding out of range");
    FieldElement out = zero(level);
    for (auto& digit : out.digits_) {
        digit = std::uint32_t(code % p_);
        code /= p_;
    }
    return out;
}

FieldElement FieldTower::from_digits(Level level, std::vector<std::uint32_t> digits) const {
    std::size_t want = std::size_t(level == Level::Base ? d_ : m_ * d_);
    require(level != Level::Ext || has_ext_, ErrorCode::LevelMismatch, "tower has no extension level");
    require(digits.size() == want, ErrorCode::BadInput, "digit vector has wrong length");
    for (auto digit : digits) require(digit < p_, ErrorCode::BadInput, "digit not reduced mod p");
    return FieldElement(shared_from_this(), level, std::move(digits));
}

bool FieldTower::same_structure(const FieldTower& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && d_ == other.d_ && m_ == other.m_ && has_ext_ == other.has_ext_ &&
           base_mod_ == other.base_mod_ && ext_mod_ == other.ext_mod_;
}

// --- FieldElement ---------------------------------------------------------------

namespace detail {
void check_compatible(const FieldElement& x, const FieldElement& y) {
    require(x.level() == y.level(), ErrorCode::LevelMismatch, "elements live at different tower levels");
    require(x.tower()->same_structure(*y.tower()), ErrorCode::TowerMismatch,
            "elements belong to structurally different towers");
}
}  // namespace detail

bool FieldElement::is_zero() const {
    return std::all_of(digits_.begin(), digits_.end(), [](std::uint32_t d) { return d == 0; });
}

bool FieldElement::is_one() const {
    if (digits_.empty() || digits_[0] != 1) return false;
    return std::all_of(digits_.begin() + 1, digits_.end(), [](std::uint32_t d) { return d == 0; });
}

std::uint64_t FieldElement::encoding() const {
    std::uint64_t code = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) code = code * tower_->p_ + *it;
    return code;
}

std::vector<FieldElement> FieldElement::coeffs() const {
    if (level_ == Level::Base) return {*this};
    std::vector<FieldElement> out;
    int d = tower_->d_;
    for (int j = 0; j < tower_->m_; ++j) {
        Digits c(digits_.begin() + j * d, digits_.begin() + (j + 1) * d);
        out.push_back(FieldElement(tower_, Level::Base, std::move(c)));
    }
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto& digit : out.digits_) digit = sc_neg(digit, tower_->p_);
    return out;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    detail::check_compatible(x, y);
    std::uint64_t p = x.tower()->characteristic();
    FieldElement out = x;
    for (std::size_t i = 0; i < out.digits_.size(); ++i) out.digits_[i] = sc_add(out.digits_[i], y.digits_[i], p);
    return out;
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    detail::check_compatible(x, y);
    std::uint64_t p = x.tower()->characteristic();
    FieldElement out = x;
    for (std::size_t i = 0; i < out.digits_.size(); ++i) out.digits_[i] = sc_sub(out.digits_[i], y.digits_[i], p);
    return out;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    detail::check_compatible(x, y);
    const FieldTower& tw = *x.tower_;
    std::uint64_t p = tw.characteristic();
    int d = tw.base_degree(), m = tw.ext_degree();
    const Digits& base_mod = tw.base_modulus_digits();
    if (x.level_ == Level::Base) {
        Digits c = be_mul(x.digits_, y.digits_, base_mod, p, d);
        return FieldElement(x.tower_, Level::Base, std::move(c));
    }
    BVec a = unflatten(x.digits_, m, d);
    BVec b = unflatten(y.digits_, m, d);
    BVec c = qv_mul(a, b, base_mod, p, d);
    if (qv_deg(c) >= m) qv_rem(c, tw.ext_modulus_coeffs(), base_mod, p, d);
    return FieldElement(x.tower_, Level::Ext, flatten(c, m, d));
}

FieldElement FieldElement::inv() const {
    require(!is_zero(), ErrorCode::DivisionByZero, "inverse of zero");
    const FieldTower& tw = *tower_;
    if (level_ == Level::Base) {
        Digits c = be_pad(dv_inv_mod(digits_, tw.base_mod_, tw.p_), tw.d_);
        return FieldElement(tower_, Level::Base, std::move(c));
    }
    BVec a = unflatten(digits_, tw.m_, tw.d_);
    BVec c = qv_inv_mod(a, tw.ext_mod_, tw.base_mod_, tw.p_, tw.d_);
    return FieldElement(tower_, Level::Ext, flatten(c, tw.m_, tw.d_));
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * y.inv(); }

FieldElement FieldElement::pow(std::uint64_t n) const {
    FieldElement result = tower_->one(level_);
    FieldElement base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.level_ == y.level_ && x.tower_->same_structure(*y.tower_) && x.digits_ == y.digits_;
}

bool operator<(const FieldElement& x, const FieldElement& y) {
    detail::check_compatible(x, y);
    return x.encoding() < y.encoding();
}

FieldElement frobenius_q(const FieldElement& x) {
    require(x.level() == x.tower()->top_level(), ErrorCode::LevelMismatch,
            "frobenius_q acts on the tower's top level");
    return x.pow(x.tower()->base_size());
}

FieldElement embed(const FieldElement& x) {
    require(x.level() == Level::Base, ErrorCode::LevelMismatch, "embed takes a base-level element");
    const TowerPtr& tower = x.tower();
    if (!tower->has_ext_modulus()) return x;
    std::vector<std::uint32_t> digits(std::size_t(tower->ext_degree() * tower->base_degree()), 0);
    std::copy(x.digits().begin(), x.digits().end(), digits.begin());
    return tower->from_digits(Level::Ext, std::move(digits));
}

FieldElement project(const FieldElement& x) {
    const TowerPtr& tower = x.tower();
    require(x.level() == tower->top_level(), ErrorCode::LevelMismatch, "project takes a top-level element");
    if (!tower->has_ext_modulus()) return x;
    int d = tower->base_degree();
    for (std::size_t i = std::size_t(d); i < x.digits().size(); ++i)
        require(x.digits()[i] == 0, ErrorCode::NotInSubfield, "element lies outside the embedded base field");
    return tower->from_digits(Level::Base,
                              std::vector<std::uint32_t>(x.digits().begin(), x.digits().begin() + d));
}

std::vector<FieldElement> enumerate_elements(const TowerPtr& tower, Level level) {
    std::uint64_t size = tower->level_size(level);
    require(size <= kMaxEnumeration, ErrorCode::SizeOverflow, "level too large to enumerate (limit 2^20)");
    std::vector<FieldElement> out;
    out.reserve(std::size_t(size));
    for (std::uint64_t code = 0; code < size; ++code) out.push_back(tower->from_encoding(level, code));
    return out;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::SizeOverflow: return "SizeOverflow";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::LevelMismatch: return "LevelMismatch";
        case ErrorCode::TowerMismatch: return "TowerMismatch";
        case ErrorCode::NotInSubfield: return "NotInSubfield";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::BadInput: return "BadInput";
        case ErrorCode::BadStateLength: return "BadStateLength";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotCharacteristic: return "NotCharacteristic";
        case ErrorCode::PrefixTooShort: return "PrefixTooShort";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::MissingFlag: return "MissingFlag";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace fqlc
