#ifndef FQLC_POLY_HPP
#define FQLC_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fqlc/fields.hpp"

namespace fqlc {

/// Dense univariate polynomial over one tower level, constant term first.
/// Always normalized: the highest stored coefficient is nonzero, and the zero
/// polynomial stores no coefficients at all (its degree is undefined rather
/// than -1). Immutable value semantics; safe to share.
class Poly {
  public:
    static Poly zero(TowerPtr tower, Level level);
    static Poly one(TowerPtr tower, Level level);
    static Poly x(TowerPtr tower, Level level);
    static Poly constant(FieldElement c);
    static Poly monomial(FieldElement c, int k);  ///< c * x^k
    static Poly from_coeffs(TowerPtr tower, Level level, std::vector<FieldElement> coeffs);

    const TowerPtr& tower() const { return tower_; }
    Level level() const { return level_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; asking for the zero polynomial's degree
    /// throws ZeroPolynomial.
    int degree() const;
    FieldElement coeff(int k) const;  ///< zero element beyond the degree
    FieldElement leading() const;     ///< throws ZeroPolynomial on zero
    bool is_monic() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    Poly operator-() const;
    Poly pow(std::uint64_t n) const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const FieldElement& c);  ///< scale

    friend bool operator==(const Poly& f, const Poly& g);
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

  private:
    Poly(TowerPtr tower, Level level, std::vector<FieldElement> coeffs)
        : tower_(std::move(tower)), level_(level), coeffs_(std::move(coeffs)) {}

    TowerPtr tower_;
    Level level_;
    std::vector<FieldElement> coeffs_;
};

/// f = quotient * g + remainder with deg(remainder) < deg(g).
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
bool divides(const Poly& g, const Poly& f);  ///< g | f

/// Monic greatest common divisor; gcd(f, 0) = monic(f). Both zero is an error.
Poly gcd(const Poly& f, const Poly& g);
/// Monic least common multiple; zero if either argument is zero.
Poly lcm(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);
/// f^n mod m; m must have degree >= 1.
Poly powmod(const Poly& f, std::uint64_t n, const Poly& m);
FieldElement eval(const Poly& f, const FieldElement& x);
Poly make_monic(const Poly& f);

/// Canonical order used for factor lists and orbit representatives:
/// by degree, then lexicographically on constant-first coefficient vectors,
/// each coefficient by its integer encoding (zero polynomial first).
bool poly_less(const Poly& f, const Poly& g);

}  // namespace fqlc

#endif
