#ifndef FQLC_SUBFIELD_HPP
#define FQLC_SUBFIELD_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fqlc/frobenius.hpp"

namespace fqlc {

/// One sigma-class row of a subfield computation: the orbit representative,
/// its orbit order and degree, the multiplicity of every orbit member in the
/// input's factorization (aligned with orbit member order, zeros included),
/// the class maximum e, and the orbit product over the base field.
struct ClassRow {
    Poly representative;
    int k = 0;
    int deg = 0;
    std::vector<Poly> members;
    std::vector<int> exponents;
    int e = 0;
    Poly orbit_prod;
};

/// Result of transporting a minimal polynomial from F_{q^m} down to F_q.
struct SubfieldResult {
    Poly H;  ///< minimal polynomial over F_q, monic
    int L = 0;  ///< linear complexity over F_q; always equals deg(H)
    std::vector<ClassRow> classes;
};

/// Minimal polynomial over F_q of a sequence whose exact minimal polynomial
/// over F_{q^m} is h: groups the factors of h by sigma-orbit and returns
/// H = prod_j R(P_j0)^{e_j} with e_j the maximum multiplicity within class j.
/// h = 1 maps to H = 1, L = 0.
SubfieldResult min_poly_over_base(const Poly& h);

/// The linear complexity over F_q alone: sum of e_j * k_j * deg_j over the
/// class table, without expanding H.
int linear_complexity_over_base(const Poly& h);

/// Whether h is a valid minimal polynomial over F_{q^m} for a sequence whose
/// minimal polynomial over F_q is f: every factor of h must belong to the
/// extension orbit of some factor of f, and within each orbit the maximum
/// multiplicity must equal f's multiplicity exactly.
bool admissible_h(const Poly& f, const Poly& h);

/// All admissible h for f, each exactly once, canonically ordered. The number
/// of exponent assignments scanned is capped (EnumerationTooLarge beyond it).
std::vector<Poly> enumerate_admissible_h(const Poly& f, std::uint64_t cap = 1000000);

/// Lower bound on the linear complexity over F_{q^m} given the minimal
/// polynomial over F_q, with its tightness certificate when evaluated against
/// a concrete h.
struct BoundReport {
    long long bound = 0;
    std::optional<bool> tight;
    /// When tight: the single chosen orbit member per class with its exponent.
    std::vector<std::pair<Poly, int>> witness;
};

/// bound = sum_i e_i * n_i / gcd(n_i, m), from the factorization of f over
/// F_q alone; no extension-level factorization is needed.
BoundReport mo_lower_bound(const Poly& f, int m);

/// Evaluates the bound against an admissible h: tight exactly when h picks one
/// orbit member per class, each with exponent exactly e_i; then deg(h) equals
/// the bound, otherwise exceeds it.
BoundReport bound_tightness(const Poly& f, const Poly& h);

}  // namespace fqlc

#endif
