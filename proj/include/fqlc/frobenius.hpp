#ifndef FQLC_FROBENIUS_HPP
#define FQLC_FROBENIUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fqlc/factor.hpp"
#include "fqlc/poly.hpp"

namespace fqlc {

/// Orbit of a monic irreducible under the coefficientwise Frobenius sigma:
/// members are f, sigma(f), ..., sigma^{k-1}(f) listed from the lex-least
/// member, pairwise distinct, all irreducible; k divides m.
struct SigmaOrbit {
    Poly representative;
    std::vector<Poly> members;
    int k = 0;
};

/// One sigma-equivalence class of a factorization: the full orbit plus the
/// multiplicities of the members that are actually present (absent members
/// have implicit multiplicity 0 and are not stored).
struct SigmaClass {
    SigmaOrbit orbit;
    std::vector<std::pair<Poly, int>> present;
};

/// Partition of all irreducible factors of a factorization into
/// sigma-equivalence classes, ordered canonically by representative.
struct SigmaClassPartition {
    std::vector<SigmaClass> classes;
};

/// The ring automorphism raising every coefficient to the q-th power.
/// Acts at the tower's top level; multiplicative and additive.
Poly sigma(const Poly& f);

/// j-fold composition of sigma; sigma_iter(f, m) = f.
Poly sigma_iter(const Poly& f, std::uint64_t j);

/// Least k >= 1 with sigma^{(k)}(f) = f; divides m.
int orbit_order(const Poly& f);

/// Materializes the sigma-orbit of a monic irreducible at the top level.
SigmaOrbit orbit(const Poly& f);

/// R(f) = f * sigma(f) * ... * sigma^{(k(f)-1)}(f), returned at the Base
/// level: the orbit product of an irreducible has all coefficients in the
/// embedded F_q and is itself irreducible over F_q, of degree k(f)*deg(f).
/// Identical for every member of the same orbit.
Poly orbit_product(const Poly& f);

/// Groups the factors of an extension-level factorization by sigma-orbit.
SigmaClassPartition partition_classes(const Factorization& fz);

/// Canonical factorization over F_{q^m} of a monic irreducible f over F_q of
/// degree n: one full sigma-orbit of length gcd(n, m) whose members have
/// degree n/gcd(n, m) and whose product embeds back to f.
SigmaOrbit factor_over_extension(const Poly& f);

/// Coefficientwise embed / project between the Base and top levels.
Poly embed(const Poly& f);
Poly project(const Poly& f);

}  // namespace fqlc

#endif
