#ifndef FQLC_FACTOR_HPP
#define FQLC_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "fqlc/poly.hpp"

namespace fqlc {

/// Canonical factorization into monic irreducibles: unit times the product of
/// factor^multiplicity. Factors are pairwise distinct and sorted by degree,
/// then lexicographically on constant-first coefficient encodings.
struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Poly, int>> factors;

    /// unit * prod factor^multiplicity; reproduces the factored input exactly.
    Poly expand() const;
};

/// Squarefree part decomposition of a monic polynomial: pairwise-coprime monic
/// squarefree parts with their multiplicities, multiplicity-ascending. Handles
/// the characteristic-p degenerate case f' = 0 by p-th-root recursion.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Splits a monic squarefree polynomial into (product of all irreducible
/// factors of degree d, d) pairs, degree-ascending.
std::vector<std::pair<Poly, int>> distinct_degree_split(const Poly& f);

/// Cantor-Zassenhaus: complete list of the degree-d irreducible factors of a
/// monic product of distinct degree-d irreducibles, canonically sorted.
/// Deterministic for a fixed rng_seed.
std::vector<Poly> equal_degree_split(const Poly& f, int d, std::uint64_t rng_seed);

/// Composition of the three stages. Deterministic: the internal seed is a hash
/// of the input's canonical encoding, so output is reproducible run-to-run.
Factorization factor_canonical(const Poly& f);

/// Rabin irreducibility test over the polynomial's level.
bool is_irreducible(const Poly& f);

/// Lexicographically smallest monic irreducible of the given degree over the
/// level, coefficients compared constant-first by their integer encodings.
/// Deterministic; this is what default tower moduli come from.
Poly default_modulus(const TowerPtr& tower, Level level, int degree);

}  // namespace fqlc

#endif
