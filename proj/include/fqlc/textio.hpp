#ifndef FQLC_TEXTIO_HPP
#define FQLC_TEXTIO_HPP

#include <optional>
#include <string>

#include "fqlc/factor.hpp"
#include "fqlc/poly.hpp"
#include "fqlc/sequences.hpp"

namespace fqlc {

/// Canonical element text: reduced polynomial form in the generator, highest
/// power first, zero terms omitted (`a+1`, `t^2+2*t`, `0`); plain integers at
/// a prime base level. Parsing also accepts power form (`a^2`), explicit or
/// implicit products, parentheses and `-`.
std::string format_element(const FieldElement& e);

/// Canonical polynomial text: `+`-joined `c*x^k` terms, highest power first,
/// coefficient omitted when 1, compound coefficients parenthesized, e.g.
/// `x^3+(a+1)*x^2+a+1`.
std::string format_poly(const Poly& f);
std::string format_poly(const Poly& f, char var);

/// Comma-separated element literals.
std::string format_sequence(const Sequence& s);

/// `unit * (p1)^e1 * (p2)^e2 ...`; a bare unit for constant inputs.
std::string format_factorization(const Factorization& fz);

FieldElement parse_element(const std::string& text, const TowerPtr& tower, Level level);
Poly parse_poly(const std::string& text, const TowerPtr& tower, Level level);
/// Polynomial in an arbitrary variable symbol; used for modulus input, where
/// the variable is the generator being adjoined.
Poly parse_poly(const std::string& text, const TowerPtr& tower, Level level, char var);
Sequence parse_sequence(const std::string& text, const TowerPtr& tower, Level level);
Factorization parse_factorization(const std::string& text, const TowerPtr& tower, Level level);

/// Builds a tower from textual moduli: the base modulus is written in `t`
/// over F_p, the extension modulus in `a` over F_q.
TowerPtr build_tower_text(std::uint64_t p, const std::optional<std::string>& base_modulus,
                          const std::optional<std::string>& ext_modulus);

/// The stored moduli rendered back to text (`t^2+t+1`, `a^2+a+1`).
std::optional<std::string> describe_base_modulus(const TowerPtr& tower);
std::optional<std::string> describe_ext_modulus(const TowerPtr& tower);

}  // namespace fqlc

#endif
