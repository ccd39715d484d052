#ifndef FQLC_FIELDS_HPP
#define FQLC_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fqlc/errors.hpp"

namespace fqlc {

/// The two levels of the tower F_p ⊆ F_q ⊆ F_{q^m}: Base is F_q, Ext is F_{q^m}.
/// F_p itself is not a level; base elements carry their F_p digits directly.
enum class Level { Base, Ext };

class FieldTower;
class FieldElement;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Immutable description of the tower F_p ⊆ F_q ⊆ F_{q^m}.
///
/// F_q = F_p[t]/(base_modulus) and F_{q^m} = F_q[a]/(ext_modulus), both moduli
/// monic and verified irreducible at construction. Towers built from identical
/// inputs are structurally identical and their elements interoperate. Safe to
/// share across threads.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
  public:
    /// Moduli are given as coefficient tables, constant term first:
    /// base_modulus over F_p as digits mod p, ext_modulus over F_q as a list of
    /// base-element digit vectors. Either may be absent (q = p, resp. m = 1).
    static TowerPtr build(std::uint64_t p, std::optional<std::vector<std::uint32_t>> base_modulus,
                          std::optional<std::vector<std::vector<std::uint32_t>>> ext_modulus);

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t base_size() const { return q_; }  ///< q = p^d
    std::uint64_t ext_size() const { return Q_; }   ///< Q = q^m
    int base_degree() const { return d_; }
    int ext_degree() const { return m_; }
    bool has_base_modulus() const { return d_ > 1 || user_base_; }
    bool has_ext_modulus() const { return has_ext_; }

    /// The level algebraic work happens at: Ext when an extension modulus was
    /// supplied, otherwise Base. Frobenius-orbit operations act here.
    Level top_level() const { return has_ext_ ? Level::Ext : Level::Base; }

    std::uint64_t level_size(Level level) const { return level == Level::Base ? q_ : Q_; }
    /// Coefficient count of an element at this level over the next-lower field.
    int level_degree(Level level) const { return level == Level::Base ? d_ : m_; }

    FieldElement zero(Level level) const;
    FieldElement one(Level level) const;
    /// The adjoined root: t at Base (requires d >= 2), a at Ext.
    FieldElement generator(Level level) const;
    /// n mod p, embedded at the given level.
    FieldElement from_integer(Level level, std::uint64_t n) const;
    /// Inverse of FieldElement::encoding(); code must be < level_size(level).
    FieldElement from_encoding(Level level, std::uint64_t code) const;
    /// Element from its flat F_p digit vector (length d at Base, m*d at Ext).
    FieldElement from_digits(Level level, std::vector<std::uint32_t> digits) const;

    bool same_structure(const FieldTower& other) const;

    /// Stored modulus digit tables (constant first, monic). The base table is
    /// {0,1} (i.e. t) when q = p and no modulus was supplied.
    const std::vector<std::uint32_t>& base_modulus_digits() const { return base_mod_; }
    const std::vector<std::vector<std::uint32_t>>& ext_modulus_coeffs() const { return ext_mod_; }

  private:
    FieldTower() = default;

    std::uint64_t p_ = 0, q_ = 0, Q_ = 0;
    int d_ = 1, m_ = 1;
    bool user_base_ = false, has_ext_ = false;
    std::vector<std::uint32_t> base_mod_;               // length d+1
    std::vector<std::vector<std::uint32_t>> ext_mod_;   // length m+1 when has_ext_

    friend class FieldElement;
};

/// One element of a tower level, always reduced modulo the level's modulus.
/// Stored as the flat vector of F_p digits of its coefficient tower: length d
/// at Base, m*d at Ext (coefficient of a^j occupies digits [j*d, (j+1)*d)).
class FieldElement {
  public:
    FieldElement() = delete;

    Level level() const { return level_; }
    const TowerPtr& tower() const { return tower_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }

    bool is_zero() const;
    bool is_one() const;

    /// Canonical integer encoding: little-endian base-p value of the flat digit
    /// vector. Orders, hashes and tie-breaks elements everywhere.
    std::uint64_t encoding() const;

    /// Base-level coefficients of an Ext element w.r.t. the power basis
    /// {1, a, ..., a^{m-1}}; identity (singleton) at Base level.
    std::vector<FieldElement> coeffs() const;

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(std::uint64_t n) const;

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);

    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }
    /// Total order by canonical integer encoding (same tower and level only).
    friend bool operator<(const FieldElement& x, const FieldElement& y);

  private:
    FieldElement(TowerPtr tower, Level level, std::vector<std::uint32_t> digits)
        : tower_(std::move(tower)), level_(level), digits_(std::move(digits)) {}

    TowerPtr tower_;
    Level level_;
    std::vector<std::uint32_t> digits_;

    friend class FieldTower;
};

/// x -> x^q, the Frobenius of the extension relative to the base field. Acts
/// on the tower's top level; fixes exactly the embedded copy of F_q, and the
/// m-th iterate is the identity.
FieldElement frobenius_q(const FieldElement& x);

/// Coefficient injection F_q -> F_{q^m}; a field homomorphism.
FieldElement embed(const FieldElement& x);

/// Partial inverse of embed: defined exactly on the embedded subfield.
FieldElement project(const FieldElement& x);

/// All elements of the level, encoding-ascending, each exactly once.
/// Level size must be <= 2^20.
std::vector<FieldElement> enumerate_elements(const TowerPtr& tower, Level level);

namespace detail {
/// Shared guards for binary operations.
void check_compatible(const FieldElement& x, const FieldElement& y);
}  // namespace detail

}  // namespace fqlc

#endif
