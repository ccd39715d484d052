#ifndef FQLC_SEQUENCES_HPP
#define FQLC_SEQUENCES_HPP

#include <cstdint>
#include <vector>

#include "fqlc/poly.hpp"
#include "fqlc/subfield.hpp"

namespace fqlc {

/// Finite prefix s_0 .. s_{N-1} of a linear recurring sequence over one tower
/// level. Pure value; may be empty.
class Sequence {
  public:
    Sequence(TowerPtr tower, Level level, std::vector<FieldElement> terms);

    const TowerPtr& tower() const { return tower_; }
    Level level() const { return level_; }
    const std::vector<FieldElement>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const FieldElement& operator[](std::size_t i) const { return terms_[i]; }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.level_ == b.level_ && a.tower_->same_structure(*b.tower_) && a.terms_ == b.terms_;
    }

  private:
    TowerPtr tower_;
    Level level_;
    std::vector<FieldElement> terms_;
};

/// m parallel base-level sequences of equal length: the coordinate view of an
/// extension-level sequence under the power basis {1, a, ..., a^{m-1}}.
struct MultiSequence {
    std::vector<Sequence> components;
};

/// Runs the recurrence s_{k+n} = -(a_0 s_k + ... + a_{n-1} s_{k+n-1}) given by
/// a monic characteristic polynomial and an initial state of its degree,
/// producing N terms. A degree-0 characteristic polynomial yields zeros.
Sequence lfsr_generate(const Poly& char_poly, const std::vector<FieldElement>& initial, std::size_t n_terms);

/// Minimal-degree monic characteristic polynomial generating the prefix.
/// All-zero (or empty) prefixes give 1. The result regenerates the prefix
/// exactly; it is the true minimal polynomial whenever the prefix length is at
/// least twice the true linear complexity.
Poly berlekamp_massey(const Sequence& seq);

/// Coordinates of a top-level sequence over the base field; recombining the
/// components with powers of the generator reproduces the input.
MultiSequence decompose_to_base(const Sequence& seq);

/// Least-degree monic polynomial that is a characteristic polynomial of every
/// component: the lcm of the per-component minimal polynomials. This is the
/// independent oracle the subfield computation is verified against.
Poly joint_min_poly(const MultiSequence& ms);

/// Splits a sequence along pairwise-coprime monic factors whose product is a
/// characteristic polynomial of the prefix, by applying the CRT idempotents of
/// the factors to the shift operator. Component i satisfies parts[i] and the
/// components sum termwise to the input.
std::vector<Sequence> decompose_by_coprime_factors(const Sequence& seq, const std::vector<Poly>& parts);

struct VerifyMismatch {
    int trial = 0;
    Poly measured_h;  ///< Berlekamp-Massey result over F_{q^m}
    Poly theory_H;    ///< subfield transport of measured_h
    Poly oracle_H;    ///< joint minimal polynomial of the decomposed sequence
};

struct VerifyReport {
    int trials = 0;
    int minpoly_exact_matches = 0;  ///< trials where the measured h equals the input h
    std::vector<VerifyMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
    double match_fraction() const { return trials ? double(minpoly_exact_matches) / trials : 0.0; }
};

/// Differential test: for each trial, generate a random sequence from h,
/// measure its minimal polynomial h' over F_{q^m}, and compare the subfield
/// transport of h' against the joint-BM oracle on the decomposed sequence.
/// Prefix length 2*m*deg(h)+2 guarantees exact measurements. Deterministic
/// for a fixed seed.
VerifyReport verify_subfield_minpoly(const Poly& h, int trials, std::uint64_t seed);

}  // namespace fqlc

#endif
