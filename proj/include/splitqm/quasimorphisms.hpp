#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "splitqm/groups.hpp"
#include "splitqm/numeric.hpp"
#include "splitqm/words.hpp"

namespace splitqm {

/// Residue table of an n-periodic map on Z: value at k is values[k mod n].
struct PeriodicPart {
  std::int64_t period = 1;
  std::vector<Rational> values;
};

/// An alternating real-valued map on one factor, written as
///   slope * k + support(x) + periodic(k) + sign_coefficient * sgn(k).
/// Slope, periodic and sign terms are only allowed on the integer group.
struct FactorQM {
  Rational slope;
  std::map<BigInt, Rational> support;
  std::optional<PeriodicPart> periodic;
  Rational sign_coefficient;

  static FactorQM zero() { return {}; }
  static FactorQM homomorphism(Rational slope) { return {std::move(slope), {}, std::nullopt, 0}; }
  static FactorQM sign(Rational coefficient = 1) { return {0, {}, std::nullopt, std::move(coefficient)}; }

  bool is_bounded() const { return slope == 0; }
  bool has_finite_support_only() const { return slope == 0 && !periodic && sign_coefficient == 0; }
  /// Largest |k| in the support (0 when empty).
  BigInt support_radius() const;

  /// Sets x -> value and the element inverse to x -> -value.
  void set_alternating(const FactorDescriptor& d, const FactorElement& x, const Rational& value);
};

/// Throws std::invalid_argument unless q is a well-formed alternating map on d.
void validate(const FactorDescriptor& d, const FactorQM& q);

Rational eval_factor(const FactorQM& q, const FactorElement& x);

/// q(x) + q(y) - q(xy).
Rational factor_coboundary(const FactorDescriptor& d, const FactorQM& q, const FactorElement& x,
                           const FactorElement& y);

struct FactorDefect {
  Rational value;  // sup |q(x) + q(y) - q(xy)|
  /// A pair attaining the supremum; absent when the defect is 0.
  std::optional<std::pair<FactorElement, FactorElement>> argmax;
};

/// Half-width W of the exact enumeration window on Z (1 for finite factors).
std::int64_t defect_window(const FactorDescriptor& d, const FactorQM& q);

/// Exact defect. Finite factors enumerate all pairs; on Z the pairs with
/// |k|, |l| <= defect_window already realize every coboundary value.
FactorDefect factor_defect_exact(const FactorDescriptor& d, const FactorQM& q);

/// Enumeration over |k|, |l| <= window on Z, ignoring the window rule.
FactorDefect factor_defect_on_window(const FactorQM& q, std::int64_t window);

class SplitQM {
 public:
  SplitQM(Splitting s, FactorQM on_a, FactorQM on_b);

  const Splitting& splitting() const { return splitting_; }
  const FactorQM& factor(Side side) const { return side == Side::A ? on_a_ : on_b_; }

 private:
  Splitting splitting_;
  FactorQM on_a_;
  FactorQM on_b_;
};

Rational eval_split(const SplitQM& f, const Word& g);
Rational coboundary(const SplitQM& f, const Word& g, const Word& h);

struct SplitDefect {
  Rational value;
  FactorDefect on_a;
  FactorDefect on_b;
  Side max_side = Side::A;
};

SplitDefect split_defect_detail(const SplitQM& f);
Rational split_defect(const SplitQM& f);
bool is_trivial(const SplitQM& f);

/// max |coboundary| over `count` random pairs.
Rational sampled_defect(const SplitQM& f, WordSampler& sampler, std::size_t count);

/// As sampled_defect, plus each factor's maximizing pair embedded as
/// one-letter words and at `junctions` random junctions.
Rational sampled_defect_with_junctions(const SplitQM& f, WordSampler& sampler, std::size_t count,
                                       std::size_t junctions);

/// Homogenization of a single factor map: the slope part on Z, 0 otherwise.
Rational homogenize_factor(const FactorDescriptor& d, const FactorQM& q, const FactorElement& x);
Rational homogenize_eval(const SplitQM& f, const Word& g);

/// Words whose homogenized values detect the factor coboundary at (x1, x2):
///   g = x y x2 y x1 y^-1 x^-1,  h = x^-1 y^-1 x2 y x1 y x
/// with x, x1, x2 on `side` and y on the other side. gap is
/// hom(gh) - hom(g) - hom(h), equal to 2 * (q(x1) + q(x2) - q(x1 x2)).
struct DefectDoublingWitness {
  Side side = Side::A;
  FactorElement x1, x2;
  Word g, h;
  Rational gap;
  Rational factor_coboundary;
};

/// Throws std::invalid_argument unless x1, x2, x1 x2, x^2 and y are all
/// non-trivial.
DefectDoublingWitness defect_doubling_witness(const SplitQM& f, Side side, const FactorElement& x1,
                                              const FactorElement& x2, const FactorElement& x,
                                              const FactorElement& y);

struct GromovNormReport {
  Rational value;  // equals split_defect
  std::optional<DefectDoublingWitness> witness;
};

/// The norm of the bounded class of f is its defect; the witness has gap
/// 2 * defect whenever the defect is positive.
GromovNormReport gromov_norm(const SplitQM& f);

/// PSL(2,Z) = Z/2 * Z/3 with the map that is 0 on Z/2 and +1, -1 on the
/// two non-trivial elements of Z/3.
SplitQM rademacher();

/// The map on Z * Z summing s over all exponents, s given on positive
/// exponents and extended alternatingly.
SplitQM sequence_qm(const std::map<std::int64_t, Rational>& positive_values);

/// Sign map on both factors of Z * Z.
SplitQM sign_qm();

struct RandomQMOptions {
  std::int64_t support_radius = 4;
  std::int64_t max_period = 4;
  std::int64_t numerator_bound = 3;
  std::int64_t denominator_bound = 4;
  bool allow_slope = true;
  bool allow_periodic = true;
  bool allow_sign = true;
};

/// A random alternating map on d. Each part is present with probability
/// 1/2 when allowed; values are p/q with |p| <= numerator_bound and
/// 1 <= q <= denominator_bound.
FactorQM random_factor_qm(const FactorDescriptor& d, std::mt19937_64& rng, const RandomQMOptions& options = {});

}  // namespace splitqm
