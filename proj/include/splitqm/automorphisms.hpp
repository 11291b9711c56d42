#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "splitqm/quasimorphisms.hpp"
#include "splitqm/words.hpp"

namespace splitqm {

/// An endomorphism of Z * Z = <a> * <b>, given by the images of a and b.
struct Endo {
  Word image_a;
  Word image_b;

  friend bool operator==(const Endo&, const Endo&) = default;
};

Endo identity_endo();
/// a -> a, b -> a^n b. tau(-n) is the inverse of tau(n).
Endo tau(std::int64_t n);
/// x -> h^-1 x h on both generators.
Endo inner(const Word& h);

Word apply(const Endo& e, const Word& g);
/// first after second: x -> first(second(x)).
Endo compose(const Endo& first, const Endo& second);

/// True when both compositions fix a and b.
bool is_inverse_pair(const Endo& e, const Endo& e_inverse);

/// (e.f)(g) = f(e^-1(g)). Throws std::invalid_argument when e_inverse is
/// not inverse to e.
Rational pullback_qm(const SplitQM& f, const Endo& e, const Endo& e_inverse, const Word& g);

/// hom(tau_n(x)) - hom(x).
Rational tau_deviation(const SplitQM& f, std::int64_t n, const Word& x);

struct ViolationWitness {
  Word word;
  /// Value at b of the only homomorphism the deviation could equal; the
  /// deviation at a is always 0.
  Rational forced_b;
  /// Deviation minus the forced homomorphism at `word`; nonzero.
  Rational excess;
  /// Deviation along word^l for l = 1, 2, ...: raw and with the forced
  /// homomorphism subtracted. Both grow linearly in l.
  std::vector<Rational> raw_growth;
  std::vector<Rational> excess_growth;
};

struct ViolationBounds {
  std::int64_t exponent_window = 0;  // 0 picks the periodicity window
  std::int64_t max_l = 10;
  std::size_t growth_steps = 10;
};

/// Searches a^k b^l (k in the window, 1 <= l <= max_l), the commutator
/// [a, b], and short words for an element where the deviation is not the
/// forced homomorphism. Absent when f satisfies the periodicity condition.
std::optional<ViolationWitness> violation_witness(const SplitQM& f, std::int64_t n, const ViolationBounds& bounds = {});

struct FixedPointReport {
  std::int64_t n = 0;
  bool factor_a_periodic = false;
  bool factor_b_zero = false;
  bool condition_holds() const { return factor_a_periodic && factor_b_zero; }
  /// Words on which f(tau_n(g)) = f(g) was verified (only when the
  /// condition holds).
  std::size_t verified = 0;
  /// f(tau_n([a, b])) - f([a, b]) = q_A(1 + n) - q_A(1) - q_A(n).
  Rational commutator_deviation;
  std::optional<ViolationWitness> witness;
};

/// Decides whether q_A is |n|-periodic and q_B = 0. If so, checks
/// f(tau_n(g)) = f(g) on every word in `words` (and f = 0 there when
/// |n| <= 2), throwing IdentityViolation on failure; otherwise searches a
/// violation witness. Needs bounded factor maps on Z * Z and n != 0.
FixedPointReport check_fixed_point(const SplitQM& f, std::int64_t n, const std::vector<Word>& words,
                                   const ViolationBounds& bounds = {});

/// max |f(h g h^-1) - f(g)| over `words`. Throws IdentityViolation when it
/// exceeds 2 * split_defect(f). Pass `defect` to skip recomputing it.
Rational inner_distance_check(const SplitQM& f, const Word& h, const std::vector<Word>& words,
                              const std::optional<Rational>& defect = std::nullopt);

}  // namespace splitqm
