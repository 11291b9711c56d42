#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "splitqm/groups.hpp"
#include "splitqm/numeric.hpp"
#include "splitqm/quasimorphisms.hpp"

namespace splitqm {

/// A bounded alternating function on a finite group, or a finitely
/// supported one on Z. Only non-zero values are stored.
class DefectVector {
 public:
  explicit DefectVector(FactorDescriptor carrier) : carrier_(std::move(carrier)) {}
  /// Validates alternation and the element range.
  DefectVector(FactorDescriptor carrier, std::map<BigInt, Rational> values);

  const FactorDescriptor& carrier() const { return carrier_; }
  const std::map<BigInt, Rational>& values() const { return values_; }
  Rational at(const FactorElement& x) const;
  bool is_zero() const { return values_.empty(); }

  /// Sets x -> value and x^-1 -> -value.
  void set_alternating(const FactorElement& x, const Rational& value);

  /// The same function as a factor map (support only).
  FactorQM as_factor_qm() const;

  friend bool operator==(const DefectVector& x, const DefectVector& y) {
    return x.carrier_ == y.carrier_ && x.values_ == y.values_;
  }

 private:
  FactorDescriptor carrier_;
  std::map<BigInt, Rational> values_;
};

DefectVector operator+(const DefectVector& x, const DefectVector& y);
DefectVector operator*(const Rational& c, const DefectVector& x);

Rational defect_norm(const DefectVector& f);
Rational sup_norm(const DefectVector& f);

struct OrderBoundReport {
  bool holds = true;
  Rational norm;
  /// First element breaking |f(g)| <= (1 - 2/ord g) * norm.
  std::optional<FactorElement> violation;
};

/// Checks the order bound on every non-identity element of a finite
/// carrier, or on the support of an integer one (factor 1 there).
OrderBoundReport order_bound_check(const DefectVector& f);

/// sup_norm <= defect_norm <= 3 * sup_norm.
bool norm_equivalence_holds(const DefectVector& f);

/// A map between finite carriers, given by the image of each element.
struct FiniteHom {
  FactorDescriptor source;
  FactorDescriptor target;
  std::vector<FactorElement> images;

  FactorElement operator()(const FactorElement& x) const;
};

bool is_homomorphism(const FiniteHom& h);
bool is_injective(const FiniteHom& h);
bool is_surjective(const FiniteHom& h);

/// Z/n -> Z/m, k -> factor * k mod m. Throws unless it is a homomorphism.
FiniteHom cyclic_hom(std::int64_t n, std::int64_t m, std::int64_t factor);

/// Extension by zero along an injective homomorphism.
DefectVector embed_subgroup(const DefectVector& f, const FiniteHom& inclusion);

/// f composed with a surjective homomorphism.
DefectVector pullback_quotient(const DefectVector& f, const FiniteHom& projection);

struct ShortExactSequence {
  FiniteHom inclusion;
  FiniteHom projection;
};

/// Throws std::invalid_argument unless inclusion is injective, projection
/// surjective, both homomorphisms and image(inclusion) = kernel(projection).
void validate(const ShortExactSequence& ses);

/// f on the image of the kernel, f' o projection elsewhere.
DefectVector ses_embed(const DefectVector& on_kernel, const DefectVector& on_quotient,
                       const ShortExactSequence& ses);

/// Every alternating vector on a finite carrier taking values in `values`
/// (involutions are forced to 0).
std::vector<DefectVector> all_alternating_vectors(const FactorDescriptor& carrier,
                                                  const std::vector<Rational>& values);

/// Random alternating vector with entries p/q, |p| <= numerator_bound,
/// 1 <= q <= denominator_bound. On Z the support is within `radius`.
DefectVector random_defect_vector(const FactorDescriptor& carrier, std::mt19937_64& rng,
                                  std::int64_t numerator_bound = 3, std::int64_t denominator_bound = 4,
                                  std::int64_t radius = 4);

}  // namespace splitqm
