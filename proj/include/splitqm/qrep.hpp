#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "splitqm/groups.hpp"
#include "splitqm/numeric.hpp"
#include "splitqm/words.hpp"

namespace splitqm {

inline constexpr double kMetricTolerance = 1e-9;

enum class MetricKind { Finite, Circle, Unitary };

/// Element of a metric group: a table index, a circle angle in turns
/// (reduced to [0, 1)), or a unitary matrix.
using GroupElement = std::variant<std::size_t, Rational, Eigen::MatrixXcd>;

// Build elements through these; the variant's converting constructor
// cannot handle Eigen matrices.
inline GroupElement circle_element(Rational turns) { return GroupElement(std::in_place_index<1>, std::move(turns)); }
inline GroupElement unitary_element(Eigen::MatrixXcd m) { return GroupElement(std::in_place_index<2>, std::move(m)); }

/// A group with a bi-invariant metric.
class MetricGroup {
 public:
  /// Finite group with a rational distance matrix. Checks the metric
  /// axioms and bi-invariance exhaustively.
  static MetricGroup finite(FactorDescriptor group, std::vector<std::vector<Rational>> distance);
  /// Z/n with d(x, y) = scale * cyclic distance.
  static MetricGroup cyclic(std::int64_t n, const Rational& scale);
  /// Arc length on R/Z, angles stored in turns.
  static MetricGroup circle();
  /// U(n) with the Frobenius distance.
  static MetricGroup unitary(std::size_t n);

  MetricKind kind() const { return kind_; }
  std::string name() const;
  const FactorDescriptor& finite_group() const;
  std::size_t dimension() const { return dimension_; }
  /// All elements of a finite target, in index order.
  std::vector<GroupElement> elements() const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(const GroupElement& x, std::int64_t n) const;
  double distance(const GroupElement& x, const GroupElement& y) const;
  /// Exact distance on finite targets, nullopt otherwise.
  std::optional<Rational> exact_distance(const GroupElement& x, const GroupElement& y) const;
  /// Equality up to kMetricTolerance for unitary matrices.
  bool same(const GroupElement& x, const GroupElement& y) const;
  bool is_identity(const GroupElement& x) const { return same(x, identity()); }

  /// Throws std::invalid_argument when x is not an element of this group.
  void validate(const GroupElement& x) const;
  std::string format(const GroupElement& x) const;

 private:
  MetricKind kind_ = MetricKind::Circle;
  FactorDescriptor group_;
  std::vector<std::vector<Rational>> distance_;
  std::size_t dimension_ = 0;
};

/// Closest unitary matrix in the QR sense: Q with the phases of diag(R).
Eigen::MatrixXcd reproject_unitary(const Eigen::MatrixXcd& m);

/// exp(i * h) for a Hermitian h.
Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& hermitian);

/// Haar-ish random Hermitian matrix with Frobenius norm `scale`.
Eigen::MatrixXcd random_hermitian(std::size_t n, double scale, std::mt19937_64& rng);

/// An alternating map from one factor into a metric group. Elements not in
/// `support` go to the identity; on Z, `tail` sends a^k outside the
/// support to tail^sgn(k).
struct FactorQRMap {
  std::map<BigInt, GroupElement> support;
  std::optional<GroupElement> tail;
};

GroupElement eval_factor_qr(const MetricGroup& target, const FactorQRMap& map, const FactorElement& x);

/// Sets x -> value and x^-1 -> value^-1.
void set_alternating(const MetricGroup& target, const FactorDescriptor& d, FactorQRMap& map,
                     const FactorElement& x, const GroupElement& value);

/// Throws std::invalid_argument unless the map is alternating and well typed.
void validate(const MetricGroup& target, const FactorDescriptor& d, const FactorQRMap& map);

class SplitQRep {
 public:
  SplitQRep(Splitting s, MetricGroup target, FactorQRMap on_a, FactorQRMap on_b);

  const Splitting& splitting() const { return splitting_; }
  const MetricGroup& target() const { return target_; }
  const FactorQRMap& factor(Side side) const { return side == Side::A ? on_a_ : on_b_; }

 private:
  Splitting splitting_;
  MetricGroup target_;
  FactorQRMap on_a_;
  FactorQRMap on_b_;
};

/// Ordered product of the factor values over the normal form. Unitary
/// products are re-projected every 64 multiplications.
GroupElement eval_qrep(const SplitQRep& mu, const Word& g);

/// d(mu(gh), mu(g) mu(h)).
double qrep_coboundary(const SplitQRep& mu, const Word& g, const Word& h);

struct QRDefect {
  double value = 0;
  std::optional<Rational> exact;  // finite targets
  std::optional<std::pair<FactorElement, FactorElement>> argmax;
};

/// sup d(map(xy), map(x) map(y)). Finite factors enumerate all pairs; on
/// Z the window |k|, |l| <= 3M + 3 (M the support radius) realizes every
/// value pattern.
QRDefect qrep_factor_defect(const MetricGroup& target, const FactorDescriptor& d, const FactorQRMap& map);

struct SplitQRDefect {
  QRDefect value;
  QRDefect on_a;
  QRDefect on_b;
};

SplitQRDefect qrep_defect(const SplitQRep& mu);

/// Max coboundary over `count` random pairs plus `junctions` junction pairs
/// built from each factor's maximizing pair.
double qrep_sampled_defect(const SplitQRep& mu, WordSampler& sampler, std::size_t count,
                           std::size_t junctions = 0);

/// max d(map(x), e).
double sup_norm_qrep(const MetricGroup& target, const FactorDescriptor& d, const FactorQRMap& map);

/// A homomorphism from one factor: the image of the generator for Z and
/// Z/n, or the image of every element for table groups.
struct FactorHom {
  std::optional<GroupElement> generator;
  std::vector<GroupElement> per_element;
};

struct Representation {
  FactorHom on_a;
  FactorHom on_b;
};

GroupElement apply_hom(const MetricGroup& target, const FactorDescriptor& d, const FactorHom& hom,
                       const FactorElement& x);
/// Throws std::invalid_argument unless hom is a homomorphism.
void validate(const MetricGroup& target, const FactorDescriptor& d, const FactorHom& hom);
GroupElement eval_representation(const Splitting& s, const MetricGroup& target, const Representation& rho,
                                 const Word& g);

/// All homomorphisms of each factor into a finite target, combined.
std::vector<Representation> enumerate_representations(const Splitting& s, const MetricGroup& target);

enum class WitnessStatus { Found, Vacuous, Exhausted };

struct NontrivialityWitness {
  WitnessStatus status = WitnessStatus::Vacuous;
  double delta = 0;
  Word word;
  double distance = 0;
  std::size_t words_tried = 0;
};

/// Looks for g with d(mu(g), rho(g)) >= delta - tolerance, first among
/// factor elements (powers up to `depth` on Z), then among (x y^{+-1})^n
/// with n <= depth. Throws std::invalid_argument unless delta <= eps / 2
/// and rho is a representation.
NontrivialityWitness nontriviality_witness(const SplitQRep& mu, const Representation& rho, double epsilon,
                                           std::size_t depth = 32);

struct SmallSubgroupReport {
  bool passes = true;
  /// Generator of a non-trivial subgroup inside the open epsilon ball.
  std::optional<GroupElement> violation;
  std::size_t checked = 0;
};

/// Finite targets: every cyclic subgroup, exhaustively. Circle: the finite
/// subgroups of order <= scan_bound plus the dense ones. Unitary: `samples`
/// random elements inside the ball must have a power among the first
/// scan_bound leaving it.
SmallSubgroupReport check_no_small_subgroups(const MetricGroup& target, double epsilon,
                                             std::size_t scan_bound = 64, std::size_t samples = 200,
                                             std::uint64_t seed = 1);

}  // namespace splitqm
