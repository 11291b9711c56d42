#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "splitqm/groups.hpp"
#include "splitqm/numeric.hpp"
#include "splitqm/words.hpp"

namespace splitqm {

/// Dense square matrix with exact rational entries.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}
  /// Row-major entries; throws unless rows form a square.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<RationalMatrix> inverse() const;
  /// Integer power; negative exponents need an invertible matrix.
  RationalMatrix power(const BigInt& k) const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// A vector of a module: dense coordinates, or a finitely supported
/// function on the group (no zero entries stored).
class Vector {
 public:
  using Dense = std::vector<Rational>;
  using Sparse = std::map<Word, Rational>;

  Vector() : data_(Dense{}) {}
  static Vector dense(Dense coords) { return Vector(std::move(coords)); }
  static Vector sparse(Sparse values);
  static Vector indicator(const Word& g) { return sparse({{g, Rational(1)}}); }

  bool is_dense() const { return std::holds_alternative<Dense>(data_); }
  const Dense& coords() const { return std::get<Dense>(data_); }
  const Sparse& entries() const { return std::get<Sparse>(data_); }
  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  friend Vector operator+(Vector x, const Vector& y) { return x += y; }
  friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
  friend Vector operator*(const Rational& c, const Vector& x);
  Vector operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const Vector& x, const Vector& y);

 private:
  explicit Vector(Dense d) : data_(std::move(d)) {}
  explicit Vector(Sparse s) : data_(std::move(s)) {}
  std::variant<Dense, Sparse> data_;
};

/// Zero vector shaped like `like`.
Vector zero_like(const Vector& like);

/// p-norm in floating point; p = infinity gives the sup norm.
double norm(const Vector& v, double p);
/// Exact 1-norm or sup norm (p = 1 or infinity); nullopt for other p.
std::optional<Rational> exact_norm(const Vector& v, double p);

/// Matrices for one factor: a generator matrix for Z and Z/n (M^n = I is
/// checked), or one matrix per element for a table group (checked to be a
/// homomorphism).
struct FactorMatrices {
  std::optional<RationalMatrix> generator;
  std::vector<RationalMatrix> per_element;
};

struct FiniteDimRep {
  std::size_t dim = 0;
  FactorMatrices on_a;
  FactorMatrices on_b;
};

/// Z * Z acting on Q^3: a rotates about the z axis and b about the x
/// axis, both with cosine 3/5. Orthogonal, so isometric for the 2-norm.
FiniteDimRep rational_rotation_rep();

/// Left-regular representation on finitely supported functions, with the
/// p-norm as its designated norm: (g.chi)(h) = chi(g^-1 h).
struct RegularRep {
  double p = 1.0;
};

class ModuleAction {
 public:
  ModuleAction(Splitting s, FiniteDimRep rep);
  ModuleAction(Splitting s, RegularRep rep);

  const Splitting& splitting() const { return splitting_; }
  bool is_regular() const { return std::holds_alternative<RegularRep>(kind_); }
  const FiniteDimRep& finite() const { return std::get<FiniteDimRep>(kind_); }
  const RegularRep& regular() const { return std::get<RegularRep>(kind_); }
  /// The p of the designated norm (p-norm for regular actions; the caller's
  /// choice otherwise).
  double designated_p() const { return is_regular() ? regular().p : designated_p_; }
  void set_designated_p(double p) { designated_p_ = p; }

  Vector zero() const;
  /// Throws std::invalid_argument when v has the wrong shape.
  void check_shape(const Vector& v) const;
  Vector act_letter(Side side, const FactorElement& x, const Vector& v) const;
  RationalMatrix letter_matrix(Side side, const FactorElement& x) const;

 private:
  Splitting splitting_;
  std::variant<FiniteDimRep, RegularRep> kind_;
  double designated_p_ = 2.0;
};

Vector act(const ModuleAction& m, const Word& g, const Vector& v);

/// iota_v(g) = g.v - v.
Vector inner_cocycle(const ModuleAction& m, const Vector& v, const Word& g);

/// A factor map: finitely supported values plus an optional inner part
/// x -> x.u - u.
struct FactorCocycleMap {
  std::map<BigInt, Vector> support;
  std::optional<Vector> inner;

  static FactorCocycleMap inner_only(Vector u) { return {{}, std::move(u)}; }
};

class SplitQC {
 public:
  /// Validates shapes and alternation f(x) + x.f(x^-1) = 0 on the support.
  SplitQC(ModuleAction action, FactorCocycleMap on_a, FactorCocycleMap on_b);

  const ModuleAction& action() const { return action_; }
  const Splitting& splitting() const { return action_.splitting(); }
  const FactorCocycleMap& factor(Side side) const { return side == Side::A ? on_a_ : on_b_; }

 private:
  ModuleAction action_;
  FactorCocycleMap on_a_;
  FactorCocycleMap on_b_;
};

/// Sets x -> value and x^-1 -> -x^-1.value.
void set_alternating(const ModuleAction& m, Side side, FactorCocycleMap& map, const FactorElement& x,
                     const Vector& value);

Vector eval_factor_qc(const ModuleAction& m, Side side, const FactorCocycleMap& map, const FactorElement& x);

/// Sum over the normal form of prefix . f(letter).
Vector eval_split_qc(const SplitQC& f, const Word& g);

/// f(g) + g.f(h) - f(gh).
Vector qc_coboundary(const SplitQC& f, const Word& g, const Word& h);

/// The factor coboundary f(x) + x.f(y) - f(xy).
Vector factor_qc_coboundary(const SplitQC& f, Side side, const FactorElement& x, const FactorElement& y);

struct QCDefect {
  double value = 0.0;
  std::optional<Rational> exact;  // for p = 1 and p = infinity
};

/// max over both factor windows of ||f(x) + x.f(y) - f(xy)||_p. Windows are
/// exhaustive on finite factors and |k|, |l| <= 2M + 1 on Z.
QCDefect split_qc_defect(const SplitQC& f, double p);

/// How the translating element in front of the n-th value is formed from
/// the previous word w: (w b)^-1, (b w)^-1 or w^-1. Only the first makes the
/// telescoping sums close.
enum class PrefixConvention { WordThenB, BThenWord, WordOnly };

/// b a^p b a^(p^2) ... b a^(p^n); the empty word for n = 0.
Word prime_power_word(const Splitting& s, const FactorElement& b, std::int64_t p, std::int64_t n);
/// a b a^2 b ... b a^n; the empty word for n = 0.
Word staircase_word(const Splitting& s, const FactorElement& b, std::int64_t n);

struct WitnessReport {
  SplitQC cocycle;
  /// f at the n-th word, n = 0..depth.
  std::vector<Vector> values;
  /// Whether f(word_n) = n.v for every n <= depth.
  bool growth_holds = true;
  /// For prime-power witnesses: f at the other prime's words vanishes.
  bool other_prime_vanishes = true;
  /// ||f(word_n)||_p and n ||v||_p.
  std::vector<double> norms;
  std::vector<double> expected_norms;

  bool holds() const { return growth_holds && other_prime_vanishes; }
};

/// The map on a^(±p^i), i <= depth, with value t_n . v at a^(p^n), t_n the
/// translating element for the prefix before a^(p^n). A must be Z with
/// generator a; b is a non-trivial element of B.
WitnessReport prime_power_witness(const ModuleAction& m, std::int64_t p, std::int64_t q, const Vector& v,
                                  std::int64_t depth, PrefixConvention convention = PrefixConvention::WordThenB,
                                  std::optional<FactorElement> b = std::nullopt);

/// The map on a^(±n), n <= depth, with value xi at a and t_n . xi at a^n.
WitnessReport staircase_witness(const ModuleAction& m, const Vector& xi, std::int64_t depth,
                                PrefixConvention convention = PrefixConvention::WordThenB,
                                std::optional<FactorElement> b = std::nullopt);

}  // namespace splitqm
