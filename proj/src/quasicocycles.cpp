#include "splitqm/quasicocycles.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "splitqm/errors.hpp"

namespace splitqm {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows do not form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (other.n_ != n_) throw std::invalid_argument("matrix dimensions differ");
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += x * other(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length does not match matrix dimension");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col) == 0) ++pivot;
    if (pivot == n_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t j = 0; j < n_; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = 0; j < n_; ++j) {
        a(i, j) -= factor * a(col, j);
        inv(i, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix RationalMatrix::power(const BigInt& k) const {
  RationalMatrix base = *this;
  if (k < 0) {
    auto inv = inverse();
    if (!inv) throw std::invalid_argument("negative power of a singular matrix");
    base = *inv;
  }
  BigInt e = k < 0 ? BigInt(-k) : k;
  RationalMatrix out = identity(n_);
  while (e > 0) {
    if ((e & 1) != 0) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

Vector Vector::sparse(Sparse values) {
  std::erase_if(values, [](const auto& kv) { return kv.second == 0; });
  return Vector(std::move(values));
}

bool Vector::is_zero() const {
  if (is_dense()) {
    for (const auto& x : coords())
      if (x != 0) return false;
    return true;
  }
  return entries().empty();
}

namespace {

void require_same_kind(const Vector& x, const Vector& y) {
  if (x.is_dense() != y.is_dense()) throw std::invalid_argument("mixing dense and sparse vectors");
  if (x.is_dense() && x.coords().size() != y.coords().size()) {
    throw std::invalid_argument("vector dimensions differ");
  }
}

void add_scaled(Vector::Sparse& into, const Vector::Sparse& from, const Rational& sign) {
  for (const auto& [key, value] : from) {
    auto [it, inserted] = into.try_emplace(key, 0);
    it->second += sign * value;
    if (it->second == 0) into.erase(it);
  }
}

}  // namespace

Vector& Vector::operator+=(const Vector& other) {
  require_same_kind(*this, other);
  if (is_dense()) {
    auto& d = std::get<Dense>(data_);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += other.coords()[i];
  } else {
    add_scaled(std::get<Sparse>(data_), other.entries(), 1);
  }
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_kind(*this, other);
  if (is_dense()) {
    auto& d = std::get<Dense>(data_);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= other.coords()[i];
  } else {
    add_scaled(std::get<Sparse>(data_), other.entries(), -1);
  }
  return *this;
}

Vector operator*(const Rational& c, const Vector& x) {
  if (x.is_dense()) {
    Vector::Dense d = x.coords();
    for (auto& v : d) v *= c;
    return Vector::dense(std::move(d));
  }
  Vector::Sparse s = x.entries();
  for (auto& [k, v] : s) v *= c;
  return Vector::sparse(std::move(s));
}

bool operator==(const Vector& x, const Vector& y) {
  if (x.is_dense() != y.is_dense()) return false;
  return x.is_dense() ? x.coords() == y.coords() : x.entries() == y.entries();
}

Vector zero_like(const Vector& like) {
  if (like.is_dense()) return Vector::dense(Vector::Dense(like.coords().size()));
  return Vector::sparse({});
}

namespace {

template <typename F>
void for_each_value(const Vector& v, F&& fn) {
  if (v.is_dense()) {
    for (const auto& x : v.coords()) fn(x);
  } else {
    for (const auto& [k, x] : v.entries()) fn(x);
  }
}

}  // namespace

double norm(const Vector& v, double p) {
  if (std::isinf(p)) {
    double best = 0.0;
    for_each_value(v, [&](const Rational& x) { best = std::max(best, std::abs(to_double(x))); });
    return best;
  }
  double sum = 0.0;
  for_each_value(v, [&](const Rational& x) { sum += std::pow(std::abs(to_double(x)), p); });
  return std::pow(sum, 1.0 / p);
}

std::optional<Rational> exact_norm(const Vector& v, double p) {
  if (p != 1.0 && !std::isinf(p)) return std::nullopt;
  Rational out = 0;
  for_each_value(v, [&](const Rational& x) {
    const Rational a = x < 0 ? Rational(-x) : x;
    if (p == 1.0) {
      out += a;
    } else if (a > out) {
      out = a;
    }
  });
  return out;
}

namespace {

void validate_factor_matrices(const FactorDescriptor& d, const FactorMatrices& fm, std::size_t dim) {
  if (d.kind() == FactorKind::FiniteTable) {
    if (fm.per_element.size() != d.size()) {
      throw std::invalid_argument("table factor " + d.name() + " needs one matrix per element");
    }
    for (const auto& m : fm.per_element)
      if (m.dim() != dim) throw std::invalid_argument("matrix dimension differs from the representation");
    const auto& table = d.table();
    if (!(fm.per_element[d.identity_index()] == RationalMatrix::identity(dim))) {
      throw std::invalid_argument("the identity of " + d.name() + " must act trivially");
    }
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y)
        if (!(fm.per_element[x] * fm.per_element[y] == fm.per_element[table[x][y]])) {
          throw std::invalid_argument("element matrices of " + d.name() + " are not a homomorphism");
        }
    return;
  }
  if (!fm.generator) throw std::invalid_argument("factor " + d.name() + " needs a generator matrix");
  if (fm.generator->dim() != dim) throw std::invalid_argument("matrix dimension differs from the representation");
  if (!fm.generator->inverse()) throw std::invalid_argument("generator matrix of " + d.name() + " is singular");
  if (d.kind() == FactorKind::Cyclic && !(fm.generator->power(d.modulus()) == RationalMatrix::identity(dim))) {
    throw std::invalid_argument("generator matrix violates the relation of " + d.name());
  }
}

}  // namespace

FiniteDimRep rational_rotation_rep() {
  const Rational c(3, 5), sn(4, 5);
  FiniteDimRep rep;
  rep.dim = 3;
  rep.on_a.generator = RationalMatrix::from_rows({{c, -sn, 0}, {sn, c, 0}, {0, 0, 1}});
  rep.on_b.generator = RationalMatrix::from_rows({{1, 0, 0}, {0, c, -sn}, {0, sn, c}});
  return rep;
}

ModuleAction::ModuleAction(Splitting s, FiniteDimRep rep) : splitting_(std::move(s)), kind_(rep) {
  if (rep.dim == 0) throw std::invalid_argument("representation dimension must be positive");
  validate_factor_matrices(splitting_.a(), rep.on_a, rep.dim);
  validate_factor_matrices(splitting_.b(), rep.on_b, rep.dim);
}

ModuleAction::ModuleAction(Splitting s, RegularRep rep) : splitting_(std::move(s)), kind_(rep) {
  if (!(rep.p >= 1.0)) throw std::invalid_argument("regular representation needs p >= 1");
}

Vector ModuleAction::zero() const {
  if (is_regular()) return Vector::sparse({});
  return Vector::dense(Vector::Dense(finite().dim));
}

void ModuleAction::check_shape(const Vector& v) const {
  if (is_regular()) {
    if (v.is_dense()) throw std::invalid_argument("regular representation needs sparse vectors");
    for (const auto& [key, value] : v.entries())
      if (!is_normal_form(splitting_, key)) throw std::invalid_argument("vector key is not a group element");
    return;
  }
  if (!v.is_dense() || v.coords().size() != finite().dim) {
    throw std::invalid_argument("vector must have " + std::to_string(finite().dim) + " coordinates");
  }
}

RationalMatrix ModuleAction::letter_matrix(Side side, const FactorElement& x) const {
  const FactorDescriptor& d = splitting_.factor(side);
  const FactorMatrices& fm = side == Side::A ? finite().on_a : finite().on_b;
  if (d.kind() == FactorKind::FiniteTable) return fm.per_element[static_cast<std::size_t>(x.value)];
  return fm.generator->power(x.value);
}

Vector ModuleAction::act_letter(Side side, const FactorElement& x, const Vector& v) const {
  if (is_regular()) {
    const Word g = letter_word(splitting_, side, x);
    Vector::Sparse out;
    for (const auto& [key, value] : v.entries()) out.emplace(multiply(splitting_, g, key), value);
    return Vector::sparse(std::move(out));
  }
  return Vector::dense(letter_matrix(side, x) * v.coords());
}

Vector act(const ModuleAction& m, const Word& g, const Vector& v) {
  m.check_shape(v);
  if (m.is_regular()) {
    Vector::Sparse out;
    for (const auto& [key, value] : v.entries()) out.emplace(multiply(m.splitting(), g, key), value);
    return Vector::sparse(std::move(out));
  }
  Vector out = v;
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) out = m.act_letter(it->side, it->element, out);
  return out;
}

Vector inner_cocycle(const ModuleAction& m, const Vector& v, const Word& g) { return act(m, g, v) - v; }

Vector eval_factor_qc(const ModuleAction& m, Side side, const FactorCocycleMap& map, const FactorElement& x) {
  Vector out = m.zero();
  if (auto it = map.support.find(x.value); it != map.support.end()) out += it->second;
  if (map.inner) out += m.act_letter(side, x, *map.inner) - *map.inner;
  return out;
}

void set_alternating(const ModuleAction& m, Side side, FactorCocycleMap& map, const FactorElement& x,
                     const Vector& value) {
  const FactorDescriptor& d = m.splitting().factor(side);
  validate(d, x);
  m.check_shape(value);
  if (is_identity(d, x)) throw std::invalid_argument("the identity must map to 0");
  const FactorElement inv = invert(d, x);
  const Vector inv_value = -m.act_letter(side, inv, value);
  if (inv == x && !(inv_value == value)) throw std::invalid_argument("value at an involution is not alternating");
  map.support[x.value] = value;
  map.support[inv.value] = inv_value;
}

SplitQC::SplitQC(ModuleAction action, FactorCocycleMap on_a, FactorCocycleMap on_b)
    : action_(std::move(action)), on_a_(std::move(on_a)), on_b_(std::move(on_b)) {
  for (Side side : {Side::A, Side::B}) {
    const FactorDescriptor& d = splitting().factor(side);
    const FactorCocycleMap& map = factor(side);
    if (map.inner) action_.check_shape(*map.inner);
    for (const auto& [key, value] : map.support) {
      const FactorElement x{key};
      validate(d, x);
      action_.check_shape(value);
      if (is_identity(d, x) && !value.is_zero()) throw std::invalid_argument("the identity must map to 0");
      // Only the support part needs checking; inner parts alternate.
      FactorCocycleMap plain{map.support, std::nullopt};
      const Vector residual = eval_factor_qc(action_, side, plain, x) +
                              action_.act_letter(side, x, eval_factor_qc(action_, side, plain, invert(d, x)));
      if (!residual.is_zero()) throw std::invalid_argument("factor map is not alternating at " + key.str());
    }
  }
}

Vector eval_split_qc(const SplitQC& f, const Word& g) {
  const ModuleAction& m = f.action();
  Vector out = m.zero();
  if (m.is_regular()) {
    Word prefix;
    for (const Letter& l : g.letters()) {
      out += act(m, prefix, eval_factor_qc(m, l.side, f.factor(l.side), l.element));
      prefix = multiply(f.splitting(), prefix, letter_word(f.splitting(), l.side, l.element));
    }
    return out;
  }
  RationalMatrix prefix = RationalMatrix::identity(m.finite().dim);
  for (const Letter& l : g.letters()) {
    out += Vector::dense(prefix * eval_factor_qc(m, l.side, f.factor(l.side), l.element).coords());
    prefix = prefix * m.letter_matrix(l.side, l.element);
  }
  return out;
}

Vector qc_coboundary(const SplitQC& f, const Word& g, const Word& h) {
  return eval_split_qc(f, g) + act(f.action(), g, eval_split_qc(f, h)) -
         eval_split_qc(f, multiply(f.splitting(), g, h));
}

Vector factor_qc_coboundary(const SplitQC& f, Side side, const FactorElement& x, const FactorElement& y) {
  const ModuleAction& m = f.action();
  const FactorCocycleMap& map = f.factor(side);
  const FactorDescriptor& d = f.splitting().factor(side);
  return eval_factor_qc(m, side, map, x) + m.act_letter(side, x, eval_factor_qc(m, side, map, y)) -
         eval_factor_qc(m, side, map, multiply(d, x, y));
}

QCDefect split_qc_defect(const SplitQC& f, double p) {
  QCDefect out;
  const bool exact = p == 1.0 || std::isinf(p);
  if (exact) out.exact = Rational(0);
  for (Side side : {Side::A, Side::B}) {
    const FactorDescriptor& d = f.splitting().factor(side);
    std::vector<FactorElement> elements;
    if (d.is_finite()) {
      elements = enumerate(d);
    } else {
      BigInt radius = 0;
      for (const auto& [k, v] : f.factor(side).support) radius = std::max(radius, BigInt(k < 0 ? BigInt(-k) : k));
      const std::int64_t window = 2 * to_int64(radius) + 1;
      for (std::int64_t k = -window; k <= window; ++k) elements.push_back(element(k));
    }
    for (const auto& x : elements)
      for (const auto& y : elements) {
        const Vector c = factor_qc_coboundary(f, side, x, y);
        out.value = std::max(out.value, norm(c, p));
        if (exact) out.exact = std::max(*out.exact, *exact_norm(c, p));
      }
  }
  return out;
}

Word prime_power_word(const Splitting& s, const FactorElement& b, std::int64_t p, std::int64_t n) {
  std::vector<Letter> raw;
  BigInt exponent = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    exponent *= p;
    raw.push_back({Side::B, b});
    raw.push_back({Side::A, FactorElement{exponent}});
  }
  return reduce(s, raw);
}

Word staircase_word(const Splitting& s, const FactorElement& b, std::int64_t n) {
  std::vector<Letter> raw;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (i > 1) raw.push_back({Side::B, b});
    raw.push_back({Side::A, element(i)});
  }
  return reduce(s, raw);
}

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FactorElement witness_b(const ModuleAction& m, std::optional<FactorElement> b) {
  const Splitting& s = m.splitting();
  if (s.a().kind() != FactorKind::Integer) throw std::invalid_argument("witness maps need A = Z");
  const FactorElement out = b ? *b : some_nontrivial(s.b());
  validate(s.b(), out);
  if (is_identity(s.b(), out)) throw std::invalid_argument("b must be non-trivial");
  return out;
}

Word translator(const Splitting& s, const Word& previous, const Word& b_word, PrefixConvention convention) {
  switch (convention) {
    case PrefixConvention::WordThenB: return invert(s, multiply(s, previous, b_word));
    case PrefixConvention::BThenWord: return invert(s, multiply(s, b_word, previous));
    case PrefixConvention::WordOnly: return invert(s, previous);
  }
  throw std::logic_error("unreachable");
}

void fill_growth(WitnessReport& report, const Vector& v, double p,
                 const std::function<Word(std::int64_t)>& word_at, std::int64_t depth) {
  for (std::int64_t n = 0; n <= depth; ++n) {
    Vector value = eval_split_qc(report.cocycle, word_at(n));
    if (!(value == Rational(n) * v)) report.growth_holds = false;
    report.norms.push_back(norm(value, p));
    report.expected_norms.push_back(static_cast<double>(n) * norm(v, p));
    report.values.push_back(std::move(value));
  }
}

}  // namespace

WitnessReport prime_power_witness(const ModuleAction& m, std::int64_t p, std::int64_t q, const Vector& v,
                                  std::int64_t depth, PrefixConvention convention, std::optional<FactorElement> b) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw std::invalid_argument("need two distinct primes");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  m.check_shape(v);
  const Splitting& s = m.splitting();
  const FactorElement b_elem = witness_b(m, b);
  const Word b_word = letter_word(s, Side::B, b_elem);

  FactorCocycleMap on_a;
  BigInt exponent = 1;
  for (std::int64_t n = 1; n <= depth; ++n) {
    exponent *= p;
    const Word t = translator(s, prime_power_word(s, b_elem, p, n - 1), b_word, convention);
    set_alternating(m, Side::A, on_a, FactorElement{exponent}, act(m, t, v));
  }
  WitnessReport report{SplitQC(m, std::move(on_a), FactorCocycleMap{}), {}, true, true, {}, {}};
  fill_growth(report, v, m.designated_p(), [&](std::int64_t n) { return prime_power_word(s, b_elem, p, n); }, depth);
  for (std::int64_t n = 0; n <= depth; ++n) {
    if (!eval_split_qc(report.cocycle, prime_power_word(s, b_elem, q, n)).is_zero()) report.other_prime_vanishes = false;
  }
  return report;
}

WitnessReport staircase_witness(const ModuleAction& m, const Vector& xi, std::int64_t depth,
                                PrefixConvention convention, std::optional<FactorElement> b) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  m.check_shape(xi);
  const Splitting& s = m.splitting();
  const FactorElement b_elem = witness_b(m, b);
  const Word b_word = letter_word(s, Side::B, b_elem);

  FactorCocycleMap on_a;
  if (!xi.is_zero()) {
    set_alternating(m, Side::A, on_a, element(1), xi);
    for (std::int64_t n = 2; n <= depth; ++n) {
      const Word t = translator(s, staircase_word(s, b_elem, n - 1), b_word, convention);
      set_alternating(m, Side::A, on_a, element(n), act(m, t, xi));
    }
  }
  WitnessReport report{SplitQC(m, std::move(on_a), FactorCocycleMap{}), {}, true, true, {}, {}};
  fill_growth(report, xi, m.designated_p(), [&](std::int64_t n) { return staircase_word(s, b_elem, n); }, depth);
  return report;
}

}  // namespace splitqm
