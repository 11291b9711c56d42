#include "splitqm/qrep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace splitqm {

namespace {

Rational frac(const Rational& t) {
  const BigInt n = numerator(t);
  const BigInt d = denominator(t);
  BigInt r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

std::size_t index_of(const GroupElement& x) { return std::get<std::size_t>(x); }
const Rational& turns_of(const GroupElement& x) { return std::get<Rational>(x); }
const Eigen::MatrixXcd& matrix_of(const GroupElement& x) { return std::get<Eigen::MatrixXcd>(x); }

}  // namespace

MetricGroup MetricGroup::finite(FactorDescriptor group, std::vector<std::vector<Rational>> distance) {
  if (!group.is_finite()) throw std::invalid_argument("finite metric group needs a finite group");
  const std::size_t n = group.size();
  if (distance.size() != n) throw std::invalid_argument("distance matrix has wrong size");
  for (const auto& row : distance) {
    if (row.size() != n) throw std::invalid_argument("distance matrix is not square");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Rational& d = distance[x][y];
      if (d < 0 || (d == 0) != (x == y) || d != distance[y][x]) {
        throw std::invalid_argument(fmt::format("distance matrix is not a metric at ({}, {})", x, y));
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (distance[x][z] > d + distance[y][z]) {
          throw std::invalid_argument(fmt::format("triangle inequality fails at ({}, {}, {})", x, y, z));
        }
      }
    }
  }
  const auto elements = enumerate(group);
  for (const auto& g : elements) {
    for (const auto& x : elements) {
      for (const auto& y : elements) {
        const auto gx = splitqm::multiply(group, g, x).value.convert_to<std::size_t>();
        const auto gy = splitqm::multiply(group, g, y).value.convert_to<std::size_t>();
        const auto xg = splitqm::multiply(group, x, g).value.convert_to<std::size_t>();
        const auto yg = splitqm::multiply(group, y, g).value.convert_to<std::size_t>();
        const auto i = x.value.convert_to<std::size_t>();
        const auto j = y.value.convert_to<std::size_t>();
        if (distance[gx][gy] != distance[i][j] || distance[xg][yg] != distance[i][j]) {
          throw std::invalid_argument(fmt::format("metric is not bi-invariant at ({}, {})", i, j));
        }
      }
    }
  }
  MetricGroup out;
  out.kind_ = MetricKind::Finite;
  out.group_ = std::move(group);
  out.distance_ = std::move(distance);
  return out;
}

MetricGroup MetricGroup::cyclic(std::int64_t n, const Rational& scale) {
  if (scale <= 0) throw std::invalid_argument("metric scale must be positive");
  std::vector<std::vector<Rational>> distance(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) {
      const std::int64_t r = ((x - y) % n + n) % n;
      distance[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = scale * std::min(r, n - r);
    }
  }
  return finite(FactorDescriptor::cyclic(n), std::move(distance));
}

MetricGroup MetricGroup::circle() { return MetricGroup{}; }

MetricGroup MetricGroup::unitary(std::size_t n) {
  if (n == 0) throw std::invalid_argument("U(0) is not supported");
  MetricGroup out;
  out.kind_ = MetricKind::Unitary;
  out.dimension_ = n;
  return out;
}

std::string MetricGroup::name() const {
  switch (kind_) {
    case MetricKind::Finite: return group_.name();
    case MetricKind::Circle: return "circle";
    case MetricKind::Unitary: return "U(" + std::to_string(dimension_) + ")";
  }
  return "?";
}

const FactorDescriptor& MetricGroup::finite_group() const {
  if (kind_ != MetricKind::Finite) throw std::logic_error("not a finite metric group");
  return group_;
}

std::vector<GroupElement> MetricGroup::elements() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < finite_group().size(); ++i) out.emplace_back(i);
  return out;
}

GroupElement MetricGroup::identity() const {
  switch (kind_) {
    case MetricKind::Finite: return splitqm::identity(group_).value.convert_to<std::size_t>();
    case MetricKind::Circle: return circle_element(0);
    case MetricKind::Unitary:
      return unitary_element(Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dimension_),
                                                         static_cast<Eigen::Index>(dimension_)));
  }
  throw std::logic_error("unreachable");
}

GroupElement MetricGroup::multiply(const GroupElement& x, const GroupElement& y) const {
  switch (kind_) {
    case MetricKind::Finite:
      return splitqm::multiply(group_, element(static_cast<std::int64_t>(index_of(x))),
                               element(static_cast<std::int64_t>(index_of(y))))
          .value.convert_to<std::size_t>();
    case MetricKind::Circle: return circle_element(frac(turns_of(x) + turns_of(y)));
    case MetricKind::Unitary: return unitary_element(matrix_of(x) * matrix_of(y));
  }
  throw std::logic_error("unreachable");
}

GroupElement MetricGroup::inverse(const GroupElement& x) const {
  switch (kind_) {
    case MetricKind::Finite:
      return splitqm::invert(group_, element(static_cast<std::int64_t>(index_of(x)))).value.convert_to<std::size_t>();
    case MetricKind::Circle: return circle_element(frac(-turns_of(x)));
    case MetricKind::Unitary: return unitary_element(matrix_of(x).adjoint());
  }
  throw std::logic_error("unreachable");
}

GroupElement MetricGroup::power(const GroupElement& x, std::int64_t n) const {
  GroupElement base = n < 0 ? inverse(x) : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  GroupElement out = identity();
  while (e > 0) {
    if (e & 1U) out = multiply(out, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  if (kind_ == MetricKind::Unitary) out = unitary_element(reproject_unitary(matrix_of(out)));
  return out;
}

double MetricGroup::distance(const GroupElement& x, const GroupElement& y) const {
  switch (kind_) {
    case MetricKind::Finite: return to_double(distance_[index_of(x)][index_of(y)]);
    case MetricKind::Circle: {
      const Rational t = frac(turns_of(x) - turns_of(y));
      const Rational arc = std::min(t, Rational(1) - t);
      return 2 * std::numbers::pi * to_double(arc);
    }
    case MetricKind::Unitary: return (matrix_of(x) - matrix_of(y)).norm();
  }
  throw std::logic_error("unreachable");
}

std::optional<Rational> MetricGroup::exact_distance(const GroupElement& x, const GroupElement& y) const {
  if (kind_ != MetricKind::Finite) return std::nullopt;
  return distance_[index_of(x)][index_of(y)];
}

bool MetricGroup::same(const GroupElement& x, const GroupElement& y) const {
  if (kind_ == MetricKind::Unitary) return distance(x, y) <= kMetricTolerance;
  return x == y;
}

void MetricGroup::validate(const GroupElement& x) const {
  switch (kind_) {
    case MetricKind::Finite:
      if (!std::holds_alternative<std::size_t>(x) || index_of(x) >= group_.size()) {
        throw std::invalid_argument("not an element of " + name());
      }
      return;
    case MetricKind::Circle:
      if (!std::holds_alternative<Rational>(x) || frac(turns_of(x)) != turns_of(x)) {
        throw std::invalid_argument("circle elements are turns in [0, 1)");
      }
      return;
    case MetricKind::Unitary: {
      if (!std::holds_alternative<Eigen::MatrixXcd>(x)) throw std::invalid_argument("not a matrix");
      const auto& m = matrix_of(x);
      const auto n = static_cast<Eigen::Index>(dimension_);
      if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix has the wrong size for " + name());
      if ((m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).norm() > kMetricTolerance) {
        throw std::invalid_argument("matrix is not unitary");
      }
      return;
    }
  }
}

std::string MetricGroup::format(const GroupElement& x) const {
  switch (kind_) {
    case MetricKind::Finite: return std::to_string(index_of(x));
    case MetricKind::Circle: return to_string(turns_of(x)) + " turn";
    case MetricKind::Unitary: {
      std::ostringstream out;
      out << matrix_of(x).format(Eigen::IOFormat(6, Eigen::DontAlignCols, ", ", "; ", "", "", "[", "]"));
      return out.str();
    }
  }
  return "?";
}

Eigen::MatrixXcd reproject_unitary(const Eigen::MatrixXcd& m) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    const std::complex<double> d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  const auto& values = solver.eigenvalues();
  Eigen::VectorXcd phases(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) phases(i) = std::polar(1.0, values(i));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

Eigen::MatrixXcd random_hermitian(std::size_t n, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd m(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) m(i, j) = {normal(rng), normal(rng)};
  Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  const double norm = h.norm();
  return norm > 0 ? Eigen::MatrixXcd(h * (scale / norm)) : h;
}

namespace {

std::int64_t support_radius(const FactorQRMap& map) {
  std::int64_t r = 0;
  for (const auto& [k, v] : map.support) r = std::max(r, to_int64(boost::multiprecision::abs(k)));
  return r;
}

}  // namespace

GroupElement eval_factor_qr(const MetricGroup& target, const FactorQRMap& map, const FactorElement& x) {
  const auto it = map.support.find(x.value);
  if (it != map.support.end()) return it->second;
  if (map.tail && x.value != 0) return x.value > 0 ? *map.tail : target.inverse(*map.tail);
  return target.identity();
}

void set_alternating(const MetricGroup& target, const FactorDescriptor& d, FactorQRMap& map,
                     const FactorElement& x, const GroupElement& value) {
  splitqm::validate(d, x);
  target.validate(value);
  const FactorElement inv = splitqm::invert(d, x);
  if (splitqm::is_identity(d, x) && !target.is_identity(value)) {
    throw std::invalid_argument("the identity must map to the identity");
  }
  if (inv == x && !target.is_identity(target.multiply(value, value))) {
    throw std::invalid_argument("an involution must map to an involution or the identity");
  }
  map.support[x.value] = value;
  map.support[inv.value] = target.inverse(value);
}

void validate(const MetricGroup& target, const FactorDescriptor& d, const FactorQRMap& map) {
  if (map.tail) {
    if (d.is_finite()) throw std::invalid_argument("tails are only allowed on Z");
    target.validate(*map.tail);
  }
  for (const auto& [k, v] : map.support) {
    const FactorElement x{k};
    splitqm::validate(d, x);
    target.validate(v);
    const GroupElement at_inverse = eval_factor_qr(target, map, splitqm::invert(d, x));
    if (!target.same(at_inverse, target.inverse(v))) {
      throw std::invalid_argument("quasi-representation is not alternating at element " + k.str());
    }
  }
  if (!target.is_identity(eval_factor_qr(target, map, identity(d)))) {
    throw std::invalid_argument("the identity must map to the identity");
  }
}

SplitQRep::SplitQRep(Splitting s, MetricGroup target, FactorQRMap on_a, FactorQRMap on_b)
    : splitting_(std::move(s)), target_(std::move(target)), on_a_(std::move(on_a)), on_b_(std::move(on_b)) {
  validate(target_, splitting_.a(), on_a_);
  validate(target_, splitting_.b(), on_b_);
}

GroupElement eval_qrep(const SplitQRep& mu, const Word& g) {
  const MetricGroup& target = mu.target();
  GroupElement out = target.identity();
  std::size_t since_projection = 0;
  for (const Letter& l : g.letters()) {
    out = target.multiply(out, eval_factor_qr(target, mu.factor(l.side), l.element));
    if (target.kind() == MetricKind::Unitary && ++since_projection == 64) {
      out = unitary_element(reproject_unitary(matrix_of(out)));
      since_projection = 0;
    }
  }
  return out;
}

double qrep_coboundary(const SplitQRep& mu, const Word& g, const Word& h) {
  const MetricGroup& target = mu.target();
  return target.distance(eval_qrep(mu, multiply(mu.splitting(), g, h)),
                         target.multiply(eval_qrep(mu, g), eval_qrep(mu, h)));
}

QRDefect qrep_factor_defect(const MetricGroup& target, const FactorDescriptor& d, const FactorQRMap& map) {
  validate(target, d, map);
  QRDefect best;
  auto consider = [&](const FactorElement& x, const FactorElement& y, const GroupElement& mx,
                      const GroupElement& my, const GroupElement& mxy) {
    const GroupElement product = target.multiply(mx, my);
    const double value = target.distance(mxy, product);
    if (auto exact = target.exact_distance(mxy, product)) {
      if (!best.exact || *exact > *best.exact) {
        best.exact = *exact;
        best.value = value;
        if (*exact > 0) best.argmax = {x, y};
      }
    } else if (value > best.value) {
      best.value = value;
      best.argmax = {x, y};
    }
  };
  if (d.is_finite()) {
    const auto elements = enumerate(d);
    std::vector<GroupElement> values;
    for (const auto& x : elements) values.push_back(eval_factor_qr(target, map, x));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto xy = multiply(d, elements[i], elements[j]).value.convert_to<std::size_t>();
        consider(elements[i], elements[j], values[i], values[j], values[xy]);
      }
    }
    return best;
  }
  const std::int64_t window = 3 * support_radius(map) + 3;
  std::vector<GroupElement> values;
  for (std::int64_t k = -2 * window; k <= 2 * window; ++k) values.push_back(eval_factor_qr(target, map, element(k)));
  auto at = [&](std::int64_t k) -> const GroupElement& { return values[static_cast<std::size_t>(k + 2 * window)]; };
  for (std::int64_t k = -window; k <= window; ++k) {
    for (std::int64_t l = -window; l <= window; ++l) consider(element(k), element(l), at(k), at(l), at(k + l));
  }
  return best;
}

SplitQRDefect qrep_defect(const SplitQRep& mu) {
  SplitQRDefect out;
  out.on_a = qrep_factor_defect(mu.target(), mu.splitting().a(), mu.factor(Side::A));
  out.on_b = qrep_factor_defect(mu.target(), mu.splitting().b(), mu.factor(Side::B));
  const bool b_wins = out.on_a.exact ? *out.on_b.exact > *out.on_a.exact : out.on_b.value > out.on_a.value;
  out.value = b_wins ? out.on_b : out.on_a;
  return out;
}

double qrep_sampled_defect(const SplitQRep& mu, WordSampler& sampler, std::size_t count, std::size_t junctions) {
  double best = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Word g = sampler.next();
    const Word h = sampler.next();
    best = std::max(best, qrep_coboundary(mu, g, h));
  }
  if (junctions == 0) return best;
  const SplitQRDefect detail = qrep_defect(mu);
  for (Side side : {Side::A, Side::B}) {
    const QRDefect& fd = side == Side::A ? detail.on_a : detail.on_b;
    if (!fd.argmax) continue;
    const auto& [x, y] = *fd.argmax;
    for (std::size_t i = 0; i < junctions; ++i) {
      const auto [g, h] = junction_pair(sampler, side, x, y);
      best = std::max(best, qrep_coboundary(mu, g, h));
    }
  }
  return best;
}

double sup_norm_qrep(const MetricGroup& target, const FactorDescriptor&, const FactorQRMap& map) {
  const GroupElement e = target.identity();
  double best = 0;
  for (const auto& [k, v] : map.support) best = std::max(best, target.distance(v, e));
  if (map.tail) best = std::max(best, target.distance(*map.tail, e));
  return best;
}

GroupElement apply_hom(const MetricGroup& target, const FactorDescriptor& d, const FactorHom& hom,
                       const FactorElement& x) {
  splitqm::validate(d, x);
  if (d.kind() == FactorKind::FiniteTable) return hom.per_element.at(x.value.convert_to<std::size_t>());
  if (!hom.generator) throw std::invalid_argument("homomorphism needs the image of the generator");
  return target.power(*hom.generator, to_int64(x.value));
}

void validate(const MetricGroup& target, const FactorDescriptor& d, const FactorHom& hom) {
  switch (d.kind()) {
    case FactorKind::Integer:
      if (!hom.generator) throw std::invalid_argument("homomorphism needs the image of the generator");
      target.validate(*hom.generator);
      return;
    case FactorKind::Cyclic:
      if (!hom.generator) throw std::invalid_argument("homomorphism needs the image of the generator");
      target.validate(*hom.generator);
      if (!target.is_identity(target.power(*hom.generator, d.modulus()))) {
        throw std::invalid_argument("generator image does not have order dividing " + std::to_string(d.modulus()));
      }
      return;
    case FactorKind::FiniteTable: {
      if (hom.per_element.size() != d.size()) throw std::invalid_argument("homomorphism needs every element's image");
      for (const auto& v : hom.per_element) target.validate(v);
      const auto elements = enumerate(d);
      for (const auto& x : elements) {
        for (const auto& y : elements) {
          if (!target.same(apply_hom(target, d, hom, multiply(d, x, y)),
                           target.multiply(apply_hom(target, d, hom, x), apply_hom(target, d, hom, y)))) {
            throw std::invalid_argument("element map is not a homomorphism");
          }
        }
      }
      return;
    }
  }
}

GroupElement eval_representation(const Splitting& s, const MetricGroup& target, const Representation& rho,
                                 const Word& g) {
  GroupElement out = target.identity();
  for (const Letter& l : g.letters()) {
    const FactorHom& hom = l.side == Side::A ? rho.on_a : rho.on_b;
    out = target.multiply(out, apply_hom(target, s.factor(l.side), hom, l.element));
  }
  return out;
}

namespace {

std::vector<FactorHom> factor_homs(const FactorDescriptor& d, const MetricGroup& target) {
  const auto images = target.elements();
  std::vector<FactorHom> out;
  if (d.kind() != FactorKind::FiniteTable) {
    for (const auto& g : images) {
      FactorHom hom{g, {}};
      if (d.kind() == FactorKind::Cyclic && !target.is_identity(target.power(g, d.modulus()))) continue;
      out.push_back(std::move(hom));
    }
    return out;
  }
  // Backtracking over element images, pruning on every product already fixed.
  const auto elements = enumerate(d);
  const std::size_t n = elements.size();
  std::vector<std::optional<GroupElement>> partial(n);
  const std::size_t e = d.identity_index();
  partial[e] = target.identity();
  auto consistent = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!partial[j]) continue;
      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const std::size_t xy = d.table()[x][y];
        if (partial[xy] && !target.same(*partial[xy], target.multiply(*partial[x], *partial[y]))) return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      FactorHom hom;
      for (const auto& v : partial) hom.per_element.push_back(*v);
      out.push_back(std::move(hom));
      return;
    }
    if (i == e) return self(self, i + 1);
    for (const auto& g : images) {
      partial[i] = g;
      if (consistent(i)) self(self, i + 1);
    }
    partial[i].reset();
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace

std::vector<Representation> enumerate_representations(const Splitting& s, const MetricGroup& target) {
  if (target.kind() != MetricKind::Finite) {
    throw std::invalid_argument("representations can only be enumerated into finite targets");
  }
  std::vector<Representation> out;
  const auto on_a = factor_homs(s.a(), target);
  const auto on_b = factor_homs(s.b(), target);
  for (const auto& x : on_a)
    for (const auto& y : on_b) out.push_back({x, y});
  return out;
}

namespace {

// Letters worth trying on one side: every non-identity element of a finite
// factor, or a^k with 1 <= |k| <= max(M + 1, depth) on Z.
std::vector<FactorElement> candidate_letters(const FactorDescriptor& d, const FactorQRMap& map, std::size_t depth) {
  std::vector<FactorElement> out;
  if (d.is_finite()) {
    for (const auto& x : enumerate(d))
      if (!is_identity(d, x)) out.push_back(x);
    return out;
  }
  const std::int64_t reach = std::max<std::int64_t>(support_radius(map) + 1, static_cast<std::int64_t>(depth));
  for (std::int64_t k = 1; k <= reach; ++k) {
    out.push_back(element(k));
    out.push_back(element(-k));
  }
  return out;
}

// Letters carrying a non-trivial value of the map, for the (x y^{+-1})^n family.
std::vector<FactorElement> loaded_letters(const MetricGroup& target, const FactorDescriptor& d,
                                          const FactorQRMap& map) {
  std::vector<FactorElement> out;
  for (const auto& [k, v] : map.support)
    if (!target.is_identity(v)) out.push_back(FactorElement{k});
  if (map.tail) out.push_back(element(support_radius(map) + 1));
  if (out.empty()) out.push_back(some_nontrivial(d));
  return out;
}

}  // namespace

NontrivialityWitness nontriviality_witness(const SplitQRep& mu, const Representation& rho, double epsilon,
                                           std::size_t depth) {
  const Splitting& s = mu.splitting();
  const MetricGroup& target = mu.target();
  validate(target, s.a(), rho.on_a);
  validate(target, s.b(), rho.on_b);
  NontrivialityWitness out;
  out.delta = std::max(sup_norm_qrep(target, s.a(), mu.factor(Side::A)),
                       sup_norm_qrep(target, s.b(), mu.factor(Side::B)));
  if (out.delta > epsilon / 2 + kMetricTolerance) {
    throw std::invalid_argument(fmt::format("delta {} exceeds epsilon / 2 = {}", out.delta, epsilon / 2));
  }
  if (out.delta == 0) return out;

  auto try_word = [&](const Word& g) {
    ++out.words_tried;
    const double value = target.distance(eval_qrep(mu, g), eval_representation(s, target, rho, g));
    if (value >= out.delta - kMetricTolerance) {
      out.status = WitnessStatus::Found;
      out.word = g;
      out.distance = value;
      return true;
    }
    return false;
  };
  for (Side side : {Side::A, Side::B}) {
    for (const auto& x : candidate_letters(s.factor(side), mu.factor(side), depth)) {
      if (try_word(letter_word(s, side, x))) return out;
    }
  }
  for (const auto& x : loaded_letters(target, s.a(), mu.factor(Side::A))) {
    for (const auto& y : loaded_letters(target, s.b(), mu.factor(Side::B))) {
      for (const FactorElement& yy : {y, invert(s.b(), y)}) {
        const Word base = multiply(s, letter_word(s, Side::A, x), letter_word(s, Side::B, yy));
        Word g = base;
        for (std::size_t n = 1; n <= depth; ++n, g = multiply(s, g, base)) {
          if (try_word(g)) return out;
        }
      }
    }
  }
  out.status = WitnessStatus::Exhausted;
  return out;
}

SmallSubgroupReport check_no_small_subgroups(const MetricGroup& target, double epsilon, std::size_t scan_bound,
                                             std::size_t samples, std::uint64_t seed) {
  SmallSubgroupReport report;
  const GroupElement e = target.identity();
  // The cyclic subgroup generated by g lies inside the ball when no power
  // among the first `bound` leaves it (exact once bound reaches the order).
  auto stays_inside = [&](const GroupElement& g, std::size_t bound) {
    GroupElement x = g;
    for (std::size_t n = 1; n <= bound; ++n, x = target.multiply(x, g)) {
      if (target.distance(x, e) >= epsilon) return false;
    }
    return true;
  };
  switch (target.kind()) {
    case MetricKind::Finite:
      for (const auto& g : target.elements()) {
        if (target.is_identity(g)) continue;
        ++report.checked;
        if (stays_inside(g, target.finite_group().size())) {
          report.passes = false;
          report.violation = g;
          return report;
        }
      }
      return report;
    case MetricKind::Circle:
      for (std::size_t q = 2; q <= scan_bound; ++q) {
        ++report.checked;
        const GroupElement g = circle_element(Rational(1, static_cast<std::int64_t>(q)));
        if (stays_inside(g, q)) {
          report.passes = false;
          report.violation = g;
          return report;
        }
      }
      return report;
    case MetricKind::Unitary: {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> scale(0.125, 1.0);
      for (std::size_t i = 0; i < samples; ++i) {
        // exp(ih) is within ||h|| of the identity, so scaling by epsilon
        // keeps the sample inside the ball.
        const GroupElement g = unitary_element(unitary_exp(random_hermitian(target.dimension(), scale(rng) * epsilon * 0.999, rng)));
        if (target.distance(g, e) >= epsilon) continue;
        ++report.checked;
        if (stays_inside(g, scan_bound)) {
          report.passes = false;
          report.violation = g;
          return report;
        }
      }
      return report;
    }
  }
  return report;
}

}  // namespace splitqm
