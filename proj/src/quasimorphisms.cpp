#include "splitqm/quasimorphisms.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "splitqm/errors.hpp"

namespace splitqm {

namespace {

Rational lookup(const std::map<BigInt, Rational>& m, const BigInt& key) {
  auto it = m.find(key);
  return it == m.end() ? Rational(0) : it->second;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

BigInt FactorQM::support_radius() const {
  BigInt r = 0;
  for (const auto& [k, v] : support) {
    const BigInt a = boost::multiprecision::abs(k);
    if (a > r) r = a;
  }
  return r;
}

void FactorQM::set_alternating(const FactorDescriptor& d, const FactorElement& x, const Rational& value) {
  validate(d, x);
  const FactorElement inv = invert(d, x);
  if (inv == x && value != 0) {
    throw std::invalid_argument("an involution must take the value 0");
  }
  support[x.value] = value;
  support[inv.value] = -value;
}

void validate(const FactorDescriptor& d, const FactorQM& q) {
  if (d.kind() != FactorKind::Integer) {
    if (q.slope != 0 || q.periodic || q.sign_coefficient != 0) {
      throw std::invalid_argument("slope, periodic and sign parts need an integer factor, got " + d.name());
    }
  }
  for (const auto& [key, value] : q.support) {
    const FactorElement x{key};
    if (!is_valid(d, x)) throw std::invalid_argument("support element " + key.str() + " not in " + d.name());
    if (is_identity(d, x) && value != 0) throw std::invalid_argument("value at the identity must be 0");
    if (lookup(q.support, invert(d, x).value) != -value) {
      throw std::invalid_argument("support is not alternating at " + key.str());
    }
  }
  if (q.periodic) {
    const auto& p = *q.periodic;
    if (p.period < 1) throw std::invalid_argument("period must be >= 1");
    if (p.values.size() != static_cast<std::size_t>(p.period)) {
      throw std::invalid_argument("periodic table needs exactly `period` residues");
    }
    for (std::int64_t r = 0; r < p.period; ++r) {
      if (p.values[static_cast<std::size_t>((p.period - r) % p.period)] != -p.values[static_cast<std::size_t>(r)]) {
        throw std::invalid_argument("periodic table is not alternating at residue " + std::to_string(r));
      }
    }
  }
}

Rational eval_factor(const FactorQM& q, const FactorElement& x) {
  Rational out = lookup(q.support, x.value);
  if (q.slope != 0) out += q.slope * x.value;
  if (q.periodic) out += q.periodic->values[static_cast<std::size_t>(mod_floor(x.value, q.periodic->period))];
  if (q.sign_coefficient != 0) out += q.sign_coefficient * sign(x.value);
  return out;
}

Rational factor_coboundary(const FactorDescriptor& d, const FactorQM& q, const FactorElement& x,
                           const FactorElement& y) {
  return eval_factor(q, x) + eval_factor(q, y) - eval_factor(q, multiply(d, x, y));
}

std::int64_t defect_window(const FactorDescriptor& d, const FactorQM& q) {
  if (d.is_finite()) return 1;
  const std::int64_t radius = to_int64(q.support_radius());
  const std::int64_t period = q.periodic ? q.periodic->period : 1;
  return 2 * (radius + period + 2);
}

FactorDefect factor_defect_on_window(const FactorQM& q, std::int64_t window) {
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(4 * window + 1));
  for (std::int64_t k = -2 * window; k <= 2 * window; ++k) values.push_back(eval_factor(q, element(k)));
  auto at = [&](std::int64_t k) -> const Rational& { return values[static_cast<std::size_t>(k + 2 * window)]; };
  FactorDefect best;
  for (std::int64_t k = -window; k <= window; ++k) {
    for (std::int64_t l = -window; l <= window; ++l) {
      const Rational value = abs_value(at(k) + at(l) - at(k + l));
      if (value > best.value) {
        best.value = value;
        best.argmax = {element(k), element(l)};
      }
    }
  }
  return best;
}

FactorDefect factor_defect_exact(const FactorDescriptor& d, const FactorQM& q) {
  validate(d, q);
  if (!d.is_finite()) return factor_defect_on_window(q, defect_window(d, q));
  const auto elements = enumerate(d);
  std::vector<Rational> values;
  values.reserve(elements.size());
  for (const auto& x : elements) values.push_back(eval_factor(q, x));
  FactorDefect best;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const FactorElement xy = multiply(d, elements[i], elements[j]);
      const Rational value = abs_value(values[i] + values[j] - values[static_cast<std::size_t>(xy.value)]);
      if (value > best.value) {
        best.value = value;
        best.argmax = {elements[i], elements[j]};
      }
    }
  }
  return best;
}

SplitQM::SplitQM(Splitting s, FactorQM on_a, FactorQM on_b)
    : splitting_(std::move(s)), on_a_(std::move(on_a)), on_b_(std::move(on_b)) {
  validate(splitting_.a(), on_a_);
  validate(splitting_.b(), on_b_);
}

Rational eval_split(const SplitQM& f, const Word& g) {
  Rational out = 0;
  for (const Letter& l : g.letters()) out += eval_factor(f.factor(l.side), l.element);
  return out;
}

Rational coboundary(const SplitQM& f, const Word& g, const Word& h) {
  return eval_split(f, g) + eval_split(f, h) - eval_split(f, multiply(f.splitting(), g, h));
}

SplitDefect split_defect_detail(const SplitQM& f) {
  SplitDefect out;
  out.on_a = factor_defect_exact(f.splitting().a(), f.factor(Side::A));
  out.on_b = factor_defect_exact(f.splitting().b(), f.factor(Side::B));
  out.max_side = out.on_b.value > out.on_a.value ? Side::B : Side::A;
  out.value = out.max_side == Side::A ? out.on_a.value : out.on_b.value;
  return out;
}

Rational split_defect(const SplitQM& f) { return split_defect_detail(f).value; }

bool is_trivial(const SplitQM& f) { return split_defect(f) == 0; }

Rational sampled_defect(const SplitQM& f, WordSampler& sampler, std::size_t count) {
  Rational best = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Word g = sampler.next();
    const Word h = sampler.next();
    const Rational value = abs_value(coboundary(f, g, h));
    if (value > best) best = value;
  }
  return best;
}

Rational sampled_defect_with_junctions(const SplitQM& f, WordSampler& sampler, std::size_t count,
                                       std::size_t junctions) {
  const Splitting& s = f.splitting();
  Rational best = sampled_defect(f, sampler, count);
  const SplitDefect detail = split_defect_detail(f);
  for (Side side : {Side::A, Side::B}) {
    const FactorDefect& fd = side == Side::A ? detail.on_a : detail.on_b;
    if (!fd.argmax) continue;
    const auto& [x, y] = *fd.argmax;
    best = std::max(best, abs_value(coboundary(f, letter_word(s, side, x), letter_word(s, side, y))));
    for (std::size_t i = 0; i < junctions; ++i) {
      const auto [g, h] = junction_pair(sampler, side, x, y);
      best = std::max(best, abs_value(coboundary(f, g, h)));
    }
  }
  return best;
}

Rational homogenize_factor(const FactorDescriptor& d, const FactorQM& q, const FactorElement& x) {
  if (d.kind() != FactorKind::Integer) return 0;
  return q.slope * x.value;
}

Rational homogenize_eval(const SplitQM& f, const Word& g) {
  const Word core = cyclically_reduce(f.splitting(), g).core;
  if (core.empty()) return 0;
  if (const auto side = core.single_factor()) {
    return homogenize_factor(f.splitting().factor(*side), f.factor(*side), core.front().element);
  }
  return eval_split(f, core);
}

DefectDoublingWitness defect_doubling_witness(const SplitQM& f, Side side, const FactorElement& x1,
                                              const FactorElement& x2, const FactorElement& x,
                                              const FactorElement& y) {
  const Splitting& s = f.splitting();
  const FactorDescriptor& here = s.factor(side);
  const FactorDescriptor& there = s.factor(other(side));
  for (const auto* e : {&x1, &x2, &x}) validate(here, *e);
  validate(there, y);
  if (is_identity(here, x1) || is_identity(here, x2)) throw std::invalid_argument("x1 and x2 must be non-trivial");
  if (is_identity(here, multiply(here, x1, x2))) throw std::invalid_argument("x1 x2 must be non-trivial");
  if (is_identity(here, multiply(here, x, x))) throw std::invalid_argument("x must not square to the identity");
  if (is_identity(there, y)) throw std::invalid_argument("y must be non-trivial");

  const Side t = other(side);
  const FactorElement x_inv = invert(here, x);
  const FactorElement y_inv = invert(there, y);
  const std::vector<Letter> g_letters{{side, x}, {t, y}, {side, x2}, {t, y}, {side, x1}, {t, y_inv}, {side, x_inv}};
  const std::vector<Letter> h_letters{{side, x_inv}, {t, y_inv}, {side, x2}, {t, y}, {side, x1}, {t, y}, {side, x}};

  DefectDoublingWitness w;
  w.side = side;
  w.x1 = x1;
  w.x2 = x2;
  w.g = reduce(s, g_letters);
  w.h = reduce(s, h_letters);
  w.gap = homogenize_eval(f, multiply(s, w.g, w.h)) - homogenize_eval(f, w.g) - homogenize_eval(f, w.h);
  w.factor_coboundary = factor_coboundary(here, f.factor(side), x1, x2);
  if (w.gap != 2 * w.factor_coboundary) {
    throw IdentityViolation("homogenized gap " + to_string(w.gap) + " differs from twice the factor coboundary " +
                            to_string(w.factor_coboundary));
  }
  return w;
}

namespace {

std::optional<FactorElement> non_involution(const FactorDescriptor& d) {
  if (d.kind() == FactorKind::Integer) return generator(d);
  for (const auto& x : enumerate(d)) {
    if (!is_identity(d, multiply(d, x, x))) return x;
  }
  return std::nullopt;
}

}  // namespace

GromovNormReport gromov_norm(const SplitQM& f) {
  const SplitDefect detail = split_defect_detail(f);
  GromovNormReport out{detail.value, std::nullopt};
  if (detail.value == 0) return out;
  const Side side = detail.max_side;
  const FactorDescriptor& d = f.splitting().factor(side);
  const FactorDefect& fd = side == Side::A ? detail.on_a : detail.on_b;
  auto [x1, x2] = *fd.argmax;
  if (factor_coboundary(d, f.factor(side), x1, x2) < 0) {
    // q(x2^-1) + q(x1^-1) - q(x2^-1 x1^-1) is the negated coboundary.
    const FactorElement a = invert(d, x2);
    const FactorElement b = invert(d, x1);
    x1 = a;
    x2 = b;
  }
  const auto x = non_involution(d);
  if (!x) throw IdentityViolation("positive defect on a group of exponent 2");
  out.witness = defect_doubling_witness(f, side, x1, x2, *x, some_nontrivial(f.splitting().factor(other(side))));
  return out;
}

SplitQM rademacher() {
  FactorQM on_b;
  on_b.support[1] = 1;
  on_b.support[2] = -1;
  return SplitQM(Splitting(FactorDescriptor::cyclic(2), FactorDescriptor::cyclic(3)), FactorQM::zero(), on_b);
}

SplitQM sequence_qm(const std::map<std::int64_t, Rational>& positive_values) {
  FactorQM q;
  for (const auto& [k, v] : positive_values) {
    if (k <= 0) throw std::invalid_argument("sequence values are given on positive exponents");
    if (v == 0) continue;
    q.support[k] = v;
    q.support[-k] = -v;
  }
  return SplitQM(free_group_splitting(), q, q);
}

SplitQM sign_qm() { return SplitQM(free_group_splitting(), FactorQM::sign(), FactorQM::sign()); }

FactorQM random_factor_qm(const FactorDescriptor& d, std::mt19937_64& rng, const RandomQMOptions& options) {
  std::uniform_int_distribution<std::int64_t> numerator(-options.numerator_bound, options.numerator_bound);
  std::uniform_int_distribution<std::int64_t> denominator(1, options.denominator_bound);
  std::bernoulli_distribution coin(0.5);
  auto value = [&] { return Rational(numerator(rng), denominator(rng)); };

  FactorQM q;
  if (d.is_finite()) {
    for (const auto& x : enumerate(d)) {
      const FactorElement inv = invert(d, x);
      if (inv == x || q.support.count(inv.value) != 0) continue;
      const Rational v = value();
      if (v != 0) q.set_alternating(d, x, v);
    }
    return q;
  }
  for (std::int64_t k = 1; k <= options.support_radius; ++k) {
    if (!coin(rng)) continue;
    const Rational v = value();
    if (v != 0) q.set_alternating(d, element(k), v);
  }
  if (options.allow_slope && coin(rng)) q.slope = value();
  if (options.allow_sign && coin(rng)) q.sign_coefficient = value();
  if (options.allow_periodic && options.max_period >= 2 && coin(rng)) {
    std::uniform_int_distribution<std::int64_t> period(2, options.max_period);
    PeriodicPart p;
    p.period = period(rng);
    p.values.assign(static_cast<std::size_t>(p.period), Rational(0));
    for (std::int64_t r = 1; 2 * r < p.period; ++r) {
      const Rational v = value();
      p.values[static_cast<std::size_t>(r)] = v;
      p.values[static_cast<std::size_t>(p.period - r)] = -v;
    }
    q.periodic = std::move(p);
  }
  return q;
}

}  // namespace splitqm
