#include "splitqm/automorphisms.hpp"

#include <cstdlib>
#include <stdexcept>

#include "splitqm/errors.hpp"

namespace splitqm {

namespace {

const Splitting& free_splitting() {
  static const Splitting s = free_group_splitting();
  return s;
}

Word gen(Side side, std::int64_t k) { return letter_word(free_splitting(), side, element(k)); }

void require_bounded_free(const SplitQM& f) {
  if (!(f.splitting() == free_splitting())) throw std::invalid_argument("tau_n acts on Z * Z only");
  if (!f.factor(Side::A).is_bounded() || !f.factor(Side::B).is_bounded()) {
    throw std::invalid_argument("the fixed-point criterion needs bounded factor maps");
  }
}

BigInt b_exponent_sum(const Word& g) {
  BigInt sum = 0;
  for (const Letter& l : g.letters())
    if (l.side == Side::B) sum += l.element.value;
  return sum;
}

std::int64_t periodicity_window(const SplitQM& f, std::int64_t n) {
  const FactorQM& q = f.factor(Side::A);
  const std::int64_t period = q.periodic ? q.periodic->period : 1;
  return to_int64(q.support_radius()) + std::abs(n) + period + 2;
}

bool is_periodic_on_window(const FactorQM& q, std::int64_t n, std::int64_t window) {
  for (std::int64_t k = -window; k <= window; ++k) {
    if (eval_factor(q, element(k + n)) != eval_factor(q, element(k))) return false;
  }
  return true;
}

bool is_zero_on_window(const FactorQM& q, std::int64_t window) {
  if (q.sign_coefficient != 0) return false;
  for (std::int64_t k = -window; k <= window; ++k)
    if (eval_factor(q, element(k)) != 0) return false;
  return true;
}

}  // namespace

Endo identity_endo() { return {gen(Side::A, 1), gen(Side::B, 1)}; }

Endo tau(std::int64_t n) {
  return {gen(Side::A, 1), multiply(free_splitting(), gen(Side::A, n), gen(Side::B, 1))};
}

Endo inner(const Word& h) {
  const Splitting& s = free_splitting();
  const Word h_inv = invert(s, h);
  return {conjugate(s, h_inv, gen(Side::A, 1)), conjugate(s, h_inv, gen(Side::B, 1))};
}

Word apply(const Endo& e, const Word& g) {
  const Splitting& s = free_splitting();
  Word out;
  for (const Letter& l : g.letters()) {
    out = multiply(s, out, power(s, l.side == Side::A ? e.image_a : e.image_b, l.element.value));
  }
  return out;
}

Endo compose(const Endo& first, const Endo& second) {
  return {apply(first, second.image_a), apply(first, second.image_b)};
}

bool is_inverse_pair(const Endo& e, const Endo& e_inverse) {
  const Endo id = identity_endo();
  return compose(e, e_inverse) == id && compose(e_inverse, e) == id;
}

Rational pullback_qm(const SplitQM& f, const Endo& e, const Endo& e_inverse, const Word& g) {
  if (!is_inverse_pair(e, e_inverse)) throw std::invalid_argument("supplied inverse does not invert the endomorphism");
  return eval_split(f, apply(e_inverse, g));
}

Rational tau_deviation(const SplitQM& f, std::int64_t n, const Word& x) {
  return homogenize_eval(f, apply(tau(n), x)) - homogenize_eval(f, x);
}

std::optional<ViolationWitness> violation_witness(const SplitQM& f, std::int64_t n, const ViolationBounds& bounds) {
  require_bounded_free(f);
  if (n == 0) throw std::invalid_argument("tau_0 is the identity");
  const std::int64_t window = periodicity_window(f, n);
  if (is_periodic_on_window(f.factor(Side::A), std::abs(n), window) && is_zero_on_window(f.factor(Side::B), window)) {
    return std::nullopt;
  }
  const Splitting& s = free_splitting();
  const Rational forced_b = tau_deviation(f, n, gen(Side::B, 1));
  auto excess_at = [&](const Word& x) { return tau_deviation(f, n, x) - forced_b * b_exponent_sum(x); };

  std::vector<Word> candidates;
  const std::int64_t k_window = bounds.exponent_window > 0 ? bounds.exponent_window : window;
  for (std::int64_t l = 1; l <= bounds.max_l; ++l)
    for (std::int64_t k = -k_window; k <= k_window; ++k)
      if (k != 0) candidates.push_back(multiply(s, gen(Side::A, k), gen(Side::B, l)));
  candidates.push_back(parse_word(s, "a b a^-1 b^-1"));
  for (const Word& g : all_words(s, 4, 2)) candidates.push_back(g);

  std::optional<Word> fallback;
  std::optional<Word> chosen;
  for (const Word& x : candidates) {
    if (excess_at(x) == 0) continue;
    if (tau_deviation(f, n, x) != 0) {
      chosen = x;
      break;
    }
    if (!fallback) fallback = x;
  }
  if (!chosen) chosen = fallback;
  if (!chosen) return std::nullopt;

  ViolationWitness w;
  w.word = *chosen;
  w.forced_b = forced_b;
  w.excess = excess_at(w.word);
  for (std::size_t l = 1; l <= bounds.growth_steps; ++l) {
    const Word xl = power(s, w.word, static_cast<std::int64_t>(l));
    w.raw_growth.push_back(tau_deviation(f, n, xl));
    w.excess_growth.push_back(excess_at(xl));
  }
  return w;
}

FixedPointReport check_fixed_point(const SplitQM& f, std::int64_t n, const std::vector<Word>& words,
                                   const ViolationBounds& bounds) {
  require_bounded_free(f);
  if (n == 0) throw std::invalid_argument("tau_0 is the identity");
  FixedPointReport report;
  report.n = n;
  const std::int64_t window = periodicity_window(f, n);
  report.factor_a_periodic = is_periodic_on_window(f.factor(Side::A), std::abs(n), window);
  report.factor_b_zero = is_zero_on_window(f.factor(Side::B), window);
  // tau_n([a, b]) is conjugate to [a, b], so only the raw values differ.
  const Word commutator = parse_word(free_splitting(), "a b a^-1 b^-1");
  report.commutator_deviation = eval_split(f, apply(tau(n), commutator)) - eval_split(f, commutator);
  if (!report.condition_holds()) {
    report.witness = violation_witness(f, n, bounds);
    return report;
  }
  const Endo t = tau(n);
  for (const Word& g : words) {
    const Rational before = eval_split(f, g);
    if (eval_split(f, apply(t, g)) != before) {
      throw IdentityViolation("f(tau_n(g)) != f(g) at " + format_word(free_splitting(), g));
    }
    if (std::abs(n) <= 2 && before != 0) {
      throw IdentityViolation("periodic map with |n| <= 2 is not zero at " + format_word(free_splitting(), g));
    }
    ++report.verified;
  }
  return report;
}

Rational inner_distance_check(const SplitQM& f, const Word& h, const std::vector<Word>& words,
                              const std::optional<Rational>& defect) {
  const Splitting& s = f.splitting();
  const Rational bound = 2 * (defect ? *defect : split_defect(f));
  Rational best = 0;
  for (const Word& g : words) {
    Rational d = eval_split(f, conjugate(s, h, g)) - eval_split(f, g);
    if (d < 0) d = -d;
    if (d > bound) {
      throw IdentityViolation("conjugation moved f by " + to_string(d) + " > " + to_string(bound) + " at " +
                              format_word(s, g));
    }
    if (d > best) best = d;
  }
  return best;
}

}  // namespace splitqm
