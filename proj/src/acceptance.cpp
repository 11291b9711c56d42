#include "splitqm/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "splitqm/automorphisms.hpp"
#include "splitqm/counting.hpp"
#include "splitqm/defect_space.hpp"
#include "splitqm/errors.hpp"
#include "splitqm/qrep.hpp"
#include "splitqm/quasicocycles.hpp"
#include "splitqm/quasimorphisms.hpp"

namespace splitqm {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::uint64_t child_seed(std::uint64_t seed, int id) { return seed * 1000003ULL + static_cast<std::uint64_t>(id); }

Splitting z5_z6() { return Splitting(FactorDescriptor::cyclic(5), FactorDescriptor::cyclic(6)); }

SplitQM random_split(const Splitting& s, std::mt19937_64& rng, const RandomQMOptions& options = {}) {
  return SplitQM(s, random_factor_qm(s.a(), rng, options), random_factor_qm(s.b(), rng, options));
}

// 1. Sampled defect with junction pairs equals the exact split defect.
Outcome defect_equality(std::uint64_t seed) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  for (int c = 0; c < 20; ++c) {
    const Splitting s = c < 10 ? free_group_splitting() : z5_z6();
    const SplitQM f = random_split(s, rng);
    WordSampler sampler(s, 6, 6, seed + static_cast<std::uint64_t>(c));
    const Rational exact = split_defect(f);
    const Rational sampled = sampled_defect_with_junctions(f, sampler, 10000, 20);
    if (sampled != exact) {
      out.fail(fmt::format("config {} on {}: sampled {} vs exact {}", c, s.name(), to_string(sampled), to_string(exact)));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 10) out.fail(fmt::format("took {:.2f} s", seconds));
  if (out.passed) out.detail = "20 configs, under 10 s";
  return out;
}

// Signed syllable count read off the printed normal form.
Rational sign_oracle(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  Rational total = 0;
  while (in >> token) {
    const auto caret = token.find('^');
    total += (caret != std::string::npos && token[caret + 1] == '-') ? -1 : 1;
  }
  return total;
}

// 2. Sign map evaluation.
Outcome sign_evaluation(std::uint64_t seed) {
  Outcome out;
  const SplitQM f = sign_qm();
  const Splitting& s = f.splitting();
  const Rational example = eval_split(f, parse_word(s, "a b^-2 a^3 b"));
  if (example != 2) out.fail("f(a b^-2 a^3 b) = " + to_string(example));
  WordSampler sampler(s, 10, 6, seed);
  for (int i = 0; i < 500; ++i) {
    const Word g = sampler.next();
    const std::string text = format_word(s, g);
    if (eval_split(f, g) != sign_oracle(text)) out.fail("mismatch at " + text);
  }
  if (out.passed) out.detail = "example = 2, 500 words";
  return out;
}

// 3. Homogenization is homogeneous and conjugation invariant.
Outcome homogenization(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  RandomQMOptions with_slope;
  std::vector<SplitQM> configs{sign_qm(), rademacher()};
  for (int i = 0; i < 2; ++i) {
    FactorQM a = random_factor_qm(FactorDescriptor::integer(), rng, with_slope);
    a.slope = Rational(i + 1, 3);
    configs.emplace_back(free_group_splitting(), a, random_factor_qm(FactorDescriptor::integer(), rng, with_slope));
  }
  std::size_t checks = 0;
  for (const SplitQM& f : configs) {
    const Splitting& s = f.splitting();
    const auto words = all_words(s, 4, 3);
    const auto conjugators = all_words(s, 2, 3);
    for (const Word& g : words) {
      const Rational hg = homogenize_eval(f, g);
      for (int n = -4; n <= 4; ++n) {
        ++checks;
        if (homogenize_eval(f, power(s, g, n)) != n * hg) {
          out.fail(fmt::format("power {} of {}", n, format_word(s, g)));
        }
      }
      for (const Word& w : conjugators) {
        ++checks;
        if (homogenize_eval(f, conjugate(s, w, g)) != hg) {
          out.fail(fmt::format("conjugate of {} by {}", format_word(s, g), format_word(s, w)));
        }
      }
    }
  }
  if (out.passed) out.detail = fmt::format("{} identities over {} maps", checks, configs.size());
  return out;
}

// 4. Defect-doubling witnesses and the Gromov norm.
Outcome witness_gaps(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::size_t pairs = 0;
  for (int c = 0; c < 10; ++c) {
    const Splitting s = c < 5 ? free_group_splitting() : z5_z6();
    RandomQMOptions bounded;
    bounded.allow_slope = false;
    const SplitQM f = random_split(s, rng, bounded);
    const Rational defect = split_defect(f);
    for (Side side : {Side::A, Side::B}) {
      const FactorDescriptor& d = s.factor(side);
      const FactorElement x = some_nontrivial(d);
      const FactorElement y = some_nontrivial(s.factor(other(side)));
      std::vector<FactorElement> window;
      if (d.is_finite()) {
        window = enumerate(d);
      } else {
        const std::int64_t w = defect_window(d, f.factor(side));
        for (std::int64_t k = -w; k <= w; ++k) window.push_back(element(k));
      }
      for (const auto& x1 : window) {
        for (const auto& x2 : window) {
          if (is_identity(d, x1) || is_identity(d, x2) || is_identity(d, multiply(d, x1, x2))) continue;
          ++pairs;
          // Throws IdentityViolation when the gap is not twice the coboundary.
          defect_doubling_witness(f, side, x1, x2, x, y);
        }
      }
    }
    const GromovNormReport g = gromov_norm(f);
    if (g.value != defect || (defect > 0 && (!g.witness || g.witness->gap != 2 * defect))) {
      out.fail(fmt::format("config {}: maximized gap is not twice the defect {}", c, to_string(defect)));
    }
    WordSampler sampler(s, 6, 5, seed + static_cast<std::uint64_t>(c));
    for (int i = 0; i < 10000; ++i) {
      const Word g1 = sampler.next();
      const Word g2 = sampler.next();
      const Rational gap = homogenize_eval(f, multiply(s, g1, g2)) - homogenize_eval(f, g1) - homogenize_eval(f, g2);
      if (abs_value(gap) > 2 * defect) {
        out.fail(fmt::format("config {}: homogenized coboundary {} above twice the defect", c, to_string(gap)));
      }
    }
  }
  if (out.passed) out.detail = fmt::format("{} witness pairs, 10 configs", pairs);
  return out;
}

// Offset scan over letter strings, kept separate from the library's matcher.
std::int64_t scan_count(const std::string& w, const std::string& g) {
  if (w.empty() || w.size() > g.size()) return 0;
  std::int64_t n = 0;
  for (std::size_t i = 0; i + w.size() <= g.size(); ++i) n += g.compare(i, w.size(), w) == 0 ? 1 : 0;
  return n;
}

std::vector<std::vector<ReducedLetterWord>> reduced_words_by_length(std::size_t max_length) {
  const std::int8_t letters[] = {1, -1, 2, -2};
  std::vector<std::vector<ReducedLetterWord>> out(max_length + 1);
  out[0].emplace_back();
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (const auto& w : out[len - 1]) {
      for (std::int8_t c : letters) {
        if (!w.empty() && w.letters().back() == -c) continue;
        auto next = w.letters();
        next.push_back(c);
        out[len].push_back(ReducedLetterWord::from_letters(std::move(next)));
      }
    }
  }
  return out;
}

// 5. Subword counting against the offset scan.
Outcome counting(std::uint64_t) {
  Outcome out;
  const auto aba = ReducedLetterWord::parse("aba");
  const auto ababa = ReducedLetterWord::parse("ababa");
  if (subword_count(aba, ababa) != 2) out.fail("h_aba(ababa) != 2");
  const auto words = reduced_words_by_length(8);
  std::vector<std::vector<std::string>> text(words.size());
  for (std::size_t len = 0; len < words.size(); ++len)
    for (const auto& w : words[len]) text[len].push_back(w.str());
  std::size_t pairs = 0;
  // Every pair of lengths up to 8 with total length at most 12.
  for (std::size_t lw = 0; lw <= 8; ++lw) {
    for (std::size_t lg = 0; lg <= 8 && lw + lg <= 12; ++lg) {
      for (std::size_t i = 0; i < words[lw].size(); ++i) {
        for (std::size_t j = 0; j < words[lg].size(); ++j) {
          ++pairs;
          if (subword_count(words[lw][i], words[lg][j]) != scan_count(text[lw][i], text[lg][j])) {
            out.fail(fmt::format("h_{}({})", text[lw][i], text[lg][j]));
          }
        }
      }
    }
  }
  if (out.passed) out.detail = fmt::format("{} pairs", pairs);
  return out;
}

// 6. Counting decomposition residual.
Outcome decomposition(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  RandomQMOptions finite;
  finite.allow_slope = finite.allow_periodic = finite.allow_sign = false;
  finite.support_radius = 5;
  const Splitting s = free_group_splitting();
  for (int c = 0; c < 10; ++c) {
    const SplitQM f = random_split(s, rng, finite);
    WordSampler sampler(s, 9, 6, seed + static_cast<std::uint64_t>(c));
    std::uniform_int_distribution<std::size_t> length(1, 9);
    for (int i = 0; i < 1000; ++i) {
      // Cycle through the four start/end side combinations.
      const Side first = i % 2 == 0 ? Side::A : Side::B;
      std::size_t len = length(rng);
      const bool same_ends = (i / 2) % 2 == 0;
      if ((len % 2 == 1) != same_ends) len = len == 9 ? 8 : len + 1;
      const Word g = sampler.next_with_length(len, first);
      decomposition_residual(f, g);
    }
  }
  out.detail = "10 configs x 1000 words";
  return out;
}

// 7. Fixed points of tau_n.
Outcome tau_fixed_points(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const Splitting s = free_group_splitting();
  const auto words = all_words(s, 6, 3, 1);
  std::uniform_int_distribution<std::int64_t> num(-3, 3);
  auto periodic = [&](std::int64_t period) {
    FactorQM q;
    PeriodicPart p{period, std::vector<Rational>(static_cast<std::size_t>(period))};
    for (std::int64_t r = 1; 2 * r < period; ++r) {
      const Rational v(num(rng), 2);
      p.values[static_cast<std::size_t>(r)] = v;
      p.values[static_cast<std::size_t>(period - r)] = -v;
    }
    q.periodic = p;
    return q;
  };
  std::size_t verified = 0;
  for (std::int64_t n : {3, 4, 5}) {
    for (int c = 0; c < 2; ++c) {
      const SplitQM f(s, periodic(n), FactorQM::zero());
      const FixedPointReport report = check_fixed_point(f, n, words);
      if (!report.condition_holds()) out.fail(fmt::format("n = {}: periodic map not recognized", n));
      verified += report.verified;
    }
  }
  // Violations: f_B non-zero, or f_A not periodic.
  FactorQM bump;
  bump.support[1] = 1;
  bump.support[-1] = -1;
  std::vector<SplitQM> violating{SplitQM(s, FactorQM::zero(), FactorQM::sign()), SplitQM(s, FactorQM::sign(), FactorQM::zero()),
                                 SplitQM(s, bump, FactorQM::zero()), SplitQM(s, periodic(3), bump)};
  std::size_t witnesses = 0;
  for (const SplitQM& f : violating) {
    for (std::int64_t n : {3, 4, 5}) {
      const auto w = violation_witness(f, n);
      if (!w) {
        out.fail(fmt::format("no violation witness for n = {}", n));
        continue;
      }
      ++witnesses;
      for (std::size_t l = 1; l < w->raw_growth.size(); ++l) {
        if (!(abs_value(w->raw_growth[l]) > abs_value(w->raw_growth[l - 1]))) {
          out.fail(fmt::format("growth not strictly increasing at l = {} for n = {}", l + 1, n));
        }
      }
      if (w->raw_growth.size() != 10) out.fail("growth sequence is not 10 long");
    }
  }
  // |n| <= 2: the condition forces f = 0 (check_fixed_point throws otherwise).
  const auto short_words = all_words(s, 6, 2, 1);
  for (std::int64_t n : {-2, -1, 1, 2}) {
    const SplitQM f(s, periodic(std::abs(n) == 1 ? 1 : 2), FactorQM::zero());
    const FixedPointReport report = check_fixed_point(f, n, short_words);
    if (!report.condition_holds() || report.verified != short_words.size()) {
      out.fail(fmt::format("n = {}: zero map not verified", n));
    }
  }
  if (out.passed) out.detail = fmt::format("{} fixed-point checks, {} growth witnesses", verified, witnesses);
  return out;
}

// 8. Conjugation moves a split quasimorphism by at most twice its defect.
Outcome inner_conjugation(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::vector<SplitQM> configs{random_split(free_group_splitting(), rng), random_split(free_group_splitting(), rng),
                               random_split(z5_z6(), rng), rademacher()};
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const SplitQM& f = configs[c];
    WordSampler sampler(f.splitting(), 7, 5, seed + c);
    const Rational defect = split_defect(f);
    for (int i = 0; i < 10000; ++i) {
      const Word h = sampler.next();
      inner_distance_check(f, h, {sampler.next()}, defect);
    }
  }
  out.detail = "4 configs x 10000 pairs";
  return out;
}

std::vector<ModuleAction> witness_actions() {
  const Splitting s = free_group_splitting();
  ModuleAction rotations(s, rational_rotation_rep());
  rotations.set_designated_p(2.0);
  return {rotations, ModuleAction(s, RegularRep{1.0}), ModuleAction(s, RegularRep{2.0})};
}

Vector witness_vector(const ModuleAction& m) {
  if (m.is_regular()) return Vector::indicator(Word{});
  return Vector::dense({1, 2, 0});
}

// Growth part of criterion 9 under the given conventions.
Outcome witness_growth(PrefixConvention prime_power, PrefixConvention staircase) {
  Outcome out;
  for (const ModuleAction& m : witness_actions()) {
    const std::string name = m.is_regular() ? fmt::format("regular p={}", m.designated_p()) : "rotations";
    const Vector v = witness_vector(m);
    const WitnessReport pp = prime_power_witness(m, 2, 3, v, 6, prime_power);
    if (!pp.growth_holds) out.fail(name + ": f^2(w_2,n) != n v");
    if (!pp.other_prime_vanishes) out.fail(name + ": f^2(w_3,n) != 0");
    if (!staircase_witness(m, v, 6, staircase).growth_holds) out.fail(name + ": f_xi(w_n) != n xi");
  }
  return out;
}

// 9. Quasicocycle witnesses and the inner-cocycle identity.
Outcome quasicocycle_witnesses(std::uint64_t seed, bool corrupt) {
  Outcome out = corrupt ? witness_growth(PrefixConvention::BThenWord, PrefixConvention::WordOnly)
                        : witness_growth(PrefixConvention::WordThenB, PrefixConvention::WordThenB);
  for (const ModuleAction& m : witness_actions()) {
    const Vector v = m.is_regular() ? Vector::sparse({{Word{}, Rational(2)}, {parse_word(m.splitting(), "a b"), Rational(-1)}})
                                    : Vector::dense({Rational(1, 2), -1, 3});
    const SplitQC iota(m, FactorCocycleMap::inner_only(v), FactorCocycleMap::inner_only(v));
    WordSampler sampler(m.splitting(), 6, 3, seed);
    for (int i = 0; i < 500; ++i) {
      const Word g = sampler.next();
      if (!(eval_split_qc(iota, g) == inner_cocycle(m, v, g))) out.fail("inner cocycle identity fails");
    }
  }
  if (out.passed) out.detail = "p=2, q=3, n<=6 on rotations and regular p=1,2; 500 inner words";
  return out;
}

// 10. Defect spaces.
Outcome defect_spaces(std::uint64_t) {
  Outcome out;
  std::vector<Rational> values;
  for (int k = -2; k <= 2; ++k) values.emplace_back(k, 2);
  std::size_t vectors = 0;
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (const auto& f : all_alternating_vectors(FactorDescriptor::cyclic(n), values)) {
      ++vectors;
      if (!order_bound_check(f).holds) out.fail(fmt::format("order bound fails on Z/{}", n));
      if (!norm_equivalence_holds(f)) out.fail(fmt::format("norm sandwich fails on Z/{}", n));
    }
  }
  const auto on_z2 = all_alternating_vectors(FactorDescriptor::cyclic(2), values);
  if (on_z2.size() != 1 || !on_z2.front().is_zero()) out.fail("D(Z/2) is not {0}");
  for (const auto& [order, quotient] : {std::pair<std::int64_t, std::int64_t>{6, 2}, {12, 4}}) {
    const ShortExactSequence ses{cyclic_hom(3, order, order / 3), cyclic_hom(order, quotient, 1)};
    const auto kernel_vectors = all_alternating_vectors(FactorDescriptor::cyclic(3), values);
    const auto quotient_vectors = all_alternating_vectors(FactorDescriptor::cyclic(quotient), values);
    for (const auto& f : kernel_vectors) {
      if (defect_norm(embed_subgroup(f, ses.inclusion)) != defect_norm(f)) out.fail("subgroup embedding not isometric");
      for (const auto& g : quotient_vectors) {
        if (defect_norm(ses_embed(f, g, ses)) != std::max(defect_norm(f), defect_norm(g))) {
          out.fail(fmt::format("j not isometric on Z/3 -> Z/{} -> Z/{}", order, quotient));
        }
      }
    }
    for (const auto& g : quotient_vectors) {
      if (defect_norm(pullback_quotient(g, ses.projection)) != defect_norm(g)) out.fail("pullback not isometric");
    }
  }
  if (out.passed) out.detail = fmt::format("{} vectors on Z/2..Z/8, both sequences", vectors);
  return out;
}

// Sampled split defect measured exactly on a finite target.
Rational exact_sampled_defect(const SplitQRep& mu, WordSampler& sampler, std::size_t count, std::size_t junctions) {
  const MetricGroup& target = mu.target();
  const Splitting& s = mu.splitting();
  Rational best = 0;
  auto measure = [&](const Word& g, const Word& h) {
    const auto d = target.exact_distance(eval_qrep(mu, multiply(s, g, h)),
                                         target.multiply(eval_qrep(mu, g), eval_qrep(mu, h)));
    best = std::max(best, *d);
  };
  for (std::size_t i = 0; i < count; ++i) {
    const Word g = sampler.next();
    measure(g, sampler.next());
  }
  const SplitQRDefect detail = qrep_defect(mu);
  for (Side side : {Side::A, Side::B}) {
    const QRDefect& fd = side == Side::A ? detail.on_a : detail.on_b;
    if (!fd.argmax) continue;
    for (std::size_t i = 0; i < junctions; ++i) {
      const auto [g, h] = junction_pair(sampler, side, fd.argmax->first, fd.argmax->second);
      measure(g, h);
    }
  }
  return best;
}

// 11. Quasi-representations.
Outcome quasi_representations(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  const MetricGroup circle = MetricGroup::circle();
  const MetricGroup z12 = MetricGroup::cyclic(12, Rational(1, 4));
  std::uniform_int_distribution<int> num(0, 15);

  // Split defect is the factor maximum, on the circle and on Z/12.
  for (int c = 0; c < 10; ++c) {
    const Splitting s = c % 2 == 0 ? free_group_splitting() : z5_z6();
    FactorQRMap a, b;
    for (const auto& [map, d] : {std::pair<FactorQRMap*, const FactorDescriptor*>{&a, &s.a()}, {&b, &s.b()}}) {
      for (std::int64_t k = 1; k <= 2; ++k) set_alternating(circle, *d, *map, element(k), circle_element(Rational(num(rng), 16)));
      if (!d->is_finite() && num(rng) % 2 == 0) map->tail = circle_element(Rational(num(rng), 16));
    }
    const SplitQRep mu(s, circle, a, b);
    const SplitQRDefect d = qrep_defect(mu);
    WordSampler sampler(s, 6, 5, seed + static_cast<std::uint64_t>(c));
    const double sampled = qrep_sampled_defect(mu, sampler, 1000, 20);
    if (sampled > d.value.value + kMetricTolerance || std::abs(sampled - std::max(d.on_a.value, d.on_b.value)) > 1e-9) {
      out.fail(fmt::format("circle config {}: sampled {} vs factor max {}", c, sampled, d.value.value));
    }
  }
  for (int c = 0; c < 10; ++c) {
    const Splitting s = c % 2 == 0 ? free_group_splitting() : z5_z6();
    std::uniform_int_distribution<std::size_t> residue(0, 11);
    FactorQRMap a, b;
    for (const auto& [map, d] : {std::pair<FactorQRMap*, const FactorDescriptor*>{&a, &s.a()}, {&b, &s.b()}}) {
      for (std::int64_t k = 1; k <= 2; ++k) set_alternating(z12, *d, *map, element(k), residue(rng));
    }
    const SplitQRep mu(s, z12, a, b);
    const SplitQRDefect d = qrep_defect(mu);
    WordSampler sampler(s, 6, 5, seed + 100 + static_cast<std::uint64_t>(c));
    const Rational sampled = exact_sampled_defect(mu, sampler, 1000, 20);
    if (sampled != std::max(*d.on_a.exact, *d.on_b.exact)) {
      out.fail(fmt::format("Z/12 config {}: sampled {} vs factor max {}", c, to_string(sampled), to_string(*d.value.exact)));
    }
  }

  // Nontriviality witnesses on Z/12 with d = |r|/4 and epsilon = 1: every admissible mu.
  if (!check_no_small_subgroups(z12, 1.0).passes) out.fail("Z/12 has 1-small subgroups");
  const std::vector<std::size_t> small{0, 1, 2, 10, 11};
  std::size_t searches = 0;
  auto search_all = [&](const Splitting& s, const std::vector<FactorQRMap>& on_a, const std::vector<FactorQRMap>& on_b) {
    const auto reps = enumerate_representations(s, z12);
    for (const auto& a : on_a) {
      for (const auto& b : on_b) {
        const SplitQRep mu(s, z12, a, b);
        for (const auto& rho : reps) {
          ++searches;
          const NontrivialityWitness w = nontriviality_witness(mu, rho, 1.0);
          if (w.status == WitnessStatus::Exhausted) out.fail("witness search exhausted on " + s.name());
        }
      }
    }
  };
  auto maps_on = [&](const FactorDescriptor& d) {
    std::vector<FactorQRMap> maps;
    if (d.is_finite()) {
      // Values on the non-involutions up to inversion; involutions go to 0.
      std::vector<FactorElement> free;
      for (const auto& x : enumerate(d)) {
        const FactorElement inv = invert(d, x);
        if (x.value < inv.value) free.push_back(x);
      }
      maps.emplace_back();
      for (const auto& x : free) {
        std::vector<FactorQRMap> next;
        for (const auto& partial : maps) {
          for (std::size_t v : small) {
            FactorQRMap m = partial;
            set_alternating(z12, d, m, x, v);
            next.push_back(std::move(m));
          }
        }
        maps = std::move(next);
      }
      return maps;
    }
    for (std::size_t v : small) {
      for (std::size_t t : small) {
        FactorQRMap m;
        set_alternating(z12, d, m, element(1), v);
        if (t != 0) m.tail = t;
        maps.push_back(std::move(m));
      }
    }
    return maps;
  };
  for (const Splitting& s : {Splitting(FactorDescriptor::cyclic(2), FactorDescriptor::cyclic(3)),
                             Splitting(FactorDescriptor::cyclic(3), FactorDescriptor::cyclic(4)), free_group_splitting()}) {
    search_all(s, maps_on(s.a()), maps_on(s.b()));
  }

  // Circle: delta = pi/4, epsilon = pi/2, sampled representations of Z * Z.
  if (!check_no_small_subgroups(circle, kPi / 2).passes) out.fail("circle has pi/2-small subgroups");
  FactorQRMap rotation;
  rotation.tail = circle_element(Rational(1, 8));
  const SplitQRep mu(free_group_splitting(), circle, rotation, rotation);
  std::uniform_int_distribution<std::int64_t> turn(0, (1 << 16) - 1);
  for (int i = 0; i < 1000; ++i) {
    const Representation rho{{circle_element(Rational(turn(rng), 1 << 16)), {}},
                             {circle_element(Rational(turn(rng), 1 << 16)), {}}};
    const NontrivialityWitness w = nontriviality_witness(mu, rho, kPi / 2);
    if (w.status != WitnessStatus::Found || std::abs(w.delta - kPi / 4) > 1e-12) out.fail("circle witness missing");
  }
  if (out.passed) out.detail = fmt::format("{} finite searches, 1000 circle representations", searches);
  return out;
}

// 12. The sequence maps f_s.
Outcome sequence_maps(std::uint64_t) {
  Outcome out;
  const Splitting s = free_group_splitting();
  const SplitQM f = sequence_qm({{1, 1}});
  auto seq = [](std::int64_t k) { return k == 1 ? 1 : (k == -1 ? -1 : 0); };
  for (std::int64_t k = -5; k <= 5; ++k) {
    if (k == 0) continue;
    for (std::int64_t e : {1, -1}) {
      const Word base = reduce(s, std::vector<Letter>{{Side::A, element(k)}, {Side::B, element(e)}});
      for (std::int64_t n = 0; n <= 10; ++n) {
        if (eval_split(f, power(s, base, n)) != n * (seq(k) + e * seq(1))) {
          out.fail(fmt::format("f_s((a^{} b^{})^{})", k, e, n));
        }
      }
    }
  }
  std::size_t sequences = 0;
  for (int code = 0; code < 81; ++code) {
    std::map<std::int64_t, Rational> values;
    int rest = code;
    bool zero = true;
    for (std::int64_t k = 1; k <= 4; ++k, rest /= 3) {
      const int v = rest % 3 - 1;
      if (v != 0) zero = false;
      values[k] = v;
    }
    ++sequences;
    if (is_trivial(sequence_qm(values)) != zero) out.fail(fmt::format("triviality wrong for sequence {}", code));
  }
  if (out.passed) out.detail = fmt::format("|k| <= 5, n <= 10; {} sequences", sequences);
  return out;
}

// 13. The literal conventions must break the growth check.
Outcome negative_control(std::uint64_t) {
  Outcome out;
  const Outcome literal = witness_growth(PrefixConvention::BThenWord, PrefixConvention::WordOnly);
  if (literal.passed) out.fail("growth check still passes with the literal conventions");
  else out.detail = "literal convention fails: " + literal.detail;
  return out;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  using Check = std::function<Outcome(std::uint64_t)>;
  const std::vector<std::pair<std::string, Check>> checks{
      {"defect equality", defect_equality},
      {"sign map", sign_evaluation},
      {"homogenization", homogenization},
      {"witness gaps and Gromov norm", witness_gaps},
      {"subword counting", counting},
      {"counting decomposition", decomposition},
      {"tau_n fixed points", tau_fixed_points},
      {"inner conjugation", inner_conjugation},
      {"quasicocycle witnesses",
       [&](std::uint64_t seed) { return quasicocycle_witnesses(seed, options.corrupt_convention); }},
      {"defect spaces", defect_spaces},
      {"quasi-representations", quasi_representations},
      {"sequence maps", sequence_maps},
      {"negative control", negative_control},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.title = checks[i].first;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = checks[i].second(child_seed(options.seed, r.id));
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const IdentityViolation& e) {
      r.detail = std::string("identity violation: ") + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r, bool with_time) {
  if (!with_time) return fmt::format("{} {:>2}  {:<30}  {}", r.passed ? "PASS" : "FAIL", r.id, r.title, r.detail);
  return fmt::format("{} {:>2}  {:<30} ({:.2f} s)  {}", r.passed ? "PASS" : "FAIL", r.id, r.title, r.seconds, r.detail);
}

}  // namespace splitqm
