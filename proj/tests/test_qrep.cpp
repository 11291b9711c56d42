#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "splitqm/qrep.hpp"

namespace splitqm {
namespace {

constexpr double kPi = std::numbers::pi;
const Splitting kFree = free_group_splitting();

// Rotation by pi/4 times the sign of the exponent.
FactorQRMap sign_rotation() {
  FactorQRMap m;
  m.tail = circle_element(Rational(1, 8));
  return m;
}

double sgn(std::int64_t k) { return k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0); }

// Arc length of an angle in radians, independent of the turn arithmetic.
double arc(double angle) {
  double a = std::fmod(std::abs(angle), 2 * kPi);
  return std::min(a, 2 * kPi - a);
}

MetricGroup z12() { return MetricGroup::cyclic(12, Rational(1, 4)); }

TEST(QRep, CircleMetric) {
  const MetricGroup c = MetricGroup::circle();
  EXPECT_NEAR(c.distance(circle_element(Rational(1, 8)), c.identity()), kPi / 4, 1e-12);
  EXPECT_NEAR(c.distance(circle_element(Rational(7, 8)), circle_element(Rational(1, 8))), kPi / 2, 1e-12);
  EXPECT_EQ(c.multiply(circle_element(Rational(3, 4)), circle_element(Rational(1, 2))), circle_element(Rational(1, 4)));
  EXPECT_THROW(c.validate(circle_element(Rational(3, 2))), std::invalid_argument);
}

TEST(QRep, FiniteMetricValidation) {
  std::vector<std::vector<Rational>> bad(3, std::vector<Rational>(3, 1));
  EXPECT_THROW(MetricGroup::finite(FactorDescriptor::cyclic(3), bad), std::invalid_argument);
  for (int i = 0; i < 3; ++i) bad[i][i] = 0;
  EXPECT_NO_THROW(MetricGroup::finite(FactorDescriptor::cyclic(3), bad));
  // Distance to the identity of S3 that is not conjugation invariant.
  const auto s3 = symmetric_group_s3();
  std::vector<std::vector<Rational>> skew(6, std::vector<Rational>(6, 2));
  for (int i = 0; i < 6; ++i) skew[i][i] = 0;
  skew[0][1] = skew[1][0] = 1;
  EXPECT_THROW(MetricGroup::finite(s3, skew), std::invalid_argument);
}

TEST(QRep, BiInvarianceOnSamples) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 99);
  const MetricGroup c = MetricGroup::circle();
  const MetricGroup u = MetricGroup::unitary(3);
  for (int i = 0; i < 1000; ++i) {
    GroupElement g = circle_element(Rational(num(rng), 100)), x = circle_element(Rational(num(rng), 100)),
                 y = circle_element(Rational(num(rng), 100));
    EXPECT_NEAR(c.distance(c.multiply(g, x), c.multiply(g, y)), c.distance(x, y), 1e-9);
    EXPECT_NEAR(c.distance(c.multiply(x, g), c.multiply(y, g)), c.distance(x, y), 1e-9);
  }
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = unitary_element(unitary_exp(random_hermitian(3, 2.0, rng)));
    const GroupElement x = unitary_element(unitary_exp(random_hermitian(3, 2.0, rng)));
    const GroupElement y = unitary_element(unitary_exp(random_hermitian(3, 2.0, rng)));
    EXPECT_NO_THROW(u.validate(g));
    EXPECT_NEAR(u.distance(u.multiply(g, x), u.multiply(g, y)), u.distance(x, y), 1e-9);
    EXPECT_NEAR(u.distance(u.multiply(x, g), u.multiply(y, g)), u.distance(x, y), 1e-9);
  }
}

TEST(QRep, Alternation) {
  const MetricGroup c = MetricGroup::circle();
  FactorQRMap m;
  m.support[1] = circle_element(Rational(1, 8));
  EXPECT_THROW(validate(c, FactorDescriptor::integer(), m), std::invalid_argument);
  set_alternating(c, FactorDescriptor::integer(), m, element(1), circle_element(Rational(1, 8)));
  EXPECT_EQ(m.support.at(-1), circle_element(Rational(7, 8)));
  EXPECT_NO_THROW(validate(c, FactorDescriptor::integer(), m));
  FactorQRMap on_z2;
  EXPECT_THROW(set_alternating(c, FactorDescriptor::cyclic(2), on_z2, element(1), circle_element(Rational(1, 8))),
               std::invalid_argument);
  EXPECT_NO_THROW(set_alternating(c, FactorDescriptor::cyclic(2), on_z2, element(1), circle_element(Rational(1, 2))));
  FactorQRMap tail_on_finite;
  tail_on_finite.tail = circle_element(Rational(1, 8));
  EXPECT_THROW(validate(c, FactorDescriptor::cyclic(3), tail_on_finite), std::invalid_argument);
}

TEST(QRep, EvaluationFollowsTheNormalForm) {
  const SplitQRep mu(kFree, MetricGroup::circle(), sign_rotation(), sign_rotation());
  EXPECT_EQ(eval_qrep(mu, Word{}), circle_element(0));
  EXPECT_EQ(eval_qrep(mu, parse_word(kFree, "a^5")), circle_element(Rational(1, 8)));
  EXPECT_EQ(eval_qrep(mu, parse_word(kFree, "a^5 b^-2 a")), circle_element(Rational(1, 8)));
  WordSampler sampler(kFree, 6, 4, 3);
  for (int i = 0; i < 200; ++i) {
    const Word g = sampler.next();
    // Product reversal: the inverse word multiplies the inverted values backwards.
    GroupElement reversed = circle_element(0);
    for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
      const std::int64_t k = static_cast<std::int64_t>(it->element.value);
      reversed = mu.target().multiply(reversed, circle_element(Rational(k > 0 ? 7 : 1, 8)));
    }
    EXPECT_EQ(eval_qrep(mu, invert(kFree, g)), reversed);
    EXPECT_EQ(eval_qrep(mu, invert(kFree, g)), mu.target().inverse(eval_qrep(mu, g)));
  }
}

TEST(QRep, CircleSignDefect) {
  const MetricGroup c = MetricGroup::circle();
  double oracle = 0;
  for (std::int64_t k = -10; k <= 10; ++k)
    for (std::int64_t l = -10; l <= 10; ++l)
      oracle = std::max(oracle, arc(kPi / 4 * (sgn(k) + sgn(l) - sgn(k + l))));
  const QRDefect d = qrep_factor_defect(c, FactorDescriptor::integer(), sign_rotation());
  EXPECT_NEAR(d.value, oracle, 1e-12);
  EXPECT_NEAR(d.value, kPi / 4, 1e-12);
  EXPECT_FALSE(d.exact);
  EXPECT_NEAR(sup_norm_qrep(c, FactorDescriptor::integer(), sign_rotation()), kPi / 4, 1e-12);
  EXPECT_EQ(qrep_factor_defect(c, FactorDescriptor::integer(), FactorQRMap{}).value, 0);
}

TEST(QRep, WindowMatchesLargeBox) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(0, 11);
  const MetricGroup c = MetricGroup::circle();
  for (int i = 0; i < 20; ++i) {
    FactorQRMap m;
    for (int k = 1; k <= 3; ++k)
      if (num(rng) % 2 == 0) set_alternating(c, FactorDescriptor::integer(), m, element(k), circle_element(Rational(num(rng), 12)));
    if (num(rng) % 2 == 0) m.tail = circle_element(Rational(num(rng), 12));
    double box = 0;
    for (std::int64_t k = -25; k <= 25; ++k)
      for (std::int64_t l = -25; l <= 25; ++l)
        box = std::max(box, c.distance(eval_factor_qr(c, m, element(k + l)),
                                       c.multiply(eval_factor_qr(c, m, element(k)), eval_factor_qr(c, m, element(l)))));
    EXPECT_NEAR(qrep_factor_defect(c, FactorDescriptor::integer(), m).value, box, 1e-12);
  }
}

TEST(QRep, FiniteTargetDefectIsExact) {
  const MetricGroup g = z12();
  FactorQRMap m;
  set_alternating(g, FactorDescriptor::cyclic(3), m, element(1), std::size_t{2});
  // Oracle on residues: mu(1) = 2, mu(2) = 10, d = |r|/4 with r the cyclic distance.
  const std::int64_t mu[3] = {0, 2, 10};
  Rational best = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const std::int64_t r = ((mu[(x + y) % 3] - mu[x] - mu[y]) % 12 + 12) % 12;
      best = std::max(best, Rational(std::min(r, 12 - r), 4));
    }
  const QRDefect d = qrep_factor_defect(g, FactorDescriptor::cyclic(3), m);
  ASSERT_TRUE(d.exact);
  EXPECT_EQ(*d.exact, best);
  EXPECT_EQ(*d.exact, Rational(6, 4));
}

TEST(QRep, SplitDefectIsTheFactorMaximum) {
  const MetricGroup c = MetricGroup::circle();
  const MetricGroup u = MetricGroup::unitary(2);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(0, 15);
  for (int i = 0; i < 10; ++i) {
    FactorQRMap a, b;
    for (int k = 1; k <= 2; ++k) set_alternating(c, FactorDescriptor::integer(), a, element(k), circle_element(Rational(num(rng), 16)));
    set_alternating(c, FactorDescriptor::cyclic(5), b, element(1), circle_element(Rational(num(rng), 16)));
    set_alternating(c, FactorDescriptor::cyclic(5), b, element(2), circle_element(Rational(num(rng), 16)));
    const SplitQRep mu(Splitting(FactorDescriptor::integer(), FactorDescriptor::cyclic(5)), c, a, b);
    const SplitQRDefect d = qrep_defect(mu);
    EXPECT_NEAR(d.value.value, std::max(d.on_a.value, d.on_b.value), 1e-12);
    WordSampler sampler(mu.splitting(), 6, 4, 100 + i);
    const double sampled = qrep_sampled_defect(mu, sampler, 300, 20);
    EXPECT_LE(sampled, d.value.value + 1e-9);
    EXPECT_NEAR(sampled, d.value.value, 1e-9);
  }
  for (int i = 0; i < 5; ++i) {
    FactorQRMap a, b;
    set_alternating(u, FactorDescriptor::integer(), a, element(1), unitary_element(unitary_exp(random_hermitian(2, 0.5, rng))));
    a.tail = unitary_element(unitary_exp(random_hermitian(2, 0.3, rng)));
    set_alternating(u, FactorDescriptor::integer(), b, element(2), unitary_element(unitary_exp(random_hermitian(2, 0.7, rng))));
    const SplitQRep mu(kFree, u, a, b);
    WordSampler sampler(kFree, 5, 4, 7 + i);
    const double exact = qrep_defect(mu).value.value;
    const double sampled = qrep_sampled_defect(mu, sampler, 200, 20);
    EXPECT_LE(sampled, exact + 1e-9);
    EXPECT_NEAR(sampled, exact, 1e-9);
  }
}

TEST(QRep, LongUnitaryProductsStayUnitary) {
  const MetricGroup u = MetricGroup::unitary(3);
  std::mt19937_64 rng(2);
  FactorQRMap a, b;
  a.tail = unitary_element(unitary_exp(random_hermitian(3, 1.0, rng)));
  b.tail = unitary_element(unitary_exp(random_hermitian(3, 1.0, rng)));
  const SplitQRep mu(kFree, u, a, b);
  const Word base = parse_word(kFree, "a b^-1");
  const GroupElement g = eval_qrep(mu, power(kFree, base, 5000));
  EXPECT_NO_THROW(u.validate(g));
  EXPECT_LE(u.distance(g, u.power(eval_qrep(mu, base), 5000)), 1e-6);
}

TEST(QRep, RepresentationsIntoFiniteTargets) {
  const MetricGroup g = z12();
  const Splitting psl(FactorDescriptor::cyclic(2), FactorDescriptor::cyclic(3));
  EXPECT_EQ(enumerate_representations(psl, g).size(), 2u * 3u);
  EXPECT_EQ(enumerate_representations(kFree, g).size(), 144u);
  // S3 into S3 with the discrete metric: 6 automorphisms, 3 maps onto order
  // two subgroups, and the trivial one.
  const auto s3 = symmetric_group_s3();
  std::vector<std::vector<Rational>> discrete(6, std::vector<Rational>(6, 1));
  for (int i = 0; i < 6; ++i) discrete[i][i] = 0;
  const MetricGroup target = MetricGroup::finite(s3, discrete);
  const auto reps = enumerate_representations(Splitting(s3, FactorDescriptor::cyclic(2)), target);
  EXPECT_EQ(reps.size(), 10u * 4u);
  FactorHom bad{std::size_t{1}, {}};
  EXPECT_THROW(validate(g, FactorDescriptor::cyclic(3), bad), std::invalid_argument);
}

TEST(QRep, WitnessExamples) {
  const MetricGroup c = MetricGroup::circle();
  FactorQRMap rot;
  set_alternating(c, FactorDescriptor::integer(), rot, element(1), circle_element(Rational(1, 8)));
  const SplitQRep mu(kFree, c, rot, rot);
  const Representation trivial{{circle_element(0), {}}, {circle_element(0), {}}};
  const NontrivialityWitness w = nontriviality_witness(mu, trivial, kPi / 2);
  EXPECT_EQ(w.status, WitnessStatus::Found);
  EXPECT_EQ(w.word, parse_word(kFree, "a"));
  EXPECT_NEAR(w.distance, kPi / 4, 1e-12);

  const SplitQRep zero(kFree, c, FactorQRMap{}, FactorQRMap{});
  EXPECT_EQ(nontriviality_witness(zero, trivial, kPi / 2).status, WitnessStatus::Vacuous);
  EXPECT_THROW(nontriviality_witness(mu, trivial, kPi / 4), std::invalid_argument);
  const Representation broken{{circle_element(0), {}}, {std::size_t{0}, {}}};
  EXPECT_THROW(nontriviality_witness(mu, broken, kPi / 2), std::invalid_argument);
}

TEST(QRep, SmallSubgroups) {
  const auto z5 = FactorDescriptor::cyclic(5);
  std::vector<std::vector<Rational>> discrete(5, std::vector<Rational>(5, 1));
  for (int i = 0; i < 5; ++i) discrete[i][i] = 0;
  EXPECT_TRUE(check_no_small_subgroups(MetricGroup::finite(z5, discrete), 1.0).passes);
  EXPECT_FALSE(check_no_small_subgroups(MetricGroup::finite(z5, discrete), 1.5).passes);
  EXPECT_TRUE(check_no_small_subgroups(z12(), 1.0).passes);
  EXPECT_FALSE(check_no_small_subgroups(z12(), 2.0).passes);
  EXPECT_TRUE(check_no_small_subgroups(MetricGroup::circle(), kPi / 2).passes);
  EXPECT_TRUE(check_no_small_subgroups(MetricGroup::circle(), 2 * kPi / 3).passes);
  EXPECT_FALSE(check_no_small_subgroups(MetricGroup::circle(), 2 * kPi / 3 + 0.01).passes);
  EXPECT_FALSE(check_no_small_subgroups(MetricGroup::circle(), 3 * kPi / 2).passes);
  EXPECT_TRUE(check_no_small_subgroups(MetricGroup::unitary(2), 1.0).passes);
}

// Every alternating mu on Z/2 * Z/3 and Z/3 * Z/4 into Z/12 with delta <= 1/2,
// against every representation.
TEST(QRep, WitnessesExistForEveryRepresentation) {
  const MetricGroup g = z12();
  ASSERT_TRUE(check_no_small_subgroups(g, 1.0).passes);
  for (const auto& s : {Splitting(FactorDescriptor::cyclic(2), FactorDescriptor::cyclic(3)),
                        Splitting(FactorDescriptor::cyclic(3), FactorDescriptor::cyclic(4))}) {
    const auto reps = enumerate_representations(s, g);
    for (std::size_t x : {0, 1, 2, 10, 11}) {
      for (std::size_t y : {0, 1, 2, 10, 11}) {
        FactorQRMap a, b;
        if (s.a().modulus() == 3) set_alternating(g, s.a(), a, element(1), x);
        if (s.b().modulus() >= 3) set_alternating(g, s.b(), b, element(1), y);
        const SplitQRep mu(s, g, a, b);
        for (const auto& rho : reps) {
          const NontrivialityWitness w = nontriviality_witness(mu, rho, 1.0);
          EXPECT_NE(w.status, WitnessStatus::Exhausted);
          if (w.status == WitnessStatus::Found) {
            EXPECT_GE(w.distance, w.delta - 1e-9);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace splitqm
