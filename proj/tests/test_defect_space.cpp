#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "splitqm/defect_space.hpp"

namespace splitqm {
namespace {

// Values at 0..n-1, read independently of the library's storage.
std::vector<Rational> dense(const DefectVector& f) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < f.carrier().size(); ++k) out.push_back(f.at(element(static_cast<std::int64_t>(k))));
  return out;
}

DefectVector z3_example() {
  DefectVector f(FactorDescriptor::cyclic(3));
  f.set_alternating(element(1), 1);
  return f;
}

std::vector<Rational> half_steps() {
  std::vector<Rational> out;
  for (int k = -2; k <= 2; ++k) out.emplace_back(k, 2);
  return out;
}

TEST(DefectSpace, Construction) {
  const auto z4 = FactorDescriptor::cyclic(4);
  EXPECT_THROW(DefectVector(z4, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(DefectVector(z4, {{7, 1}, {-3, -1}}), std::invalid_argument);
  EXPECT_NO_THROW(DefectVector(z4, {{1, 1}, {3, -1}, {2, 0}}));
  DefectVector f(z4);
  EXPECT_THROW(f.set_alternating(element(2), 1), std::invalid_argument);
  f.set_alternating(element(3), Rational(1, 2));
  EXPECT_EQ(f.at(element(1)), Rational(-1, 2));
  EXPECT_TRUE((f + Rational(-1) * f).is_zero());
}

TEST(DefectSpace, NormExamples) {
  EXPECT_EQ(defect_norm(DefectVector(FactorDescriptor::cyclic(5))), 0);
  EXPECT_EQ(defect_norm(z3_example()), 3);
  EXPECT_EQ(oracle::cyclic_defect(dense(z3_example())), 3);
  EXPECT_EQ(sup_norm(z3_example()), 1);
  DefectVector on_z(FactorDescriptor::integer());
  on_z.set_alternating(element(2), 1);
  // (1, 1): 0 + 0 - 1 and (2, -1): 1 + 0 - 0, (2, 2): 2 - 0
  EXPECT_EQ(defect_norm(on_z), 2);
}

TEST(DefectSpace, NormAxioms) {
  std::mt19937_64 rng(101);
  for (std::int64_t n : {5, 7, 9}) {
    const auto d = FactorDescriptor::cyclic(n);
    for (int i = 0; i < 30; ++i) {
      const DefectVector f = random_defect_vector(d, rng);
      const DefectVector g = random_defect_vector(d, rng);
      EXPECT_EQ(defect_norm(f), oracle::cyclic_defect(dense(f)));
      EXPECT_LE(defect_norm(f + g), defect_norm(f) + defect_norm(g));
      EXPECT_EQ(defect_norm(Rational(-3, 2) * f), Rational(3, 2) * defect_norm(f));
      EXPECT_EQ(defect_norm(f) == 0, f.is_zero());
    }
  }
}

TEST(DefectSpace, OrderBoundAndSandwichExhaustive) {
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (const auto& f : all_alternating_vectors(FactorDescriptor::cyclic(n), half_steps())) {
      const OrderBoundReport report = order_bound_check(f);
      EXPECT_TRUE(report.holds) << n;
      EXPECT_TRUE(norm_equivalence_holds(f));
      EXPECT_EQ(report.norm == 0, f.is_zero());
    }
  }
  EXPECT_EQ(all_alternating_vectors(FactorDescriptor::cyclic(2), half_steps()).size(), 1u);
  EXPECT_EQ(all_alternating_vectors(FactorDescriptor::cyclic(8), half_steps()).size(), 125u);
}

TEST(DefectSpace, OrderBoundCases) {
  // Order 3: |f(g)| is a third of the norm.
  const DefectVector f = z3_example();
  EXPECT_EQ(sup_norm(f) * 3, defect_norm(f));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(order_bound_check(random_defect_vector(FactorDescriptor::integer(), rng)).holds);
    EXPECT_TRUE(order_bound_check(random_defect_vector(symmetric_group_s3(), rng)).holds);
  }
}

TEST(DefectSpace, Homomorphisms) {
  EXPECT_THROW(cyclic_hom(3, 6, 1), std::invalid_argument);
  const FiniteHom doubling = cyclic_hom(3, 6, 2);
  EXPECT_TRUE(is_injective(doubling));
  EXPECT_FALSE(is_surjective(doubling));
  const FiniteHom reduction = cyclic_hom(6, 2, 1);
  EXPECT_TRUE(is_surjective(reduction));
  FiniteHom broken = reduction;
  broken.images[1] = element(0);
  EXPECT_FALSE(is_homomorphism(broken));
  EXPECT_THROW(pullback_quotient(DefectVector(FactorDescriptor::cyclic(2)), broken), std::invalid_argument);
  EXPECT_THROW(embed_subgroup(DefectVector(FactorDescriptor::cyclic(6)), reduction), std::invalid_argument);
}

TEST(DefectSpace, SubgroupEmbeddingIsIsometric) {
  const FiniteHom doubling = cyclic_hom(3, 6, 2);
  EXPECT_TRUE(embed_subgroup(DefectVector(FactorDescriptor::cyclic(3)), doubling).is_zero());
  const DefectVector image = embed_subgroup(z3_example(), doubling);
  EXPECT_EQ(image.at(element(2)), 1);
  EXPECT_EQ(image.at(element(1)), 0);
  EXPECT_EQ(oracle::cyclic_defect(dense(image)), 3);
  const FiniteHom id = cyclic_hom(3, 3, 1);
  EXPECT_EQ(embed_subgroup(z3_example(), id), z3_example());
  std::mt19937_64 rng(5);
  const FiniteHom into12 = cyclic_hom(4, 12, 3);
  for (int i = 0; i < 20; ++i) {
    const DefectVector f = random_defect_vector(FactorDescriptor::cyclic(4), rng);
    EXPECT_EQ(oracle::cyclic_defect(dense(embed_subgroup(f, into12))), defect_norm(f));
  }
}

TEST(DefectSpace, PullbackIsIsometric) {
  const FiniteHom reduction = cyclic_hom(6, 3, 1);
  const DefectVector pulled = pullback_quotient(z3_example(), reduction);
  EXPECT_EQ(pulled.at(element(4)), 1);
  EXPECT_EQ(pulled.at(element(5)), -1);
  EXPECT_EQ(oracle::cyclic_defect(dense(pulled)), defect_norm(z3_example()));
  EXPECT_TRUE(pullback_quotient(DefectVector(FactorDescriptor::cyclic(3)), reduction).is_zero());
  EXPECT_EQ(pullback_quotient(z3_example(), cyclic_hom(3, 3, 1)), z3_example());
}

TEST(DefectSpace, ShortExactSequences) {
  const ShortExactSequence small{cyclic_hom(3, 6, 2), cyclic_hom(6, 2, 1)};
  EXPECT_NO_THROW(validate(small));
  const DefectVector zero2(FactorDescriptor::cyclic(2));
  EXPECT_TRUE(ses_embed(DefectVector(FactorDescriptor::cyclic(3)), zero2, small).is_zero());
  EXPECT_EQ(oracle::cyclic_defect(dense(ses_embed(z3_example(), zero2, small))), 3);
  EXPECT_THROW(validate(ShortExactSequence{cyclic_hom(3, 6, 2), cyclic_hom(6, 3, 1)}), std::invalid_argument);

  const ShortExactSequence big{cyclic_hom(3, 12, 4), cyclic_hom(12, 4, 1)};
  std::mt19937_64 rng(200);
  for (int i = 0; i < 200; ++i) {
    const DefectVector f = random_defect_vector(FactorDescriptor::cyclic(3), rng);
    const DefectVector g = random_defect_vector(FactorDescriptor::cyclic(4), rng);
    const DefectVector j = ses_embed(f, g, big);
    EXPECT_EQ(oracle::cyclic_defect(dense(j)), std::max(defect_norm(f), defect_norm(g)));
    EXPECT_EQ(oracle::cyclic_defect(dense(pullback_quotient(g, big.projection))), defect_norm(g));
    EXPECT_EQ(oracle::cyclic_defect(dense(embed_subgroup(f, big.inclusion))), defect_norm(f));
  }
}

}  // namespace
}  // namespace splitqm
