#include <gtest/gtest.h>

#include "support.hpp"

namespace cwwkit::symbolic {
namespace {

using Indices = std::vector<std::size_t>;

TEST(Rounding, HalvesGoAwayFromZero) {
  EXPECT_EQ(round_half_away(0.5), 1);
  EXPECT_EQ(round_half_away(1.5), 2);
  EXPECT_EQ(round_half_away(2.5), 3);
  EXPECT_EQ(round_half_away(0.49), 0);
  EXPECT_EQ(round_half_away(-0.5), -1);
  EXPECT_EQ(round_half_away(0.4999999999999), 1);  // within the slack
  EXPECT_EQ(round_half_away(0.0), 0);
}

TEST(Sort, Descending) {
  EXPECT_EQ(sort_terms_descending({1, 3, 2, 2}), (Indices{3, 2, 2, 1}));
  EXPECT_EQ(sort_terms_descending({0}), (Indices{0}));
}

TEST(Sm2, Examples) {
  EXPECT_EQ(sm2(0.5, 2, 1, 4), 2u);  // 1 + round(0.5)
  EXPECT_EQ(sm2(1.0 / 3.0, 2, 2, 4), 2u);
  EXPECT_EQ(sm2(0.25, 3, 2, 4), 2u);  // 2 + round(0.25)
  EXPECT_EQ(sm2(1.0, 4, 0, 4), 4u);
  EXPECT_EQ(sm2(0.0, 4, 0, 4), 0u);
}

TEST(Sm2, RejectsBadArguments) {
  EXPECT_THROW(sm2(0.5, 1, 2, 4), DomainError);
  EXPECT_THROW(sm2(0.5, 5, 2, 4), DomainError);
  EXPECT_THROW(sm2(1.5, 3, 2, 4), DomainError);
  EXPECT_THROW(sm2(-0.1, 3, 2, 4), DomainError);
}

TEST(Aggregate, WorkedExampleStaysAtAverage) {
  // Stages: sm2(1/2, 2, 1) = 2, sm2(1/3, 2, 2) = 2, sm2(1/4, 3, 2) = 2.
  const Indices sorted{3, 2, 2, 1};
  EXPECT_EQ(sm_aggregate(sorted, WeightVector::equal(4), 4), 2u);
}

TEST(Aggregate, MoreExamples) {
  EXPECT_EQ(sm_aggregate(Indices{4, 3, 2, 1}, WeightVector::equal(4), 4), 3u);
  EXPECT_EQ(sm_aggregate(Indices{2}, WeightVector::equal(1), 4), 2u);
  EXPECT_EQ(sm_aggregate(Indices{1, 1, 1, 1}, WeightVector::equal(4), 4), 1u);
  // All weight on the largest term.
  EXPECT_EQ(sm_aggregate(Indices{4, 0, 0}, WeightVector::create({1.0, 0.0, 0.0}), 4), 4u);
}

TEST(Aggregate, ValidatesInput) {
  EXPECT_THROW(sm_aggregate(Indices{}, WeightVector::equal(1), 4), DomainError);
  EXPECT_THROW(sm_aggregate(Indices{1, 2}, WeightVector::equal(2), 4), DomainError);
  EXPECT_THROW(sm_aggregate(Indices{3, 2}, WeightVector::equal(3), 4), DomainError);
  EXPECT_THROW(sm_aggregate(Indices{5, 2}, WeightVector::equal(2), 4), DomainError);
}

TEST(Weights, Validation) {
  EXPECT_THROW(WeightVector::create({}), DomainError);
  EXPECT_THROW(WeightVector::create({0.5, 0.6}), DomainError);
  EXPECT_THROW(WeightVector::create({1.5, -0.5}), DomainError);
  EXPECT_NO_THROW(WeightVector::create({0.1, 0.2, 0.3, 0.4}));
  EXPECT_THROW(WeightVector::equal(0), DomainError);
}

}  // namespace
}  // namespace cwwkit::symbolic
