#include <gtest/gtest.h>

#include "support.hpp"

namespace cwwkit {
namespace {

using testing::schema;

TEST(Vocabulary, DefaultSchemaShape) {
  const auto& s = schema();
  ASSERT_EQ(s.parameters.size(), 4u);
  for (const auto& p : s.parameters) EXPECT_EQ(p.g(), 4u);
  EXPECT_EQ(s.recommendation.g(), 4u);
  EXPECT_EQ(s.parameters[0].name(), kTimeTaken);
  EXPECT_EQ(s.parameters[3].key(), "preparation");
  EXPECT_EQ(s.recommendation.at(0).code, "SSNG");
  EXPECT_EQ(s.recommendation.at(4).code, "SSVG");
}

TEST(Vocabulary, IndicesFollowDeclarationOrder) {
  const char* codes[4][5] = {{"VL", "S", "M", "L", "VLA"},
                             {"SVL", "SL", "SM", "SLA", "SVLA"},
                             {"AVL", "AL", "AM", "AH", "AVH"},
                             {"PVL", "PL", "PM", "PH", "PVH"}};
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t k = 0; k < 5; ++k) {
      const auto* t = schema().parameters[p].find(codes[p][k]);
      ASSERT_NE(t, nullptr) << codes[p][k];
      EXPECT_EQ(t->index, k);
    }
  }
}

TEST(Vocabulary, ResolvesWorkedExample) {
  const auto fb = testing::record("1", {"S", "SLA", "AM", "PM"});
  EXPECT_EQ(fb.indices(), (std::vector<std::size_t>{1, 3, 2, 2}));
  EXPECT_EQ(fb.words[1], "SLA");
}

TEST(Vocabulary, ResolvesLabelsAndCodesCaseInsensitively) {
  const std::map<std::string, std::string> raw{{kTimeTaken, "very little"},
                                               {kSubjectKnowledge, "svl"},
                                               {kLiking, " Very High "},
                                               {kPreparation, "pVH"}};
  const auto fb = resolve_feedback(schema(), "x", raw);
  EXPECT_EQ(fb.indices(), (std::vector<std::size_t>{0, 0, 4, 4}));
}

TEST(Vocabulary, SameLabelInDifferentParametersResolvesPerParameter) {
  // "Large" is index 3 for time taken and also for subject knowledge.
  const std::map<std::string, std::string> raw{
      {kTimeTaken, "Large"}, {kSubjectKnowledge, "Large"}, {kLiking, "AM"}, {kPreparation, "PM"}};
  const auto fb = resolve_feedback(schema(), "x", raw);
  EXPECT_EQ(fb.choices[0].code, "L");
  EXPECT_EQ(fb.choices[1].code, "SLA");
}

TEST(Vocabulary, UnknownWordNamesParameterAndWord) {
  const std::map<std::string, std::string> raw{
      {kTimeTaken, "Enormous"}, {kSubjectKnowledge, "SL"}, {kLiking, "AM"}, {kPreparation, "PM"}};
  try {
    resolve_feedback(schema(), "x", raw);
    FAIL() << "expected ResolutionError";
  } catch (const ResolutionError& e) {
    EXPECT_EQ(e.parameter(), kTimeTaken);
    EXPECT_EQ(e.word(), "Enormous");
  }
}

TEST(Vocabulary, MissingOrUnknownParameterIsSchemaError) {
  std::map<std::string, std::string> raw{{kTimeTaken, "S"}, {kSubjectKnowledge, "SL"}, {kLiking, "AM"}};
  EXPECT_THROW(resolve_feedback(schema(), "x", raw), SchemaError);
  raw[kPreparation] = "PM";
  raw["Mood"] = "Happy";
  EXPECT_THROW(resolve_feedback(schema(), "x", raw), SchemaError);
}

TEST(Vocabulary, ResolutionIsDeterministic) {
  const auto a = testing::record("7", {"S", "SM", "AL", "PVH"});
  const auto b = testing::record("7", {"S", "SM", "AL", "PVH"});
  EXPECT_EQ(a.indices(), b.indices());
  EXPECT_EQ(a.choices, b.choices);
}

TEST(Vocabulary, TermSetRejectsCollisionsAndTinySets) {
  EXPECT_THROW(TermSet::create("t", "t", {{"Low", "L"}}), ValidationError);
  EXPECT_THROW(TermSet::create("t", "t", {{"Low", "L"}, {"Large", "l"}}), ValidationError);
  EXPECT_THROW(TermSet::create("t", "t", {{"Low", "L"}, {"low", "LO"}}), ValidationError);
  EXPECT_THROW(TermSet::create("t", "t", {{"Low", ""}, {"High", "H"}}), ValidationError);
  const auto two = TermSet::create("t", "t", {{"Low", "L"}, {"High", "H"}});
  EXPECT_EQ(two.g(), 1u);
  EXPECT_THROW(two.at(2), DomainError);
}

TEST(Vocabulary, MethodNamesRoundTrip) {
  for (auto m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_method("bogus").has_value());
}

}  // namespace
}  // namespace cwwkit
