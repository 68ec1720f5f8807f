#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "support.hpp"

namespace cwwkit {
namespace {

using testing::codebook;
using testing::schema;

std::string default_text() { return kDefaultCodebookCsv; }

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

Codebook load_text(const std::string& text) {
  std::istringstream in(text);
  return load_codebook(in, schema());
}

template <typename E>
std::string error_of(const std::string& text) {
  try {
    load_text(text);
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no exception";
  return {};
}

const std::string kSmallRow =
    "Time taken to solve the question,Small,S,0.59,2.00,3.00,4.41,1.79,2.50,2.50,3.21,0.59,1.88,3.12,2.50";

TEST(Codebook, DefaultHasEveryWord) {
  EXPECT_EQ(codebook().entries().size(), 25u);
  EXPECT_FALSE(codebook().nonstandard_domain());
}

TEST(Codebook, EmbeddedCopyMatchesDataFile) {
  EXPECT_EQ(load_codebook_file(std::string(CWWKIT_DATA_DIR) + "/codebook.csv", schema()),
            codebook());
}

TEST(Codebook, LookupByLabelOrCode) {
  const auto s = lookup(codebook(), kTimeTaken, "Small");
  EXPECT_EQ(s.as_array(), (std::array<double, 9>{0.59, 2, 3, 4.41, 1.79, 2.5, 2.5, 3.21, 0.59}));
  EXPECT_EQ(lookup(codebook(), kTimeTaken, "s"), s);
  const auto& e = codebook().entry(kStrategy, "SSVG");
  EXPECT_EQ(e.word.index, 4u);
  ASSERT_TRUE(e.stored_centroid);
  EXPECT_DOUBLE_EQ(e.stored_centroid->c_l, 8.96);
  EXPECT_THROW(lookup(codebook(), kTimeTaken, "Huge"), LookupError);
  EXPECT_THROW(lookup(codebook(), "Mood", "S"), LookupError);
}

TEST(Codebook, ShoulderWordsHaveFullHeightLmf) {
  for (const auto& [key, e] : codebook().entries()) {
    if (e.word.index == 0 || e.word.index == 4) {
      EXPECT_DOUBLE_EQ(e.fou.lmf_height(), 1.0) << e.word.code;
    }
  }
}

TEST(Codebook, RecommendationFousInIndexOrder) {
  const auto recs = codebook().recommendation_fous();
  ASSERT_EQ(recs.size(), 5u);
  for (std::size_t k = 1; k < recs.size(); ++k) {
    EXPECT_LT(recs[k - 1].params().b, recs[k].params().b + 1e-12);
  }
}

TEST(Codebook, UmfOrderingViolationNamesWord) {
  const auto msg = error_of<ValidationError>(replace_once(
      default_text(), kSmallRow,
      "Time taken to solve the question,Small,S,0.59,2.00,3.00,2.50,1.79,2.50,2.50,2.50,0.59,,,"));
  EXPECT_NE(msg.find("Small (S)"), std::string::npos) << msg;
  EXPECT_NE(msg.find(kTimeTaken), std::string::npos) << msg;
}

TEST(Codebook, HeightAboveOneIsRejected) {
  const auto msg = error_of<ValidationError>(replace_once(
      default_text(), kSmallRow,
      "Time taken to solve the question,Small,S,0.59,2.00,3.00,4.41,1.79,2.50,2.50,3.21,1.50,1.88,3.12,2.50"));
  EXPECT_NE(msg.find("height exceeds 1"), std::string::npos) << msg;
}

TEST(Codebook, MissingWordIsIncomplete) {
  const auto text = replace_once(default_text(),
                                 "Time taken to solve the question,Moderate,M,", "#");
  const auto msg = error_of<CompletenessError>(text);
  EXPECT_NE(msg.find("Moderate (M)"), std::string::npos) << msg;
}

TEST(Codebook, OrphanAndDuplicateRows) {
  error_of<CompletenessError>(default_text() + "Mood,Happy,H,1,2,3,4,2,2.5,2.5,3,0.5,,,\n");
  error_of<CompletenessError>(default_text() +
                              "Time taken to solve the question,Huge,HU,1,2,3,4,2,2.5,2.5,3,0.5,,,\n");
  error_of<ValidationError>(default_text() + kSmallRow + "\n");
}

TEST(Codebook, MalformedRowReportsRowNumber) {
  const auto text = replace_once(default_text(), kSmallRow,
                                 "Time taken to solve the question,Small,S,0.59,abc,3.00,4.41,"
                                 "1.79,2.50,2.50,3.21,0.59,1.88,3.12,2.50");
  try {
    load_text(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 3u);
  }
  error_of<ParseError>("parameter,label,code\n");
  error_of<ParseError>("");
}

TEST(Codebook, StoredMeanMustMatchInterval) {
  error_of<ValidationError>(replace_once(default_text(), "3.21,0.59,1.88,3.12,2.50",
                                         "3.21,0.59,1.88,3.12,2.60"));
}

TEST(Codebook, RequiredColumnsOnly) {
  std::istringstream full(default_text());
  std::string line;
  std::ostringstream trimmed;
  bool header = true;
  while (std::getline(full, line)) {
    if (line.empty()) continue;
    if (header) {
      trimmed << "parameter,label,code,a,b,c,d,e,f,g,i,h\n";
      header = false;
      continue;
    }
    auto pos = line.size();
    for (int k = 0; k < 3; ++k) pos = line.rfind(',', pos - 1);
    trimmed << line.substr(0, pos) << '\n';
  }
  const auto cb = load_text(trimmed.str());
  EXPECT_EQ(cb.entries().size(), 25u);
  EXPECT_FALSE(cb.entry(kTimeTaken, "S").stored_centroid);
  EXPECT_TRUE(verify_stored_centroids(cb, it2::DiscretizationGrid{}, 0.0).passed());
}

TEST(Codebook, RoundTripPreservesContent) {
  std::ostringstream out;
  write_codebook(out, codebook());
  EXPECT_EQ(load_text(out.str()), codebook());
  std::ostringstream again;
  write_codebook(again, load_text(out.str()));
  EXPECT_EQ(again.str(), out.str());
}

TEST(Codebook, DomainDirective) {
  const auto text = "# domain: 0 20\n" + default_text();
  const auto cb = load_text(text);
  EXPECT_TRUE(cb.nonstandard_domain());
  EXPECT_DOUBLE_EQ(cb.domain_max(), 20.0);
  std::ostringstream out;
  write_codebook(out, cb);
  EXPECT_EQ(load_text(out.str()), cb);
  error_of<ValidationError>("# domain: 1 10\n" + default_text());
  error_of<ParseError>("# domain: 10 1\n" + default_text());
}

TEST(Verification, StoredCentroidsWithinTolerance) {
  const auto report = verify_stored_centroids(codebook(), it2::DiscretizationGrid{}, 0.05);
  EXPECT_EQ(report.checks.size(), 25u);
  EXPECT_TRUE(report.passed());
  for (const auto& c : report.checks) {
    ASSERT_TRUE(c.stored);
    EXPECT_LE(std::abs(c.delta_l), 0.05) << c.word.code;
    EXPECT_LE(std::abs(c.delta_r), 0.05) << c.word.code;
  }
}

TEST(Verification, ZeroToleranceFails) {
  const auto report = verify_stored_centroids(codebook(), it2::DiscretizationGrid{}, 0.0);
  EXPECT_FALSE(report.passed());
  EXPECT_GT(report.failures(), 0u);
  std::ostringstream out;
  write_verification(out, report);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace cwwkit
