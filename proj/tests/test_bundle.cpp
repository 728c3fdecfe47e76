#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "rogetkb/bundle.hpp"
#include "support/oracles.hpp"

namespace rogetkb {
namespace {

namespace fs = std::filesystem;

class BundleTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rogetkb_bundle_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  KBBundle head42_bundle(bool with_lex) {
    auto parsed = parse_source(testing::read_fixture("head42.roget"));
    EXPECT_TRUE(parsed.ok());
    if (!with_lex) return KBBundle(std::move(*parsed.kb), std::nullopt, "");
    std::string lex = testing::read_fixture("decrement.lex");
    auto loaded = load_resource(lex);
    EXPECT_TRUE(loaded.ok());
    return KBBundle(std::move(*parsed.kb), std::move(loaded.resource), lex);
  }

  fs::path dir_;
};

TEST_F(BundleTest, SaveLoadRoundTrip) {
  auto bundle = head42_bundle(true);
  bundle.meta.built_at = "2000-01-01T00:00:00Z";
  save_bundle(bundle, dir_);
  for (const char* f : {"thesaurus.roget", "lexicon.lex", "structured.json", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / f)) << f;
  }
  const auto loaded = load_bundle(dir_);
  EXPECT_EQ(loaded.kb, bundle.kb);
  EXPECT_EQ(loaded.kb.source_checksum(), bundle.kb.source_checksum());
  EXPECT_EQ(loaded.index.entries(), bundle.index.entries());
  ASSERT_TRUE(loaded.resource);
  EXPECT_EQ(loaded.resource->size(), 31u);
  EXPECT_EQ(loaded.lexicon_text, bundle.lexicon_text);
}

TEST_F(BundleTest, WithoutLexicon) {
  save_bundle(head42_bundle(false), dir_);
  EXPECT_FALSE(fs::exists(dir_ / "lexicon.lex"));
  EXPECT_FALSE(load_bundle(dir_).resource);
}

TEST_F(BundleTest, TamperedFileIsRejected) {
  save_bundle(head42_bundle(false), dir_);
  auto text = read_file(dir_ / "thesaurus.roget");
  write_file(dir_ / "thesaurus.roget", text + "// edit\n");
  try {
    load_bundle(dir_);
    FAIL() << "expected BundleError";
  } catch (const BundleError& e) {
    EXPECT_EQ(e.exit_code(), 1);
  }
}

TEST_F(BundleTest, MissingManifestIsAnIoError) {
  try {
    load_bundle(dir_);
    FAIL() << "expected BundleError";
  } catch (const BundleError& e) {
    EXPECT_EQ(e.exit_code(), 2);
  }
}

TEST_F(BundleTest, StructuredDocument) {
  const auto doc = structured_document(head42_bundle(true));
  std::vector<std::string> keys;
  for (const auto& [k, _] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"format", "version", "sourceChecksum", "counts",
                                            "index", "taxonomy", "entries", "coverage"}));
  EXPECT_EQ(doc["entries"].size(), 30u);
  EXPECT_EQ(doc["entries"][0]["address"], "1.3.42:N:0:0:0");
  EXPECT_EQ(doc["entries"][3]["crossRef"]["head"], 37);
  EXPECT_EQ(doc["index"]["uniqueStrings"], 30);
  EXPECT_EQ(doc["counts"]["total"]["semicolonGroups"], 11);

  const auto bare = structured_document(head42_bundle(false));
  EXPECT_FALSE(bare.contains("coverage"));
  EXPECT_EQ(bare.dump(), structured_document(head42_bundle(false)).dump());
}

TEST(BuildTimestamp, HonoursSourceDateEpoch) {
  ::setenv("SOURCE_DATE_EPOCH", "0", 1);
  EXPECT_EQ(build_timestamp(), "1970-01-01T00:00:00Z");
  ::unsetenv("SOURCE_DATE_EPOCH");
}

}  // namespace
}  // namespace rogetkb
