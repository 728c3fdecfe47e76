#include <gtest/gtest.h>

#include <random>

#include "rogetkb/kernels.hpp"
#include "rogetkb/parser.hpp"
#include "rogetkb/synthetic.hpp"

namespace rogetkb {
namespace {

ThesaurusKB generated(std::uint64_t seed) {
  synthetic::CorpusShape shape;
  shape.classes = 6;
  shape.heads_per_section = 8;
  auto parsed = parse_source(synthetic::generate_source(seed, shape));
  EXPECT_TRUE(parsed.ok());
  return std::move(*parsed.kb);
}

TEST(Kernels, HeadTalliesAgree) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto kb = generated(seed);
    const auto idx = build_index(kb);
    kernels::StringHashSet common;
    std::size_t i = 0;
    for (const auto& s : idx.unique_strings()) {
      if (i++ % 3 == 0) common.insert(s);
    }
    for (auto mode : {HeadNameMode::full_name, HeadNameMode::strip_gloss}) {
      EXPECT_EQ(kernels::head_tallies_omp(kb, common, mode),
                kernels::head_tallies_serial(kb, common, mode));
    }
  }
}

TEST(Kernels, WordDistancesAgree) {
  const auto kb = generated(3);
  const auto idx = build_index(kb);
  std::vector<std::string> words;
  for (const auto& [w, _] : idx.entries()) words.push_back(w);
  words.push_back("not a word");

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::vector<WordPair> pairs;
  for (int i = 0; i < 2000; ++i) pairs.emplace_back(words[pick(rng)], words[pick(rng)]);

  const auto serial = kernels::word_distances_serial(kb, idx, pairs);
  const auto omp = kernels::word_distances_omp(kb, idx, pairs);
  ASSERT_EQ(serial.size(), pairs.size());
  EXPECT_EQ(omp, serial);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(serial[i], word_distance(kb, idx, pairs[i].first, pairs[i].second));
  }
}

TEST(Kernels, WordDistancesRejectForeignIndexBeforeRunning) {
  const auto kb = generated(1);
  const auto idx = build_index(generated(2));
  EXPECT_THROW(kernels::word_distances_omp(kb, idx, {{"a", "b"}}), std::invalid_argument);
}

TEST(Kernels, GroupDistanceMatrixAgrees) {
  const auto kb = generated(4);
  const auto groups = kernels::group_addresses(kb);
  ASSERT_GT(groups.size(), 50u);
  const auto serial = kernels::group_distance_matrix_serial(groups);
  EXPECT_EQ(kernels::group_distance_matrix_omp(groups), serial);
  const std::size_t n = groups.size();
  for (std::size_t i = 0; i < n; i += 13) {
    for (std::size_t j = 0; j < n; j += 7) {
      EXPECT_EQ(serial[i * n + j], sg_distance(kb, groups[i], groups[j]).distance);
    }
  }
}

TEST(Kernels, EmptyInputs) {
  const ThesaurusKB kb;
  EXPECT_TRUE(kernels::head_tallies_omp(kb, {}, HeadNameMode::full_name).empty());
  EXPECT_TRUE(kernels::group_addresses(kb).empty());
  EXPECT_TRUE(kernels::group_distance_matrix_omp({}).empty());
  EXPECT_GE(kernels::max_threads(), 1);
}

}  // namespace
}  // namespace rogetkb
