#include <gtest/gtest.h>

#include "rogetkb/model.hpp"
#include "rogetkb/normalize.hpp"
#include "rogetkb/parser.hpp"
#include "rogetkb/synthetic.hpp"
#include "support/oracles.hpp"

namespace rogetkb {
namespace {

ThesaurusKB load(const std::string& fixture) {
  auto parsed = parse_source(testing::read_fixture(fixture));
  EXPECT_TRUE(parsed.ok());
  return std::move(*parsed.kb);
}

TEST(Normalize, LowercasesTrimsAndCollapses) {
  EXPECT_EQ(normalize("  Rake-Off  "), "rake-off");
  EXPECT_EQ(normalize("natural\t  Process"), "natural process");
  EXPECT_EQ(normalize("o'er"), "o'er");
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("   "), "");
}

TEST(Normalize, StripGloss) {
  EXPECT_EQ(strip_gloss("Decrement: thing deducted"), "decrement");
  EXPECT_EQ(strip_gloss("Class"), "class");
  EXPECT_EQ(strip_gloss("Fitfulness: irregularity of recurrence"), "fitfulness");
}

TEST(PartOfSpeech, ExactlyFiveTags) {
  for (auto pos : kAllPartsOfSpeech) EXPECT_EQ(parse_pos(to_string(pos)), pos);
  EXPECT_FALSE(parse_pos("n"));
  EXPECT_FALSE(parse_pos("ADVERB"));
  EXPECT_FALSE(parse_pos(""));
}

TEST(Address, StringFormRoundTrips) {
  const auto a = Address::of_group(1, 3, 42, PartOfSpeech::N, 0, 4).with_entry(2);
  EXPECT_EQ(a.to_string(), "1.3.42:N:0:4:2");
  EXPECT_EQ(Address::parse("1.3.42:N:0:4:2"), a);
  EXPECT_EQ(Address::parse("1.3.42"), Address::of_head(1, 3, 42));
  EXPECT_EQ(Address::parse("1"), Address::of_class(1));
  EXPECT_FALSE(Address::parse("1.3:N"));
  EXPECT_FALSE(Address::parse("1.3.42:Q:0"));
  EXPECT_FALSE(Address::parse("x"));
}

TEST(Address, DepthAndOrdering) {
  const auto sg = Address::of_group(1, 3, 42, PartOfSpeech::N, 0, 4);
  EXPECT_EQ(Address::of_class(1).depth(), 1);
  EXPECT_EQ(Address::of_head(1, 3, 42).depth(), 3);
  EXPECT_EQ(sg.depth(), 6);
  EXPECT_EQ(sg.with_entry(0).depth(), 7);
  Address gap = sg;
  gap.para.reset();
  EXPECT_EQ(gap.depth(), 0);

  // parents sort before children; entries before later groups
  EXPECT_LT(sg, sg.with_entry(0));
  EXPECT_LT(sg.with_entry(9), Address::of_group(1, 3, 42, PartOfSpeech::N, 0, 5));
  EXPECT_LT(Address::of_group(1, 3, 42, PartOfSpeech::N, 9, 0),
            Address::of_group(1, 3, 42, PartOfSpeech::ADJ, 0, 0));
}

TEST(Resolve, Head42) {
  const auto kb = load("head42.roget");
  const auto node = resolve(kb, Address::of_head(1, 3, 42));
  ASSERT_TRUE(std::holds_alternative<const Head*>(node));
  EXPECT_EQ(std::get<const Head*>(node)->name, "Decrement: thing deducted");
}

TEST(Resolve, ClassOne) {
  const auto kb = load("head42.roget");
  const auto node = resolve(kb, Address::of_class(1));
  ASSERT_TRUE(std::holds_alternative<const RogetClass*>(node));
  EXPECT_EQ(std::get<const RogetClass*>(node)->name, "Abstract Relations");
}

TEST(Resolve, ReportsFirstFailingLevel) {
  const auto kb = load("head42.roget");
  auto level_of = [&](const Address& a) {
    try {
      resolve(kb, a);
    } catch (const AddressError& e) {
      return e.level();
    }
    return std::string("resolved");
  };
  EXPECT_EQ(level_of(Address::of_group(1, 3, 42, PartOfSpeech::N, 0, 11)), "semicolon group");
  EXPECT_EQ(level_of(Address::of_group(1, 3, 42, PartOfSpeech::N, 0, 10)), "resolved");
  EXPECT_EQ(level_of(Address::of_class(2)), "class");
  EXPECT_EQ(level_of(Address::of_section(1, 9)), "section");
  EXPECT_EQ(level_of(Address::of_head(1, 3, 43)), "head");
  EXPECT_EQ(level_of(Address::of_paragraph(1, 3, 42, PartOfSpeech::VB, 0)), "POS group");
  EXPECT_EQ(level_of(Address::of_paragraph(1, 3, 42, PartOfSpeech::N, 1)), "paragraph");
  EXPECT_EQ(level_of(Address::of_group(1, 3, 42, PartOfSpeech::N, 0, 0).with_entry(4)),
            "entry");
  EXPECT_EQ(level_of(Address::of_group(1, 3, 42, PartOfSpeech::N, 0, -1)), "semicolon group");
}

TEST(HeadByNumber, PresentAbsentEmpty) {
  const auto kb = load("head42.roget");
  ASSERT_TRUE(head_by_number(kb, 42));
  EXPECT_EQ(head_by_number(kb, 42)->get().number, 42);
  EXPECT_FALSE(head_by_number(kb, 9999));
  EXPECT_FALSE(head_by_number(ThesaurusKB{}, 1));
}

TEST(CountNodes, Head42MatchesRecount) {
  const std::string text = testing::read_fixture("head42.roget");
  const auto oracle = testing::recount_source(text);
  const auto counts = count_nodes(load("head42.roget"));
  ASSERT_EQ(counts.per_class.size(), 1u);
  EXPECT_EQ(counts.total.sections, 1u);
  EXPECT_EQ(counts.total.heads, 1u);
  EXPECT_EQ(counts.total.paragraphs, 1u);
  // 4 groups labelled Hyponym + 7 unlabelled in the printed rearrangement
  EXPECT_EQ(counts.total.semicolon_groups, 11u);
  EXPECT_EQ(oracle.groups, 11u);
  EXPECT_EQ(counts.total.entry_occurrences, 30u);
  EXPECT_EQ(oracle.entries, 30u);
}

TEST(CountNodes, EmptyKb) {
  const auto counts = count_nodes(ThesaurusKB{});
  EXPECT_TRUE(counts.per_class.empty());
  EXPECT_EQ(counts.total, Counts{});
}

// Every traversed address resolves back to the node it was emitted for,
// and entries/groups sit at depth 7/6 in an explicitly built tree.
TEST(Traversal, RoundTripAndFixedDepthOnGeneratedCorpora) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto parsed = parse_source(synthetic::generate_source(seed));
    ASSERT_TRUE(parsed.ok()) << seed;
    const auto& kb = *parsed.kb;
    testing::TaxonomyGraph graph(kb);
    const auto from_root = graph.bfs(0);

    for_each_entry(kb, [&](const Address& a, const Entry& e) {
      EXPECT_EQ(std::get<const Entry*>(resolve(kb, a)), &e);
      EXPECT_EQ(a.depth(), 7);
      EXPECT_EQ(from_root[static_cast<std::size_t>(graph.entry_node(a))], 7);
    });
    for_each_group(kb, [&](const Address& a, const SemicolonGroup& g) {
      EXPECT_EQ(std::get<const SemicolonGroup*>(resolve(kb, a)), &g);
      EXPECT_EQ(from_root[static_cast<std::size_t>(graph.group_node(a))], 6);
    });
    for_each_paragraph(kb, [&](const Address& a, const Paragraph& p) {
      EXPECT_EQ(std::get<const Paragraph*>(resolve(kb, a)), &p);
      EXPECT_EQ(p.keyword, normalize(p.groups.front().entries.front().text));
    });
  }
}

TEST(Traversal, OrderIsAscendingAddressOrder) {
  auto parsed = parse_source(synthetic::generate_source(99));
  ASSERT_TRUE(parsed.ok());
  std::vector<Address> seen;
  for_each_entry(*parsed.kb, [&](const Address& a, const Entry&) { seen.push_back(a); });
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
}

}  // namespace
}  // namespace rogetkb
