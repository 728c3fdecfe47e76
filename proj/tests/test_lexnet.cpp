#include <gtest/gtest.h>

#include "rogetkb/lexnet.hpp"
#include "rogetkb/synthetic.hpp"
#include "support/oracles.hpp"

namespace rogetkb {
namespace {

SynsetResource decrement_fixture() {
  auto loaded = load_resource(testing::read_fixture("decrement.lex"));
  EXPECT_TRUE(loaded.ok());
  return std::move(*loaded.resource);
}

std::set<std::set<std::string>> lemma_sets(const std::vector<const Synset*>& synsets) {
  std::set<std::set<std::string>> out;
  for (const auto* s : synsets) out.emplace(s->lemmas.begin(), s->lemmas.end());
  return out;
}

bool has_error(const LoadResult& r, const std::string& fragment) {
  for (const auto& d : r.diagnostics) {
    if (d.message.find(fragment) != std::string::npos) return true;
  }
  return false;
}

TEST(Relations, SpellingRoundTrips) {
  for (auto rel : kAllRelations) EXPECT_EQ(parse_relation(to_string(rel)), rel);
  EXPECT_EQ(to_string(RelationType::also_see), "also-see");
  EXPECT_FALSE(parse_relation("cousin"));
}

TEST(LoadResource, FixtureShape) {
  const auto res = decrement_fixture();
  EXPECT_EQ(res.size(), 31u);
  EXPECT_EQ(res.synsets_with("decrement").size(), 2u);
  EXPECT_EQ(res.synsets_with("decrease").size(), 2u);
  ASSERT_TRUE(res.find("n_leak"));
  EXPECT_EQ(res.find("n_leak")->gloss, "the discharge of a fluid from a container");
  for (const auto& e : res.edges()) EXPECT_NE(e.type, RelationType::hyponym);
}

TEST(LoadResource, HyponymLinesBecomeHypernymEdges) {
  const auto res = decrement_fixture();
  const auto sense1 = *res.ordinal("n_decrement_1");
  const auto drop = *res.ordinal("n_drop");
  EXPECT_EQ(res.neighbours(drop, RelationType::hypernym), std::vector<std::size_t>{sense1});
  const auto hypos = res.neighbours(sense1, RelationType::hyponym);
  EXPECT_EQ(hypos, (std::vector<std::size_t>{drop, *res.ordinal("n_shrinkage")}));
}

TEST(LoadResource, UnknownSynset) {
  auto r = load_resource("SYN s1 N alpha\nREL hypernym s1 sX\n");
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_error(r, "unknown synset sX"));
  EXPECT_EQ(r.diagnostics.at(0).line, 2);
}

TEST(LoadResource, DuplicateAndMalformed) {
  EXPECT_TRUE(has_error(load_resource("SYN s1 N a\nSYN s1 N b\n"), "duplicate synset s1"));
  EXPECT_FALSE(load_resource("SYN s1 Q a\n").ok());
  EXPECT_FALSE(load_resource("SYN s1 N a;;b\n").ok());
  EXPECT_FALSE(load_resource("SYN s1 N a\nSYN s2 N b\nREL cousin s1 s2\n").ok());
  EXPECT_FALSE(load_resource("SYN s1 N a\nSYN s2 N b\nREL synonym s1 s2\n").ok());
  EXPECT_FALSE(load_resource("SYN s1 N a\nSYN s2 N b\nREL coordinate s1 s2\n").ok());
  EXPECT_FALSE(load_resource("GARBAGE\n").ok());
}

TEST(LoadResource, EmptyDocument) {
  auto r = load_resource("");
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.resource->empty());
  EXPECT_TRUE(all_lemmas(*r.resource).empty());
}

TEST(AllLemmas, NormalizedUnion) {
  auto r = load_resource("SYN a N Natural  Process;action\nSYN b VB act;Action\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(all_lemmas(*r.resource),
            (std::set<std::string>{"act", "action", "natural process"}));
}

TEST(MiniNet, DecrementStructure) {
  const auto res = decrement_fixture();
  const auto net =
      build_mini_net(res, "decrement", PartOfSpeech::N, default_relations(PartOfSpeech::N));
  ASSERT_EQ(net.senses.size(), 2u);
  const auto& s1 = net.senses[0];
  const auto& s2 = net.senses[1];
  EXPECT_EQ(s1.seed->id, "n_decrement_1");
  EXPECT_EQ(s2.seed->id, "n_decrement_2");

  using Set = std::set<std::set<std::string>>;
  EXPECT_EQ(lemma_sets(s1.reached.at(RelationType::hyponym)),
            (Set{{"drop", "fall"}, {"shrinkage"}}));
  EXPECT_EQ(lemma_sets(s2.reached.at(RelationType::hyponym)),
            (Set{{"wastage"},
                 {"decay", "decline"},
                 {"slippage"},
                 {"decline", "diminution"},
                 {"desensitization", "desensitisation"},
                 {"narrowing"}}));
  EXPECT_EQ(lemma_sets(s1.reached.at(RelationType::hypernym)), (Set{{"amount"}}));
  EXPECT_EQ(lemma_sets(s1.reached.at(RelationType::coordinate)),
            (Set{{"amount"},
                 {"quantity"},
                 {"increase", "increment"},
                 {"decrease", "decrement"},
                 {"insufficiency", "inadequacy", "deficiency"},
                 {"number", "figure"}}));
  const auto coords2 = lemma_sets(s2.reached.at(RelationType::coordinate));
  EXPECT_EQ(coords2.size(), 15u);  // {process} + 14 children
  EXPECT_TRUE(coords2.count({"process"}));
  EXPECT_TRUE(coords2.count({"increase", "increment", "growth"}));
}

TEST(MiniNet, CoordinatesFollowEdgeOrder) {
  const auto res = decrement_fixture();
  const auto net = build_mini_net(res, "decrement", PartOfSpeech::N,
                                  {RelationType::coordinate});
  std::vector<std::string> ids;
  for (const auto* s : net.senses[0].reached.at(RelationType::coordinate)) ids.push_back(s->id);
  EXPECT_EQ(ids, (std::vector<std::string>{"n_amount", "n_quantity", "n_increase_1",
                                           "n_decrement_1", "n_insufficiency", "n_number"}));
}

TEST(MiniNet, UnknownLemmaHasNoSenses) {
  const auto res = decrement_fixture();
  const auto net =
      build_mini_net(res, "zzzz", PartOfSpeech::N, default_relations(PartOfSpeech::N));
  EXPECT_TRUE(net.senses.empty());
  EXPECT_TRUE(net.strings().empty());
}

TEST(MiniNet, PosFiltersSeeds) {
  const auto res = decrement_fixture();
  EXPECT_TRUE(build_mini_net(res, "decrement", PartOfSpeech::VB,
                             default_relations(PartOfSpeech::VB))
                  .senses.empty());
}

TEST(MiniNet, EveryLemmaHasASenseAndContainsItself) {
  auto loaded = load_resource(synthetic::generate_lexicon(5, 300));
  ASSERT_TRUE(loaded.ok());
  const auto& res = *loaded.resource;
  for (const auto& syn : res.synsets()) {
    for (const auto& lemma : syn.lemmas) {
      const auto net = build_mini_net(res, lemma, syn.pos, default_relations(syn.pos));
      EXPECT_GE(net.senses.size(), 1u) << lemma;
      EXPECT_TRUE(net.strings().count(lemma)) << lemma;
    }
  }
}

TEST(MiniNet, RelationSubsetShrinksNet) {
  const auto res = decrement_fixture();
  const auto full =
      build_mini_net(res, "decrement", PartOfSpeech::N, default_relations(PartOfSpeech::N));
  const auto only_hypo =
      build_mini_net(res, "decrement", PartOfSpeech::N, {RelationType::hyponym});
  const auto a = full.strings();
  for (const auto& s : only_hypo.strings()) EXPECT_TRUE(a.count(s)) << s;
  EXPECT_FALSE(only_hypo.strings().count("amount"));
}

}  // namespace
}  // namespace rogetkb
