#pragma once

// WordNet-style synset resource in a line-oriented interchange format:
//
//   SYN <id> <pos> <lemma;lemma;...> [| gloss]
//   REL <type> <srcId> <dstId>
//
// Hyponym edges are stored as the inverse hypernym edge. Synonym and
// coordinate neighbourhoods are derived, never read from REL lines.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rogetkb/model.hpp"
#include "rogetkb/parser.hpp"

namespace rogetkb {

enum class RelationType : std::uint8_t {
  synonym,
  antonym,
  hypernym,
  hyponym,
  coordinate,
  meronym,
  holonym,
  entailment,
  cause,
  similar,
  attribute,
  derivation,
  pertainym,
  also_see,
  participle,
};

inline constexpr std::size_t kRelationCount = 15;

inline constexpr std::array<RelationType, kRelationCount> kAllRelations = {
    RelationType::synonym,    RelationType::antonym,   RelationType::hypernym,
    RelationType::hyponym,    RelationType::coordinate, RelationType::meronym,
    RelationType::holonym,    RelationType::entailment, RelationType::cause,
    RelationType::similar,    RelationType::attribute, RelationType::derivation,
    RelationType::pertainym,  RelationType::also_see,  RelationType::participle};

/// Interchange spelling: "synonym", ..., "also-see", "participle".
std::string_view to_string(RelationType rel);
std::optional<RelationType> parse_relation(std::string_view name);

using RelationSet = std::set<RelationType>;

/// Relations followed when building a mini-net for a part of speech.
RelationSet default_relations(PartOfSpeech pos);

struct Synset {
  std::string id;
  PartOfSpeech pos = PartOfSpeech::N;
  std::vector<std::string> lemmas;  // normalized, unique, file order
  std::optional<std::string> gloss;

  bool contains(std::string_view normalized_lemma) const;
};

struct Edge {
  std::size_t source;  // synset ordinal
  RelationType type;
  std::size_t target;

  auto operator<=>(const Edge&) const = default;
};

class SynsetResource {
 public:
  SynsetResource() = default;

  std::size_t size() const { return synsets_.size(); }
  bool empty() const { return synsets_.empty(); }

  const std::vector<Synset>& synsets() const { return synsets_; }
  const Synset* find(std::string_view id) const;
  std::optional<std::size_t> ordinal(std::string_view id) const;

  /// Stored edges in file order; never contains hyponym edges.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Synset ordinals containing `lemma` (normalized), in file order.
  const std::vector<std::size_t>& synsets_with(std::string_view lemma) const;

  /// Targets one edge away from `source` via `type`. For hyponym these are
  /// the sources of hypernym edges pointing at `source`.
  std::vector<std::size_t> neighbours(std::size_t source, RelationType type) const;

  const std::map<std::string, std::vector<std::size_t>, std::less<>>& lemma_index()
      const {
    return lemma_index_;
  }

 private:
  friend struct ResourceLoader;

  std::vector<Synset> synsets_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::vector<Edge> edges_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> lemma_index_;
  // adjacency per synset: (type, target) in edge order, plus hypernym inverse
  std::vector<std::vector<std::pair<RelationType, std::size_t>>> out_;
  std::vector<std::vector<std::size_t>> hyponyms_;
};

struct LoadResult {
  std::optional<SynsetResource> resource;  // present iff no errors
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return resource.has_value(); }
};

LoadResult load_resource(std::string_view text);

struct SenseNeighbourhood {
  const Synset* seed = nullptr;
  std::map<RelationType, std::vector<const Synset*>> reached;
};

struct MiniNet {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::N;
  std::vector<SenseNeighbourhood> senses;

  /// Every lemma of every seed and reached synset.
  std::set<std::string> strings() const;
};

/// One-hop neighbourhood of `lemma`. Coordinate terms are each direct
/// hypernym followed by all of that hypernym's direct hyponyms (the seed
/// itself included). A lemma absent from the resource yields zero senses.
MiniNet build_mini_net(const SynsetResource& res, std::string_view lemma,
                       PartOfSpeech pos, const RelationSet& relations);

std::set<std::string> all_lemmas(const SynsetResource& res);

}  // namespace rogetkb
