#include "rogetkb/lexnet.hpp"

#include <algorithm>

#include "rogetkb/normalize.hpp"

namespace rogetkb {

namespace {

constexpr std::array<std::string_view, kRelationCount> kRelationNames = {
    "synonym",   "antonym",   "hypernym",   "hyponym",   "coordinate",
    "meronym",   "holonym",   "entailment", "cause",     "similar",
    "attribute", "derivation", "pertainym", "also-see",  "participle"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
  s = trim(s);
  const auto gap = s.find_first_of(" \t");
  if (gap == std::string_view::npos) return {s, {}};
  return {s.substr(0, gap), trim(s.substr(gap))};
}

const std::vector<std::size_t> kNoSynsets;

}  // namespace

std::string_view to_string(RelationType rel) {
  return kRelationNames[static_cast<std::size_t>(rel)];
}

std::optional<RelationType> parse_relation(std::string_view name) {
  for (std::size_t i = 0; i < kRelationNames.size(); ++i) {
    if (kRelationNames[i] == name) return static_cast<RelationType>(i);
  }
  return std::nullopt;
}

RelationSet default_relations(PartOfSpeech pos) {
  using R = RelationType;
  switch (pos) {
    case PartOfSpeech::N:
      return {R::synonym, R::hypernym, R::hyponym, R::coordinate,
              R::meronym, R::holonym,  R::antonym};
    case PartOfSpeech::VB:
      return {R::synonym, R::hypernym, R::hyponym, R::entailment, R::cause, R::antonym};
    case PartOfSpeech::ADJ:
      return {R::synonym, R::similar, R::antonym, R::attribute};
    case PartOfSpeech::ADV:
      return {R::synonym, R::antonym};
    case PartOfSpeech::INT:
      return {R::synonym};
  }
  return {R::synonym};
}

bool Synset::contains(std::string_view normalized_lemma) const {
  return std::find(lemmas.begin(), lemmas.end(), normalized_lemma) != lemmas.end();
}

const Synset* SynsetResource::find(std::string_view id) const {
  auto ord = ordinal(id);
  return ord ? &synsets_[*ord] : nullptr;
}

std::optional<std::size_t> SynsetResource::ordinal(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& SynsetResource::synsets_with(
    std::string_view lemma) const {
  auto it = lemma_index_.find(lemma);
  return it == lemma_index_.end() ? kNoSynsets : it->second;
}

std::vector<std::size_t> SynsetResource::neighbours(std::size_t source,
                                                    RelationType type) const {
  if (type == RelationType::synonym) return {source};
  if (type == RelationType::hyponym) return hyponyms_[source];
  std::vector<std::size_t> out;
  for (const auto& [t, target] : out_[source]) {
    if (t == type) out.push_back(target);
  }
  return out;
}

// Two passes: synsets first, then edges, so REL lines may precede the SYN
// lines they mention.
struct ResourceLoader {
  struct PendingEdge {
    int line;
    RelationType type;
    std::string source, target;
  };

  LoadResult run(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      handle_line(line_no, trim(text.substr(start, end - start)));
      start = end + 1;
    }
    link();
    if (std::none_of(result.diagnostics.begin(), result.diagnostics.end(),
                     [](const auto& d) { return d.severity == Severity::error; })) {
      result.resource = std::move(res);
    }
    return std::move(result);
  }

  void error(int line, std::string message) {
    result.diagnostics.push_back({line, Severity::error, std::move(message)});
  }

  void handle_line(int line, std::string_view content) {
    if (content.empty() || content.starts_with("//")) return;
    auto [kind, rest] = split_word(content);
    if (kind == "SYN") {
      add_synset(line, rest);
    } else if (kind == "REL") {
      add_relation(line, rest);
    } else {
      error(line, "unrecognized record '" + std::string(kind) + "'");
    }
  }

  void add_synset(int line, std::string_view rest) {
    auto [id, after_id] = split_word(rest);
    auto [tag, body] = split_word(after_id);
    if (id.empty() || tag.empty() || body.empty()) {
      error(line, "SYN record needs <id> <pos> <lemmas>");
      return;
    }
    auto pos = parse_pos(tag);
    if (!pos) {
      error(line, "unknown part of speech '" + std::string(tag) + "'");
      return;
    }
    if (res.by_id_.count(std::string(id))) {
      error(line, "duplicate synset " + std::string(id));
      return;
    }
    Synset syn;
    syn.id = std::string(id);
    syn.pos = *pos;
    const auto bar = body.find('|');
    if (bar != std::string_view::npos) {
      auto gloss = trim(body.substr(bar + 1));
      if (!gloss.empty()) syn.gloss = std::string(gloss);
      body = body.substr(0, bar);
    }
    std::size_t start = 0;
    while (start <= body.size()) {
      auto end = body.find(';', start);
      auto lemma = normalize(body.substr(start, end - start));
      if (lemma.empty()) {
        error(line, "empty lemma in synset " + syn.id);
        return;
      }
      if (!syn.contains(lemma)) syn.lemmas.push_back(std::move(lemma));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    const std::size_t ord = res.synsets_.size();
    for (const auto& lemma : syn.lemmas) res.lemma_index_[lemma].push_back(ord);
    res.by_id_.emplace(syn.id, ord);
    res.synsets_.push_back(std::move(syn));
  }

  void add_relation(int line, std::string_view rest) {
    auto [name, after_name] = split_word(rest);
    auto [source, after_source] = split_word(after_name);
    auto [target, extra] = split_word(after_source);
    if (target.empty() || !extra.empty()) {
      error(line, "REL record needs <type> <srcId> <dstId>");
      return;
    }
    auto type = parse_relation(name);
    if (!type) {
      error(line, "unknown relation '" + std::string(name) + "'");
      return;
    }
    if (*type == RelationType::synonym || *type == RelationType::coordinate) {
      error(line, "relation '" + std::string(name) + "' is derived and cannot be stored");
      return;
    }
    pending.push_back({line, *type, std::string(source), std::string(target)});
  }

  void link() {
    res.out_.assign(res.synsets_.size(), {});
    res.hyponyms_.assign(res.synsets_.size(), {});
    std::set<Edge> seen;
    for (const auto& p : pending) {
      auto src = res.ordinal(p.source);
      auto dst = res.ordinal(p.target);
      if (!src) error(p.line, "unknown synset " + p.source);
      if (!dst) error(p.line, "unknown synset " + p.target);
      if (!src || !dst) continue;
      Edge e{*src, p.type, *dst};
      if (p.type == RelationType::hyponym) e = Edge{*dst, RelationType::hypernym, *src};
      if (!seen.insert(e).second) continue;
      res.edges_.push_back(e);
      res.out_[e.source].emplace_back(e.type, e.target);
      if (e.type == RelationType::hypernym) res.hyponyms_[e.target].push_back(e.source);
    }
  }

  SynsetResource res;
  LoadResult result;
  std::vector<PendingEdge> pending;
};

LoadResult load_resource(std::string_view text) { return ResourceLoader{}.run(text); }

std::set<std::string> MiniNet::strings() const {
  std::set<std::string> out;
  auto add = [&](const Synset* s) { out.insert(s->lemmas.begin(), s->lemmas.end()); };
  for (const auto& sense : senses) {
    add(sense.seed);
    for (const auto& [type, synsets] : sense.reached) {
      for (const Synset* s : synsets) add(s);
    }
  }
  return out;
}

MiniNet build_mini_net(const SynsetResource& res, std::string_view lemma,
                       PartOfSpeech pos, const RelationSet& relations) {
  MiniNet net;
  net.lemma = normalize(lemma);
  net.pos = pos;
  const auto& synsets = res.synsets();
  for (std::size_t seed : res.synsets_with(net.lemma)) {
    if (synsets[seed].pos != pos) continue;
    SenseNeighbourhood sense;
    sense.seed = &synsets[seed];
    for (RelationType rel : relations) {
      std::vector<std::size_t> reached;
      if (rel == RelationType::coordinate) {
        for (std::size_t parent : res.neighbours(seed, RelationType::hypernym)) {
          reached.push_back(parent);
          for (std::size_t sibling : res.neighbours(parent, RelationType::hyponym)) {
            reached.push_back(sibling);
          }
        }
      } else {
        reached = res.neighbours(seed, rel);
      }
      auto& out = sense.reached[rel];
      std::set<std::size_t> seen;
      for (std::size_t r : reached) {
        if (seen.insert(r).second) out.push_back(&synsets[r]);
      }
    }
    net.senses.push_back(std::move(sense));
  }
  return net;
}

std::set<std::string> all_lemmas(const SynsetResource& res) {
  std::set<std::string> out;
  for (const auto& [lemma, ids] : res.lemma_index()) out.insert(lemma);
  return out;
}

}  // namespace rogetkb
