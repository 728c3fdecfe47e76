#include "rogetkb/aligner.hpp"

#include <algorithm>
#include <stdexcept>

#include "rogetkb/kernels.hpp"
#include "rogetkb/normalize.hpp"
#include "rogetkb/parser.hpp"

namespace rogetkb {

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

kernels::StringHashSet to_hash_set(const StringSet& s) {
  return kernels::StringHashSet(s.begin(), s.end());
}

void check_index(const ThesaurusKB& kb, const LexicalIndex& idx) {
  if (idx.kb_checksum() != kb.source_checksum()) {
    throw std::invalid_argument("index was not built from this knowledge base");
  }
}

void finish_row(CoverageRow& row) {
  row.pct_common_heads = ratio(row.common_heads, row.heads);
  row.pct_common_keywords = ratio(row.common_keywords, row.paragraphs);
  row.pct_common_strings = ratio(row.common_strings, row.strings);
}

}  // namespace

std::string head_match_key(const std::string& head_name, HeadNameMode mode) {
  return mode == HeadNameMode::strip_gloss ? strip_gloss(head_name) : normalize(head_name);
}

StringSet common_strings(const LexicalIndex& idx, const SynsetResource& res) {
  StringSet out;
  for (const auto& [key, addrs] : idx.entries()) {
    if (!res.synsets_with(key).empty()) out.insert(out.end(), key);
  }
  return out;
}

ClassCoverage class_coverage(const ThesaurusKB& kb, const LexicalIndex& idx,
                             const StringSet& common, HeadNameMode mode) {
  check_index(kb, idx);
  const auto tallies = kernels::head_tallies_omp(kb, to_hash_set(common), mode);

  ClassCoverage out;
  std::size_t t = 0;
  for (const auto& cls : kb.classes()) {
    CoverageRow row;
    row.class_num = cls.number;
    row.sections = cls.sections.size();
    for (; t < tallies.size() && tallies[t].class_num == cls.number; ++t) {
      const auto& h = tallies[t];
      ++row.heads;
      row.paragraphs += h.paragraphs;
      row.semicolon_groups += h.semicolon_groups;
      row.strings += h.strings;
      row.common_heads += h.name_common ? 1 : 0;
      row.common_keywords += h.common_keywords;
      row.common_strings += h.common_strings;
    }
    finish_row(row);

    auto& tot = out.totals;
    tot.sections += row.sections;
    tot.heads += row.heads;
    tot.paragraphs += row.paragraphs;
    tot.semicolon_groups += row.semicolon_groups;
    tot.strings += row.strings;
    tot.common_heads += row.common_heads;
    tot.common_keywords += row.common_keywords;
    tot.common_strings += row.common_strings;
    out.rows.push_back(row);
  }
  finish_row(out.totals);
  return out;
}

std::vector<HeadCoverage> head_coverage(const ThesaurusKB& kb, const LexicalIndex& idx,
                                        const SynsetResource& res,
                                        const StringSet& common, HeadNameMode mode) {
  check_index(kb, idx);
  const auto tallies = kernels::head_tallies_omp(kb, to_hash_set(common), mode);
  std::vector<HeadCoverage> rows;
  rows.reserve(tallies.size());
  for (const auto& t : tallies) {
    HeadCoverage row;
    row.class_num = t.class_num;
    row.head_num = t.head->number;
    row.head_name = t.head->name;
    row.head_name_in_lex = !res.synsets_with(head_match_key(t.head->name, mode)).empty();
    row.paragraphs = t.paragraphs;
    row.semicolon_groups = t.semicolon_groups;
    row.strings = t.strings;
    row.common_strings = t.common_strings;
    row.common_keywords = t.common_keywords;
    row.pct_common_strings = ratio(t.common_strings, t.strings);
    row.pct_common_keywords = ratio(t.common_keywords, t.paragraphs);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.pct_common_strings != b.pct_common_strings) {
      return a.pct_common_strings > b.pct_common_strings;
    }
    return a.head_num < b.head_num;
  });
  return rows;
}

std::map<PartOfSpeech, double> pos_distribution(const ThesaurusKB& kb) {
  std::map<PartOfSpeech, std::size_t> counts;
  std::size_t total = 0;
  for_each_paragraph(kb, [&](const Address& a, const Paragraph& para) {
    for (const auto& sg : para.groups) {
      counts[*a.pos] += sg.entries.size();
      total += sg.entries.size();
    }
  });
  std::map<PartOfSpeech, double> out;
  for (auto pos : kAllPartsOfSpeech) out[pos] = ratio(counts[pos], total);
  return out;
}

// ---------------------------------------------------------------------------
// labelling

std::vector<RelationType> default_precedence() {
  using R = RelationType;
  std::vector<RelationType> order = {R::synonym, R::antonym, R::hypernym, R::hyponym,
                                     R::meronym, R::holonym, R::coordinate};
  for (auto rel : kAllRelations) {
    if (std::find(order.begin(), order.end(), rel) == order.end()) order.push_back(rel);
  }
  return order;
}

std::string label_name(std::optional<RelationType> label) {
  if (!label) return "No label";
  std::string name(to_string(*label));
  name[0] = static_cast<char>(name[0] - 'a' + 'A');
  return name;
}

StringSet paragraph_strings(const Paragraph& para, bool include_cross_refs) {
  StringSet out;
  for (const auto& sg : para.groups) {
    for (const auto& e : sg.entries) {
      out.insert(normalize(e.text));
      if (include_cross_refs && e.cross_ref) out.insert(normalize(e.cross_ref->keyword));
    }
  }
  return out;
}

std::size_t mini_net_overlap_count(const StringSet& paragraph_strings,
                                   const MiniNet& net) {
  const auto net_strings = net.strings();
  return static_cast<std::size_t>(std::count_if(
      paragraph_strings.begin(), paragraph_strings.end(),
      [&](const auto& s) { return net_strings.count(s) > 0; }));
}

namespace {

struct Reach {
  std::string synset_id;
  RelationType relation;
};

using ReachMap = std::map<std::string, std::vector<Reach>, std::less<>>;

void add_synset(ReachMap& reach, const Synset& syn, RelationType rel) {
  for (const auto& lemma : syn.lemmas) reach[lemma].push_back({syn.id, rel});
}

std::vector<std::string> member_strings(const SemicolonGroup& sg, bool cross_refs,
                                        bool skip_first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < sg.entries.size(); ++i) {
    const auto& e = sg.entries[i];
    if (!(skip_first && i == 0)) out.push_back(normalize(e.text));
    if (cross_refs && e.cross_ref) out.push_back(normalize(e.cross_ref->keyword));
  }
  return out;
}

std::optional<RelationType> pick_label(const std::set<Evidence>& evidence,
                                       const std::vector<RelationType>& precedence) {
  std::optional<RelationType> best;
  std::size_t best_rank = precedence.size();
  for (const auto& ev : evidence) {
    auto it = std::find(precedence.begin(), precedence.end(), ev.relation);
    auto rank = static_cast<std::size_t>(it - precedence.begin());
    if (!best || rank < best_rank) {
      best = ev.relation;
      best_rank = rank;
    }
  }
  return best;
}

}  // namespace

LabelledParagraph label_paragraph(const ThesaurusKB& kb, const SynsetResource& res,
                                  const Address& target, const LabelConfig& cfg) {
  const Paragraph& para = resolve_paragraph(kb, target);
  const RelationSet relations = cfg.relations.value_or(default_relations(para.pos));
  const MiniNet net = build_mini_net(res, para.keyword, para.pos, relations);

  ReachMap reach;
  ReachMap seeds;
  for (const auto& sense : net.senses) {
    add_synset(seeds, *sense.seed, RelationType::synonym);
    for (const auto& [rel, synsets] : sense.reached) {
      for (const Synset* s : synsets) add_synset(reach, *s, rel);
    }
  }

  LabelledParagraph out;
  out.source = target;
  out.pos = para.pos;
  out.keyword = para.keyword;
  out.keyword_known = !net.senses.empty();

  for (std::size_t g = 0; g < para.groups.size(); ++g) {
    const auto& sg = para.groups[g];
    LabelledGroup lg;
    lg.sg_index = static_cast<int>(g);
    lg.group = sg;

    auto members = member_strings(sg, cfg.match_cross_refs, g == 0);
    const ReachMap* source = &reach;
    if (g == 0 && members.empty()) {
      members.push_back(para.keyword);
      source = &seeds;
    }
    for (const auto& m : members) {
      auto it = source->find(m);
      if (it == source->end()) continue;
      for (const auto& r : it->second) lg.evidence.insert({m, r.synset_id, r.relation});
    }
    lg.label = pick_label(lg.evidence, cfg.precedence);
    out.labelled.push_back(std::move(lg));
  }
  return out;
}

namespace {

std::string render_group(const LabelledGroup& lg) {
  const auto& entries = lg.group.entries;
  // The keyword heads the rearranged paragraph, so its own group drops it.
  const std::size_t first = (lg.sg_index == 0 && entries.size() > 1) ? 1 : 0;
  std::string out;
  for (std::size_t i = first; i < entries.size(); ++i) {
    if (i > first) out += ", ";
    out += render_entry(entries[i]);
  }
  return out;
}

}  // namespace

std::string render_labelled(const LabelledParagraph& lp, const LabelConfig& cfg,
                            bool evidence) {
  std::string out = std::string(to_string(lp.pos)) + ". " + lp.keyword + "\n";

  std::vector<std::optional<RelationType>> order(cfg.precedence.begin(),
                                                 cfg.precedence.end());
  for (auto rel : kAllRelations) {
    if (std::find(order.begin(), order.end(), rel) == order.end()) order.push_back(rel);
  }
  order.push_back(std::nullopt);
  for (const auto& label : order) {
    std::vector<const LabelledGroup*> groups;
    for (const auto& lg : lp.labelled) {
      if (lg.label == label) groups.push_back(&lg);
    }
    if (groups.empty()) continue;
    out += label_name(label) + ": ";
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (i) out += "; ";
      out += render_group(*groups[i]);
    }
    out += "\n";
    if (!evidence || !label) continue;
    for (const auto* lg : groups) {
      out += "  sg " + std::to_string(lg->sg_index) + ":";
      bool first = true;
      for (const auto& ev : lg->evidence) {
        out += first ? " " : ", ";
        out += ev.matched + " " + ev.synset_id + " " + std::string(to_string(ev.relation));
        first = false;
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace rogetkb
