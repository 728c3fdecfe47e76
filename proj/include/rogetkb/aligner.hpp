#pragma once

// Overlap statistics between the thesaurus and a synset resource, and
// relation labelling of thesaurus paragraphs by mini-net matching.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rogetkb/index.hpp"
#include "rogetkb/lexnet.hpp"
#include "rogetkb/model.hpp"

namespace rogetkb {

using StringSet = std::set<std::string>;

/// Head names either compared whole ("Decrement: thing deducted") or with
/// the gloss after the first ':' removed ("decrement").
enum class HeadNameMode { full_name, strip_gloss };

std::string head_match_key(const std::string& head_name, HeadNameMode mode);

/// uniqueStrings(idx) intersected with allLemmas(res).
StringSet common_strings(const LexicalIndex& idx, const SynsetResource& res);

struct CoverageRow {
  int class_num = 0;  // 0 on the totals row
  std::size_t sections = 0;
  std::size_t heads = 0;
  std::size_t paragraphs = 0;
  std::size_t semicolon_groups = 0;
  std::size_t strings = 0;  // entry occurrences
  std::size_t common_heads = 0;
  std::size_t common_keywords = 0;
  std::size_t common_strings = 0;
  double pct_common_heads = 0.0;
  double pct_common_keywords = 0.0;
  double pct_common_strings = 0.0;
};

struct ClassCoverage {
  std::vector<CoverageRow> rows;  // ascending class number
  CoverageRow totals;
};

/// Per-class counts plus the fraction of heads, keywords and entry
/// occurrences found in `common`. Totals aggregate numerators and
/// denominators, so their percentages are occurrence-weighted.
ClassCoverage class_coverage(const ThesaurusKB& kb, const LexicalIndex& idx,
                             const StringSet& common,
                             HeadNameMode mode = HeadNameMode::full_name);

struct HeadCoverage {
  int class_num = 0;
  int head_num = 0;
  std::string head_name;
  bool head_name_in_lex = false;
  std::size_t paragraphs = 0;
  std::size_t semicolon_groups = 0;
  std::size_t strings = 0;
  std::size_t common_strings = 0;
  std::size_t common_keywords = 0;
  double pct_common_strings = 0.0;
  double pct_common_keywords = 0.0;
};

/// One row per head, sorted by descending pct_common_strings, then
/// ascending head number.
std::vector<HeadCoverage> head_coverage(const ThesaurusKB& kb, const LexicalIndex& idx,
                                        const SynsetResource& res,
                                        const StringSet& common,
                                        HeadNameMode mode = HeadNameMode::full_name);

/// Fraction of entry occurrences per part of speech; all zero for an
/// empty KB.
std::map<PartOfSpeech, double> pos_distribution(const ThesaurusKB& kb);

// ---------------------------------------------------------------------------
// Relation labelling

/// synonym > antonym > hypernym > hyponym > meronym > holonym > coordinate
/// > the remaining relations in declaration order.
std::vector<RelationType> default_precedence();

struct LabelConfig {
  std::vector<RelationType> precedence = default_precedence();
  std::optional<RelationSet> relations;  // default_relations(pos) if unset
  bool match_cross_refs = true;
};

struct Evidence {
  std::string matched;
  std::string synset_id;
  RelationType relation = RelationType::synonym;

  auto operator<=>(const Evidence&) const = default;
};

struct LabelledGroup {
  int sg_index = 0;
  SemicolonGroup group;
  std::optional<RelationType> label;  // nullopt: no label
  std::set<Evidence> evidence;
};

struct LabelledParagraph {
  Address source;  // paragraph address
  PartOfSpeech pos = PartOfSpeech::N;
  std::string keyword;
  bool keyword_known = false;  // keyword has at least one sense
  std::vector<LabelledGroup> labelled;  // paragraph order
};

/// "Hyponym", "Also-see", ...; "No label" for nullopt.
std::string label_name(std::optional<RelationType> label);

/// Labels every semicolon group of a paragraph with the highest-precedence
/// relation linking it to the keyword's mini-net (all senses unioned). A
/// group matches a relation when one of its strings is a lemma of a synset
/// reached through that relation. The keyword entry itself is left out of
/// its own group's strings; a group holding only the keyword is matched
/// against the keyword's seed synsets.
LabelledParagraph label_paragraph(const ThesaurusKB& kb, const SynsetResource& res,
                                  const Address& target, const LabelConfig& cfg = {});

/// Normalized entry texts of a paragraph, optionally with cross-reference
/// keywords.
StringSet paragraph_strings(const Paragraph& para, bool include_cross_refs = true);

/// |paragraph_strings ∩ strings of every mini-net synset|
std::size_t mini_net_overlap_count(const StringSet& paragraph_strings,
                                   const MiniNet& net);

/// Rearranged paragraph: "N. keyword", then one "<Label>: sg; sg" line per
/// label in precedence order, "No label" last. With `evidence`, each
/// labelled group is followed by an indented evidence line.
std::string render_labelled(const LabelledParagraph& lp, const LabelConfig& cfg = {},
                            bool evidence = false);

}  // namespace rogetkb
