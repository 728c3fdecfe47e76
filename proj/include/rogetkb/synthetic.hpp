#pragma once

// Random but well-formed thesaurus sources and lexicons, for property tests
// and benchmarks.

#include <cstdint>
#include <string>

namespace rogetkb::synthetic {

struct CorpusShape {
  int classes = 3;
  int sections_per_class = 2;
  int heads_per_section = 3;
  int max_paragraphs_per_head = 3;
  int max_groups_per_paragraph = 6;
  int max_entries_per_group = 5;
  int vocabulary = 400;  // smaller vocabularies produce more repeats
  double cross_ref_rate = 0.1;
};

/// Source text in the thesaurus grammar, including comments, blank lines,
/// groups split across lines, irregular spacing and mixed case.
std::string generate_source(std::uint64_t seed, const CorpusShape& shape = {});

/// Lexicon whose synsets draw lemmas from the same vocabulary as
/// generate_source, with random hypernym trees and antonym links.
std::string generate_lexicon(std::uint64_t seed, int synsets, const CorpusShape& shape = {});

/// The vocabulary word with the given id, e.g. "bakum" or "fe-lor tis".
std::string vocabulary_word(int id);

}  // namespace rogetkb::synthetic
