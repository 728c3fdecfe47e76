#include "rogetkb/synthetic.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace rogetkb::synthetic {

namespace {

constexpr const char* kSyllables[] = {"ba", "ke", "lor", "mi", "nu", "pa", "ri", "so",
                                      "tis", "ve", "wan", "zo", "fe", "gu", "hal", "dri"};
constexpr const char* kPos[] = {"N", "ADJ", "VB", "ADV", "INT"};

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string syllables(int id, int count) {
  std::string out;
  for (int i = 0; i < count; ++i) {
    out += kSyllables[id % 16];
    id /= 16;
  }
  return out;
}

// Same word written differently: case and spacing vary, identity does not.
std::string spelled(Rng& rng, const std::string& word) {
  std::string out;
  for (char c : word) {
    if (c == ' ' && chance(rng, 0.3)) {
      out += "  ";
    } else if (c >= 'a' && c <= 'z' && chance(rng, 0.05)) {
      out.push_back(static_cast<char>(c - 'a' + 'A'));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string vocabulary_word(int id) {
  std::string word = syllables(id, 2 + id % 2);
  if (id % 7 == 3) word = syllables(id / 7, 1) + "-" + word;
  if (id % 5 == 1) word += " " + syllables(id / 5 + 3, 2);
  return word;
}

std::string generate_source(std::uint64_t seed, const CorpusShape& shape) {
  Rng rng(seed);
  std::string out = "// generated corpus, seed " + std::to_string(seed) + "\n";
  const int total_heads = shape.classes * shape.sections_per_class * shape.heads_per_section;

  // Classes are emitted in a shuffled order; heads are numbered so that they
  // increase in canonical (sorted) order.
  std::vector<int> class_order(static_cast<std::size_t>(shape.classes));
  for (int c = 0; c < shape.classes; ++c) class_order[static_cast<std::size_t>(c)] = c + 1;
  std::shuffle(class_order.begin(), class_order.end(), rng);

  for (int cls : class_order) {
    out += "#CLASS " + std::to_string(cls) + " Class " + syllables(cls, 2) + "\n";
    for (int s = 1; s <= shape.sections_per_class; ++s) {
      if (chance(rng, 0.3)) out += "\n";
      out += "#SECTION " + std::to_string(s) + " " + syllables(cls * 31 + s, 3) + "\n";
      for (int h = 0; h < shape.heads_per_section; ++h) {
        const int number =
            ((cls - 1) * shape.sections_per_class + (s - 1)) * shape.heads_per_section + h + 1;
        out += "#HEAD " + std::to_string(number) + " " + syllables(number, 2);
        if (chance(rng, 0.3)) out += ": " + syllables(number + 97, 3);
        out += "\n";
        const int paragraphs = uniform(rng, 0, shape.max_paragraphs_per_head);
        for (int p = 0; p < paragraphs; ++p) {
          out += "#PARA " + std::string(kPos[uniform(rng, 0, 4)]) + "\n";
          if (chance(rng, 0.1)) out += "// comment inside a paragraph\n";
          const int groups = uniform(rng, 1, shape.max_groups_per_paragraph);
          for (int g = 0; g < groups; ++g) {
            const int entries = uniform(rng, 1, shape.max_entries_per_group);
            for (int e = 0; e < entries; ++e) {
              const std::string word = vocabulary_word(uniform(rng, 0, shape.vocabulary - 1));
              const bool xref = chance(rng, shape.cross_ref_rate);
              std::string token;
              if (xref && chance(rng, 0.4)) {
                token = "@" + std::to_string(uniform(rng, 1, total_heads + 5)) + " " + word;
              } else {
                token = spelled(rng, word);
                if (xref) {
                  token += " @" + std::to_string(uniform(rng, 1, total_heads + 5)) + " " +
                           vocabulary_word(uniform(rng, 0, shape.vocabulary - 1));
                }
              }
              out += token;
              if (e + 1 < entries) out += chance(rng, 0.15) ? ",\n" : ", ";
            }
            out += chance(rng, 0.6) ? ";\n" : "; ";
          }
          if (out.back() != '\n') out += "\n";
        }
      }
    }
  }
  return out;
}

std::string generate_lexicon(std::uint64_t seed, int synsets, const CorpusShape& shape) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::string out = "// generated lexicon, seed " + std::to_string(seed) + "\n";
  // Lemmas come from a vocabulary slightly larger than the corpus's, so
  // some lemmas never occur in the thesaurus.
  const int vocab = shape.vocabulary + shape.vocabulary / 4;
  for (int i = 0; i < synsets; ++i) {
    const std::string pos = kPos[uniform(rng, 0, 3)];
    out += "SYN s" + std::to_string(i) + " " + pos + " ";
    const int lemmas = uniform(rng, 1, 4);
    for (int l = 0; l < lemmas; ++l) {
      if (l) out += ";";
      out += vocabulary_word(uniform(rng, 0, vocab - 1));
    }
    if (chance(rng, 0.5)) out += " | gloss " + std::to_string(i);
    out += "\n";
  }
  for (int i = 1; i < synsets; ++i) {
    if (chance(rng, 0.8)) {
      out += "REL hypernym s" + std::to_string(i) + " s" +
             std::to_string(uniform(rng, 0, i - 1)) + "\n";
    }
    if (chance(rng, 0.05)) {
      out += "REL antonym s" + std::to_string(i) + " s" +
             std::to_string(uniform(rng, 0, synsets - 1)) + "\n";
    }
  }
  return out;
}

}  // namespace rogetkb::synthetic
