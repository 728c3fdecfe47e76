#include "rogetkb/kernels.hpp"

#include <omp.h>

#include <stdexcept>

#include "rogetkb/normalize.hpp"

namespace rogetkb::kernels {

namespace {

struct HeadRef {
  int class_num;
  const Head* head;
};

std::vector<HeadRef> flatten_heads(const ThesaurusKB& kb) {
  std::vector<HeadRef> heads;
  for (const auto& cls : kb.classes()) {
    for (const auto& sec : cls.sections) {
      for (const auto& head : sec.heads) heads.push_back({cls.number, &head});
    }
  }
  return heads;
}

HeadTally tally(const HeadRef& ref, const StringHashSet& common, HeadNameMode mode) {
  HeadTally t;
  t.class_num = ref.class_num;
  t.head = ref.head;
  t.name_common = common.count(head_match_key(ref.head->name, mode)) > 0;
  for (const auto& group : ref.head->pos_groups) {
    for (const auto& para : group.paragraphs) {
      ++t.paragraphs;
      if (common.count(para.keyword)) ++t.common_keywords;
      t.semicolon_groups += para.groups.size();
      for (const auto& sg : para.groups) {
        for (const auto& entry : sg.entries) {
          ++t.strings;
          if (common.count(normalize(entry.text))) ++t.common_strings;
        }
      }
    }
  }
  return t;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<HeadTally> head_tallies_serial(const ThesaurusKB& kb,
                                           const StringHashSet& common,
                                           HeadNameMode mode) {
  const auto heads = flatten_heads(kb);
  std::vector<HeadTally> out;
  out.reserve(heads.size());
  for (const auto& ref : heads) out.push_back(tally(ref, common, mode));
  return out;
}

std::vector<HeadTally> head_tallies_omp(const ThesaurusKB& kb,
                                        const StringHashSet& common,
                                        HeadNameMode mode) {
  const auto heads = flatten_heads(kb);
  std::vector<HeadTally> out(heads.size());
  const auto n = static_cast<std::ptrdiff_t>(heads.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = tally(heads[static_cast<std::size_t>(i)], common, mode);
  }
  return out;
}

std::vector<std::optional<PathResult>> word_distances_serial(
    const ThesaurusKB& kb, const LexicalIndex& idx, const std::vector<WordPair>& pairs) {
  std::vector<std::optional<PathResult>> out;
  out.reserve(pairs.size());
  for (const auto& [w1, w2] : pairs) out.push_back(word_distance(kb, idx, w1, w2));
  return out;
}

std::vector<std::optional<PathResult>> word_distances_omp(
    const ThesaurusKB& kb, const LexicalIndex& idx, const std::vector<WordPair>& pairs) {
  // word_distance only throws on this mismatch; keep it out of the region.
  if (idx.kb_checksum() != kb.source_checksum()) {
    throw std::invalid_argument("index was not built from this knowledge base");
  }
  std::vector<std::optional<PathResult>> out(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& [w1, w2] = pairs[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = word_distance(kb, idx, w1, w2);
  }
  return out;
}

std::vector<int> group_distance_matrix_serial(const std::vector<Address>& groups) {
  const std::size_t n = groups.size();
  std::vector<int> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = distance_for_lca(lca_level(groups[i], groups[j]));
    }
  }
  return m;
}

std::vector<int> group_distance_matrix_omp(const std::vector<Address>& groups) {
  const std::size_t n = groups.size();
  std::vector<int> m(n * n);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const auto i = static_cast<std::size_t>(r);
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = distance_for_lca(lca_level(groups[i], groups[j]));
    }
  }
  return m;
}

std::vector<Address> group_addresses(const ThesaurusKB& kb) {
  std::vector<Address> out;
  for_each_group(kb, [&](const Address& a, const SemicolonGroup&) { out.push_back(a); });
  return out;
}

}  // namespace rogetkb::kernels
