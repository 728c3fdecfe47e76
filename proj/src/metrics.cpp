#include "rogetkb/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "rogetkb/kernels.hpp"

namespace rogetkb {

int lca_level(const Address& a, const Address& b) {
  if (a.class_num != b.class_num) return 0;
  if (a.section_num != b.section_num) return 1;
  if (a.head_num != b.head_num) return 2;
  if (a.pos != b.pos) return 3;
  if (a.para != b.para) return 4;
  if (a.sg != b.sg) return 5;
  return kGroupDepth;
}

PathResult sg_distance(const ThesaurusKB& kb, const Address& a, const Address& b) {
  resolve_group(kb, a);
  resolve_group(kb, b);
  const int lca = lca_level(a, b);
  return PathResult{distance_for_lca(lca), lca, a, b};
}

std::optional<PathResult> word_distance(const ThesaurusKB& kb, const LexicalIndex& idx,
                                        std::string_view w1, std::string_view w2) {
  if (idx.kb_checksum() != kb.source_checksum()) {
    throw std::invalid_argument("index was not built from this knowledge base");
  }
  const auto& as = idx.lookup(w1);
  const auto& bs = idx.lookup(w2);
  if (as.empty() || bs.empty()) return std::nullopt;

  // Postings are sorted, so the first strict improvement found in row-major
  // order is already the lexicographically smallest witness pair.
  std::optional<PathResult> best;
  for (const auto& a : as) {
    for (const auto& b : bs) {
      const int lca = lca_level(a, b);
      const int d = distance_for_lca(lca);
      if (!best || d < best->distance) best = PathResult{d, lca, a, b};
      if (d == 0) return best;
    }
  }
  return best;
}

std::optional<double> similarity(const ThesaurusKB& kb, const LexicalIndex& idx,
                                 std::string_view w1, std::string_view w2) {
  auto path = word_distance(kb, idx, w1, w2);
  if (!path) return std::nullopt;
  return similarity_for_distance(path->distance);
}

std::vector<RankedPair> rank_pairs(const ThesaurusKB& kb, const LexicalIndex& idx,
                                   const std::vector<WordPair>& pairs) {
  auto paths = kernels::word_distances_omp(kb, idx, pairs);
  std::vector<RankedPair> ranked;
  ranked.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    RankedPair r{pairs[i], paths[i], std::nullopt};
    if (r.path) r.similarity = similarity_for_distance(r.path->distance);
    ranked.push_back(std::move(r));
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) {
    if (!x.path || !y.path) return x.path.has_value() && !y.path.has_value();
    return x.path->distance < y.path->distance;
  });
  return ranked;
}

}  // namespace rogetkb
