#pragma once

// Edge-counting distance over the fixed-depth taxonomy. Semicolon groups sit
// at depth 6, so the path between two groups is 2 * (6 - lca) edges and the
// longest one, through the root, is 12. Entries of one group are 0 apart.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rogetkb/index.hpp"
#include "rogetkb/model.hpp"

namespace rogetkb {

inline constexpr int kGroupDepth = 6;
inline constexpr int kEntryDepth = 7;
inline constexpr int kMaxGroupDistance = 2 * kGroupDepth;

struct PathResult {
  int distance = 0;
  int lca_level = kGroupDepth;  // 0 root .. 6 semicolon group
  Address witness_a;
  Address witness_b;

  bool operator==(const PathResult&) const = default;
};

/// Depth of the lowest common ancestor of two group (or entry) addresses,
/// capped at the group level. Assumes both addresses are well-formed.
int lca_level(const Address& a, const Address& b);

inline int distance_for_lca(int lca) { return 2 * (kGroupDepth - lca); }

inline double similarity_for_distance(int distance) {
  return 1.0 - static_cast<double>(distance) / kMaxGroupDistance;
}

/// Throws AddressError unless both addresses resolve to semicolon groups.
PathResult sg_distance(const ThesaurusKB& kb, const Address& a, const Address& b);

/// Minimum group distance over every pair of occurrences of the two words.
/// Witnesses are the entry addresses of the minimizing pair; ties go to the
/// lexicographically smallest (a, b). Absent if either word is not indexed.
std::optional<PathResult> word_distance(const ThesaurusKB& kb, const LexicalIndex& idx,
                                        std::string_view w1, std::string_view w2);

/// 1 - distance / 12.
std::optional<double> similarity(const ThesaurusKB& kb, const LexicalIndex& idx,
                                 std::string_view w1, std::string_view w2);

using WordPair = std::pair<std::string, std::string>;

struct RankedPair {
  WordPair words;
  std::optional<PathResult> path;  // absent when either word is unindexed
  std::optional<double> similarity;
};

/// Stable ranking by ascending distance; unresolved pairs last.
std::vector<RankedPair> rank_pairs(const ThesaurusKB& kb, const LexicalIndex& idx,
                                   const std::vector<WordPair>& pairs);

}  // namespace rogetkb
