#pragma once

// Data-parallel kernels behind the statistics and ranking operations. Each
// has an OpenMP version used by the library and a serial reference kept
// for tests and the benchmark; both must return identical results.

#include <string>
#include <unordered_set>
#include <vector>

#include "rogetkb/aligner.hpp"
#include "rogetkb/metrics.hpp"

namespace rogetkb::kernels {

/// Raw per-head tallies in taxonomy order.
struct HeadTally {
  int class_num = 0;
  const Head* head = nullptr;
  std::size_t paragraphs = 0;
  std::size_t semicolon_groups = 0;
  std::size_t strings = 0;
  std::size_t common_strings = 0;
  std::size_t common_keywords = 0;
  bool name_common = false;

  bool operator==(const HeadTally&) const = default;
};

using StringHashSet = std::unordered_set<std::string>;

std::vector<HeadTally> head_tallies_serial(const ThesaurusKB& kb,
                                           const StringHashSet& common,
                                           HeadNameMode mode);
std::vector<HeadTally> head_tallies_omp(const ThesaurusKB& kb,
                                        const StringHashSet& common,
                                        HeadNameMode mode);

std::vector<std::optional<PathResult>> word_distances_serial(
    const ThesaurusKB& kb, const LexicalIndex& idx, const std::vector<WordPair>& pairs);
std::vector<std::optional<PathResult>> word_distances_omp(
    const ThesaurusKB& kb, const LexicalIndex& idx, const std::vector<WordPair>& pairs);

/// Row-major n x n matrix of group distances, groups in taxonomy order.
std::vector<int> group_distance_matrix_serial(const std::vector<Address>& groups);
std::vector<int> group_distance_matrix_omp(const std::vector<Address>& groups);

/// Addresses of every semicolon group in taxonomy order.
std::vector<Address> group_addresses(const ThesaurusKB& kb);

int max_threads();

}  // namespace rogetkb::kernels
