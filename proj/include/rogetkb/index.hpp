#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rogetkb/model.hpp"

namespace rogetkb {

/// Every normalized word or phrase of a KB mapped to the addresses of all
/// its occurrences. Phrases are indexed whole.
class LexicalIndex {
 public:
  LexicalIndex() = default;
  explicit LexicalIndex(const ThesaurusKB& kb);

  /// Entry addresses in taxonomy order; empty on a miss.
  const std::vector<Address>& lookup(std::string_view query) const;

  std::set<std::string> unique_strings() const;
  std::size_t unique_count() const { return entries_.size(); }
  std::size_t total_occurrences() const { return total_; }
  const std::string& kb_checksum() const { return kb_checksum_; }

  const std::map<std::string, std::vector<Address>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<Address>, std::less<>> entries_;
  std::size_t total_ = 0;
  std::string kb_checksum_;
};

inline LexicalIndex build_index(const ThesaurusKB& kb) { return LexicalIndex(kb); }

}  // namespace rogetkb
