#include "rogetkb/index.hpp"

#include "rogetkb/normalize.hpp"

namespace rogetkb {

namespace {
const std::vector<Address> kMiss;
}

LexicalIndex::LexicalIndex(const ThesaurusKB& kb) : kb_checksum_(kb.source_checksum()) {
  // Traversal order is ascending Address order, so postings stay sorted.
  for_each_entry(kb, [&](const Address& addr, const Entry& entry) {
    entries_[normalize(entry.text)].push_back(addr);
    ++total_;
  });
}

const std::vector<Address>& LexicalIndex::lookup(std::string_view query) const {
  auto it = entries_.find(normalize(query));
  return it == entries_.end() ? kMiss : it->second;
}

std::set<std::string> LexicalIndex::unique_strings() const {
  std::set<std::string> out;
  for (const auto& [key, addrs] : entries_) out.insert(out.end(), key);
  return out;
}

}  // namespace rogetkb
