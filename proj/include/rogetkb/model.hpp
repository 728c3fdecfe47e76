#pragma once

// Taxonomy data model: class -> section -> head -> POS group -> paragraph
// -> semicolon group -> entry. Every entry sits exactly seven edges below
// the root, every semicolon group six.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace rogetkb {

enum class PartOfSpeech : std::uint8_t { N, ADJ, VB, ADV, INT };

inline constexpr std::array<PartOfSpeech, 5> kAllPartsOfSpeech = {
    PartOfSpeech::N, PartOfSpeech::ADJ, PartOfSpeech::VB, PartOfSpeech::ADV,
    PartOfSpeech::INT};

std::string_view to_string(PartOfSpeech pos);
std::optional<PartOfSpeech> parse_pos(std::string_view tag);

struct CrossReference {
  int head_number = 0;
  std::string keyword;

  bool operator==(const CrossReference&) const = default;
};

struct Entry {
  std::string text;  // as written (tidied); use normalize() for identity
  std::optional<CrossReference> cross_ref;

  bool operator==(const Entry&) const = default;
};

struct SemicolonGroup {
  std::vector<Entry> entries;

  bool operator==(const SemicolonGroup&) const = default;
};

struct Paragraph {
  PartOfSpeech pos = PartOfSpeech::N;
  std::string keyword;  // normalized text of the first entry
  std::vector<SemicolonGroup> groups;

  bool operator==(const Paragraph&) const = default;
};

/// All paragraphs of one head sharing a part of speech.
struct PosGroup {
  PartOfSpeech pos = PartOfSpeech::N;
  std::vector<Paragraph> paragraphs;

  bool operator==(const PosGroup&) const = default;
};

struct Head {
  int number = 0;
  std::string name;
  std::vector<PosGroup> pos_groups;  // ascending PartOfSpeech order

  const PosGroup* group(PartOfSpeech pos) const;
  std::size_t paragraph_count() const;

  bool operator==(const Head&) const = default;
};

struct Section {
  int number = 0;
  std::string name;
  std::vector<Head> heads;

  bool operator==(const Section&) const = default;
};

struct RogetClass {
  int number = 0;
  std::string name;
  std::vector<Section> sections;

  bool operator==(const RogetClass&) const = default;
};

/// Coordinate of a node in the taxonomy. Components form a prefix: a head
/// address has class, section and head set and nothing below. An address
/// with `entry` unset and `sg` set names a semicolon group.
struct Address {
  int class_num = 0;
  std::optional<int> section_num;
  std::optional<int> head_num;
  std::optional<PartOfSpeech> pos;
  std::optional<int> para;
  std::optional<int> sg;
  std::optional<int> entry;

  static Address of_class(int class_num);
  static Address of_section(int class_num, int section_num);
  static Address of_head(int class_num, int section_num, int head_num);
  static Address of_paragraph(int class_num, int section_num, int head_num,
                              PartOfSpeech pos, int para);
  static Address of_group(int class_num, int section_num, int head_num,
                          PartOfSpeech pos, int para, int sg);

  Address with_entry(int entry_idx) const;
  Address group_address() const;      // drops the entry component
  Address paragraph_address() const;  // drops sg and entry

  /// Depth below the root: 1 for a class, ..., 6 for a semicolon group,
  /// 7 for an entry. 0 for an address with gaps in its prefix.
  int depth() const;

  bool is_group() const { return depth() == 6; }
  bool is_entry() const { return depth() == 7; }

  /// `class.section.head:POS:para:sg:entry`, truncated at the depth.
  std::string to_string() const;
  static std::optional<Address> parse(std::string_view text);

  auto operator<=>(const Address&) const = default;
  bool operator==(const Address&) const = default;
};

/// Level names used in AddressError, indexed by depth.
inline constexpr std::array<std::string_view, 8> kLevelNames = {
    "root",      "class",     "section",         "head",
    "POS group", "paragraph", "semicolon group", "entry"};

class AddressError : public std::runtime_error {
 public:
  AddressError(std::string_view level, const std::string& message);
  const std::string& level() const { return level_; }

 private:
  std::string level_;
};

using Node = std::variant<const RogetClass*, const Section*, const Head*,
                          const PosGroup*, const Paragraph*,
                          const SemicolonGroup*, const Entry*>;

struct Counts {
  std::size_t sections = 0;
  std::size_t heads = 0;
  std::size_t paragraphs = 0;
  std::size_t semicolon_groups = 0;
  std::size_t entry_occurrences = 0;

  Counts& operator+=(const Counts& o);
  bool operator==(const Counts&) const = default;
};

struct CountRecord {
  std::vector<std::pair<int, Counts>> per_class;  // ascending class number
  Counts total;
};

/// Immutable knowledge base. Classes are kept in ascending number, sections
/// in ascending number within a class. The checksum is the SHA-256 of the
/// canonical serialization, so it identifies the content, not the source.
class ThesaurusKB {
 public:
  ThesaurusKB();
  explicit ThesaurusKB(std::vector<RogetClass> classes);

  const std::vector<RogetClass>& classes() const { return classes_; }
  const std::string& source_checksum() const { return checksum_; }
  bool empty() const { return classes_.empty(); }

  const Head* head_by_number(int number) const;
  /// Head address for a head number, if present.
  std::optional<Address> head_address(int number) const;

  /// Structural equality; the checksum follows from the structure.
  bool operator==(const ThesaurusKB& o) const { return classes_ == o.classes_; }

 private:
  struct HeadSlot {
    std::size_t cls, sec, head;
  };
  std::vector<RogetClass> classes_;
  std::string checksum_;
  std::unordered_map<int, HeadSlot> heads_;
};

/// Returns the node named by `addr`. Throws AddressError naming the first
/// level that does not resolve.
Node resolve(const ThesaurusKB& kb, const Address& addr);

const SemicolonGroup& resolve_group(const ThesaurusKB& kb, const Address& addr);
const Paragraph& resolve_paragraph(const ThesaurusKB& kb, const Address& addr);
const Entry& resolve_entry(const ThesaurusKB& kb, const Address& addr);

std::optional<std::reference_wrapper<const Head>> head_by_number(
    const ThesaurusKB& kb, int number);

CountRecord count_nodes(const ThesaurusKB& kb);

// Traversal in taxonomy order, which is also ascending Address order.
void for_each_paragraph(
    const ThesaurusKB& kb,
    const std::function<void(const Address&, const Paragraph&)>& fn);
void for_each_group(
    const ThesaurusKB& kb,
    const std::function<void(const Address&, const SemicolonGroup&)>& fn);
void for_each_entry(
    const ThesaurusKB& kb,
    const std::function<void(const Address&, const Entry&)>& fn);

}  // namespace rogetkb
