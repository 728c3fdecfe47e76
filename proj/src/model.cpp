#include "rogetkb/model.hpp"

#include <algorithm>
#include <charconv>

#include "rogetkb/checksum.hpp"
#include "rogetkb/parser.hpp"

namespace rogetkb {

std::string_view to_string(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::N:
      return "N";
    case PartOfSpeech::ADJ:
      return "ADJ";
    case PartOfSpeech::VB:
      return "VB";
    case PartOfSpeech::ADV:
      return "ADV";
    case PartOfSpeech::INT:
      return "INT";
  }
  return "?";
}

std::optional<PartOfSpeech> parse_pos(std::string_view tag) {
  for (auto pos : kAllPartsOfSpeech) {
    if (to_string(pos) == tag) return pos;
  }
  return std::nullopt;
}

const PosGroup* Head::group(PartOfSpeech pos) const {
  for (const auto& g : pos_groups) {
    if (g.pos == pos) return &g;
  }
  return nullptr;
}

std::size_t Head::paragraph_count() const {
  std::size_t n = 0;
  for (const auto& g : pos_groups) n += g.paragraphs.size();
  return n;
}

// ---------------------------------------------------------------------------
// Address

Address Address::of_class(int class_num) {
  Address a;
  a.class_num = class_num;
  return a;
}

Address Address::of_section(int class_num, int section_num) {
  Address a = of_class(class_num);
  a.section_num = section_num;
  return a;
}

Address Address::of_head(int class_num, int section_num, int head_num) {
  Address a = of_section(class_num, section_num);
  a.head_num = head_num;
  return a;
}

Address Address::of_paragraph(int class_num, int section_num, int head_num,
                              PartOfSpeech pos, int para) {
  Address a = of_head(class_num, section_num, head_num);
  a.pos = pos;
  a.para = para;
  return a;
}

Address Address::of_group(int class_num, int section_num, int head_num,
                          PartOfSpeech pos, int para, int sg) {
  Address a = of_paragraph(class_num, section_num, head_num, pos, para);
  a.sg = sg;
  return a;
}

Address Address::with_entry(int entry_idx) const {
  Address a = *this;
  a.entry = entry_idx;
  return a;
}

Address Address::group_address() const {
  Address a = *this;
  a.entry.reset();
  return a;
}

Address Address::paragraph_address() const {
  Address a = *this;
  a.sg.reset();
  a.entry.reset();
  return a;
}

int Address::depth() const {
  const bool present[] = {true,           section_num.has_value(),
                          head_num.has_value(), pos.has_value(),
                          para.has_value(),     sg.has_value(),
                          entry.has_value()};
  int d = 0;
  while (d < 7 && present[d]) ++d;
  for (int i = d; i < 7; ++i) {
    if (present[i]) return 0;
  }
  return d;
}

std::string Address::to_string() const {
  std::string out = std::to_string(class_num);
  if (section_num) out += "." + std::to_string(*section_num);
  if (head_num) out += "." + std::to_string(*head_num);
  if (pos) out += ":" + std::string(rogetkb::to_string(*pos));
  if (para) out += ":" + std::to_string(*para);
  if (sg) out += ":" + std::to_string(*sg);
  if (entry) out += ":" + std::to_string(*entry);
  return out;
}

namespace {

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::optional<Address> Address::parse(std::string_view text) {
  auto fields = split(text, ':');
  auto numbers = split(fields[0], '.');
  if (numbers.size() > 3 || fields.size() > 5) return std::nullopt;
  if (fields.size() > 1 && numbers.size() != 3) return std::nullopt;

  Address a;
  auto cls = to_int(numbers[0]);
  if (!cls) return std::nullopt;
  a.class_num = *cls;
  if (numbers.size() > 1) {
    a.section_num = to_int(numbers[1]);
    if (!a.section_num) return std::nullopt;
  }
  if (numbers.size() > 2) {
    a.head_num = to_int(numbers[2]);
    if (!a.head_num) return std::nullopt;
  }
  if (fields.size() > 1) {
    a.pos = parse_pos(fields[1]);
    if (!a.pos) return std::nullopt;
  }
  std::optional<int>* tail[] = {&a.para, &a.sg, &a.entry};
  for (std::size_t i = 2; i < fields.size(); ++i) {
    *tail[i - 2] = to_int(fields[i]);
    if (!*tail[i - 2]) return std::nullopt;
  }
  return a;
}

AddressError::AddressError(std::string_view level, const std::string& message)
    : std::runtime_error(message), level_(level) {}

Counts& Counts::operator+=(const Counts& o) {
  sections += o.sections;
  heads += o.heads;
  paragraphs += o.paragraphs;
  semicolon_groups += o.semicolon_groups;
  entry_occurrences += o.entry_occurrences;
  return *this;
}

// ---------------------------------------------------------------------------
// ThesaurusKB

ThesaurusKB::ThesaurusKB() : ThesaurusKB(std::vector<RogetClass>{}) {}

ThesaurusKB::ThesaurusKB(std::vector<RogetClass> classes)
    : classes_(std::move(classes)) {
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& a, const auto& b) { return a.number < b.number; });
  for (auto& cls : classes_) {
    std::sort(cls.sections.begin(), cls.sections.end(),
              [](const auto& a, const auto& b) { return a.number < b.number; });
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& sections = classes_[c].sections;
    for (std::size_t s = 0; s < sections.size(); ++s) {
      for (std::size_t h = 0; h < sections[s].heads.size(); ++h) {
        heads_.emplace(sections[s].heads[h].number, HeadSlot{c, s, h});
      }
    }
  }
  checksum_ = sha256_hex(serialize_classes(classes_));
}

const Head* ThesaurusKB::head_by_number(int number) const {
  auto it = heads_.find(number);
  if (it == heads_.end()) return nullptr;
  const auto& slot = it->second;
  return &classes_[slot.cls].sections[slot.sec].heads[slot.head];
}

std::optional<Address> ThesaurusKB::head_address(int number) const {
  auto it = heads_.find(number);
  if (it == heads_.end()) return std::nullopt;
  const auto& slot = it->second;
  const auto& cls = classes_[slot.cls];
  return Address::of_head(cls.number, cls.sections[slot.sec].number, number);
}

std::optional<std::reference_wrapper<const Head>> head_by_number(
    const ThesaurusKB& kb, int number) {
  if (const Head* h = kb.head_by_number(number)) return std::cref(*h);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// resolve

namespace {

[[noreturn]] void fail(int depth, const Address& addr, const std::string& what) {
  throw AddressError(kLevelNames[depth], "address " + addr.to_string() + ": no " +
                                             std::string(kLevelNames[depth]) +
                                             " " + what);
}

template <typename T>
const T* at_index(const std::vector<T>& v, int idx) {
  if (idx < 0 || static_cast<std::size_t>(idx) >= v.size()) return nullptr;
  return &v[static_cast<std::size_t>(idx)];
}

}  // namespace

Node resolve(const ThesaurusKB& kb, const Address& addr) {
  const int depth = addr.depth();
  if (depth == 0) {
    throw AddressError("root", "address " + addr.to_string() + " is not a prefix");
  }

  const RogetClass* cls = nullptr;
  for (const auto& c : kb.classes()) {
    if (c.number == addr.class_num) cls = &c;
  }
  if (!cls) fail(1, addr, std::to_string(addr.class_num));
  if (depth == 1) return cls;

  const Section* sec = nullptr;
  for (const auto& s : cls->sections) {
    if (s.number == *addr.section_num) sec = &s;
  }
  if (!sec) fail(2, addr, std::to_string(*addr.section_num));
  if (depth == 2) return sec;

  const Head* head = nullptr;
  for (const auto& h : sec->heads) {
    if (h.number == *addr.head_num) head = &h;
  }
  if (!head) fail(3, addr, std::to_string(*addr.head_num));
  if (depth == 3) return head;

  const PosGroup* group = head->group(*addr.pos);
  if (!group) fail(4, addr, std::string(to_string(*addr.pos)));
  if (depth == 4) return group;

  const Paragraph* para = at_index(group->paragraphs, *addr.para);
  if (!para) fail(5, addr, std::to_string(*addr.para));
  if (depth == 5) return para;

  const SemicolonGroup* sg = at_index(para->groups, *addr.sg);
  if (!sg) fail(6, addr, std::to_string(*addr.sg));
  if (depth == 6) return sg;

  const Entry* entry = at_index(sg->entries, *addr.entry);
  if (!entry) fail(7, addr, std::to_string(*addr.entry));
  return entry;
}

namespace {

template <typename T>
const T& resolve_as(const ThesaurusKB& kb, const Address& addr, int depth) {
  if (addr.depth() != depth) {
    throw AddressError(kLevelNames[depth], "address " + addr.to_string() +
                                               " does not name a " +
                                               std::string(kLevelNames[depth]));
  }
  return *std::get<const T*>(resolve(kb, addr));
}

}  // namespace

const SemicolonGroup& resolve_group(const ThesaurusKB& kb, const Address& addr) {
  return resolve_as<SemicolonGroup>(kb, addr, 6);
}

const Paragraph& resolve_paragraph(const ThesaurusKB& kb, const Address& addr) {
  return resolve_as<Paragraph>(kb, addr, 5);
}

const Entry& resolve_entry(const ThesaurusKB& kb, const Address& addr) {
  return resolve_as<Entry>(kb, addr, 7);
}

// ---------------------------------------------------------------------------
// traversal

void for_each_paragraph(
    const ThesaurusKB& kb,
    const std::function<void(const Address&, const Paragraph&)>& fn) {
  for (const auto& cls : kb.classes()) {
    for (const auto& sec : cls.sections) {
      for (const auto& head : sec.heads) {
        for (const auto& group : head.pos_groups) {
          for (std::size_t p = 0; p < group.paragraphs.size(); ++p) {
            fn(Address::of_paragraph(cls.number, sec.number, head.number,
                                     group.pos, static_cast<int>(p)),
               group.paragraphs[p]);
          }
        }
      }
    }
  }
}

void for_each_group(
    const ThesaurusKB& kb,
    const std::function<void(const Address&, const SemicolonGroup&)>& fn) {
  for_each_paragraph(kb, [&](const Address& pa, const Paragraph& para) {
    for (std::size_t g = 0; g < para.groups.size(); ++g) {
      Address a = pa;
      a.sg = static_cast<int>(g);
      fn(a, para.groups[g]);
    }
  });
}

void for_each_entry(
    const ThesaurusKB& kb,
    const std::function<void(const Address&, const Entry&)>& fn) {
  for_each_group(kb, [&](const Address& ga, const SemicolonGroup& sg) {
    for (std::size_t e = 0; e < sg.entries.size(); ++e) {
      fn(ga.with_entry(static_cast<int>(e)), sg.entries[e]);
    }
  });
}

CountRecord count_nodes(const ThesaurusKB& kb) {
  CountRecord record;
  for (const auto& cls : kb.classes()) {
    Counts c;
    c.sections = cls.sections.size();
    for (const auto& sec : cls.sections) {
      c.heads += sec.heads.size();
      for (const auto& head : sec.heads) {
        for (const auto& group : head.pos_groups) {
          c.paragraphs += group.paragraphs.size();
          for (const auto& para : group.paragraphs) {
            c.semicolon_groups += para.groups.size();
            for (const auto& sg : para.groups) c.entry_occurrences += sg.entries.size();
          }
        }
      }
    }
    record.per_class.emplace_back(cls.number, c);
    record.total += c;
  }
  return record;
}

}  // namespace rogetkb
