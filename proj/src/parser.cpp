#include "rogetkb/parser.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "rogetkb/normalize.hpp"

namespace rogetkb {

std::string_view to_string(Severity severity) {
  return severity == Severity::error ? "error" : "warning";
}

std::string format_diagnostic(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::string(to_string(d.severity)) +
         ": " + d.message;
}

std::size_t ParseResult::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [](const auto& d) { return d.severity == Severity::error; }));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_positive(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value <= 0) {
    return std::nullopt;
  }
  return value;
}

// Splits "<word> <rest>" on the first run of blanks.
std::pair<std::string_view, std::string_view> split_word(std::string_view s) {
  s = trim(s);
  const auto gap = s.find_first_of(" \t");
  if (gap == std::string_view::npos) return {s, {}};
  return {s.substr(0, gap), trim(s.substr(gap))};
}

class SourceParser {
 public:
  ParseResult run(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      handle_line(line_no, trim(text.substr(start, end - start)));
      start = end + 1;
    }
    close_paragraph();
    return finish();
  }

 private:
  struct ClassSlot {
    RogetClass cls;
    int line = 0;
    std::vector<int> section_lines;
  };

  void error(int line, std::string message) {
    result_.diagnostics.push_back({line, Severity::error, std::move(message)});
  }
  void warning(int line, std::string message) {
    result_.diagnostics.push_back({line, Severity::warning, std::move(message)});
  }

  void handle_line(int line, std::string_view content) {
    if (content.empty() || content.starts_with("//")) return;
    if (content.front() == '#') {
      close_paragraph();
      handle_directive(line, content);
    } else {
      handle_entries(line, content);
    }
  }

  void handle_directive(int line, std::string_view content) {
    auto [keyword, rest] = split_word(content);
    if (keyword == "#CLASS") {
      open_class(line, rest);
    } else if (keyword == "#SECTION") {
      open_section(line, rest);
    } else if (keyword == "#HEAD") {
      open_head(line, rest);
    } else if (keyword == "#PARA") {
      open_paragraph(line, rest);
    } else {
      error(line, "unknown directive '" + std::string(keyword) + "'");
      skipping_ = true;
    }
  }

  // Parses "<n> <name>", reporting problems against `what`.
  std::optional<std::pair<int, std::string>> numbered_name(
      int line, std::string_view rest, std::string_view what) {
    auto [num, name] = split_word(rest);
    auto n = parse_positive(num);
    if (!n) {
      error(line, std::string(what) + " number must be a positive integer, got '" +
                      std::string(num) + "'");
      return std::nullopt;
    }
    if (name.empty()) {
      error(line, std::string(what) + " " + std::to_string(*n) + " has no name");
      return std::nullopt;
    }
    return std::make_pair(*n, tidy(name));
  }

  void reset_below_class() {
    section_ = nullptr;
    head_ = nullptr;
    in_paragraph_ = false;
    skipping_ = false;
  }

  void open_class(int line, std::string_view rest) {
    reset_below_class();
    cls_ = nullptr;
    auto parsed = numbered_name(line, rest, "class");
    if (!parsed) return;
    auto [n, name] = *parsed;
    if (n > 8) {
      error(line, "class number must be in 1..8, got " + std::to_string(n));
      return;
    }
    for (const auto& slot : classes_) {
      if (slot.cls.number == n) {
        error(line, "duplicate class " + std::to_string(n) + " (first at line " +
                        std::to_string(slot.line) + ")");
        return;
      }
    }
    classes_.push_back({RogetClass{n, name, {}}, line, {}});
    cls_ = &classes_.back();
  }

  void open_section(int line, std::string_view rest) {
    reset_below_class();
    if (!cls_) {
      error(line, "section outside class");
      return;
    }
    auto parsed = numbered_name(line, rest, "section");
    if (!parsed) return;
    auto [n, name] = *parsed;
    for (const auto& s : cls_->cls.sections) {
      if (s.number == n) {
        error(line, "duplicate section " + std::to_string(n) + " in class " +
                        std::to_string(cls_->cls.number));
        return;
      }
    }
    cls_->cls.sections.push_back(Section{n, name, {}});
    cls_->section_lines.push_back(line);
    section_ = &cls_->cls.sections.back();
  }

  void open_head(int line, std::string_view rest) {
    head_ = nullptr;
    in_paragraph_ = false;
    skipping_ = false;
    if (!section_) {
      error(line, "head outside section");
      return;
    }
    auto parsed = numbered_name(line, rest, "head");
    if (!parsed) return;
    auto [n, name] = *parsed;
    if (auto it = head_lines_.find(n); it != head_lines_.end()) {
      error(line, "duplicate head " + std::to_string(n) + " (first at line " +
                      std::to_string(it->second) + ")");
      return;
    }
    if (!section_->heads.empty() && section_->heads.back().number >= n) {
      error(line, "head " + std::to_string(n) + " does not follow head " +
                      std::to_string(section_->heads.back().number));
      return;
    }
    head_lines_.emplace(n, line);
    section_->heads.push_back(Head{n, name, {}});
    head_ = &section_->heads.back();
  }

  void open_paragraph(int line, std::string_view rest) {
    in_paragraph_ = false;
    skipping_ = true;
    if (!head_) {
      error(line, "paragraph outside head");
      return;
    }
    auto tag = trim(rest);
    auto pos = parse_pos(tag);
    if (!pos) {
      error(line, "unknown part of speech '" + std::string(tag) + "'");
      return;
    }
    skipping_ = false;
    in_paragraph_ = true;
    paragraph_ = Paragraph{*pos, {}, {}};
    paragraph_line_ = line;
  }

  void handle_entries(int line, std::string_view content) {
    if (skipping_) return;
    if (!in_paragraph_) {
      error(line, "semicolon group outside paragraph");
      return;
    }
    std::size_t start = 0;
    while (start <= content.size()) {
      const auto end = content.find_first_of(",;", start);
      const auto token = trim(content.substr(start, end - start));
      const bool at_eol = end == std::string_view::npos;
      if (!token.empty()) {
        add_entry(line, token);
      } else if (!at_eol) {
        error(line, "empty entry");
      }
      if (at_eol) break;
      if (content[end] == ';') close_group();
      start = end + 1;
    }
  }

  void add_entry(int line, std::string_view token) {
    const auto at = token.find('@');
    Entry entry;
    entry.text = tidy(token.substr(0, at));
    if (at != std::string_view::npos) {
      auto ref_token = token.substr(at);
      if (ref_token.find('@', 1) != std::string_view::npos) {
        error(line, "more than one cross-reference in '" + std::string(token) + "'");
        return;
      }
      try {
        entry.cross_ref = parse_cross_ref(ref_token);
      } catch (const CrossRefError& e) {
        error(line, e.what());
        return;
      }
      if (entry.text.empty()) entry.text = entry.cross_ref->keyword;
      cross_ref_lines_.emplace_back(*entry.cross_ref, line);
    }
    if (group_.empty()) group_line_ = line;
    group_.push_back(std::move(entry));
  }

  void close_group() {
    if (group_.empty()) return;
    if (paragraph_.groups.empty()) paragraph_.keyword = normalize(group_.front().text);
    paragraph_.groups.push_back(SemicolonGroup{std::move(group_)});
    group_.clear();
  }

  void close_paragraph() {
    if (!in_paragraph_) return;
    in_paragraph_ = false;
    if (!group_.empty()) {
      warning(group_line_, "semicolon group not terminated by ';'");
      close_group();
    }
    if (paragraph_.groups.empty()) {
      error(paragraph_line_, "paragraph has no semicolon groups");
      return;
    }
    auto& groups = head_->pos_groups;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.pos >= paragraph_.pos; });
    if (it == groups.end() || it->pos != paragraph_.pos) {
      it = groups.insert(it, PosGroup{paragraph_.pos, {}});
    }
    it->paragraphs.push_back(std::move(paragraph_));
  }

  ParseResult finish() {
    for (const auto& slot : classes_) {
      if (slot.cls.sections.empty()) {
        error(slot.line, "class " + std::to_string(slot.cls.number) + " has no sections");
      }
      for (std::size_t s = 0; s < slot.cls.sections.size(); ++s) {
        if (slot.cls.sections[s].heads.empty()) {
          error(slot.section_lines[s],
                "section " + std::to_string(slot.cls.sections[s].number) + " has no heads");
        }
      }
    }

    std::vector<RogetClass> classes;
    classes.reserve(classes_.size());
    for (auto& slot : classes_) classes.push_back(std::move(slot.cls));
    ThesaurusKB kb(std::move(classes));

    // Head numbers must also increase along the canonical class/section order.
    int previous = 0;
    for (const auto& cls : kb.classes()) {
      for (const auto& sec : cls.sections) {
        for (const auto& head : sec.heads) {
          if (head.number <= previous) {
            error(head_lines_[head.number],
                  "head " + std::to_string(head.number) + " is out of order after head " +
                      std::to_string(previous));
          }
          previous = std::max(previous, head.number);
        }
      }
    }

    for (const auto& [ref, line] : cross_ref_lines_) {
      if (!kb.head_by_number(ref.head_number)) {
        warning(line, "dangling cross-reference @" + std::to_string(ref.head_number) +
                          " " + ref.keyword);
      }
    }

    std::stable_sort(result_.diagnostics.begin(), result_.diagnostics.end(),
                     [](const auto& a, const auto& b) { return a.line < b.line; });
    if (result_.error_count() == 0) result_.kb = std::move(kb);
    return std::move(result_);
  }

  ParseResult result_;
  std::vector<ClassSlot> classes_;
  ClassSlot* cls_ = nullptr;
  Section* section_ = nullptr;
  Head* head_ = nullptr;
  bool in_paragraph_ = false;
  bool skipping_ = false;
  Paragraph paragraph_;
  int paragraph_line_ = 0;
  std::vector<Entry> group_;
  int group_line_ = 0;
  std::map<int, int> head_lines_;
  std::vector<std::pair<CrossReference, int>> cross_ref_lines_;
};

}  // namespace

ParseResult parse_source(std::string_view text) {
  return SourceParser{}.run(text);
}

std::optional<CrossReference> parse_cross_ref(std::string_view token) {
  token = trim(token);
  if (!token.starts_with('@')) return std::nullopt;
  auto [num, keyword] = split_word(token.substr(1));
  auto n = parse_positive(num);
  if (!n) {
    throw CrossRefError("malformed cross-reference '" + std::string(token) +
                        "': expected a positive head number after '@'");
  }
  if (keyword.empty()) {
    throw CrossRefError("malformed cross-reference '" + std::string(token) +
                        "': missing keyword");
  }
  return CrossReference{*n, tidy(keyword)};
}

std::string render_entry(const Entry& entry) {
  if (!entry.cross_ref) return entry.text;
  std::string ref = "@" + std::to_string(entry.cross_ref->head_number) + " " +
                    entry.cross_ref->keyword;
  if (entry.text == entry.cross_ref->keyword) return ref;
  return entry.text + " " + ref;
}

std::string serialize_classes(const std::vector<RogetClass>& classes) {
  std::string out;
  for (const auto& cls : classes) {
    out += "#CLASS " + std::to_string(cls.number) + " " + cls.name + "\n";
    for (const auto& sec : cls.sections) {
      out += "#SECTION " + std::to_string(sec.number) + " " + sec.name + "\n";
      for (const auto& head : sec.heads) {
        out += "#HEAD " + std::to_string(head.number) + " " + head.name + "\n";
        for (const auto& group : head.pos_groups) {
          for (const auto& para : group.paragraphs) {
            out += "#PARA " + std::string(to_string(para.pos)) + "\n";
            for (const auto& sg : para.groups) {
              for (std::size_t i = 0; i < sg.entries.size(); ++i) {
                if (i) out += ", ";
                out += render_entry(sg.entries[i]);
              }
              out += ";\n";
            }
          }
        }
      }
    }
  }
  return out;
}

std::string serialize_kb(const ThesaurusKB& kb) {
  return serialize_classes(kb.classes());
}

std::vector<std::pair<Address, CrossReference>> dangling_cross_refs(
    const ThesaurusKB& kb) {
  std::vector<std::pair<Address, CrossReference>> out;
  for_each_entry(kb, [&](const Address& a, const Entry& e) {
    if (e.cross_ref && !kb.head_by_number(e.cross_ref->head_number)) {
      out.emplace_back(a, *e.cross_ref);
    }
  });
  return out;
}

std::vector<std::string> full_corpus_violations(const ThesaurusKB& kb) {
  std::vector<std::string> out;
  std::set<int> present;
  for (const auto& cls : kb.classes()) {
    present.insert(cls.number);
    for (const auto& sec : cls.sections) {
      for (const auto& head : sec.heads) {
        if (head.number > 990) {
          out.push_back("head " + std::to_string(head.number) + " exceeds 990");
        }
      }
    }
  }
  for (int c = 1; c <= 8; ++c) {
    if (!present.count(c)) out.push_back("class " + std::to_string(c) + " is missing");
  }
  return out;
}

}  // namespace rogetkb
