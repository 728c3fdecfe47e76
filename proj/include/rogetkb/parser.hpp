#pragma once

// Line-oriented thesaurus source format:
//
//   #CLASS <n> <name>
//   #SECTION <n> <name>
//   #HEAD <n> <name>
//   #PARA <N|ADJ|VB|ADV|INT>
//   entry, entry @<head> <keyword>, @<head> <keyword>;
//
// Entries are separated by ',', a semicolon group ends at ';' and may span
// lines. A paragraph ends at the next directive. Lines starting with "//"
// are comments.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rogetkb/model.hpp"

namespace rogetkb {

enum class Severity { warning, error };

std::string_view to_string(Severity severity);

struct ParseDiagnostic {
  int line = 0;
  Severity severity = Severity::error;
  std::string message;

  bool operator==(const ParseDiagnostic&) const = default;
};

/// `<line>:<severity>: <message>`
std::string format_diagnostic(const ParseDiagnostic& d);

struct ParseResult {
  std::optional<ThesaurusKB> kb;  // present iff no error diagnostics
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return kb.has_value(); }
  std::size_t error_count() const;
};

class CrossRefError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParseResult parse_source(std::string_view text);

/// Parses "@37 diminution". Returns nullopt when the token is not a
/// cross-reference; throws CrossRefError when it starts with '@' but is
/// malformed.
std::optional<CrossReference> parse_cross_ref(std::string_view token);

/// Canonical, byte-deterministic source text. Classes and sections come out
/// in ascending number, one semicolon group per line.
std::string serialize_kb(const ThesaurusKB& kb);
std::string serialize_classes(const std::vector<RogetClass>& classes);

/// Entry as written in the source: "cut @37 diminution", or "@810 discount"
/// for a standalone cross-reference.
std::string render_entry(const Entry& entry);

/// Cross-references whose head number is not in the KB.
std::vector<std::pair<Address, CrossReference>> dangling_cross_refs(
    const ThesaurusKB& kb);

/// Checks that only hold for a complete edition: all eight classes present
/// and head numbers within 1..990. Returns one message per violation.
std::vector<std::string> full_corpus_violations(const ThesaurusKB& kb);

}  // namespace rogetkb
