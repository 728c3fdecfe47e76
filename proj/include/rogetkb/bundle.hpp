#pragma once

// A built knowledge base on disk: a directory holding the canonical source
// text, the lexicon as supplied, the structured export, and a manifest
// with SHA-256 checksums of all three.
//
//   <dir>/thesaurus.roget
//   <dir>/lexicon.lex        (optional)
//   <dir>/structured.json
//   <dir>/manifest.json

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rogetkb/aligner.hpp"
#include "rogetkb/index.hpp"
#include "rogetkb/lexnet.hpp"
#include "rogetkb/model.hpp"
#include "rogetkb/parser.hpp"

namespace rogetkb {

inline constexpr int kBundleVersion = 1;

struct BuildMeta {
  std::string source_checksum;
  std::string built_at;  // ISO-8601 UTC
  std::size_t warnings = 0;
  std::size_t errors = 0;
};

struct KBBundle {
  ThesaurusKB kb;
  LexicalIndex index;
  std::optional<SynsetResource> resource;
  std::string lexicon_text;  // as supplied; empty without a resource
  BuildMeta meta;

  KBBundle() = default;
  KBBundle(ThesaurusKB kb_in, std::optional<SynsetResource> res, std::string lex_text);
};

/// Carries the CLI exit code the failure maps to (1 validation, 2 I/O).
class BundleError : public std::runtime_error {
 public:
  BundleError(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Structured export. Keys are emitted in a fixed order:
///   format, version, sourceChecksum, counts, index, taxonomy, entries,
///   coverage (only with a resource).
nlohmann::ordered_json structured_document(const KBBundle& bundle);

void save_bundle(const KBBundle& bundle, const std::filesystem::path& dir);
KBBundle load_bundle(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);  // BundleError(2)
void write_file(const std::filesystem::path& path, const std::string& data);

/// Timestamp for build metadata: SOURCE_DATE_EPOCH when set, else now.
std::string build_timestamp();

}  // namespace rogetkb
