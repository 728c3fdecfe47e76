#include "rogetkb/bundle.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "rogetkb/checksum.hpp"
#include "rogetkb/normalize.hpp"

namespace rogetkb {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSourceFile = "thesaurus.roget";
constexpr const char* kLexiconFile = "lexicon.lex";
constexpr const char* kStructuredFile = "structured.json";
constexpr const char* kManifestFile = "manifest.json";

ordered_json counts_json(const Counts& c) {
  ordered_json j;
  j["sections"] = c.sections;
  j["heads"] = c.heads;
  j["paragraphs"] = c.paragraphs;
  j["semicolonGroups"] = c.semicolon_groups;
  j["entryOccurrences"] = c.entry_occurrences;
  return j;
}

ordered_json coverage_row_json(const CoverageRow& r) {
  ordered_json j;
  if (r.class_num) j["classNum"] = r.class_num;
  j["sections"] = r.sections;
  j["heads"] = r.heads;
  j["paragraphs"] = r.paragraphs;
  j["semicolonGroups"] = r.semicolon_groups;
  j["strings"] = r.strings;
  j["pctCommonHeads"] = r.pct_common_heads;
  j["pctCommonKeywords"] = r.pct_common_keywords;
  j["pctCommonStrings"] = r.pct_common_strings;
  return j;
}

ordered_json entry_json(const Entry& e) {
  ordered_json j;
  j["text"] = e.text;
  if (e.cross_ref) {
    j["crossRef"] = {{"head", e.cross_ref->head_number}, {"keyword", e.cross_ref->keyword}};
  }
  return j;
}

ordered_json taxonomy_json(const ThesaurusKB& kb) {
  ordered_json classes = ordered_json::array();
  for (const auto& cls : kb.classes()) {
    ordered_json jc;
    jc["number"] = cls.number;
    jc["name"] = cls.name;
    jc["sections"] = ordered_json::array();
    for (const auto& sec : cls.sections) {
      ordered_json js;
      js["number"] = sec.number;
      js["name"] = sec.name;
      js["heads"] = ordered_json::array();
      for (const auto& head : sec.heads) {
        ordered_json jh;
        jh["number"] = head.number;
        jh["name"] = head.name;
        jh["posGroups"] = ordered_json::array();
        for (const auto& group : head.pos_groups) {
          ordered_json jg;
          jg["pos"] = std::string(to_string(group.pos));
          jg["paragraphs"] = ordered_json::array();
          for (const auto& para : group.paragraphs) {
            ordered_json jp;
            jp["keyword"] = para.keyword;
            jp["groups"] = ordered_json::array();
            for (const auto& sg : para.groups) {
              ordered_json entries = ordered_json::array();
              for (const auto& e : sg.entries) entries.push_back(entry_json(e));
              jp["groups"].push_back(std::move(entries));
            }
            jg["paragraphs"].push_back(std::move(jp));
          }
          jh["posGroups"].push_back(std::move(jg));
        }
        js["heads"].push_back(std::move(jh));
      }
      jc["sections"].push_back(std::move(js));
    }
    classes.push_back(std::move(jc));
  }
  return ordered_json{{"classes", std::move(classes)}};
}

}  // namespace

KBBundle::KBBundle(ThesaurusKB kb_in, std::optional<SynsetResource> res,
                   std::string lex_text)
    : kb(std::move(kb_in)),
      index(kb),
      resource(std::move(res)),
      lexicon_text(std::move(lex_text)) {
  meta.source_checksum = kb.source_checksum();
}

ordered_json structured_document(const KBBundle& bundle) {
  const auto& kb = bundle.kb;
  ordered_json doc;
  doc["format"] = "rogetkb-structured";
  doc["version"] = kBundleVersion;
  doc["sourceChecksum"] = kb.source_checksum();

  const auto counts = count_nodes(kb);
  ordered_json per_class = ordered_json::array();
  for (const auto& [num, c] : counts.per_class) {
    auto j = counts_json(c);
    ordered_json row;
    row["classNum"] = num;
    row.update(j);
    per_class.push_back(std::move(row));
  }
  doc["counts"] = {{"classes", std::move(per_class)}, {"total", counts_json(counts.total)}};
  doc["index"] = {{"uniqueStrings", bundle.index.unique_count()},
                  {"totalOccurrences", bundle.index.total_occurrences()}};
  doc["taxonomy"] = taxonomy_json(kb);

  ordered_json entries = ordered_json::array();
  for_each_entry(kb, [&](const Address& a, const Entry& e) {
    ordered_json j;
    j["address"] = a.to_string();
    j["text"] = e.text;
    j["normalized"] = normalize(e.text);
    if (e.cross_ref) {
      j["crossRef"] = {{"head", e.cross_ref->head_number},
                       {"keyword", e.cross_ref->keyword}};
    }
    entries.push_back(std::move(j));
  });
  doc["entries"] = std::move(entries);

  if (bundle.resource) {
    const auto common = common_strings(bundle.index, *bundle.resource);
    const auto cov = class_coverage(kb, bundle.index, common);
    ordered_json rows = ordered_json::array();
    for (const auto& r : cov.rows) rows.push_back(coverage_row_json(r));
    doc["coverage"] = {{"headNameMode", "full-name"},
                       {"keywordDenominator", "paragraphs per class"},
                       {"commonStrings", common.size()},
                       {"classes", std::move(rows)},
                       {"total", coverage_row_json(cov.totals)}};
  }
  return doc;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) {
    throw BundleError(2, "cannot read " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << data) || !out.flush()) {
    throw BundleError(2, "cannot write " + path.string());
  }
}

std::string build_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void save_bundle(const KBBundle& bundle, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw BundleError(2, "cannot create bundle directory " + dir.string());
  }

  const std::string source = serialize_kb(bundle.kb);
  const std::string structured = structured_document(bundle).dump(2) + "\n";
  write_file(dir / kSourceFile, source);
  write_file(dir / kStructuredFile, structured);

  ordered_json manifest;
  manifest["format"] = "rogetkb-bundle";
  manifest["version"] = kBundleVersion;
  manifest["sourceChecksum"] = bundle.kb.source_checksum();
  manifest["files"] = ordered_json::object();
  manifest["files"][kSourceFile] = sha256_hex(source);
  if (bundle.resource) {
    write_file(dir / kLexiconFile, bundle.lexicon_text);
    manifest["files"][kLexiconFile] = sha256_hex(bundle.lexicon_text);
  } else {
    fs::remove(dir / kLexiconFile, ec);
  }
  manifest["files"][kStructuredFile] = sha256_hex(structured);
  manifest["buildMeta"] = {{"sourceChecksum", bundle.meta.source_checksum},
                           {"timestamps", {{"built", bundle.meta.built_at}}},
                           {"diagnostics",
                            {{"warnings", bundle.meta.warnings},
                             {"errors", bundle.meta.errors}}}};
  write_file(dir / kManifestFile, manifest.dump(2) + "\n");
}

KBBundle load_bundle(const fs::path& dir) {
  ordered_json manifest;
  try {
    manifest = ordered_json::parse(read_file(dir / kManifestFile));
  } catch (const ordered_json::exception& e) {
    throw BundleError(1, "corrupt manifest in " + dir.string() + ": " + e.what());
  }
  if (manifest.value("format", "") != "rogetkb-bundle") {
    throw BundleError(1, dir.string() + " is not a rogetkb bundle");
  }

  auto verified = [&](const char* name) {
    const std::string data = read_file(dir / name);
    if (sha256_hex(data) != manifest["files"].value(name, "")) {
      throw BundleError(1, "checksum mismatch for " + (dir / name).string());
    }
    return data;
  };

  verified(kStructuredFile);
  auto parsed = parse_source(verified(kSourceFile));
  if (!parsed.ok()) {
    throw BundleError(1, "bundle source does not parse: " +
                             format_diagnostic(parsed.diagnostics.front()));
  }
  if (parsed.kb->source_checksum() != manifest.value("sourceChecksum", "")) {
    throw BundleError(1, "bundle source checksum does not match its manifest");
  }

  std::optional<SynsetResource> resource;
  std::string lex_text;
  if (manifest["files"].contains(kLexiconFile)) {
    lex_text = verified(kLexiconFile);
    auto loaded = load_resource(lex_text);
    if (!loaded.ok()) {
      throw BundleError(1, "bundle lexicon does not load: " +
                               format_diagnostic(loaded.diagnostics.front()));
    }
    resource = std::move(loaded.resource);
  }

  KBBundle bundle(std::move(*parsed.kb), std::move(resource), std::move(lex_text));
  const auto& meta = manifest["buildMeta"];
  bundle.meta.built_at = meta["timestamps"].value("built", "");
  bundle.meta.warnings = meta["diagnostics"].value("warnings", std::size_t{0});
  bundle.meta.errors = meta["diagnostics"].value("errors", std::size_t{0});
  return bundle;
}

}  // namespace rogetkb
