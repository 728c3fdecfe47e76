#include "rogetkb/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "rogetkb/aligner.hpp"
#include "rogetkb/bundle.hpp"
#include "rogetkb/metrics.hpp"

namespace rogetkb::cli {

namespace fs = std::filesystem;

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

struct Options {
  std::string kb_path;
  std::string lex_path;
  std::string source_path;
  std::string word;
  std::string word2;
  std::string mode;
  std::string format;
  std::string out_path;
  std::string pos_tag;
  int head = 0;
  int para = 0;
  std::size_t top = 0;
  bool evidence = false;
  bool strip_gloss = false;
  bool no_xref_match = false;
  bool full_corpus = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  int build() {
    const std::string text = read_file(opt_.source_path);
    auto parsed = parse_source(text);
    for (const auto& d : parsed.diagnostics) err_ << format_diagnostic(d) << "\n";
    std::size_t errors = parsed.error_count();
    std::size_t warnings = parsed.diagnostics.size() - errors;

    std::optional<SynsetResource> resource;
    std::string lex_text;
    if (!opt_.lex_path.empty()) {
      lex_text = read_file(opt_.lex_path);
      auto loaded = load_resource(lex_text);
      for (const auto& d : loaded.diagnostics) err_ << format_diagnostic(d) << "\n";
      errors += loaded.diagnostics.size();
      resource = std::move(loaded.resource);
    }
    if (parsed.ok() && opt_.full_corpus) {
      for (const auto& v : full_corpus_violations(*parsed.kb)) {
        err_ << "full-corpus: " << v << "\n";
        ++errors;
      }
    }
    if (errors) {
      err_ << errors << " error(s); no bundle written\n";
      return kInvalid;
    }

    KBBundle bundle(std::move(*parsed.kb), std::move(resource), std::move(lex_text));
    bundle.meta.built_at = build_timestamp();
    bundle.meta.warnings = warnings;
    save_bundle(bundle, opt_.kb_path);

    const auto counts = count_nodes(bundle.kb).total;
    out_ << "built " << opt_.kb_path << ": " << counts.heads << " heads, "
         << counts.paragraphs << " paragraphs, " << counts.semicolon_groups
         << " semicolon groups, " << counts.entry_occurrences << " entries, "
         << bundle.index.unique_count() << " unique strings";
    if (bundle.resource) out_ << ", " << bundle.resource->size() << " synsets";
    out_ << "\n";
    return kOk;
  }

  int lookup() {
    auto bundle = load();
    for (const auto& addr : bundle.index.lookup(opt_.word)) {
      const Head* head = bundle.kb.head_by_number(*addr.head_num);
      const auto& para = resolve_paragraph(bundle.kb, addr.paragraph_address());
      out_ << addr.to_string() << "\t" << head->name << "\t" << para.keyword << "\n";
    }
    return kOk;
  }

  int sim() {
    auto bundle = load();
    for (const auto* w : {&opt_.word, &opt_.word2}) {
      if (bundle.index.lookup(*w).empty()) {
        err_ << "word not indexed: " << *w << "\n";
        return kTargetMissing;
      }
    }
    auto path = word_distance(bundle.kb, bundle.index, opt_.word, opt_.word2);
    out_ << "distance=" << path->distance
         << " similarity=" << fixed(similarity_for_distance(path->distance), 4)
         << " lca=" << path->lca_level << " a=" << path->witness_a.to_string()
         << " b=" << path->witness_b.to_string() << "\n";
    return kOk;
  }

  int stats() {
    auto bundle = load();
    const auto mode = opt_.strip_gloss ? HeadNameMode::strip_gloss : HeadNameMode::full_name;
    if (opt_.mode == "pos") {
      out_ << "pos\tfraction\n";
      for (const auto& [pos, frac] : pos_distribution(bundle.kb)) {
        out_ << to_string(pos) << "\t" << fixed(frac, 4) << "\n";
      }
      return kOk;
    }

    const bool coverage = bundle.resource.has_value();
    const StringSet common =
        coverage ? common_strings(bundle.index, *bundle.resource) : StringSet{};

    if (opt_.mode == "class") {
      const auto cov = class_coverage(bundle.kb, bundle.index, common, mode);
      out_ << "classNum\tsections\theads\tparagraphs\tsemicolonGroups\tstrings";
      if (coverage) out_ << "\tpctCommonHeads\tpctCommonKeywords\tpctCommonStrings";
      out_ << "\n";
      auto row = [&](const std::string& label, const CoverageRow& r) {
        out_ << label << "\t" << r.sections << "\t" << r.heads << "\t" << r.paragraphs
             << "\t" << r.semicolon_groups << "\t" << r.strings;
        if (coverage) {
          out_ << "\t" << fixed(r.pct_common_heads, 2) << "\t"
               << fixed(r.pct_common_keywords, 2) << "\t" << fixed(r.pct_common_strings, 2);
        }
        out_ << "\n";
      };
      for (const auto& r : cov.rows) row(std::to_string(r.class_num), r);
      row("Total", cov.totals);
      return kOk;
    }

    // head mode
    static const SynsetResource kEmpty;
    auto rows = head_coverage(bundle.kb, bundle.index,
                              coverage ? *bundle.resource : kEmpty, common, mode);
    if (opt_.top && rows.size() > opt_.top) rows.resize(opt_.top);
    out_ << "headNum\theadName";
    if (coverage) out_ << "\theadNameInLex";
    out_ << "\tparagraphs\tsemicolonGroups\tstrings";
    if (coverage) out_ << "\tpctCommonStrings\tpctCommonKeywords";
    out_ << "\n";
    for (const auto& r : rows) {
      out_ << r.head_num << "\t" << r.head_name;
      if (coverage) out_ << "\t" << (r.head_name_in_lex ? "Yes" : "No");
      out_ << "\t" << r.paragraphs << "\t" << r.semicolon_groups << "\t" << r.strings;
      if (coverage) {
        out_ << "\t" << fixed(r.pct_common_strings, 2) << "\t"
             << fixed(r.pct_common_keywords, 2);
      }
      out_ << "\n";
    }
    return kOk;
  }

  int label() {
    auto bundle = load();
    if (!bundle.resource) {
      err_ << "label needs a lexicon: build with --lex or pass --lex\n";
      return kNoCapability;
    }
    auto pos = parse_pos(opt_.pos_tag);
    if (!pos) {
      err_ << "unknown part of speech '" << opt_.pos_tag << "'\n";
      return kTargetMissing;
    }
    auto head = bundle.kb.head_address(opt_.head);
    if (!head) {
      err_ << "no head " << opt_.head << "\n";
      return kTargetMissing;
    }
    Address target = *head;
    target.pos = *pos;
    target.para = opt_.para;

    LabelConfig cfg;
    cfg.match_cross_refs = !opt_.no_xref_match;
    try {
      auto lp = label_paragraph(bundle.kb, *bundle.resource, target, cfg);
      out_ << render_labelled(lp, cfg, opt_.evidence);
    } catch (const AddressError& e) {
      err_ << e.what() << "\n";
      return kTargetMissing;
    }
    return kOk;
  }

  int export_kb() {
    auto bundle = load();
    std::string data;
    if (opt_.format == "canonical") {
      data = serialize_kb(bundle.kb);
    } else {
      data = structured_document(bundle).dump(2) + "\n";
    }
    write_file(opt_.out_path, data);
    return kOk;
  }

 private:
  // --kb names either a bundle directory or a thesaurus source file.
  KBBundle load() {
    const fs::path path(opt_.kb_path);
    std::error_code ec;
    if (!fs::exists(path, ec)) throw BundleError(kIoError, "no such file: " + opt_.kb_path);

    KBBundle bundle;
    if (fs::is_directory(path)) {
      bundle = load_bundle(path);
    } else {
      auto parsed = parse_source(read_file(path));
      if (!parsed.ok()) {
        for (const auto& d : parsed.diagnostics) err_ << format_diagnostic(d) << "\n";
        throw BundleError(kInvalid, opt_.kb_path + " does not parse");
      }
      bundle = KBBundle(std::move(*parsed.kb), std::nullopt, "");
    }
    if (!opt_.lex_path.empty()) {
      std::string lex_text = read_file(opt_.lex_path);
      auto loaded = load_resource(lex_text);
      if (!loaded.ok()) {
        for (const auto& d : loaded.diagnostics) err_ << format_diagnostic(d) << "\n";
        throw BundleError(kInvalid, opt_.lex_path + " does not load");
      }
      bundle.resource = std::move(loaded.resource);
      bundle.lexicon_text = std::move(lex_text);
    }
    return bundle;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Roget-structured thesaurus knowledge base", "rogetkb"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "parse, validate and index a thesaurus source");
  build->add_option("source", opt.source_path, "thesaurus source file")->required();
  build->add_option("--kb", opt.kb_path, "output bundle directory")->required();
  build->add_option("--lex", opt.lex_path, "synset resource file");
  build->add_flag("--full-corpus", opt.full_corpus,
                  "also require all eight classes and head numbers <= 990");

  auto kb_opts = [&](CLI::App* cmd) {
    cmd->add_option("--kb", opt.kb_path, "bundle directory or thesaurus source file")
        ->required();
    cmd->add_option("--lex", opt.lex_path, "synset resource file (overrides the bundle's)");
  };

  auto* lookup = app.add_subcommand("lookup", "list every address of a word or phrase");
  kb_opts(lookup);
  lookup->add_option("word", opt.word)->required();

  auto* sim = app.add_subcommand("sim", "edge-counting distance between two words");
  kb_opts(sim);
  sim->add_option("word1", opt.word)->required();
  sim->add_option("word2", opt.word2)->required();

  auto* stats = app.add_subcommand("stats", "coverage and distribution tables");
  kb_opts(stats);
  stats->add_option("mode", opt.mode)->required()->check(CLI::IsMember({"class", "head", "pos"}));
  stats->add_option("--top", opt.top, "keep the first k rows (head mode)");
  stats->add_flag("--strip-gloss", opt.strip_gloss, "match head names without the gloss");

  auto* label = app.add_subcommand("label", "label the semicolon groups of a paragraph");
  kb_opts(label);
  label->add_option("head", opt.head)->required();
  label->add_option("pos", opt.pos_tag)->required();
  label->add_option("para", opt.para)->required();
  label->add_flag("--evidence", opt.evidence, "show the matches behind each label");
  label->add_flag("--no-xref-match", opt.no_xref_match,
                  "do not match cross-reference keywords");

  auto* exp = app.add_subcommand("export", "write the canonical or structured form");
  kb_opts(exp);
  exp->add_option("format", opt.format)
      ->required()
      ->check(CLI::IsMember({"canonical", "structured"}));
  exp->add_option("out", opt.out_path)->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("rogetkb");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  Runner runner(opt, out, err);
  try {
    if (*build) return runner.build();
    if (*lookup) return runner.lookup();
    if (*sim) return runner.sim();
    if (*stats) return runner.stats();
    if (*label) return runner.label();
    return runner.export_kb();
  } catch (const BundleError& e) {
    err << e.what() << "\n";
    return e.exit_code();
  }
}

}  // namespace rogetkb::cli
