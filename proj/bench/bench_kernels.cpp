// Serial reference vs OpenMP kernels on a generated corpus.
//
//   rogetkb_bench [--scale N] [--repeat R]

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "rogetkb/kernels.hpp"
#include "rogetkb/parser.hpp"
#include "rogetkb/synthetic.hpp"

using namespace rogetkb;
using Clock = std::chrono::steady_clock;

namespace {

double best_ms(int repeat, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto start = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }
  return best;
}

void report(const char* name, double serial, double omp, bool same) {
  std::printf("%-22s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   %s\n", name, serial, omp,
              omp > 0 ? serial / omp : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int scale = 4;
  int repeat = 3;
  CLI::App app{"kernel benchmark", "rogetkb_bench"};
  app.add_option("--scale", scale, "corpus size multiplier")->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat, "timed repetitions, best is reported")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  synthetic::CorpusShape shape;
  shape.classes = 8;
  shape.sections_per_class = 4;
  shape.heads_per_section = 10 * scale;
  shape.max_paragraphs_per_head = 4;
  shape.vocabulary = 4000 * scale;
  auto parsed = parse_source(synthetic::generate_source(1, shape));
  if (!parsed.ok()) {
    std::fprintf(stderr, "generated corpus does not parse\n");
    return 1;
  }
  const auto& kb = *parsed.kb;
  const auto idx = build_index(kb);
  const auto counts = count_nodes(kb).total;
  std::printf("corpus: %zu heads, %zu groups, %zu entries, %zu unique; %d threads\n",
              counts.heads, counts.semicolon_groups, counts.entry_occurrences,
              idx.unique_count(), kernels::max_threads());

  bool ok = true;

  kernels::StringHashSet common;
  std::size_t n = 0;
  for (const auto& s : idx.unique_strings()) {
    if (n++ % 2 == 0) common.insert(s);
  }
  std::vector<kernels::HeadTally> ts, to;
  const double t1 = best_ms(repeat, [&] {
    ts = kernels::head_tallies_serial(kb, common, HeadNameMode::full_name);
  });
  const double t2 = best_ms(repeat, [&] {
    to = kernels::head_tallies_omp(kb, common, HeadNameMode::full_name);
  });
  report("head tallies", t1, t2, ts == to);
  ok &= ts == to;

  std::vector<std::string> words;
  for (const auto& [w, _] : idx.entries()) words.push_back(w);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::vector<WordPair> pairs;
  for (int i = 0; i < 20000 * scale; ++i) pairs.emplace_back(words[pick(rng)], words[pick(rng)]);
  std::vector<std::optional<PathResult>> ds, dp;
  const double t3 = best_ms(repeat, [&] { ds = kernels::word_distances_serial(kb, idx, pairs); });
  const double t4 = best_ms(repeat, [&] { dp = kernels::word_distances_omp(kb, idx, pairs); });
  report("word distances", t3, t4, ds == dp);
  ok &= ds == dp;

  auto groups = kernels::group_addresses(kb);
  groups.resize(std::min<std::size_t>(groups.size(), 3000));
  std::vector<int> ms, mp;
  const double t5 = best_ms(repeat, [&] { ms = kernels::group_distance_matrix_serial(groups); });
  const double t6 = best_ms(repeat, [&] { mp = kernels::group_distance_matrix_omp(groups); });
  report("group distance matrix", t5, t6, ms == mp);
  ok &= ms == mp;

  return ok ? 0 : 1;
}
