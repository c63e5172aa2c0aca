// opinion: command-line front end for the analysis library.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opinion/config.hpp"
#include "opinion/error.hpp"
#include "opinion/pipeline.hpp"
#include "opinion/svg.hpp"
#include "opinion/text.hpp"

namespace {

using opinion::RunConfig;

// A command-line value that, when given, overrides the config-file key.
struct Override {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;
};

class Overrides {
 public:
  void value(CLI::App* app, const std::string& flag, const std::string& key,
             const std::string& help) {
    auto& o = items_.emplace_back(std::make_unique<Override>());
    o->key = key;
    o->option = app->add_option(flag, o->value, help);
  }
  void toggle(CLI::App* app, const std::string& flag, const std::string& key,
              const std::string& help, const char* when_set = "true") {
    auto& o = items_.emplace_back(std::make_unique<Override>());
    o->key = key;
    o->value = when_set;
    o->option = app->add_flag(flag, help);
  }

  RunConfig build(const std::string& config_file) const {
    RunConfig cfg;
    if (!config_file.empty()) cfg = opinion::load_config_file(config_file);
    for (const auto& o : items_) {
      if (o->option->count() > 0) cfg.set(o->key, o->value);
    }
    return cfg;
  }

 private:
  std::vector<std::unique_ptr<Override>> items_;
};

void add_common(CLI::App* app, Overrides& ov, std::string& config_file) {
  app->add_option("--config", config_file, "flat key = value config file; flags win");
  ov.value(app, "--input,-i", "input", "corpus file");
  ov.value(app, "--format", "format", "csv or jsonl");
  ov.toggle(app, "--lenient", "lenient", "skip malformed records instead of failing");
  ov.value(app, "--data-dir", "data_dir", "directory with the bundled resources");
  ov.value(app, "--lexicons", "lexicons", "directory with valence.tsv, pattern.tsv, synset.tsv");
  ov.value(app, "--stopwords", "stopwords", "stopword list");
  ov.value(app, "--lemmas", "lemmas", "lemma table");
  ov.value(app, "--pos-tags", "pos_tags", "part-of-speech table");
  ov.value(app, "--min-tokens", "min_tokens", "drop comments with fewer tokens");
  ov.toggle(app, "--stem", "stem", "apply the Porter stemmer after lemmatization");
  ov.toggle(app, "--no-lemmatize", "lemmatize", "skip lemmatization", "false");
  ov.value(app, "--out,-o", "out", "output directory");
}

void add_analysis(CLI::App* app, Overrides& ov) {
  ov.value(app, "--mode", "mode", "paper-faithful or engine-native");
  ov.value(app, "--epsilon", "epsilon", "neutral band half-width");
  ov.value(app, "--top-n", "top_n", "ranking length");
  ov.value(app, "--histogram-bins", "histogram_bins", "subjectivity histogram bins");
  ov.value(app, "--disambiguation", "disambiguation", "first_sense or average_senses");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicon-based opinion mining over comment corpora"};
  app.require_subcommand(1);

  std::string config_file;
  Overrides analyze_ov, pre_ov, top_ov;

  auto* analyze = app.add_subcommand("analyze", "score a corpus and write the report");
  add_common(analyze, analyze_ov, config_file);
  add_analysis(analyze, analyze_ov);
  analyze_ov.toggle(analyze, "--plots", "plots", "also write plots/*.svg");

  auto* pre = app.add_subcommand("preprocess", "write cleaned.jsonl only");
  add_common(pre, pre_ov, config_file);

  std::string engine_name = "valence_rule";
  std::string side_name = "positive";
  auto* top = app.add_subcommand("top-words", "print one word ranking as TSV");
  add_common(top, top_ov, config_file);
  add_analysis(top, top_ov);
  top->add_option("--engine", engine_name, "pattern_avg, synset or valence_rule");
  top->add_option("--side", side_name, "positive or negative");

  std::string report_path;
  std::string plot_dir = "plots";
  auto* plot = app.add_subcommand("plot", "re-render SVG plots from a report.json");
  plot->add_option("--report", report_path, "report.json from a previous analyze")->required();
  plot->add_option("--out,-o", plot_dir, "directory for the SVG files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze) {
      auto report = opinion::run_analyze(analyze_ov.build(config_file));
      std::fprintf(stderr, "analyzed %zu comments (%zu kept, %zu dropped)\n",
                   report.meta.corpus_size, report.meta.kept, report.meta.dropped);
    } else if (*pre) {
      auto docs = opinion::run_preprocess_only(pre_ov.build(config_file));
      std::fprintf(stderr, "preprocessed %zu comments\n", docs.size());
    } else if (*top) {
      RunConfig cfg = top_ov.build(config_file);
      cfg.validate();
      auto engine = opinion::parse_engine(engine_name);
      if (!engine) {
        throw opinion::Error(opinion::ErrorCode::InvalidConfig,
                             "unknown engine '" + engine_name + "'");
      }
      if (side_name != "positive" && side_name != "negative") {
        throw opinion::Error(opinion::ErrorCode::InvalidConfig,
                             "side must be positive or negative");
      }
      auto side = side_name == "positive" ? opinion::Side::positive : opinion::Side::negative;
      auto resources = opinion::Resources::load(cfg);
      auto corpus = opinion::load_corpus(cfg.input, cfg.format, {cfg.parse_mode});
      auto analysis = opinion::analyze(corpus, resources, cfg);
      for (const auto& [word, count] : analysis.report.ranking(*engine, side).entries) {
        std::cout << word << '\t' << count << '\n';
      }
    } else if (*plot) {
      auto report = opinion::parse_report(opinion::text::read_file(report_path));
      auto written = opinion::svg::write_plots(report, plot_dir);
      std::fprintf(stderr, "wrote %zu plots to %s\n", written.size(), plot_dir.c_str());
    }
  } catch (const opinion::Error& e) {
    std::cerr << "ERROR " << opinion::to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "ERROR Internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
