#include <gtest/gtest.h>

#include "opinion/config.hpp"
#include "opinion/error.hpp"
#include "opinion/pipeline.hpp"
#include "opinion/report.hpp"
#include "opinion/svg.hpp"
#include "opinion/text.hpp"
#include "test_util.hpp"

using namespace opinion;
using nlohmann::json;

TEST(Text, FormatReal) {
  EXPECT_EQ(text::format_real(0.0), "0.0");
  EXPECT_EQ(text::format_real(-0.0), "0.0");
  EXPECT_EQ(text::format_real(-1e-15), "0.0");
  EXPECT_EQ(text::format_real(0.5), "0.5");
  EXPECT_EQ(text::format_real(1.0), "1.0");
  EXPECT_EQ(text::format_real(-0.1), "-0.1");
  EXPECT_EQ(text::format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(text::format_real(0.440404167126), "0.440404167126");
}

TEST(Text, Fnv) {
  EXPECT_EQ(text::digest(""), "cbf29ce484222325");
  EXPECT_EQ(text::digest("a"), "af63dc4c8601ec8c");
}

TEST(EmitJson, Layout) {
  json j = {{"b", json::array()}, {"a", {{"y", 1}, {"x", 0.25}}}, {"c", json::object()},
            {"d", {1, 2}}, {"e", nullptr}, {"f", "caf\xC3\xA9 \"q\"\n"}, {"g", true}};
  EXPECT_EQ(emit_json(j),
            "{\n"
            "  \"a\": {\n"
            "    \"x\": 0.25,\n"
            "    \"y\": 1\n"
            "  },\n"
            "  \"b\": [],\n"
            "  \"c\": {},\n"
            "  \"d\": [\n"
            "    1,\n"
            "    2\n"
            "  ],\n"
            "  \"e\": null,\n"
            "  \"f\": \"caf\xC3\xA9 \\\"q\\\"\\n\",\n"
            "  \"g\": true\n"
            "}");
}

TEST(Report, JsonRoundTrip) {
  auto text = testutil::slurp(testutil::kGolden / "report.json");
  auto report = parse_report(text);
  EXPECT_EQ(report.meta.kept, 45u);
  EXPECT_EQ(report.comments.size(), 45u);
  EXPECT_EQ(report_json_text(report), text);
}

TEST(Report, ParseRejectsGarbage) {
  EXPECT_THROW(parse_report("[1, 2"), Error);
  EXPECT_THROW(parse_report("{\"meta\": {}}"), Error);
}

TEST(Report, CsvExtracts) {
  auto report = parse_report(testutil::slurp(testutil::kGolden / "report.json"));
  auto csv = comments_csv(report);
  auto rows = parse_csv(csv);
  ASSERT_EQ(rows.size(), 46u);
  EXPECT_EQ(rows[1].fields[0], report.comments[0].id);
  EXPECT_EQ(rows[0].fields.size(), rows[1].fields.size());
  auto r = ranking_csv(report.ranking(Engine::valence_rule, Side::positive));
  EXPECT_EQ(r.substr(0, 16), "rank,word,count\n");
}

TEST(Svg, PieWedgeAngles) {
  auto w = svg::pie_wedges({0.5, 0.25, 0.25});
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0].sweep_deg, 180.0);
  EXPECT_EQ(w[1].sweep_deg, 90.0);
  EXPECT_EQ(w[2].sweep_deg, 90.0);
  EXPECT_EQ(w[2].start_deg, 270.0);
  EXPECT_TRUE(svg::pie_wedges({0.0, 0.0, 0.0}).empty());
  auto one = svg::pie_wedges({0.0, 1.0, 0.0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].index, 1u);
  EXPECT_EQ(one[0].sweep_deg, 360.0);
}

TEST(Svg, DegenerateDistribution) {
  std::vector<svg::Bar> zero = {{"positive", 0, "#0f0"}, {"neutral", 0, "#999"}, {"negative", 0, "#f00"}};
  auto pie = svg::pie_chart("t", zero);
  EXPECT_NE(pie.find(">empty</text>"), std::string::npos);
  EXPECT_EQ(pie.find("<path"), std::string::npos);
  auto bar = svg::bar_chart("t", zero, "comments");
  EXPECT_NE(bar.find("height=\"0.000\""), std::string::npos);
  std::vector<svg::Bar> full = {{"positive", 1, "#0f0"}, {"neutral", 0, "#999"}};
  EXPECT_NE(svg::pie_chart("t", full).find("<circle"), std::string::npos);
}

TEST(Svg, EscapesText) {
  EXPECT_EQ(svg::xml_escape("a<b & \"c\""), "a&lt;b &amp; &quot;c&quot;");
}

TEST(Svg, ThirteenPlots) {
  auto report = parse_report(testutil::slurp(testutil::kGolden / "report.json"));
  auto plots = svg::render_plots(report);
  EXPECT_EQ(plots.size(), 13u);
  EXPECT_TRUE(plots.contains("distribution_valence_rule_pie.svg"));
  EXPECT_TRUE(plots.contains("subjectivity_histogram.svg"));
  EXPECT_TRUE(plots.contains("top_synset_negative.svg"));
  EXPECT_EQ(plots, svg::render_plots(report));
}

TEST(Config, FileAndOverrides) {
  auto c = parse_config_text(
      "# run\nmode = engine-native\nepsilon=0.05\ntop_n = 10\nvalence.alpha = 20\nplots = yes\n");
  EXPECT_EQ(c.mode, PipelineMode::engine_native);
  EXPECT_EQ(c.epsilon, 0.05);
  EXPECT_EQ(c.top_n, 10u);
  EXPECT_EQ(c.valence.normalization_alpha, 20.0);
  EXPECT_TRUE(c.plots);
  c.set("top_n", "5");
  EXPECT_EQ(c.top_n, 5u);
}

TEST(Config, BadInput) {
  try {
    parse_config_text("top_n = 3\nbogus = 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfig);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_config_text("top_n = many\n"), Error);
  EXPECT_THROW(parse_config_text("mode = fast\n"), Error);
  EXPECT_THROW(parse_config_text("just words\n"), Error);
}

TEST(Config, Validation) {
  RunConfig c;
  c.input = testutil::kGolden / "corpus.csv";
  EXPECT_NO_THROW(c.validate());
  c.top_n = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.input = testutil::kGolden / "corpus.csv";
  c.lexicon_dir = "/nonexistent";
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.input = "/nonexistent.csv";
  EXPECT_THROW(c.validate(), Error);
}

TEST(Config, DigestTracksSettingsAndResources) {
  RunConfig c;
  auto resources = Resources::load(c);
  auto golden = parse_report(testutil::slurp(testutil::kGolden / "report.json"));
  EXPECT_EQ(config_digest(c, resources.digests), golden.meta.config_digest);
  RunConfig d = c;
  d.epsilon = 0.01;
  EXPECT_NE(config_digest(d, resources.digests), golden.meta.config_digest);
  auto other = resources.digests;
  other["lexicon.valence"] = "0000000000000000";
  EXPECT_NE(config_digest(c, other), golden.meta.config_digest);
  // The input path and output settings do not change the digest.
  d = c;
  d.input = "elsewhere.csv";
  d.out_dir = "x";
  d.plots = true;
  EXPECT_EQ(config_digest(d, resources.digests), golden.meta.config_digest);
}
