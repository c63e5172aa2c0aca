#include <gtest/gtest.h>

#include "opinion/analytics.hpp"
#include "opinion/error.hpp"
#include "test_util.hpp"

using namespace opinion;

namespace {

LabeledComment lc(const std::string& id, Engine e, PolarityLabel l) {
  LabeledComment c;
  c.comment_id = id;
  c.engine = e;
  c.score.engine = e;
  c.label = l;
  return c;
}

CleanedDocument doc(const std::string& id, std::vector<std::string> tokens) {
  return {id, std::nullopt, std::move(tokens), DropReason::none};
}

}  // namespace

TEST(Label, SignExamples) {
  EXPECT_EQ(label(0.5), PolarityLabel::positive);
  EXPECT_EQ(label(0.0), PolarityLabel::neutral);
  EXPECT_EQ(label(-0.0), PolarityLabel::neutral);
  EXPECT_EQ(label(-0.3), PolarityLabel::negative);
  EXPECT_EQ(label(1e-300), PolarityLabel::positive);
}

TEST(Label, EpsilonBand) {
  EXPECT_EQ(label(0.05, 0.1), PolarityLabel::neutral);
  EXPECT_EQ(label(-0.1, 0.1), PolarityLabel::neutral);
  EXPECT_EQ(label(0.1000001, 0.1), PolarityLabel::positive);
  EXPECT_EQ(label(-0.2, 0.1), PolarityLabel::negative);
}

TEST(Distribution, CountsAndProportions) {
  auto v = Engine::valence_rule;
  auto d = distribution({lc("a", v, PolarityLabel::positive), lc("b", v, PolarityLabel::positive),
                         lc("c", v, PolarityLabel::negative), lc("d", v, PolarityLabel::neutral)},
                        v);
  EXPECT_EQ(d.count(PolarityLabel::positive), 2u);
  EXPECT_EQ(d.count(PolarityLabel::negative), 1u);
  EXPECT_EQ(d.count(PolarityLabel::neutral), 1u);
  EXPECT_EQ(d.proportion(PolarityLabel::positive), 0.5);
  EXPECT_EQ(d.proportion(PolarityLabel::negative), 0.25);
  EXPECT_EQ(d.proportion(PolarityLabel::neutral), 0.25);
}

TEST(Distribution, EmptyAndMixed) {
  auto d = distribution({}, Engine::synset);
  EXPECT_EQ(d.total(), 0u);
  EXPECT_EQ(d.proportion(PolarityLabel::positive), 0.0);
  try {
    distribution({lc("a", Engine::synset, PolarityLabel::positive)}, Engine::pattern_avg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedEngines);
  }
  DistributionReport a;
  a.engine = Engine::synset;
  DistributionReport b;
  b.engine = Engine::valence_rule;
  EXPECT_THROW(a.merge(b), Error);
}

TEST(Distribution, MergeAddsCounts) {
  auto e = Engine::pattern_avg;
  auto whole = distribution({lc("a", e, PolarityLabel::positive), lc("b", e, PolarityLabel::negative),
                             lc("c", e, PolarityLabel::positive)},
                            e);
  auto left = distribution({lc("a", e, PolarityLabel::positive)}, e);
  auto right = distribution({lc("b", e, PolarityLabel::negative), lc("c", e, PolarityLabel::positive)}, e);
  EXPECT_EQ(left.merge(right), whole);
}

TEST(Histogram, BoundaryRule) {
  auto h = subjectivity_histogram(std::vector<double>{0.0, 0.0, 1.0}, 2);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(h.bin_edges, (std::vector<double>{0.0, 0.5, 1.0}));
  EXPECT_DOUBLE_EQ(*h.mean, 1.0 / 3.0);
  EXPECT_EQ(*h.median, 0.0);
  // An interior edge belongs to the bin that starts there.
  auto e = subjectivity_histogram(std::vector<double>{0.5, 0.4999, 0.1}, 10);
  EXPECT_EQ(e.counts[5], 1u);
  EXPECT_EQ(e.counts[4], 1u);
  EXPECT_EQ(e.counts[1], 1u);
}

TEST(Histogram, EmptyInput) {
  auto h = subjectivity_histogram(std::vector<double>{}, 10);
  EXPECT_EQ(h.counts, std::vector<std::size_t>(10, 0));
  EXPECT_FALSE(h.mean);
  EXPECT_FALSE(h.median);
  EXPECT_EQ(h.bin_edges.front(), 0.0);
  EXPECT_EQ(h.bin_edges.back(), 1.0);
}

TEST(Histogram, EvenMedianAndMissingSubjectivity) {
  auto h = subjectivity_histogram(std::vector<double>{0.2, 0.8, 0.4, 0.6});
  EXPECT_DOUBLE_EQ(*h.median, 0.5);
  SentimentScore s;
  s.engine = Engine::valence_rule;
  try {
    subjectivity_histogram(std::vector<SentimentScore>{s});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingSubjectivity);
  }
}

TEST(TopWords, CountsOccurrencesWithTieBreak) {
  auto lexicon = Lexicon::parse("great\t2\nwin\t1\nawful\t-2\nace\t1\n", LexiconKind::valence);
  PosTagger tagger;
  auto e = Engine::valence_rule;
  std::vector<CleanedDocument> docs = {doc("a", {"great", "great", "win"}),
                                       doc("b", {"win", "ace", "awful"}),
                                       doc("c", {"great", "win"})};
  std::vector<LabeledComment> labels = {lc("a", e, PolarityLabel::positive),
                                        lc("b", e, PolarityLabel::positive),
                                        lc("c", e, PolarityLabel::negative)};
  auto r = top_words({docs[0]}, {labels[0]}, lexicon, e, Side::positive, 30, tagger);
  using Entries = decltype(r.entries);
  EXPECT_EQ(r.entries, (Entries{{"great", 2}, {"win", 1}}));

  auto all = top_words(docs, labels, lexicon, e, Side::positive, 30, tagger);
  EXPECT_EQ(all.entries, (Entries{{"great", 2}, {"win", 2}, {"ace", 1}}));
  auto cut = top_words(docs, labels, lexicon, e, Side::positive, 2, tagger);
  EXPECT_EQ(cut.entries.size(), 2u);
  // "awful" sits in a positive comment but never qualifies as positive.
  auto neg = top_words(docs, labels, lexicon, e, Side::negative, 30, tagger);
  EXPECT_TRUE(neg.entries.empty());
}

TEST(TopWords, NoCommentsOnSide) {
  auto lexicon = Lexicon::parse("great\t2\n", LexiconKind::valence);
  PosTagger tagger;
  auto r = top_words({doc("a", {"great"})}, {lc("a", Engine::valence_rule, PolarityLabel::neutral)},
                     lexicon, Engine::valence_rule, Side::positive, 30, tagger);
  EXPECT_TRUE(r.entries.empty());
}

TEST(TopWords, MixedEnginesRejected) {
  auto lexicon = Lexicon::parse("great\t2\n", LexiconKind::valence);
  PosTagger tagger;
  try {
    top_words({doc("a", {"great"})}, {lc("a", Engine::synset, PolarityLabel::positive)}, lexicon,
              Engine::valence_rule, Side::positive, 30, tagger);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedEngines);
  }
}

TEST(TopWords, SynsetQualifiesByRankOneSenseOfTag) {
  auto lexicon = Lexicon::parse(
      "x.a.01\tadj\t0.0\t0.5\t1\tfoo\nx.a.02\tadj\t0.9\t0.0\t2\tfoo\nx.n.01\tnoun\t0.9\t0\t1\tfoo\n",
      LexiconKind::synset);
  PosTagger adj_tagger = PosTagger::parse("foo\tadj\n");
  EXPECT_TRUE(word_qualifies(Engine::synset, Side::negative, "foo", lexicon, adj_tagger));
  EXPECT_FALSE(word_qualifies(Engine::synset, Side::positive, "foo", lexicon, adj_tagger));
  PosTagger noun_tagger;
  EXPECT_TRUE(word_qualifies(Engine::synset, Side::positive, "foo", lexicon, noun_tagger));
}
