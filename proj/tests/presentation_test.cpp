#include <random>

#include <gtest/gtest.h>

#include "involex/presentation.hpp"

namespace involex {
namespace {

constexpr int a = 1, b = 2;

TEST(PresentationTest, ParsesFirstCounterexample) {
  const Presentation p = parse_presentation("<a,b | a^16, b^4, [b,a]=a^4>");
  ASSERT_EQ(p.num_generators(), 2u);
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.relators[0], Word{std::vector<int>(16, a)});
  EXPECT_EQ(p.relators[1], Word{std::vector<int>(4, b)});
  // b^-1 a^-1 b a a^-4
  const Word expected = word_multiply(word_commutator(Word{{b}}, Word{{a}}), word_power(Word{{a}}, -4));
  EXPECT_EQ(p.relators[2], expected);
  EXPECT_EQ(p.relators[2], (Word{{-b, -a, b, -a, -a, -a}}));
}

TEST(PresentationTest, ParsesSecondCounterexample) {
  const Presentation p = parse_presentation("<a,b | a^16, b^4, [b,a]=a^-2>");
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.relators[2], (Word{{-b, -a, b, a, a, a}}));
}

TEST(PresentationTest, CyclicPresentation) {
  const Presentation p = parse_presentation("<a | a^8>");
  ASSERT_EQ(p.num_generators(), 1u);
  ASSERT_EQ(p.relators.size(), 1u);
  EXPECT_EQ(p.relators[0].size(), 8u);
}

TEST(PresentationTest, JuxtapositionParenthesesAndIdentity) {
  const Presentation p = parse_presentation("<r,s | r^4, s^2, (rs)^2, s*r*s = r^-1, r^4 = 1>");
  ASSERT_EQ(p.relators.size(), 5u);
  EXPECT_EQ(p.relators[2], (Word{{1, 2, 1, 2}}));
  EXPECT_EQ(p.relators[3], (Word{{2, 1, 2, 1}}));
  EXPECT_EQ(p.relators[4], (Word{{1, 1, 1, 1}}));
}

TEST(PresentationTest, ExponentBindsToLastLetterOfSplitIdentifier) {
  const Presentation p = parse_presentation("<a,b | ab^2>");
  EXPECT_EQ(p.relators[0], (Word{{1, 2, 2}}));
}

TEST(PresentationTest, MultiCharacterGeneratorNames) {
  const Presentation p = parse_presentation("<x1, x2 | x1^2, x2^3, x1 x2 = x2 x1>");
  EXPECT_EQ(p.generator_names, (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(p.relators[2], (Word{{1, 2, -1, -2}}));
}

TEST(PresentationTest, TrivialRelationIsIgnoredWithWarning) {
  const Presentation p = parse_presentation("<a | a^0, a^3>");
  ASSERT_EQ(p.relators.size(), 1u);
  ASSERT_EQ(p.warnings.size(), 1u);
  EXPECT_NE(p.warnings[0].find("relation 1"), std::string::npos);
}

TEST(PresentationTest, SyntaxErrorsCarryPosition) {
  try {
    parse_presentation("<a,b | a^2,\n  b^ >");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
  EXPECT_THROW(parse_presentation("<a | c^2>"), ParseError);
  EXPECT_THROW(parse_presentation("<a,a | a>"), ParseError);
  EXPECT_THROW(parse_presentation("a | a^2>"), ParseError);
  EXPECT_THROW(parse_presentation("<a | a^2"), ParseError);
  EXPECT_THROW(parse_presentation("<a | a^2> junk"), ParseError);
  EXPECT_THROW(parse_presentation("<a,b,c,d,e,f,g,h,i | a>"), ParseError);
}

TEST(PresentationTest, UndeclaredGeneratorMessage) {
  try {
    parse_presentation("<a,b | a^2, bc>");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("undeclared generator 'bc'"), std::string::npos);
  }
}

TEST(WordTest, Multiply) {
  EXPECT_TRUE(word_multiply(Word{{a}}, Word{{-a}}).empty());
  EXPECT_EQ(word_multiply(Word{{a, b}}, Word{{-b, a}}), (Word{{a, a}}));
  EXPECT_EQ(word_multiply(Word{}, Word{{a, -b}}), (Word{{a, -b}}));
}

TEST(WordTest, Commutator) {
  EXPECT_TRUE(word_commutator(Word{{a}}, Word{{a}}).empty());
  EXPECT_EQ(word_commutator(Word{{b}}, Word{{a}}), (Word{{-b, -a, b, a}}));
  EXPECT_TRUE(word_commutator(Word{}, Word{{a, b}}).empty());
}

std::vector<Word> all_words(std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  const int letters[] = {1, -1, 2, -2};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int l : letters) {
        Word x = w;
        x.letters.push_back(l);
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

TEST(WordTest, ReductionIsIdempotent) {
  for (const Word& w : all_words(6)) EXPECT_EQ(reduce(reduce(w)), reduce(w));
}

TEST(WordTest, MultiplicationIsAssociativeOnReducedWords) {
  std::vector<Word> reduced;
  for (const Word& w : all_words(6)) {
    if (reduce(w) == w) reduced.push_back(w);
  }
  // Every triple up to length 4 (161^3), then random triples up to length 6.
  std::vector<Word> short_words;
  for (const Word& w : reduced) {
    if (w.size() <= 4) short_words.push_back(w);
  }
  for (const Word& u : short_words) {
    for (const Word& v : short_words) {
      for (const Word& w : short_words) {
        ASSERT_EQ(word_multiply(word_multiply(u, v), w), word_multiply(u, word_multiply(v, w)));
      }
    }
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, reduced.size() - 1);
  for (int i = 0; i < 200000; ++i) {
    const Word& u = reduced[pick(rng)];
    const Word& v = reduced[pick(rng)];
    const Word& w = reduced[pick(rng)];
    ASSERT_EQ(word_multiply(word_multiply(u, v), w), word_multiply(u, word_multiply(v, w)));
  }
}

TEST(PresentationTest, PrintParseRoundTrip) {
  const char* inputs[] = {
      "<a,b | a^16, b^4, [b,a]=a^4>",
      "<a,b | a^16, b^4, [b,a]=a^-2>",
      "<r,s | r^8, s^2, (rs)^2>",
      "<x,y | x^4, y^2=x^2, y^-1 x y = x^-1>",
      "<foo, bar | foo^3, [foo, bar]^2, bar foo bar^-1 = foo^-1>",
      "<a | a^5>",
  };
  for (const char* text : inputs) {
    const Presentation p = parse_presentation(text);
    const std::string printed = format_presentation(p);
    EXPECT_EQ(parse_presentation(printed), p) << printed;
    EXPECT_EQ(format_presentation(parse_presentation(printed)), printed);
  }
}

}  // namespace
}  // namespace involex
