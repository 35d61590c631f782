#include <gtest/gtest.h>

#include "involex/enumerator.hpp"
#include "involex/group.hpp"
#include "test_support.hpp"

namespace involex {
namespace {

using testing::kG1;
using testing::kG2;

// Applies a word to a coset through the table.
std::int32_t trace(const CosetTable& t, std::int32_t c, const Word& w) {
  for (int l : w.letters) c = t.entry(static_cast<std::size_t>(c), detail::letter_column(l));
  return c;
}

void expect_valid_table(const Presentation& p, const CosetTable& t) {
  ASSERT_TRUE(t.complete());
  for (std::size_t c = 0; c < t.n_cosets; ++c) {
    for (std::size_t x = 0; x < t.columns(); ++x) {
      const auto d = static_cast<std::size_t>(t.entry(c, x));
      EXPECT_EQ(static_cast<std::size_t>(t.entry(d, x ^ 1)), c);
    }
    for (const Word& r : p.relators) EXPECT_EQ(trace(t, static_cast<std::int32_t>(c), r), static_cast<std::int32_t>(c));
  }
}

TEST(EnumeratorTest, CyclicOfOrderEight) {
  const Presentation p = parse_presentation("<a | a^8>");
  const CosetTable t = enumerate_cosets(p, 100);
  EXPECT_EQ(t.n_cosets, 8u);
  expect_valid_table(p, t);
  const auto perms = regular_generators(t);
  ASSERT_EQ(perms.size(), 1u);
  // A single 8-cycle.
  std::uint32_t x = 0;
  for (int i = 0; i < 8; ++i) {
    x = perms[0][x];
    EXPECT_EQ(x == 0, i == 7);
  }
}

TEST(EnumeratorTest, KleinFourGroup) {
  const Presentation p = parse_presentation("<a,b | a^2, b^2, (ab)^2>");
  const CosetTable t = enumerate_cosets(p);
  EXPECT_EQ(t.n_cosets, 4u);
  const auto perms = regular_generators(t);
  ASSERT_EQ(perms.size(), 2u);
  for (const auto& perm : perms) {
    for (std::uint32_t i = 0; i < 4; ++i) {
      EXPECT_EQ(perm[perm[i]], i);
      EXPECT_NE(perm[i], i);
    }
  }
}

TEST(EnumeratorTest, CounterexamplesHaveOrder64) {
  for (const char* text : {kG1, kG2}) {
    const Presentation p = parse_presentation(text);
    const CosetTable t = enumerate_cosets(p, 10000);
    EXPECT_EQ(t.n_cosets, 64u) << text;
    expect_valid_table(p, t);
    const ConcreteGroup G = from_permutations(regular_generators(t), t.n_cosets);
    EXPECT_EQ(G.order(), 64u);
  }
}

TEST(EnumeratorTest, FamilyMemberOrder) {
  const Presentation p = parse_presentation("<a,b | a^16, b^8, [b,a]=a^4>");
  const CosetTable t = enumerate_cosets(p, 10000);
  EXPECT_EQ(t.n_cosets, 128u);
  expect_valid_table(p, t);
}

TEST(EnumeratorTest, CoincidencesCollapseToTheRightOrder) {
  // Redundant relators force coincidences: a^6 and a^4 give a^2 = 1.
  const Presentation p = parse_presentation("<a,b | a^6, a^4, b^3, [a,b]>");
  const CosetTable t = enumerate_cosets(p);
  EXPECT_EQ(t.n_cosets, 6u);
  expect_valid_table(p, t);
  // Trivial group from a presentation whose generators collapse.
  const Presentation q = parse_presentation("<a,b | a^3, b^2, a b a^-1 = b^-1 a>");
  const CosetTable tq = enumerate_cosets(q);
  expect_valid_table(q, tq);
}

TEST(EnumeratorTest, KnownOrders) {
  struct Case {
    const char* text;
    std::size_t order;
  };
  const Case cases[] = {
      {"<r,s | r^8, s^2, (rs)^2>", 16},
      {"<x,y | x^4, y^2=x^2, y^-1 x y = x^-1>", 8},
      {"<x,y | x^16, y^2=x^8, y^-1 x y = x^-1>", 32},
      {"<r,s | r^16, s^2, s r s = r^7>", 32},
      {"<a,b | a^2, b^3, (ab)^5>", 60},  // A5
      {"<a,b | a^2, b^3, (ab)^4>", 24},  // S4
      {"<a,b | a^3, b^3, (ab)^3, (a b^-1)^3>", 27},
      {"<a | a>", 1},
  };
  for (const Case& c : cases) {
    const Presentation p = parse_presentation(c.text);
    const CosetTable t = enumerate_cosets(p);
    EXPECT_EQ(t.n_cosets, c.order) << c.text;
    expect_valid_table(p, t);
  }
}

TEST(EnumeratorTest, OverflowOnInfiniteOrOversizedGroups) {
  EXPECT_THROW(enumerate_cosets(parse_presentation("<a,b | a^2>"), 500), OverflowError);
  EXPECT_THROW(enumerate_cosets(parse_presentation("<a | a^64>"), 32), OverflowError);
  EXPECT_THROW(enumerate_cosets(parse_presentation("<a | a^2>"), 0), PreconditionError);
  EXPECT_THROW(enumerate_cosets(parse_presentation("<a,b | >")), PreconditionError);
}

TEST(EnumeratorTest, Deterministic) {
  const Presentation p = parse_presentation(kG2);
  EXPECT_EQ(enumerate_cosets(p), enumerate_cosets(p));
}

TEST(EnumeratorTest, RegularGeneratorsRejectIncompleteTable) {
  CosetTable t;
  t.num_generators = 1;
  t.n_cosets = 2;
  t.rows = {1, 1, -1, 0};
  EXPECT_THROW(regular_generators(t), PreconditionError);
}

TEST(EnumeratorTest, RegularRepresentationIsRegular) {
  const Presentation p = parse_presentation(kG1);
  const CosetTable t = enumerate_cosets(p);
  const ConcreteGroup G = from_permutations(regular_generators(t), t.n_cosets);
  EXPECT_EQ(G.order(), t.n_cosets);
  // Only the identity fixes a point: element x sends coset 0 to a distinct
  // coset for every x.
  std::set<std::int32_t> images;
  for (Elem x = 0; x < G.order(); ++x) {
    Word w;
    for (std::size_t g : G.word(x)) w.letters.push_back(static_cast<int>(g + 1));
    images.insert(trace(t, 0, w));
  }
  EXPECT_EQ(images.size(), G.order());
}

}  // namespace
}  // namespace involex
