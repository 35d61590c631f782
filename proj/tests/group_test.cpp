#include <random>
#include <set>

#include <gtest/gtest.h>

#include "involex/group.hpp"
#include "test_support.hpp"

namespace involex {
namespace {

using testing::as_set;
using testing::group_of;
using testing::kG1;
using testing::kG2;
using testing::naive_closure;

const char* kC2 = "<a | a^2>";
const char* kC4 = "<a | a^4>";
const char* kC8 = "<a | a^8>";
const char* kD8 = "<r,s | r^4, s^2, (rs)^2>";
const char* kD16 = "<r,s | r^8, s^2, (rs)^2>";
const char* kQ8 = "<x,y | x^4, y^2=x^2, y^-1 x y = x^-1>";
const char* kV4 = "<a,b | a^2, b^2, [a,b]>";
const char* kE8 = "<a,b,c | a^2, b^2, c^2, [a,b], [a,c], [b,c]>";
const char* kC4xC4 = "<a,b | a^4, b^4, [a,b]>";
const char* kC4xC2 = "<a,b | a^4, b^2, [a,b]>";
const char* kC2xC8 = "<a,b | a^2, b^8, [a,b]>";
const char* kG16_4 = "<a,b | a^16, b^4, [b,a]=a^4>";
const char* kS3 = "<a,b | a^3, b^2, (ab)^2>";

TEST(FromPermutationsTest, EightCycle) {
  Permutation cycle(8);
  for (std::uint32_t i = 0; i < 8; ++i) cycle[i] = (i + 1) % 8;
  const ConcreteGroup G = from_permutations({cycle}, 8);
  EXPECT_EQ(G.order(), 8u);
  EXPECT_TRUE(G.is_abelian());
  EXPECT_EQ(G.element_order(G.generators()[0]), 8u);
}

TEST(FromPermutationsTest, FirstCounterexample) {
  const auto t = enumerate_cosets(parse_presentation(kG1));
  EXPECT_EQ(from_permutations(regular_generators(t), t.n_cosets).order(), 64u);
}

TEST(FromPermutationsTest, TrivialGroup) {
  const ConcreteGroup G = from_permutations({}, 1);
  EXPECT_EQ(G.order(), 1u);
  EXPECT_TRUE(G.generators().empty());
}

TEST(FromPermutationsTest, RejectsNonRegularActions) {
  // S3 acting naturally on 3 points: transitive but stabilizers are nontrivial.
  const Permutation swap01{1, 0, 2};
  const Permutation cycle{1, 2, 0};
  EXPECT_THROW(from_permutations({swap01, cycle}, 3), PreconditionError);
  // Intransitive.
  EXPECT_THROW(from_permutations({Permutation{1, 0, 2, 3}}, 4), PreconditionError);
  EXPECT_THROW(from_permutations({}, 2), PreconditionError);
  EXPECT_THROW(from_permutations({Permutation{0, 1}}, 3), PreconditionError);
}

TEST(FromPermutationsTest, IdentityFirstAndDeterministic) {
  const ConcreteGroup a = group_of(kG2);
  const ConcreteGroup b = group_of(kG2);
  EXPECT_EQ(a.table(), b.table());
  EXPECT_EQ(a.element_order(0), 1u);
  EXPECT_EQ(a.bfs_order().front(), 0u);
}

TEST(ClosureTest, Examples) {
  const ConcreteGroup E8 = group_of(kE8);
  EXPECT_EQ(closure(E8, {}).size(), 1u);
  EXPECT_EQ(closure(E8, involutions(E8)).size(), 8u);
  const ConcreteGroup Q8 = group_of(kQ8);
  EXPECT_EQ(closure(Q8, involutions(Q8)).size(), 2u);
  EXPECT_THROW(closure(Q8, std::vector<Elem>{99}), PreconditionError);
}

TEST(ClosureTest, MatchesNaiveClosureAndLagrange) {
  std::mt19937 rng(11);
  for (const char* text : {kG1, kG2, kD16, kQ8, kC4xC4, kS3}) {
    const ConcreteGroup G = group_of(text);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(G.order() - 1));
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Elem> seed;
      const int k = trial % 3;
      for (int i = 0; i < k; ++i) seed.push_back(pick(rng));
      const Subgroup H = closure(G, seed);
      EXPECT_EQ(as_set(H), naive_closure(G, seed));
      EXPECT_EQ(G.order() % H.size(), 0u);
      EXPECT_TRUE(is_subgroup(G, H.members));
    }
  }
}

TEST(InvolutionsTest, Examples) {
  EXPECT_EQ(involutions(group_of(kC2)).size(), 1u);
  EXPECT_EQ(involutions(group_of(kD8)).size(), 5u);
  EXPECT_EQ(involutions(group_of(kQ8)).size(), 1u);
}

TEST(InvolutionsTest, GeneratedSubgroup) {
  const ConcreteGroup D16 = group_of(kD16);
  EXPECT_EQ(involution_generated_subgroup(D16).size(), 16u);
  EXPECT_EQ(involution_generated_subgroup(group_of(kQ8)).size(), 2u);
  const ConcreteGroup C8 = group_of(kC8);
  const Subgroup h = involution_generated_subgroup(C8);
  EXPECT_EQ(h.size(), 2u);
  EXPECT_TRUE(h.contains(C8.pow(C8.generators()[0], 4)));
}

TEST(DerivedSubgroupTest, Examples) {
  for (const char* text : {kC8, kC4xC4, kE8}) EXPECT_EQ(derived_subgroup(group_of(text)).size(), 1u);
  const ConcreteGroup G = group_of(kG16_4);
  const Subgroup d = derived_subgroup(G);
  EXPECT_EQ(d.size(), 4u);
  const Elem a4 = G.pow(G.generators()[0], 4);
  EXPECT_EQ(G.element_order(a4), 4u);
  EXPECT_EQ(d, closure(G, std::vector<Elem>{a4}));
  const ConcreteGroup D8 = group_of(kD8);
  EXPECT_EQ(derived_subgroup(D8).size(), 2u);
}

TEST(CenterTest, Examples) {
  EXPECT_EQ(center(group_of(kC4xC2)).size(), 8u);
  EXPECT_EQ(center(group_of(kD8)).size(), 2u);
  EXPECT_EQ(center(group_of(kQ8)).size(), 2u);
  EXPECT_EQ(center(group_of(kS3)).size(), 1u);
}

TEST(FrattiniTest, Examples) {
  EXPECT_EQ(frattini_subgroup(group_of(kE8)).size(), 1u);
  const ConcreteGroup C8 = group_of(kC8);
  const Subgroup phi = frattini_subgroup(C8);
  EXPECT_EQ(phi.size(), 4u);
  EXPECT_EQ(phi, closure(C8, std::vector<Elem>{C8.pow(C8.generators()[0], 2)}));
  EXPECT_THROW(frattini_subgroup(group_of(kS3)), PreconditionError);
}

TEST(FrattiniTest, FirstCounterexampleAgainstBruteForce) {
  const ConcreteGroup G = group_of(kG1);
  // Oracle: naive closure of every square and every commutator.
  std::set<Elem> seed_set;
  for (Elem x = 0; x < G.order(); ++x) {
    seed_set.insert(G.mul(x, x));
    for (Elem y = 0; y < G.order(); ++y) seed_set.insert(G.commutator(x, y));
  }
  const auto oracle = naive_closure(G, std::vector<Elem>(seed_set.begin(), seed_set.end()));
  EXPECT_EQ(oracle.size(), 16u);
  EXPECT_EQ(as_set(frattini_subgroup(G)), oracle);
}

TEST(MaximalSubgroupsTest, Examples) {
  const auto c4 = maximal_subgroups(group_of(kC4));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0].size(), 2u);
  const auto v4 = maximal_subgroups(group_of(kV4));
  ASSERT_EQ(v4.size(), 3u);
  for (const auto& m : v4) EXPECT_EQ(m.size(), 2u);
  EXPECT_THROW(maximal_subgroups(group_of(kS3)), PreconditionError);
}

TEST(MaximalSubgroupsTest, AgreeWithIndexTwoKernels) {
  for (const char* text : {kG1, kG2, kD16, kQ8, kE8, kC4xC4, kC2xC8}) {
    const Presentation p = parse_presentation(text);
    const ConcreteGroup G = concretize(p);
    std::set<std::set<Elem>> oracle;
    for (auto& k : testing::index_two_kernels(p, G)) oracle.insert(k);
    std::set<std::set<Elem>> got;
    for (const auto& m : maximal_subgroups(G)) {
      EXPECT_EQ(2 * m.size(), G.order());
      EXPECT_TRUE(is_subgroup(G, m.members));
      got.insert(as_set(m));
    }
    EXPECT_EQ(got, oracle) << text;
  }
  const auto g1 = maximal_subgroups(group_of(kG1));
  EXPECT_EQ(g1.size(), 3u);
}

TEST(MaximalSubgroupsTest, FrattiniIsTheirIntersection) {
  for (const char* text : {kG1, kG2, kD16, kQ8, kE8, kC4xC4, kC2xC8, kC8}) {
    const ConcreteGroup G = group_of(text);
    ElementSet meet = ElementSet::full(G.order());
    for (const auto& m : maximal_subgroups(G)) meet &= m.members;
    EXPECT_EQ(meet, frattini_subgroup(G).members) << text;
  }
}

TEST(MinimalGeneratingSetTest, SizesAreRanks) {
  EXPECT_EQ(minimal_generating_set(group_of(kG1)).size(), 2u);
  EXPECT_EQ(minimal_generating_set(group_of(kE8)).size(), 3u);
  EXPECT_EQ(minimal_generating_set(group_of(kC8)).size(), 1u);
  const ConcreteGroup G = group_of(kG2);
  EXPECT_EQ(closure(G, minimal_generating_set(G)).size(), G.order());
}

TEST(QuotientTest, Examples) {
  const ConcreteGroup D8 = group_of(kD8);
  const Quotient by_trivial = quotient(D8, trivial_subgroup(D8));
  EXPECT_EQ(by_trivial.group.order(), 8u);
  EXPECT_EQ(by_trivial.group.table(), D8.table());
  EXPECT_EQ(quotient(D8, whole_group(D8)).group.order(), 1u);

  const ConcreteGroup G = group_of(kG16_4);
  const Subgroup N = closure(G, std::vector<Elem>{G.pow(G.generators()[0], 4)});
  const Quotient q = quotient(G, N);
  EXPECT_EQ(q.group.order(), 16u);
  EXPECT_TRUE(q.group.is_abelian());
  EXPECT_EQ(abelian_invariants(q.group), (std::vector<std::size_t>{4, 4}));
  for (Elem x : N.elements()) EXPECT_EQ(q.projection[x], 0u);
}

TEST(QuotientTest, RejectsNonNormalSubgroups) {
  const ConcreteGroup D8 = group_of(kD8);
  const Subgroup reflection = closure(D8, std::vector<Elem>{D8.generators()[1]});
  EXPECT_THROW(quotient(D8, reflection), PreconditionError);
}

TEST(QuotientTest, ProjectionIsAHomomorphism) {
  for (const char* text : {kG1, kG2, kD16}) {
    const ConcreteGroup G = group_of(text);
    for (const Subgroup& N : {center(G), derived_subgroup(G), frattini_subgroup(G)}) {
      const Quotient q = quotient(G, N);
      for (Elem x = 0; x < G.order(); ++x) {
        for (Elem y = 0; y < G.order(); ++y) {
          ASSERT_EQ(q.projection[G.mul(x, y)], q.group.mul(q.projection[x], q.projection[y]));
        }
      }
    }
  }
}

TEST(AbelianInvariantsTest, Examples) {
  EXPECT_EQ(abelian_invariants(group_of(kC4xC4)), (std::vector<std::size_t>{4, 4}));
  EXPECT_TRUE(abelian_invariants(ConcreteGroup::trivial()).empty());
  EXPECT_EQ(abelian_invariants(group_of(kC2xC8)), (std::vector<std::size_t>{2, 8}));
  EXPECT_EQ(abelian_invariants(group_of("<a,b | a^4, b^8, [a,b]>")), (std::vector<std::size_t>{4, 8}));
  EXPECT_EQ(abelian_invariants(group_of("<a | a^6>")), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(abelian_invariants(group_of(kD8)), PreconditionError);
}

TEST(OmegaTest, Examples) {
  EXPECT_EQ(omega(group_of(kC4xC2)).size(), 4u);
  EXPECT_EQ(omega(group_of(kE8)).size(), 8u);
  EXPECT_EQ(omega(group_of(kC8)).size(), 2u);
  EXPECT_THROW(omega(group_of(kD8)), PreconditionError);
}

TEST(ConcreteGroupTest, AssociativeUpTo256) {
  for (const char* text : {kG1, kG2, kD16, kQ8, kS3, "<a,b | a^16, b^8, [b,a]=a^4>",
                           "<a,b | a^32, b^8, [b,a]=a^4>"}) {
    const ConcreteGroup G = group_of(text);
    ASSERT_LE(G.order(), 256u);
    EXPECT_TRUE(verify_associativity(G)) << text;
    for (Elem x = 0; x < G.order(); ++x) EXPECT_EQ(G.mul(x, G.inv(x)), 0u);
  }
}

TEST(ConcreteGroupTest, FromTableValidates) {
  // 0 is not an identity.
  EXPECT_THROW(ConcreteGroup::from_table(2, {1, 0, 0, 1}, {1}), PreconditionError);
  // Generators fail to generate.
  EXPECT_THROW(ConcreteGroup::from_table(2, {0, 1, 1, 0}, {}), PreconditionError);
  EXPECT_THROW(ConcreteGroup::from_table(0, {}, {}), BoundError);
  EXPECT_EQ(ConcreteGroup::from_table(2, {0, 1, 1, 0}, {1}).order(), 2u);
}

TEST(ConcreteGroupTest, WordsRebuildElements) {
  const ConcreteGroup G = group_of(kG1);
  for (Elem x = 0; x < G.order(); ++x) {
    Elem r = 0;
    for (std::size_t g : G.word(x)) r = G.mul(r, G.generators()[g]);
    EXPECT_EQ(r, x);
  }
  EXPECT_EQ(G.format(0), "1");
  EXPECT_EQ(G.format(G.generators()[1]), "b");
}

// [b^u a^v, a^w] = a^(4uw) in G(16,4), for every u, v, w.
TEST(CommutatorIdentityTest, ExhaustiveInSmallestFamilyMember) {
  const ConcreteGroup G = group_of(kG16_4);
  const Elem a = G.generators()[0], b = G.generators()[1];
  for (long long u = 0; u < 4; ++u) {
    for (long long v = 0; v < 16; ++v) {
      for (long long w = 0; w < 16; ++w) {
        const Elem lhs = G.commutator(G.mul(G.pow(b, u), G.pow(a, v)), G.pow(a, w));
        ASSERT_EQ(lhs, G.pow(a, 4 * u * w)) << u << " " << v << " " << w;
      }
    }
  }
}

// Beyond G(16,4) the exponent is w(1 - (-3)^u) mod m, since b^-1 a b = a^-3.
// It agrees with 4uw for u = 1 (and for every u when m = 16) but not in general.
TEST(CommutatorIdentityTest, SampledInLargerFamilyMembers) {
  std::mt19937 rng(3);
  for (auto [m, n] : {std::pair{32LL, 8LL}, {64LL, 16LL}, {16LL, 8LL}}) {
    const ConcreteGroup G =
        group_of("<a,b | a^" + std::to_string(m) + ", b^" + std::to_string(n) + ", [b,a]=a^4>");
    const Elem a = G.generators()[0], b = G.generators()[1];
    std::uniform_int_distribution<long long> pu(0, n - 1), pv(0, m - 1);
    for (int i = 0; i < 2000; ++i) {
      const long long u = pu(rng), v = pv(rng), w = pv(rng);
      long long twist = 1;
      for (long long k = 0; k < u; ++k) twist = (twist * (m - 3)) % m;
      const Elem lhs = G.commutator(G.mul(G.pow(b, u), G.pow(a, v)), G.pow(a, w));
      ASSERT_EQ(lhs, G.pow(a, w * (1 - twist)));
      if (u == 1 || m == 16) {
        ASSERT_EQ(lhs, G.pow(a, 4 * u * w));
      }
    }
  }
  const ConcreteGroup G = group_of("<a,b | a^32, b^8, [b,a]=a^4>");
  const Elem a = G.generators()[0], b = G.generators()[1];
  EXPECT_NE(G.commutator(G.pow(b, 2), a), G.pow(a, 8));
}

}  // namespace
}  // namespace involex
