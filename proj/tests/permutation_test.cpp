#include "pavi/permutation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pavi/error.hpp"

namespace pavi {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidPermutation;
}

TEST(Permutation, ParsesOneLineNotation) {
  const Permutation p = Permutation::parse("3 1 2");
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p(1), 3);
  EXPECT_EQ(p.to_string(), "3 1 2");
  EXPECT_EQ(p.inverse(), Permutation({2, 3, 1}));
  EXPECT_TRUE(Permutation::parse("").empty());
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_EQ(code_of([] { Permutation({1, 1}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { Permutation({0, 1}); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(code_of([] { Permutation::parse("1 x"); }), ErrorCode::InvalidPermutation);
}

TEST(Involution, RequiresSelfInverse) {
  EXPECT_TRUE(is_involution(Permutation({2, 1, 3})));
  EXPECT_FALSE(is_involution(Permutation({2, 3, 1})));
  EXPECT_EQ(code_of([] { Involution::parse("2 3 1"); }), ErrorCode::InvalidPermutation);
  EXPECT_EQ(fixed_points(Involution::parse("1 3 2 4")), (std::vector<int>{1, 4}));
  EXPECT_EQ(count_fixed_points(Permutation::identity(5)), 5);
}

TEST(PatternFamily, Members) {
  const auto a4 = PatternFamily::prefix_one_two(4);
  EXPECT_EQ(a4.members(), (std::vector<Permutation>{Permutation({1, 2, 3, 4}), Permutation({1, 2, 4, 3})}));
  EXPECT_EQ(a4.name(), "A_4");
  EXPECT_EQ(PatternFamily::first_is_one(4).members().size(), 6u);
  EXPECT_EQ(PatternFamily::prefix_one_two(3).members(), (std::vector<Permutation>{Permutation({1, 2, 3})}));
  EXPECT_EQ(code_of([] { PatternFamily::prefix_one_two(2); }), ErrorCode::InvalidK);
  EXPECT_EQ(code_of([] { PatternFamily::first_is_one(1); }), ErrorCode::InvalidK);
}

TEST(ContainsPattern, SmallCases) {
  EXPECT_TRUE(contains_pattern(Permutation({1, 3, 2, 4}), Permutation({1, 2, 3})));
  EXPECT_FALSE(contains_pattern(Permutation({3, 2, 1}), Permutation({1, 2})));
  EXPECT_TRUE(contains_pattern(Permutation({2, 4, 1, 3}), Permutation({2, 1})));
  EXPECT_FALSE(contains_pattern(Permutation({2, 4, 1, 3}), Permutation({3, 2, 1})));
  EXPECT_TRUE(contains_pattern(Permutation({1}), Permutation()));
}

// The fast criteria must agree with pattern matching on every permutation of
// length <= 7, for several k in both families.
TEST(AvoidsFamily, FastCriteriaMatchNaiveMatching) {
  for (int k = 3; k <= 5; ++k) {
    for (const auto& fam : {PatternFamily::prefix_one_two(k), PatternFamily::first_is_one(k)}) {
      const auto members = fam.members();
      const auto naive = PatternFamily::explicit_set(members);
      for (int n = 0; n <= 7; ++n) {
        for_each_permutation(n, [&](const Permutation& p) {
          ASSERT_EQ(avoids_family(p, fam), avoids_family(p, naive)) << fam.name() << " " << p.to_string();
        });
      }
    }
  }
}

TEST(RlMaximaLayers, PeelsRightToLeftMaxima) {
  const auto d = rl_maxima_layers(Permutation({4, 10, 8, 1, 7, 9, 5, 3, 6, 2}));
  ASSERT_EQ(d.depth(), 3u);
  EXPECT_EQ(d.layers[0], (std::vector<int>{2, 6, 9, 10}));
  EXPECT_EQ(d.layers[1], (std::vector<int>{3, 5, 7, 8}));
  EXPECT_EQ(d.layers[2], (std::vector<int>{1, 4}));
  EXPECT_TRUE(d.layer(4).empty());
  EXPECT_EQ(rl_maxima_layers(Permutation()).depth(), 0u);
}

// For an involution each layer's positions coincide with its values.
TEST(RlMaximaLayers, InvolutionLayersAreClosed) {
  for (int n = 0; n <= 9; ++n) {
    for_each_involution(n, [&](const Involution& q, int) {
      for (const auto& layer : rl_maxima_layers(q).layers) {
        std::set<int> values;
        for (int pos : layer) values.insert(q(pos));
        ASSERT_EQ(std::set<int>(layer.begin(), layer.end()), values) << q.to_string();
      }
    });
  }
}

TEST(Enumeration, InvolutionNumbers) {
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
    const auto all = enumerate_involutions(n);
    EXPECT_EQ(all.size(), expected[static_cast<std::size_t>(n)]);
    EXPECT_EQ(std::set<Involution>(all.begin(), all.end()).size(), all.size());
  }
  EXPECT_EQ(code_of([] { enumerate_involutions(15); }), ErrorCode::LimitExceeded);
}

TEST(Enumeration, PermutationsInLexOrder) {
  const auto all = enumerate_permutations(4);
  ASSERT_EQ(all.size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(code_of([] { enumerate_permutations(9); }), ErrorCode::LimitExceeded);
}

}  // namespace
}  // namespace pavi
