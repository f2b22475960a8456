#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "flagcycle/conditions.hpp"
#include "flagcycle/enumerate.hpp"
#include "flagcycle/geometry.hpp"

using namespace flagcycle;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
DimensionSequence D(const char* s) { return DimensionSequence::parse(s); }

// Generalized double box by exhaustive search over every bijection between
// B_j and B~_j at each step.
bool double_box_any_pairing(const Permutation& w, const DimensionSequence& d) {
  auto blocks = block_decompose(w, d);
  std::set<int> residual;
  for (int v = 1; v <= w.size(); ++v) residual.insert(v);
  for (std::size_t j = 0; j < d.pair_count(); ++j) {
    auto ks = blocks[j];
    auto ls = blocks[blocks.size() - 1 - j];
    std::sort(ls.begin(), ls.end());
    bool found = false;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < ks.size() && ok; ++i) {
        auto it = residual.find(ks[i]);
        ok = it != residual.begin() && *std::prev(it) == ls[i];
      }
      found = ok;
    } while (!found && std::next_permutation(ls.begin(), ls.end()));
    if (!found) return false;
    for (int v : ks) residual.erase(v);
    for (int v : ls) residual.erase(v);
  }
  return true;
}

// Generalized spacing by exhaustive search over bijections.
bool spacing_any_matching(const Permutation& w, const DimensionSequence& d) {
  auto blocks = block_decompose(w, d);
  for (std::size_t j = 0; j < d.pair_count(); ++j) {
    const auto& ks = blocks[j];
    auto ls = blocks[blocks.size() - 1 - j];
    std::sort(ls.begin(), ls.end());
    bool found = false;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < ks.size(); ++i) ok = ok && ls[i] < ks[i];
      found = ok;
    } while (!found && std::next_permutation(ls.begin(), ls.end()));
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST(Spacing, Examples) {
  EXPECT_TRUE(spacing(P("265431")));
  EXPECT_FALSE(spacing(P("261534")));
  EXPECT_TRUE(spacing(P("2431")));
}

TEST(SplitPairs, OddLengthHasMiddleLetter) {
  const auto p = split_pairs(P("25341"));
  EXPECT_EQ(p.k, (std::vector<int>{2, 5}));
  EXPECT_EQ(p.l, (std::vector<int>{1, 4}));
  ASSERT_TRUE(p.l_star.has_value());
  EXPECT_EQ(*p.l_star, 3);
  EXPECT_FALSE(split_pairs(P("2431")).l_star.has_value());
}

TEST(DoubleBox, Examples) {
  EXPECT_TRUE(double_box(P("256341")));
  EXPECT_FALSE(double_box(P("265431")));
  EXPECT_TRUE(double_box(P("3412")));
}

TEST(CriticalLength, Values) {
  EXPECT_EQ(critical_length(6), 9);
  EXPECT_EQ(critical_length(5), 6);
  EXPECT_EQ(critical_length(2), 1);
  EXPECT_EQ(critical_length(9), 20);
}

TEST(DoubleBox, ImpliesSpacingAndCriticalLengthExhaustively) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& w : all_permutations(n)) {
      const bool db = double_box(w);
      const bool sc = spacing(w) && length(w) == critical_length(n);
      EXPECT_EQ(db, sc) << w.str();
      if (db) {
        EXPECT_TRUE(spacing(w)) << w.str();
      }
    }
  }
}

TEST(Spacing, AtCriticalLengthForcesLastEntryBelowFirst) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& w : all_permutations(n))
      if (spacing(w) && length(w) == critical_length(n)) {
        EXPECT_EQ(w(n), w(1) - 1) << w.str();
      }
}

TEST(GeneralizedSpacing, Examples) {
  EXPECT_TRUE(generalized_spacing(P("246351"), D("1,2,2,1")));
  EXPECT_FALSE(generalized_spacing(P("146352"), D("1,2,2,1")));
  EXPECT_FALSE(generalized_spacing(Permutation::identity(6), D("1,2,2,1")));
  EXPECT_THROW(generalized_spacing(P("246351"), D("1,2,3")), precondition_error);
}

TEST(GeneralizedDoubleBox, Examples) {
  EXPECT_TRUE(generalized_double_box(P("246351"), D("1,2,2,1")));
  // (3,3) reads the same reversed, so it is a valid symmetric type; the
  // pairs (2,1), (5,3), (6,4) fail adjacency.
  EXPECT_FALSE(generalized_double_box(P("256341"), D("3,3")));
  EXPECT_FALSE(generalized_double_box(P("3412"), D("2,2")));
  EXPECT_THROW(generalized_double_box(P("256341"), D("2,4")), precondition_error);
  EXPECT_THROW(generalized_double_box(P("123456"), D("6")), precondition_error);
}

TEST(GeneralizedConditions, SortedPairingDecidesEveryPairingExhaustively) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& d : symmetric_sequences(n))
      for (const auto& w : minimal_representatives(d)) {
        EXPECT_EQ(generalized_double_box(w, d), double_box_any_pairing(w, d)) << w.str() << " (" << d.str() << ")";
        EXPECT_EQ(generalized_spacing(w, d), spacing_any_matching(w, d)) << w.str() << " (" << d.str() << ")";
        if (generalized_double_box(w, d)) {
          EXPECT_TRUE(generalized_spacing(w, d));
        }
      }
}

TEST(GeneralizedConditions, ReduceToFullFlagConditions) {
  for (int n = 2; n <= 7; ++n) {
    const auto d = DimensionSequence::full_flag(n);
    for (const auto& w : all_permutations(n)) {
      EXPECT_EQ(generalized_double_box(w, d), double_box(w));
      EXPECT_EQ(generalized_spacing(w, d), spacing(w));
    }
  }
}

TEST(CanonicalRearrangement, Examples) {
  const auto lift = canonical_rearrangement(P("246351"), D("1,2,2,1"));
  EXPECT_EQ(lift, P("246531"));
  EXPECT_TRUE(double_box(lift));
  EXPECT_EQ(length(lift), 9);
  EXPECT_EQ(canonical_rearrangement(P("2431"), DimensionSequence::full_flag(4)), P("2431"));
  EXPECT_THROW(canonical_rearrangement(Permutation::identity(6), D("1,2,2,1")), precondition_error);
}

TEST(CanonicalRearrangement, MiddleBlockFormulas) {
  EXPECT_EQ(rearranged_middle({1, 2, 3, 4}), (std::vector<int>{3, 4, 1, 2}));
  EXPECT_EQ(rearranged_middle({1, 2, 3, 4, 5}), (std::vector<int>{4, 5, 1, 2, 3}));
  EXPECT_EQ(rearranged_middle({7}), (std::vector<int>{7}));
  EXPECT_EQ(rearrangement_length_gain(D("1,4,1")), 4);
  EXPECT_EQ(rearrangement_length_gain(D("2,3,2")), 1 + 2);
  EXPECT_EQ(rearrangement_length_gain(D("1,2,2,1")), 1);
}

TEST(CanonicalRearrangement, LiftPassesDoubleBoxAndGainsTheCorrection) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& d : symmetric_sequences(n))
      for (const auto& w : minimal_representatives(d)) {
        if (!generalized_double_box(w, d)) continue;
        const auto lift = canonical_rearrangement(w, d);
        EXPECT_TRUE(double_box(lift)) << w.str() << " (" << d.str() << ")";
        EXPECT_EQ(length(lift) - length(w), rearrangement_length_gain(d)) << w.str() << " (" << d.str() << ")";
        EXPECT_EQ(min_rep(lift, d), w);
      }
}

TEST(StrictlyDecreasingGroups, Examples) {
  const auto d = D("1,4,1");
  EXPECT_TRUE(strictly_decreasing_groups(P("234561"), d, {1, 2}));
  EXPECT_FALSE(strictly_decreasing_groups(P("314562"), d, {1, 2}));
  EXPECT_TRUE(strictly_decreasing_groups(P("314562"), d, {1, 1, 1}));
  EXPECT_THROW(strictly_decreasing_groups(P("234561"), d, {1, 1}), precondition_error);
  EXPECT_THROW(strictly_decreasing_groups(P("234561"), d, {0, 3}), precondition_error);
}
