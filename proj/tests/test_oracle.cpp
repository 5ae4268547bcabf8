#include <gtest/gtest.h>

#include "ordpigeon/oracle.hpp"
#include "test_util.hpp"

using namespace ordpigeon;
using namespace ordpigeon::test;

TEST(FiniteArrow, Examples) {
  EXPECT_TRUE(finite_arrow_check(6, {3, 4}));
  EXPECT_FALSE(finite_arrow_check(5, {3, 4}));
  EXPECT_TRUE(finite_arrow_check(1, {1, 1}));
  EXPECT_FALSE(finite_arrow_check(0, {1}));
}

TEST(FiniteArrow, TooLarge) {
  try {
    finite_arrow_check(40, {30, 30, 30});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Enumerate, Examples) {
  const std::vector<Ordinal> small = enumerate_ordinals_below({O("1"), 2, 2});
  std::vector<Ordinal> expected;
  for (const char* s : {"0", "1", "2", "w", "w+1", "w+2", "w*2", "w*2+1", "w*2+2"}) {
    expected.push_back(O(s));
  }
  EXPECT_EQ(small, expected);
  EXPECT_EQ(enumerate_ordinals_below({O("2"), 2, 3}).size(), 27u);
}

TEST(Enumerate, InfiniteExponentBound) {
  // Exponents are the single-monomial ordinals <= w: 0, 1, w.
  const std::vector<Ordinal> all = enumerate_ordinals_below({O("w"), 1, 1});
  std::vector<Ordinal> expected = {O("0"), O("1"), O("w"), O("w^w")};
  EXPECT_EQ(all, expected);
}

TEST(MrSumCheck, Examples) {
  EXPECT_TRUE(mr_sum_bruteforce_check({O("w+1"), O("w+1")}, O("w*2+1"), 40));
  EXPECT_FALSE(mr_sum_bruteforce_check({O("w+1"), O("w+1")}, O("w*2"), 40));
  EXPECT_TRUE(mr_sum_bruteforce_check({O("w^2+w"), O("1")}, O("w^2+w"), 10));
  EXPECT_FALSE(mr_sum_bruteforce_check({O("3"), O("4")}, O("7"), 10));
  EXPECT_TRUE(mr_sum_bruteforce_check({O("3"), O("4")}, O("6"), 10));
}

TEST(SubfamilyFormula, Families) {
  EXPECT_EQ(subfamily_formula(I({"w+1:3"})), O("w^3+1"));
  EXPECT_EQ(subfamily_formula(I({"w^2:2"})), O("w^3"));
  EXPECT_EQ(subfamily_formula(I({"w^w", "w+1"})), O("w^w"));
  EXPECT_EQ(subfamily_formula(I({"w*2+1", "w*3+1"})), O("w^2*4+1"));
  EXPECT_EQ(subfamily_formula(I({"3", "4"})), O("6"));
  EXPECT_FALSE(subfamily_formula(I({"w*2:2"})));
  EXPECT_FALSE(subfamily_formula(I({"w_1", "2"})));
  EXPECT_FALSE(subfamily_formula(I({"w+1:aleph_0"})));
}

TEST(CrossCheck, Grids) {
  std::vector<Instance> powers, successors, multiples;
  for (const char* a : {"1", "2", "w", "w+1", "w^2", "w^2*2+1"}) {
    for (const char* b : {"1", "3", "w", "w*2"}) {
      const Ordinal x = O(a);
      const Ordinal y = O(b);
      powers.push_back(Instance{{Entry{omega_pow(x)}, Entry{omega_pow(y)}}});
      successors.push_back(
          Instance{{Entry{add(omega_pow(x), Ordinal(1))}, Entry{add(omega_pow(y), Ordinal(1))}}});
      multiples.push_back(Instance{{Entry{add(mul(omega_pow(x), Ordinal(2)), Ordinal(1))},
                                    Entry{add(mul(omega_pow(y), Ordinal(3)), Ordinal(1))},
                                    Entry{Ordinal(4)}}});
    }
  }
  for (const auto* grid : {&powers, &successors, &multiples}) {
    const CrossCheckReport r = cross_check_p_top(*grid);
    EXPECT_TRUE(r.mismatches.empty());
    EXPECT_EQ(r.checked, grid->size());
  }
}
