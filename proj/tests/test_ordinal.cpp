#include <gtest/gtest.h>

#include <vector>

#include "ordpigeon/oracle.hpp"
#include "ordpigeon/ordinal.hpp"
#include "test_util.hpp"

using namespace ordpigeon;
using ordpigeon::test::O;

namespace {

Ordinal mr(std::initializer_list<const char*> list) {
  std::vector<Ordinal> v;
  for (const char* s : list) v.push_back(O(s));
  return mr_sum(std::span<const Ordinal>(v));
}

}  // namespace

TEST(Compare, Examples) {
  EXPECT_LT(O("w"), O("w+1"));
  EXPECT_LT(O("w^w*2"), O("w^(w+1)"));
  EXPECT_GT(O("w_1"), O("w^(w^w)"));
  EXPECT_EQ(compare(O("w*2"), O("w*2")), std::strong_ordering::equal);
}

TEST(Compare, InitialOrdinals) {
  EXPECT_LT(O("w^(w_1+1)"), O("w_2"));
  EXPECT_LT(O("w_1*5"), O("w_2"));
  EXPECT_LT(O("w_2"), O("w_(w)"));
  EXPECT_LT(O("w_(w)"), O("w_(w+1)"));
  EXPECT_EQ(O("w^(w_1)"), O("w_1"));
  EXPECT_NE(O("w_1"), O("w_2"));
}

TEST(Add, Examples) {
  EXPECT_EQ(O("1") + O("w"), O("w"));
  EXPECT_EQ(O("w^2+w") + O("w^2*2"), O("w^2*3"));
  EXPECT_EQ(O("w*2") + O("3"), O("w*2+3"));
  EXPECT_EQ(O("w_1+5") + O("w_1"), O("w_1*2"));
}

TEST(Mul, Examples) {
  EXPECT_EQ(O("w+1") * O("2"), O("w*2+1"));
  EXPECT_EQ(O("w_1+1") * O("w_2"), O("w_2"));
  EXPECT_EQ(O("w^w*3+1") * O("w"), O("w^(w+1)"));
  EXPECT_EQ(O("w") * O("w_1"), O("w_1"));
  EXPECT_EQ(O("w_1") * O("w"), O("w^(w_1+1)"));
}

TEST(Mul, LimitOfFiniteMultiples) {
  // (w^w*3+1)*n = w^w*(3n)+1, so the supremum over n is w^(w+1).
  const Ordinal a = O("w^w*3+1");
  for (std::uint64_t n = 1; n < 6; ++n) {
    EXPECT_EQ(a * Ordinal(n), O("w^w*" + std::to_string(3 * n) + "+1"));
    EXPECT_LT(a * Ordinal(n), a * O("w"));
  }
}

TEST(Mul, OverflowIsReported) {
  const Ordinal big(std::numeric_limits<std::uint64_t>::max());
  try {
    (void)(big * Ordinal(2));
    FAIL() << "expected overflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnrepresentableInput);
  }
}

TEST(OmegaPow, Examples) {
  EXPECT_EQ(omega_pow(Ordinal()), Ordinal(1));
  EXPECT_EQ(omega_pow(Exponent::aleph(Ordinal(1))), O("w_1"));
  EXPECT_EQ(omega_pow(O("w+1")), O("w^(w+1)"));
  EXPECT_EQ(omega_pow(O("w_1")), O("w_1"));
}

TEST(LeftSubtract, Examples) {
  EXPECT_EQ(left_subtract(O("w"), O("w*2")), O("w"));
  EXPECT_EQ(left_subtract(O("w^2+w"), O("w^2+w*3+1")), O("w*2+1"));
  EXPECT_EQ(left_subtract(O("5"), O("w")), O("w"));
  try {
    left_subtract(O("w+1"), O("w"));
    FAIL() << "expected underflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Underflow);
  }
}

TEST(NaturalSum, Examples) {
  EXPECT_EQ(natural_sum(O("w"), O("w")), O("w*2"));
  EXPECT_EQ(natural_sum(O("w^2+1"), O("w*3")), O("w^2+w*3+1"));
  EXPECT_EQ(natural_sum(O("w^w+w"), O("w^w*2")), O("w^w*3+w"));
  EXPECT_EQ(natural_multiple(O("w+1"), 3), O("w*3+3"));
  EXPECT_EQ(natural_multiple(O("w"), 0), Ordinal());
}

TEST(CbRank, Examples) {
  EXPECT_EQ(cb_rank(O("w^2*3+w*2")), Ordinal(1));
  EXPECT_EQ(cb_rank(Ordinal()), Ordinal());
  EXPECT_EQ(cb_rank(O("w^w*5")), O("w"));
  EXPECT_EQ(cb_rank(O("w_1*2")), O("w_1"));
}

TEST(Cofinality, Examples) {
  EXPECT_EQ(cofinality(O("w^(w*2)")), O("w"));
  EXPECT_EQ(cofinality(O("w_1")), O("w_1"));
  EXPECT_EQ(cofinality(O("w^(w_1+1)")), O("w"));
  EXPECT_EQ(cofinality(Ordinal()), Ordinal());
  EXPECT_EQ(cofinality(O("w+3")), Ordinal(1));
  EXPECT_EQ(cofinality(O("w_1*2")), O("w_1"));
  EXPECT_EQ(cofinality(O("w_(w)")), O("w"));
  EXPECT_EQ(cofinality(O("w_(w_1)")), O("w_1"));
  EXPECT_EQ(cofinality(O("w^(w_2)")), O("w_2"));
  EXPECT_EQ(cofinality(O("w^(w_2*2)")), O("w_2"));
}

TEST(PowerOfOmega, Examples) {
  EXPECT_TRUE(is_power_of_omega(O("w^w")));
  EXPECT_FALSE(is_power_of_omega(O("w*2")));
  EXPECT_TRUE(is_power_of_omega(O("w_2")));
  EXPECT_FALSE(is_power_of_omega(O("w_2+1")));
}

TEST(LeadingDecomposition, Examples) {
  auto d = leading_decomposition(O("w^2*3+5"));
  EXPECT_EQ(d.exponent, Ordinal(2));
  EXPECT_EQ(d.multiple, 3u);
  EXPECT_EQ(d.remainder, Ordinal(5));
  d = leading_decomposition(O("w"));
  EXPECT_EQ(d.exponent, Ordinal(1));
  EXPECT_EQ(d.multiple, 1u);
  EXPECT_EQ(d.remainder, Ordinal());
  d = leading_decomposition(O("w^w*2+w^3"));
  EXPECT_EQ(d.exponent, O("w"));
  EXPECT_EQ(d.multiple, 2u);
  EXPECT_EQ(d.remainder, O("w^3"));
  EXPECT_THROW(leading_decomposition(Ordinal()), Error);
}

TEST(BiembedCanonical, Examples) {
  EXPECT_EQ(biembed_canonical(O("w*2+3")), O("w*2+1"));
  EXPECT_EQ(biembed_canonical(O("w^2")), O("w^2"));
  EXPECT_EQ(biembed_canonical(O("w^3*4+w*2+1")), O("w^3*4+1"));
  EXPECT_EQ(biembed_canonical(O("7")), O("7"));
  EXPECT_EQ(biembed_canonical(O("w_1*2+5")), O("w_1*2+1"));
}

TEST(OrderReinforcing, Examples) {
  EXPECT_TRUE(is_order_reinforcing(O("w^2*3+1")));
  EXPECT_FALSE(is_order_reinforcing(O("w*2")));
  EXPECT_TRUE(is_order_reinforcing(O("7")));
  EXPECT_TRUE(is_order_reinforcing(O("w^w")));
  EXPECT_FALSE(is_order_reinforcing(O("w+2")));
}

TEST(MrSum, Examples) {
  EXPECT_EQ(mr({"w*2", "w*2"}), O("w*3"));
  EXPECT_EQ(mr({"w^w+3", "1"}), O("w^w+3"));
  EXPECT_EQ(mr({"3", "4"}), O("6"));
}

TEST(MrSum, ValuesConfirmedByBruteForce) {
  struct Case {
    std::vector<const char*> bounds;
    const char* value;
  };
  const std::vector<Case> cases = {
      {{"w+1", "w+1"}, "w*2+1"},
      {{"w^2*3+w", "w^2*2+5"}, "w^2*5+w"},
      {{"w", "w"}, "w"},
      {{"w", "2"}, "w"},
      {{"1", "2"}, "2"},
  };
  for (const Case& c : cases) {
    std::vector<Ordinal> b;
    for (const char* s : c.bounds) b.push_back(O(s));
    EXPECT_TRUE(mr_sum_bruteforce_check(b, O(c.value), 50)) << c.value;
    EXPECT_EQ(mr_sum(std::span<const Ordinal>(b)), O(c.value)) << c.value;
  }
}

TEST(MrSum, Weighted) {
  const std::vector<WeightedOrdinal> w = {{O("w+1"), 3}};
  EXPECT_EQ(mr_sum(std::span<const WeightedOrdinal>(w)), mr({"w+1", "w+1", "w+1"}));
}

TEST(POrd, Examples) {
  EXPECT_EQ(p_ord(std::vector<Ordinal>{O("3"), O("4")}), O("6"));
  EXPECT_EQ(p_ord(std::vector<Ordinal>{O("w"), O("w")}), O("w"));
  EXPECT_EQ(p_ord(std::vector<Ordinal>{O("w+1"), O("w+1")}), O("w*2+1"));
}

TEST(Cardinal, SuccessorAndOrdinal) {
  EXPECT_EQ(card_successor(Cardinal::finite(2)), Cardinal::finite(3));
  EXPECT_EQ(card_successor(Cardinal::aleph(Ordinal(0))), Cardinal::aleph(Ordinal(1)));
  EXPECT_EQ(card_successor(Cardinal::aleph(O("w"))), Cardinal::aleph(O("w+1")));
  EXPECT_EQ(ord_of_card(Cardinal::finite(5)), Ordinal(5));
  EXPECT_EQ(ord_of_card(Cardinal::aleph(Ordinal(0))), O("w"));
  EXPECT_EQ(ord_of_card(Cardinal::aleph(Ordinal(1))), O("w_1"));
  EXPECT_LT(Cardinal::finite(1000), Cardinal::aleph(Ordinal(0)));
  EXPECT_LT(Cardinal::aleph(Ordinal(1)), Cardinal::aleph(Ordinal(2)));
  EXPECT_EQ(card_add(Cardinal::finite(2), Cardinal::aleph(Ordinal(0))),
            Cardinal::aleph(Ordinal(0)));
}

TEST(DerivedOrderType, Examples) {
  // Points of rank >= 1 below w^2+1: w, w*2, ..., w^2.
  EXPECT_EQ(derived_order_type(O("w^2+1"), Ordinal(1)), O("w+1"));
  EXPECT_EQ(derived_order_type(O("w^2"), Ordinal(2)), Ordinal());
  EXPECT_EQ(derived_order_type(O("w^3*2"), Ordinal(1)), O("w^2*2"));
  EXPECT_EQ(derived_order_type(O("w*3+2"), Ordinal(0)), O("w*3+2"));
}

TEST(DivideByOmegaPower, Examples) {
  const OmegaPowerDivision d = divide_by_omega_power(O("w^3*2+w^2+5"), Ordinal(2));
  EXPECT_EQ(d.quotient, O("w*2+1"));
  EXPECT_EQ(d.remainder, Ordinal(5));
}
