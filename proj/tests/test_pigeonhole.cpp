#include <gtest/gtest.h>

#include "ordpigeon/pigeonhole.hpp"
#include "test_util.hpp"

using namespace ordpigeon;
using namespace ordpigeon::test;

namespace {

CasePath path_of(const std::vector<std::string>& entries) { return classify_case(N(entries)); }

Ordinal ptop(const std::vector<std::string>& entries) { return value(p_top(I(entries))); }

}  // namespace

TEST(Normalize, DropsOnes) {
  const Normalization n = normalize(I({"w+1:2", "1:aleph_0"}));
  const auto& norm = std::get<NormalizedInstance>(n);
  ASSERT_EQ(norm.entries.size(), 1u);
  EXPECT_EQ(norm.entries[0], (Entry{O("w+1"), Cardinal::finite(2)}));
  EXPECT_EQ(norm.kappa, Cardinal::finite(2));
}

TEST(Normalize, ShortCircuits) {
  const auto zero = std::get<ShortCircuit>(normalize(I({"0", "w_1:5"})));
  EXPECT_EQ(zero.result, PigeonholeResult(Exists{Ordinal()}));
  EXPECT_EQ(zero.path, CasePath::Zero);
  const auto ones = std::get<ShortCircuit>(normalize(I({"1:aleph_0"})));
  EXPECT_EQ(ones.result, PigeonholeResult(Exists{Ordinal(1)}));
  EXPECT_EQ(ones.path, CasePath::AllOnes);
}

TEST(Normalize, EmptyInstances) {
  EXPECT_THROW(normalize(Instance{}), Error);
  EXPECT_THROW(normalize(I({"w:0"})), Error);
  // Zero multiplicity contributes no index.
  EXPECT_EQ(p_top(I({"w_1+1:0", "w+1:2"})), p_top(I({"w+1:2"})));
}

TEST(Classify, Examples) {
  EXPECT_EQ(path_of({"w_1+1", "w+1"}), CasePath::C1);
  EXPECT_EQ(path_of({"w_1:2"}), CasePath::C3);
  EXPECT_EQ(path_of({"w*2+1", "w*3+1"}), CasePath::C6cII);
  EXPECT_EQ(path_of({"w_1", "17"}), CasePath::C4);
  EXPECT_EQ(path_of({"2:aleph_0"}), CasePath::C5);
  EXPECT_EQ(path_of({"3", "4"}), CasePath::C6a);
  EXPECT_EQ(path_of({"w", "w*2"}), CasePath::C6b);
  EXPECT_EQ(path_of({"w*2:2"}), CasePath::C6cI);
  EXPECT_EQ(path_of({"w_1+1", "2"}), CasePath::C2cII);
  EXPECT_EQ(path_of({"w_1*2+5"}), CasePath::C2cI);
  // One index: two copies of w_1+1 are two targets >= w+1.
  EXPECT_EQ(path_of({"w_1+1:2"}), CasePath::C1);
}

TEST(PTop, Examples) {
  EXPECT_EQ(ptop({"w+1:3"}), O("w^3+1"));
  EXPECT_EQ(p_top(I({"w_1+1", "w+1"})), PigeonholeResult(Infinite{}));
  EXPECT_EQ(ptop({"w_1", "17"}), O("w_1"));
  EXPECT_EQ(ptop({"2:aleph_0"}), O("w_1"));
  EXPECT_EQ(ptop({"w_1+1", "2"}), O("w_1*2+1"));
  EXPECT_EQ(ptop({"w*2:2"}), O("w^2*2"));
}

TEST(PTop, Independent) {
  const auto r = std::get<Independent>(p_top(I({"w_1:2"})));
  EXPECT_EQ(r.zfc_lower, O("w_2"));
  EXPECT_NE(r.consistent_infinite.find("Prikry"), std::string::npos);
  EXPECT_NE(r.consistent_equal_lower.find("supercompact"), std::string::npos);
  EXPECT_NE(r.equiconsistency.find("Mahlo"), std::string::npos);
  // Lower bound max{w_2, kappa^+}.
  EXPECT_EQ(std::get<Independent>(p_top(I({"w_1:2", "2:aleph_2"}))).zfc_lower, O("w_3"));
}

TEST(PTop, InfiniteKappa) {
  EXPECT_EQ(ptop({"w_1", "3:aleph_1"}), O("w_2"));
  EXPECT_EQ(ptop({"w^w+1:aleph_0"}), O("w_1"));
  EXPECT_EQ(ptop({"w:aleph_(w)"}), O("w_(w+1)"));
}

TEST(PTop, FiniteTargets) {
  EXPECT_EQ(ptop({"3", "4"}), O("6"));
  EXPECT_EQ(ptop({"2:5"}), O("6"));
  EXPECT_EQ(ptop({"1", "1"}), O("1"));
}

TEST(PTop, SingleUncountableTarget) {
  // A single colour must contain a copy of the target itself, up to
  // biembeddability.
  EXPECT_EQ(ptop({"w_1*2+5"}), O("w_1*2+1"));
  EXPECT_EQ(ptop({"w_2*3"}), O("w_2*3"));
}

TEST(RelationHolds, Examples) {
  EXPECT_EQ(relation_holds(O("w^3+1"), I({"w+1:3"})), Verdict::Holds);
  EXPECT_EQ(relation_holds(O("w^3"), I({"w+1:3"})), Verdict::Fails);
  EXPECT_EQ(relation_holds(O("w_1*5"), I({"w_1:2"})), Verdict::Fails);
  EXPECT_EQ(relation_holds(O("w_3"), I({"w_1:2"})), Verdict::IndependentUnknown);
  EXPECT_EQ(relation_holds(O("w_3"), I({"w_1+1", "w+1"})), Verdict::Fails);
}

TEST(MinimalOmegaPowerBound, Examples) {
  EXPECT_EQ(minimal_omega_power_bound(O("w*2")), O("2"));
  EXPECT_EQ(minimal_omega_power_bound(O("w^w")), O("w"));
  EXPECT_EQ(minimal_omega_power_bound(O("5")), O("1"));
  EXPECT_EQ(minimal_omega_power_bound(O("1")), O("0"));
  EXPECT_THROW(minimal_omega_power_bound(Ordinal()), Error);
}

TEST(Case6Decompose, Examples) {
  Case6Decomposition d = case6_decompose(O("w*3"));
  EXPECT_EQ(d.beta, O("1"));
  EXPECT_EQ(d.m, 2u);
  EXPECT_TRUE(d.exact_multiple);
  d = case6_decompose(O("w*2+5"));
  EXPECT_EQ(d.beta, O("1"));
  EXPECT_EQ(d.m, 2u);
  EXPECT_FALSE(d.exact_multiple);
  d = case6_decompose(O("7"));
  EXPECT_EQ(d.beta, O("0"));
  EXPECT_EQ(d.m, 7u);
  EXPECT_FALSE(d.exact_multiple);
  try {
    case6_decompose(O("w^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PowerOfOmegaInput);
  }
}

TEST(Case6Power, Examples) {
  EXPECT_EQ(p_top_case6_power(N({"w^w:2"})), O("w^w"));
  EXPECT_EQ(p_top_case6_power(N({"w^2:2"})), O("w^3"));
  EXPECT_EQ(p_top_case6_power(N({"w^w", "w^2"})), O("w^w"));
  EXPECT_EQ(p_top_case6_power(N({"w", "w*2"})), O("w^2"));
  EXPECT_THROW(p_top_case6_power(N({"w+1", "3"})), Error);
}

TEST(Case6Multiples, Examples) {
  EXPECT_EQ(p_top_case6_multiples(N({"w*2+1", "w*3+1"})), O("w^2*4+1"));
  EXPECT_EQ(p_top_case6_multiples(N({"w*2:2"})), O("w^2*2"));
  EXPECT_EQ(p_top_case6_multiples(N({"w^2*2", "w*2+1"})), O("w^3*2+1"));
  EXPECT_THROW(p_top_case6_multiples(N({"3", "4"})), Error);
  EXPECT_THROW(p_top_case6_multiples(N({"w", "w+1"})), Error);
}

TEST(Case6Multiples, Hand) {
  // Successors of powers: w^(a # b) + 1.
  EXPECT_EQ(ptop({"w^2+1", "w^w+1"}), O("w^(w+2)+1"));
  // Finite targets add to the multiplier.
  EXPECT_EQ(ptop({"w+1", "5"}), O("w*5+1"));
}

TEST(ExplainCase, TrailMentionsFormula) {
  const CaseExplanation ex = explain_case(I({"w+1:3"}));
  EXPECT_EQ(ex.path, CasePath::C6cII);
  ASSERT_FALSE(ex.trail.empty());
  EXPECT_EQ(ex.result, PigeonholeResult(Exists{O("w^3+1")}));
}
