#include <gtest/gtest.h>

#include "ordpigeon/witness.hpp"
#include "test_util.hpp"

using namespace ordpigeon;
using namespace ordpigeon::test;

namespace {

std::vector<Ordinal> Os(std::initializer_list<const char*> list) {
  std::vector<Ordinal> v;
  for (const char* s : list) v.push_back(O(s));
  return v;
}

ErrorKind build_error(const char* beta, const std::vector<std::string>& entries) {
  try {
    build_counterexample(O(beta), N(entries));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "witness built for " << beta;
  return ErrorKind::PreconditionViolated;
}

}  // namespace

TEST(NatsumExpressible, Examples) {
  EXPECT_EQ(natsum_expressible(O("w*2"), Os({"w+1", "w+1"})), Os({"w", "w"}));
  EXPECT_FALSE(natsum_expressible(O("w*2+1"), Os({"w+1", "w+1"})));
  const auto parts = natsum_expressible(O("w^2+w*2"), Os({"w^2+w", "w^2"}));
  ASSERT_TRUE(parts);
  EXPECT_EQ(natural_sum((*parts)[0], (*parts)[1]), O("w^2+w*2"));
  EXPECT_LT((*parts)[0], O("w^2+w"));
  EXPECT_LT((*parts)[1], O("w^2"));
  EXPECT_FALSE(natsum_expressible(O("5"), Os({"1", "5"})));
  EXPECT_FALSE(natsum_expressible(O("0"), Os({"0"})));
}

TEST(NatsumSplit, Examples) {
  EXPECT_EQ(natsum_split(O("w*2"), Os({"w", "w"})),
            (std::vector<IntervalUnion>{{{O("0"), O("w")}}, {{O("w"), O("w*2")}}}));
  EXPECT_EQ(natsum_split(O("w^2+w*2"), Os({"w^2", "w*2"})),
            (std::vector<IntervalUnion>{{{O("0"), O("w^2")}}, {{O("w^2"), O("w^2+w*2")}}}));
  const auto pieces = natsum_split(O("w^2*2+w"), Os({"w^2+w", "w^2"}));
  EXPECT_EQ(pieces[0], (IntervalUnion{{O("0"), O("w^2")}, {O("w^2*2"), O("w^2*2+w")}}));
  EXPECT_EQ(pieces[1], (IntervalUnion{{O("w^2"), O("w^2*2")}}));
  EXPECT_EQ(order_type(pieces[0]), O("w^2+w"));
  EXPECT_EQ(order_type(pieces[1]), O("w^2"));
  EXPECT_THROW(natsum_split(O("w*3"), Os({"w", "w"})), Error);
}

TEST(BuildCounterexample, TwoSuccessorsBelowWSquared) {
  const NormalizedInstance norm = N({"w+1:2"});
  const Witness w = build_counterexample(O("w^2"), norm);
  EXPECT_EQ(w.colouring.mode, ColouringMode::Rank);
  EXPECT_EQ(w.colouring.rank_classes,
            (std::vector<IntervalUnion>{{{O("0"), O("1")}}, {{O("1"), O("2")}}}));
  ASSERT_EQ(w.certificates.size(), 2u);
  for (const ObstructionCertificate& c : w.certificates) {
    EXPECT_EQ(c.kind, CertificateKind(DerivativeEmpty{O("1")}));
  }
  EXPECT_TRUE(verify_certificates(w.colouring, norm, w.certificates));

  std::vector<ObstructionCertificate> tampered = w.certificates;
  tampered[0].kind = DerivativeEmpty{O("2")};
  EXPECT_FALSE(verify_certificates(w.colouring, norm, tampered));
}

TEST(BuildCounterexample, RankColouringOfWCubed) {
  const NormalizedInstance norm = N({"w+1:3"});
  const Witness w = build_counterexample(O("w^3"), norm);
  const RankColouring& col = w.colouring;
  ASSERT_EQ(col.rank_classes.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(col.rank_classes[i], (IntervalUnion{{Ordinal(i), Ordinal(i + 1)}}));
  }
  EXPECT_EQ(eval_colouring(col, O("w*3+2")), 0u);
  EXPECT_EQ(eval_colouring(col, O("w^2*5")), 2u);
  EXPECT_THROW(eval_colouring(col, O("w^3")), Error);
  EXPECT_TRUE(verify_certificates(col, norm, w.certificates));
}

TEST(BuildCounterexample, Cofinality) {
  const NormalizedInstance norm = N({"w_1+1", "w+1"});
  const Witness w = build_counterexample(O("w^w*7+3"), norm);
  EXPECT_EQ(w.colouring.mode, ColouringMode::Cofinality);
  EXPECT_TRUE(verify_certificates(w.colouring, norm, w.certificates));
  const Witness big = build_counterexample(O("w_1*3"), norm);
  EXPECT_EQ(eval_colouring(big.colouring, O("w_1*2")), 1u);
  EXPECT_EQ(eval_colouring(big.colouring, O("w^w")), 0u);
  EXPECT_EQ(eval_colouring(big.colouring, O("w_1+1")), 0u);
}

TEST(BuildCounterexample, DistinguishedColour) {
  // P = w^2*2, so w^2+1 is the largest failing beta.
  const NormalizedInstance norm = N({"w*2:2"});
  const Witness w = build_counterexample(O("w^2+1"), norm);
  EXPECT_TRUE(verify_certificates(w.colouring, norm, w.certificates));
  int not_embeddable = 0;
  for (const ObstructionCertificate& c : w.certificates) {
    not_embeddable += std::holds_alternative<DerivativeNotEmbeddable>(c.kind) ? 1 : 0;
  }
  EXPECT_EQ(not_embeddable, 1);
}

TEST(BuildCounterexample, Powers) {
  const NormalizedInstance norm = N({"w^w", "w^2"});
  for (const char* beta : {"5", "w^3*2+w", "w^7*4+1"}) {
    const Witness w = build_counterexample(O(beta), norm);
    EXPECT_TRUE(verify_certificates(w.colouring, norm, w.certificates)) << beta;
  }
}

TEST(BuildCounterexample, Errors) {
  EXPECT_EQ(build_error("w^3+1", {"w+1:3"}), ErrorKind::NotBelowThreshold);
  EXPECT_EQ(build_error("w^5", {"w+1:3"}), ErrorKind::NotBelowThreshold);
  EXPECT_EQ(build_error("w^2", {"w_1", "17"}), ErrorKind::OutOfScope);
  EXPECT_EQ(build_error("w^2", {"w_1:2"}), ErrorKind::OutOfScope);
}

TEST(VerifyCertificates, RejectsForeignTargets) {
  const NormalizedInstance norm = N({"w+1:2"});
  Witness w = build_counterexample(O("w^2"), norm);
  // A colour may not claim a target the instance does not have.
  w.colouring.colour_targets[1] = O("w+2");
  w.certificates[1].claimed_target = O("w+2");
  EXPECT_FALSE(verify_certificates(w.colouring, norm, w.certificates));
}

TEST(VerifyCertificates, RejectsBrokenPartition) {
  const NormalizedInstance norm = N({"w+1:2"});
  Witness w = build_counterexample(O("w^2"), norm);
  w.colouring.rank_classes[1] = {{O("1"), O("3")}};
  EXPECT_FALSE(verify_certificates(w.colouring, norm, w.certificates));
}

TEST(VerifyCertificates, RejectsLargerDomain) {
  const NormalizedInstance norm = N({"w+1:2"});
  Witness w = build_counterexample(O("w^2"), norm);
  w.colouring.domain = O("w^2+1");
  EXPECT_FALSE(verify_certificates(w.colouring, norm, w.certificates));
}

TEST(FailingBeta, Examples) {
  EXPECT_EQ(failing_beta(O("w^3+1")), O("w^3"));
  EXPECT_EQ(failing_beta(O("w^2*2")), O("w^2+1"));
  EXPECT_EQ(failing_beta(O("6")), O("5"));
  EXPECT_EQ(failing_beta(O("w^3")), O("w^2*2+1"));
  EXPECT_EQ(failing_beta(O("w^w")), O("w^2*2+1"));
  EXPECT_EQ(failing_beta(O("w^(w*3)")), O("w^(w*2+2)*2+1"));
  EXPECT_THROW(failing_beta(Ordinal()), Error);
}
