#include <gtest/gtest.h>

#include "ordpigeon/properties.hpp"

using namespace ordpigeon;

namespace {

void expect_all_pass(const std::vector<PropertyOutcome>& outcomes) {
  ASSERT_FALSE(outcomes.empty());
  for (const PropertyOutcome& o : outcomes) {
    EXPECT_TRUE(o.passed()) << o.suite << " / " << o.name << ": " << o.failures << " of "
                            << o.cases << " failed; first: " << o.first_failure;
    EXPECT_GT(o.cases, 0u) << o.name;
  }
}

}  // namespace

TEST(Properties, Ordinal) { expect_all_pass(ordinal_properties()); }
TEST(Properties, Engine) { expect_all_pass(engine_properties()); }
TEST(Properties, Witness) { expect_all_pass(witness_properties()); }
TEST(Properties, Oracle) { expect_all_pass(oracle_properties()); }
TEST(Properties, Notation) { expect_all_pass(notation_properties()); }

TEST(Properties, OtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    PropertyOptions opts;
    opts.seed = seed;
    opts.cases = 2000;
    opts.heavy_cases = 500;
    expect_all_pass(all_properties(opts));
  }
}
