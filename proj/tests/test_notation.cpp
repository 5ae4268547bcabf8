#include <gtest/gtest.h>

#include "ordpigeon/generators.hpp"
#include "ordpigeon/notation.hpp"

using namespace ordpigeon;

namespace {

std::size_t syntax_error_position(std::string_view text) {
  try {
    parse_ordinal(text);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no syntax error for " << text;
  return 0;
}

}  // namespace

TEST(Parse, Examples) {
  const Ordinal w = Ordinal::omega();
  EXPECT_EQ(parse_ordinal("w^w*2+1"), add(mul(omega_pow(w), Ordinal(2)), Ordinal(1)));
  EXPECT_EQ(parse_ordinal("w_1+1"), add(Ordinal::initial(Ordinal(1)), Ordinal(1)));
  EXPECT_EQ(parse_ordinal("0"), Ordinal());
  EXPECT_EQ(parse_ordinal(" w ^ 2 * 3 "), mul(omega_pow(Ordinal(2)), Ordinal(3)));
  EXPECT_EQ(parse_ordinal("w^(w^w)"), omega_pow(omega_pow(w)));
  EXPECT_EQ(parse_ordinal("w_(w+1)"), Ordinal::initial(add(w, Ordinal(1))));
  EXPECT_EQ(parse_ordinal("w^w_1"), Ordinal::initial(Ordinal(1)));
  EXPECT_EQ(parse_ordinal("w_w_1"), Ordinal::initial(Ordinal::initial(Ordinal(1))));
}

TEST(Parse, NonCanonicalInputIsFlagged) {
  const ParsedOrdinal p = parse_ordinal_ex("1+w");
  EXPECT_EQ(p.value, Ordinal::omega());
  EXPECT_TRUE(p.non_canonical);
  EXPECT_TRUE(parse_ordinal_ex("w+w").non_canonical);
  EXPECT_FALSE(parse_ordinal_ex("w*2").non_canonical);
}

TEST(Parse, SyntaxErrors) {
  EXPECT_THROW(parse_ordinal("w^^2"), SyntaxError);
  EXPECT_EQ(syntax_error_position("w^^2"), 2u);
  EXPECT_EQ(syntax_error_position("w^w^w"), 3u);
  EXPECT_EQ(syntax_error_position(""), 0u);
  EXPECT_EQ(syntax_error_position("w+"), 2u);
  EXPECT_EQ(syntax_error_position("w*w"), 2u);
  EXPECT_EQ(syntax_error_position("(w)"), 0u);
  EXPECT_EQ(syntax_error_position("w^(2"), 4u);
}

TEST(Parse, HugeNumbersAreUnrepresentable) {
  try {
    parse_ordinal("99999999999999999999");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnrepresentableInput);
  }
}

TEST(Format, Examples) {
  EXPECT_EQ(format_ordinal(parse_ordinal("w^2*4+1")), "w^2*4+1");
  EXPECT_EQ(format_ordinal(Ordinal::initial(Ordinal(1))), "w_1");
  EXPECT_EQ(format_ordinal(Ordinal()), "0");
  EXPECT_EQ(format_ordinal(parse_ordinal("w^(w+1)")), "w^(w+1)");
  EXPECT_EQ(format_ordinal(parse_ordinal("w_(w+1)*2")), "w_(w+1)*2");
  EXPECT_EQ(format_ordinal(parse_ordinal("w^(w_1+1)")), "w^(w_1+1)");
  EXPECT_EQ(format_ordinal(parse_ordinal("w^w"), Style::Unicode), "ω^ω");
  EXPECT_EQ(format_ordinal(parse_ordinal("w^2*4+1"), Style::Unicode), "ω²·4+1");
  EXPECT_EQ(format_ordinal(parse_ordinal("w_1"), Style::Unicode), "ω₁");
}

TEST(Cardinal, ParseAndFormat) {
  EXPECT_EQ(parse_cardinal("3"), Cardinal::finite(3));
  EXPECT_EQ(parse_cardinal("aleph_0"), Cardinal::aleph(Ordinal(0)));
  EXPECT_EQ(parse_cardinal("aleph_(w+1)"), Cardinal::aleph(parse_ordinal("w+1")));
  EXPECT_EQ(format_cardinal(Cardinal::aleph(Ordinal(1))), "aleph_1");
  EXPECT_EQ(format_cardinal(Cardinal::aleph(Ordinal(1)), Style::Unicode), "ℵ₁");
  EXPECT_THROW(parse_cardinal("w"), SyntaxError);
}

TEST(Entry, ParseAndFormat) {
  const Entry e = parse_entry("w+1:3");
  EXPECT_EQ(e.target, parse_ordinal("w+1"));
  EXPECT_EQ(e.multiplicity, Cardinal::finite(3));
  EXPECT_EQ(parse_entry("2").multiplicity, Cardinal::finite(1));
  EXPECT_EQ(parse_entry("2:aleph_0").multiplicity, Cardinal::aleph(Ordinal(0)));
  EXPECT_EQ(format_entry(parse_entry("w_1:2")), "w_1:2");
  try {
    parse_entry("w:x");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Format, RoundTripOnGeneratedTerms) {
  Generator g(11);
  for (int i = 0; i < 10000; ++i) {
    const Ordinal a = g.with_atoms(2, 4, 12);
    ASSERT_EQ(parse_ordinal(format_ordinal(a)), a) << format_ordinal(a);
  }
}
