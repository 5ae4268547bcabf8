#include "ordpigeon/notation.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace ordpigeon {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_whole_ordinal() {
    Ordinal v = ordinal();
    expect_end();
    return v;
  }

  Cardinal parse_whole_cardinal() {
    skip_space();
    Cardinal c;
    if (consume("aleph_")) {
      c = Cardinal::aleph(atom());
    } else if (at_digit()) {
      c = Cardinal::finite(nat());
    } else {
      fail("expected cardinal");
    }
    expect_end();
    return c;
  }

 private:
  Ordinal ordinal() {
    Ordinal acc = term();
    while (consume("+")) acc = add(acc, term());
    return acc;
  }

  Ordinal term() {
    Ordinal b = base();
    if (consume("*")) {
      if (!at_digit()) fail("expected natural number after '*'");
      b = mul(b, Ordinal(nat()));
    }
    return b;
  }

  Ordinal base() {
    skip_space();
    if (at_digit()) return Ordinal(nat());
    if (consume("w_")) return Ordinal::initial(atom());
    if (consume("w")) {
      if (consume("^")) return omega_pow(atom());
      return Ordinal::omega();
    }
    fail("expected 'w', 'w_' or a natural number");
  }

  Ordinal atom() {
    skip_space();
    if (at_digit()) return Ordinal(nat());
    if (consume("(")) {
      Ordinal v = ordinal();
      if (!consume(")")) fail("expected ')'");
      return v;
    }
    if (consume("w_")) return Ordinal::initial(atom());
    if (consume("w")) return Ordinal::omega();
    fail("expected exponent or index");
  }

  std::uint64_t nat() {
    skip_space();
    if (!at_digit()) fail("expected natural number");
    std::uint64_t v = 0;
    while (at_digit()) {
      auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw Error(ErrorKind::UnrepresentableInput, "integer literal too large");
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string digits(std::uint64_t n, const char* const* table) {
  std::string plain = std::to_string(n);
  std::string out;
  for (char c : plain) out += table[c - '0'];
  return out;
}

std::string format_atom(const Ordinal& x, Style style);

std::string omega_symbol(Style style) { return style == Style::Ascii ? "w" : "ω"; }

std::string format_initial(const Ordinal& index, Style style) {
  if (style == Style::Unicode && index.is_finite()) {
    return "ω" + digits(index.finite_value(), kSubscripts);
  }
  return omega_symbol(style) + "_" + format_atom(index, style);
}

std::string format_term(const Term& t, Style style) {
  if (t.exponent.is_zero()) return std::to_string(t.coefficient);
  std::string out;
  if (t.exponent.is_aleph()) {
    out = format_initial(t.exponent.aleph_index(), style);
  } else if (t.exponent.is_finite() && t.exponent.finite_value() == 1) {
    out = omega_symbol(style);
  } else if (style == Style::Unicode && t.exponent.is_finite()) {
    out = "ω" + digits(t.exponent.finite_value(), kSuperscripts);
  } else {
    out = omega_symbol(style) + "^" + format_atom(t.exponent.value(), style);
  }
  if (t.coefficient > 1) {
    out += style == Style::Ascii ? "*" : "·";
    out += std::to_string(t.coefficient);
  }
  return out;
}

std::string format_atom(const Ordinal& x, Style style) {
  if (x.is_finite()) return std::to_string(x.finite_value());
  if (x == Ordinal::omega()) return omega_symbol(style);
  if (x.size() == 1 && x.terms()[0].coefficient == 1 && x.terms()[0].exponent.is_aleph()) {
    return format_initial(x.terms()[0].exponent.aleph_index(), style);
  }
  return "(" + format_ordinal(x, style) + ")";
}

}  // namespace

ParsedOrdinal parse_ordinal_ex(std::string_view text) {
  ParsedOrdinal out;
  out.value = Parser(text).parse_whole_ordinal();
  out.non_canonical = format_ordinal(out.value) != text;
  return out;
}

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse_whole_ordinal(); }

Cardinal parse_cardinal(std::string_view text) { return Parser(text).parse_whole_cardinal(); }

Entry parse_entry(std::string_view text) {
  const std::size_t colon = text.rfind(':');
  if (colon == std::string_view::npos) return Entry{parse_ordinal(text)};
  Entry e{parse_ordinal(text.substr(0, colon))};
  try {
    e.multiplicity = parse_cardinal(text.substr(colon + 1));
  } catch (const SyntaxError& err) {
    throw SyntaxError(colon + 1 + err.position(), err.reason());
  }
  return e;
}

Instance parse_instance(const std::vector<std::string>& entries) {
  Instance inst;
  for (const std::string& s : entries) inst.entries.push_back(parse_entry(s));
  return inst;
}

std::string format_ordinal(const Ordinal& a, Style style) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const Term& t : a.terms()) {
    if (!out.empty()) out += "+";
    out += format_term(t, style);
  }
  return out;
}

std::string format_cardinal(const Cardinal& c, Style style) {
  if (c.is_finite()) return std::to_string(c.count());
  if (style == Style::Unicode && c.aleph_index().is_finite()) {
    return "ℵ" + digits(c.aleph_index().finite_value(), kSubscripts);
  }
  return (style == Style::Ascii ? "aleph_" : "ℵ_") + format_atom(c.aleph_index(), style);
}

std::string format_entry(const Entry& e, Style style) {
  std::string s = format_ordinal(e.target, style);
  if (e.multiplicity != Cardinal::finite(1)) s += ":" + format_cardinal(e.multiplicity, style);
  return s;
}

std::string format_instance(const Instance& inst, Style style) {
  std::string s;
  for (const Entry& e : inst.entries) {
    if (!s.empty()) s += ' ';
    s += format_entry(e, style);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << format_ordinal(a); }

std::string format_result(const PigeonholeResult& r, Style style) {
  if (const auto* e = std::get_if<Exists>(&r)) return format_ordinal(e->value, style);
  if (std::holds_alternative<Infinite>(r)) return "infinite";
  return "independent (ZFC lower bound " +
         format_ordinal(std::get<Independent>(r).zfc_lower, style) + ")";
}

std::ostream& operator<<(std::ostream& os, const Cardinal& c) { return os << format_cardinal(c); }

}  // namespace ordpigeon
