#pragma once

// Textual ordinal notation.
//
//   ordinal  := term { "+" term }
//   term     := base [ "*" nat ]
//   base     := "w" [ "^" atom ] | "w_" atom | nat
//   atom     := nat | "w" | "w_" atom | "(" ordinal ")"
//   cardinal := nat | "aleph_" atom
//
// Terms are combined with ordinal addition, so "1+w" denotes w; such inputs
// are accepted and flagged as non-canonical.

#include <string>
#include <string_view>
#include <vector>

#include "ordpigeon/ordinal.hpp"
#include "ordpigeon/pigeonhole.hpp"

namespace ordpigeon {

enum class Style { Ascii, Unicode };

struct ParsedOrdinal {
  Ordinal value;
  /// True when the input differs from the canonical ascii rendering.
  bool non_canonical = false;
};

ParsedOrdinal parse_ordinal_ex(std::string_view text);
Ordinal parse_ordinal(std::string_view text);
Cardinal parse_cardinal(std::string_view text);

std::string format_ordinal(const Ordinal& a, Style style = Style::Ascii);
std::string format_cardinal(const Cardinal& c, Style style = Style::Ascii);

/// "target" or "target:count", e.g. "w+1:3" or "2:aleph_0".
Entry parse_entry(std::string_view text);
Instance parse_instance(const std::vector<std::string>& entries);
std::string format_entry(const Entry& e, Style style = Style::Ascii);
std::string format_instance(const Instance& inst, Style style = Style::Ascii);

/// "w^3+1", "infinite", or "independent (ZFC lower bound w_2)".
std::string format_result(const PigeonholeResult& r, Style style = Style::Ascii);

}  // namespace ordpigeon
