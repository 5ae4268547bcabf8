#pragma once

#include <string>
#include <vector>

#include "ordpigeon/notation.hpp"
#include "ordpigeon/pigeonhole.hpp"

namespace ordpigeon::test {

inline Ordinal O(std::string_view s) { return parse_ordinal(s); }

/// I({"w+1:3", "2"})
inline Instance I(const std::vector<std::string>& entries) { return parse_instance(entries); }

inline NormalizedInstance N(const std::vector<std::string>& entries) {
  return std::get<NormalizedInstance>(normalize(I(entries)));
}

inline Ordinal value(const PigeonholeResult& r) { return std::get<Exists>(r).value; }

}  // namespace ordpigeon::test
