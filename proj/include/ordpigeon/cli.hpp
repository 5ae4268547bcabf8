#pragma once

// Command surface of the `ordpigeon` tool.  `run` takes the arguments after
// the program name and returns the process exit code:
//   0 success, 1 failure (including a rejected witness), 2 usage or syntax
//   error, 3 unrepresentable input.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordpigeon/witness.hpp"

namespace ordpigeon {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json witness_to_json(const Witness& w);
/// Throws nlohmann::json exceptions or SyntaxError on malformed input.
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const PigeonholeResult& r);

}  // namespace ordpigeon
