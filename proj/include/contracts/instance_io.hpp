// Line-oriented instance file format.
//
//   contract-instance v1
//   n = 3
//   costs = 1 0.25 1/3
//   reward.kind = additive
//   reward.values = 2 1 1
//   meta.family = example        (meta.* keys are optional)
//
// Numbers are exact: integers, finite decimals, or p/q fractions. Unknown
// keys are rejected; parse errors carry the offending line number.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "contracts/contract.hpp"

namespace contracts {

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

inline constexpr std::string_view kInstanceHeader = "contract-instance v1";

}  // namespace contracts
