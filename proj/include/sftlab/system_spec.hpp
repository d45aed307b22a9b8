#pragma once

#include <string>
#include <vector>

#include "sftlab/factor_analysis.hpp"
#include "sftlab/factor_code.hpp"
#include "sftlab/shift_space.hpp"

namespace sftlab {

// A factor triple as loaded from a system file: the domain shift, the
// 1-block code and the symbol order.
struct SystemSpec {
  ShiftSpace space;
  FactorCode code;
  MPWOrder order;
  std::vector<std::string> warnings;
};

// Parses {"alphabet": [...], "transitions": [[s,t],...] | "full": true,
//         "code": {sym: label}, "order": [...]}.
// Throws std::invalid_argument with a located message on schema violations.
SystemSpec load_system(const std::string& json_text);
SystemSpec load_system_file(const std::string& path);

}  // namespace sftlab
