#pragma once

#include <string>
#include <vector>

#include "sftlab/shift_space.hpp"

namespace sftlab {

// Symbol-wise (1-block) code from a domain alphabet onto an image alphabet.
// Surjectivity is enforced at construction.
struct FactorCode {
  std::vector<int> label_of;        // domain symbol index -> image symbol index
  std::vector<std::string> labels;  // image alphabet, declared order

  int image_size() const { return static_cast<int>(labels.size()); }
  int operator()(int domain_symbol) const {
    return label_of[static_cast<std::size_t>(domain_symbol)];
  }

  static FactorCode from_map(const ShiftSpace& space,
                             const std::vector<std::pair<std::string, std::string>>& mapping);
  static FactorCode identity(const ShiftSpace& space);
};

// symbol-wise image; preserves length and origin
Word apply_code(const FactorCode& code, const Word& w);

}  // namespace sftlab
