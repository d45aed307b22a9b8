#pragma once

#include <string>
#include <vector>

#include "sftlab/factor_code.hpp"
#include "sftlab/shift_space.hpp"

namespace sftlab {

// Deterministic (right-resolving) labeled-graph presentation of the image
// shift. States are follower classes of symbol subsets; the initial state is
// the class of the full alphabet and every state is reachable from it.
struct SoficPresentation {
  std::vector<std::string> labels;            // image alphabet
  std::vector<std::string> state_names;
  std::vector<std::vector<int>> state_sets;   // domain symbols covered by each state
  std::vector<std::vector<int>> next;         // state x label -> state, -1 if absent
  int initial = 0;

  int state_count() const { return static_cast<int>(state_names.size()); }

  // Label words of length n readable from the initial state: exactly the
  // image language.
  std::vector<Word> label_words(int n) const;

  // The presentation restricted to its terminal strongly connected component
  // (the irreducible core that carries the growth of the language).
  SoficPresentation core() const;
};

// Subset construction from the full-alphabet state, followed by merging of
// states with identical follower behavior.
SoficPresentation sofic_presentation(const ShiftSpace& space, const FactorCode& code);

}  // namespace sftlab
