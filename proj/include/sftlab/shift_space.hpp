#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sftlab/word.hpp"

namespace sftlab {

// Vertex presentation of a 1-step shift of finite type: an ordered alphabet
// and the allowed length-2 words. Construction trims stranded symbols (no
// successor or no predecessor) to the essential subgraph and records them.
// Immutable after construction.
struct ShiftSpace {
  std::vector<std::string> symbols;
  std::vector<std::uint8_t> transition;  // n*n row-major 0/1
  std::vector<std::string> trimmed;      // symbols removed as inessential

  int size() const { return static_cast<int>(symbols.size()); }

  bool allows(int from, int to) const {
    return transition[static_cast<std::size_t>(from) * symbols.size() + to] != 0;
  }

  int index_of(const std::string& name) const;

  // full shift over the given symbols
  static ShiftSpace full(std::vector<std::string> names);

  // from an explicit list of allowed (from, to) name pairs
  static ShiftSpace from_pairs(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

  static ShiftSpace from_matrix(std::vector<std::string> names,
                                std::vector<std::uint8_t> matrix);
};

bool word_allowed(const ShiftSpace& space, const Word& w);

// true iff the transition graph is strongly connected
bool is_irreducible(const ShiftSpace& space);

// All allowed n-words in lexicographic order of the declared alphabet order.
std::vector<Word> enumerate_words(const ShiftSpace& space, int n);

// The n-block recoding: symbols of the result are the allowed n-words of the
// input, transitions the allowed (n+1)-word overlaps. n = 1 returns the input.
ShiftSpace recode_higher_block(const ShiftSpace& space, int n);

// Words of the recoded space map back to (length + n - 1)-words of the input.
Word expand_block_word(const ShiftSpace& original, const ShiftSpace& recoded, int n,
                       const Word& block_word);

}  // namespace sftlab
