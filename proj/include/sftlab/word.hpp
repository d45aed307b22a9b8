#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sftlab {

struct ShiftSpace;

// Finite word over some alphabet, as symbol indices, with the coordinate of
// its first symbol. The origin makes a word double as the cylinder [w]_origin.
struct Word {
  std::vector<int> syms;
  long long origin = 0;

  Word() = default;
  Word(std::vector<int> s, long long o = 0) : syms(std::move(s)), origin(o) {}

  int size() const { return static_cast<int>(syms.size()); }
  bool empty() const { return syms.empty(); }
  long long end() const { return origin + size() - 1; }  // coordinate of last symbol

  // subword covering coordinates [from, to]
  Word slice(long long from, long long to) const {
    Word w;
    w.origin = from;
    for (long long i = from; i <= to; ++i)
      w.syms.push_back(syms[static_cast<std::size_t>(i - origin)]);
    return w;
  }

  int at(long long coordinate) const {
    return syms[static_cast<std::size_t>(coordinate - origin)];
  }

  friend bool operator==(const Word& a, const Word& b) { return a.syms == b.syms; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) { return a.syms < b.syms; }
};

// Symbol-wise rendering. Single-character alphabets concatenate ("aba");
// anything else joins with ',' ("00,01,10").
std::string format_word(const std::vector<std::string>& names, const Word& w);
Word parse_word(const std::vector<std::string>& names, const std::string& text,
                long long origin = 0);

}  // namespace sftlab
