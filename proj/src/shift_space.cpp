#include "sftlab/shift_space.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sftlab {

std::string format_word(const std::vector<std::string>& names, const Word& w) {
  bool all_single = true;
  for (const auto& n : names)
    if (n.size() != 1) all_single = false;
  std::ostringstream out;
  for (int i = 0; i < w.size(); ++i) {
    if (i > 0 && !all_single) out << ',';
    out << names[static_cast<std::size_t>(w.syms[i])];
  }
  return out.str();
}

Word parse_word(const std::vector<std::string>& names, const std::string& text,
                long long origin) {
  auto find = [&names](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw std::invalid_argument("unknown symbol '" + s + "' in word");
  };
  Word w;
  w.origin = origin;
  bool all_single = true;
  for (const auto& n : names)
    if (n.size() != 1) all_single = false;
  if (all_single && text.find(',') == std::string::npos) {
    for (char c : text) w.syms.push_back(find(std::string(1, c)));
  } else {
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) w.syms.push_back(find(part));
  }
  return w;
}

int ShiftSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

ShiftSpace trim_to_essential(std::vector<std::string> names,
                             std::vector<std::uint8_t> matrix) {
  const int n0 = static_cast<int>(names.size());
  std::vector<bool> alive(static_cast<std::size_t>(n0), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n0; ++i) {
      if (!alive[i]) continue;
      bool has_out = false, has_in = false;
      for (int j = 0; j < n0; ++j) {
        if (!alive[j]) continue;
        if (matrix[static_cast<std::size_t>(i) * n0 + j]) has_out = true;
        if (matrix[static_cast<std::size_t>(j) * n0 + i]) has_in = true;
      }
      if (!has_out || !has_in) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  ShiftSpace s;
  std::vector<int> remap(static_cast<std::size_t>(n0), -1);
  for (int i = 0; i < n0; ++i) {
    if (alive[i]) {
      remap[i] = static_cast<int>(s.symbols.size());
      s.symbols.push_back(names[i]);
    } else {
      s.trimmed.push_back(names[i]);
    }
  }
  if (s.symbols.empty())
    throw std::invalid_argument("shift space has no essential symbols");
  const int n = s.size();
  s.transition.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      if (alive[i] && alive[j] && matrix[static_cast<std::size_t>(i) * n0 + j])
        s.transition[static_cast<std::size_t>(remap[i]) * n + remap[j]] = 1;
  return s;
}

}  // namespace

ShiftSpace ShiftSpace::full(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("alphabet must be nonempty");
  const int n = static_cast<int>(names.size());
  return from_matrix(std::move(names),
                     std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 1));
}

ShiftSpace ShiftSpace::from_pairs(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (names.empty()) throw std::invalid_argument("alphabet must be nonempty");
  const int n = static_cast<int>(names.size());
  std::vector<std::uint8_t> matrix(static_cast<std::size_t>(n) * n, 0);
  auto find = [&names](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw std::invalid_argument("transition mentions unknown symbol '" + s + "'");
  };
  for (const auto& [a, b] : pairs)
    matrix[static_cast<std::size_t>(find(a)) * n + find(b)] = 1;
  return trim_to_essential(std::move(names), std::move(matrix));
}

ShiftSpace ShiftSpace::from_matrix(std::vector<std::string> names,
                                   std::vector<std::uint8_t> matrix) {
  if (names.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (matrix.size() != names.size() * names.size())
    throw std::invalid_argument("transition matrix has wrong shape");
  return trim_to_essential(std::move(names), std::move(matrix));
}

bool word_allowed(const ShiftSpace& space, const Word& w) {
  for (int s : w.syms)
    if (s < 0 || s >= space.size()) return false;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (!space.allows(w.syms[i], w.syms[i + 1])) return false;
  return !w.empty();
}

bool is_irreducible(const ShiftSpace& space) {
  const int n = space.size();
  auto reaches_all = [&](bool backward) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        bool edge = backward ? space.allows(w, v) : space.allows(v, w);
        if (edge && !seen[w]) {
          seen[w] = true;
          ++count;
          q.push(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(false) && reaches_all(true);
}

std::vector<Word> enumerate_words(const ShiftSpace& space, int n) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  std::vector<Word> out;
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n));
  // iterative lexicographic DFS
  std::vector<int> next_sym{0};
  while (!next_sym.empty()) {
    int depth = static_cast<int>(next_sym.size()) - 1;
    int s = next_sym.back();
    if (s >= space.size()) {
      next_sym.pop_back();
      if (!stack.empty()) stack.pop_back();
      if (!next_sym.empty()) ++next_sym.back();
      continue;
    }
    if (depth > 0 && !space.allows(stack.back(), s)) {
      ++next_sym.back();
      continue;
    }
    stack.push_back(s);
    if (depth + 1 == n) {
      out.emplace_back(stack, 0);
      stack.pop_back();
      ++next_sym.back();
    } else {
      next_sym.push_back(0);
    }
  }
  return out;
}

ShiftSpace recode_higher_block(const ShiftSpace& space, int n) {
  if (n < 1) throw std::invalid_argument("block length must be positive");
  if (n == 1) return space;
  std::vector<Word> blocks = enumerate_words(space, n);
  std::vector<std::string> names;
  names.reserve(blocks.size());
  for (const Word& b : blocks) names.push_back(format_word(space.symbols, b));

  const int m = static_cast<int>(blocks.size());
  std::vector<std::uint8_t> matrix(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // i -> j iff the blocks overlap in n-1 symbols; both being allowed words
      // already makes the junction pair allowed
      bool ok = true;
      for (int k = 0; k + 1 < n; ++k)
        if (blocks[i].syms[k + 1] != blocks[j].syms[k]) ok = false;
      if (ok) matrix[static_cast<std::size_t>(i) * m + j] = 1;
    }
  }
  return ShiftSpace::from_matrix(std::move(names), std::move(matrix));
}

Word expand_block_word(const ShiftSpace& original, const ShiftSpace& recoded, int n,
                       const Word& block_word) {
  if (block_word.empty()) return Word({}, block_word.origin);
  Word first = parse_word(original.symbols,
                          recoded.symbols[static_cast<std::size_t>(block_word.syms[0])]);
  if (first.size() != n)
    throw std::invalid_argument("expand_block_word: block order mismatch");
  Word out;
  out.origin = block_word.origin;
  for (int i = 0; i < block_word.size(); ++i) {
    Word b = parse_word(original.symbols,
                        recoded.symbols[static_cast<std::size_t>(block_word.syms[i])]);
    if (i == 0)
      out.syms = b.syms;
    else
      out.syms.push_back(b.syms.back());
  }
  return out;
}

}  // namespace sftlab
