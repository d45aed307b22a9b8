#pragma once

#include <string>
#include <vector>

#include "sftlab/shift_space.hpp"

namespace sftlab {

struct FactorCode;

// Locally constant function given by a table on k-words, natural-log units.
// The value at a point depends on coordinates [0, k). Stored dense over all
// symbol tuples; entries of disallowed words are never read.
struct Potential {
  int range = 1;
  int alphabet_size = 0;
  std::vector<double> table;  // size alphabet_size^range

  Potential() = default;
  Potential(int k, int alphabet) : range(k), alphabet_size(alphabet) {
    std::size_t size = 1;
    for (int i = 0; i < k; ++i) size *= alphabet;
    table.assign(size, 0.0);
  }

  static Potential constant(const ShiftSpace& space, double value);
  // indicator-style: value on words whose first symbol is in `symbols`
  static Potential on_symbols(const ShiftSpace& space,
                              const std::vector<std::string>& symbols, double value);

  std::size_t index(const int* w) const {
    std::size_t idx = 0;
    for (int i = 0; i < range; ++i) idx = idx * alphabet_size + w[i];
    return idx;
  }

  double value(const int* w) const { return table[index(w)]; }
  double value(const Word& w, int offset = 0) const { return value(w.syms.data() + offset); }
  double& value_ref(const Word& w) { return table[index(w.syms.data())]; }

  // same function as a table on K-words, K >= range
  Potential lifted(int K) const;
};

// f + g as a table on max-range words
Potential add(const Potential& f, const Potential& g);

// phi on the image pulled back through the code: (phi . pi)(w) = phi(pi(w))
Potential pullback(const FactorCode& code, const Potential& phi);

std::string potential_to_json(const ShiftSpace& space, const Potential& f);
Potential potential_from_json(const ShiftSpace& space, const std::string& text);

}  // namespace sftlab
