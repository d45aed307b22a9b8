#include "sftlab/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "sftlab/factor_code.hpp"

namespace sftlab {

Potential Potential::constant(const ShiftSpace& space, double value) {
  Potential f(1, space.size());
  for (double& x : f.table) x = value;
  return f;
}

Potential Potential::on_symbols(const ShiftSpace& space,
                                const std::vector<std::string>& symbols, double value) {
  Potential f(1, space.size());
  for (const auto& name : symbols) {
    int i = space.index_of(name);
    if (i < 0) throw std::invalid_argument("on_symbols: unknown symbol '" + name + "'");
    f.table[i] = value;
  }
  return f;
}

Potential Potential::lifted(int K) const {
  if (K < range) throw std::invalid_argument("lifted: cannot shrink range");
  if (K == range) return *this;
  Potential out(K, alphabet_size);
  std::vector<int> w(K, 0);
  for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
    std::size_t rest = idx;
    for (int i = K - 1; i >= 0; --i) {
      w[i] = static_cast<int>(rest % alphabet_size);
      rest /= alphabet_size;
    }
    out.table[idx] = value(w.data());
  }
  return out;
}

Potential add(const Potential& f, const Potential& g) {
  if (f.alphabet_size != g.alphabet_size)
    throw std::invalid_argument("add: potentials over different alphabets");
  int K = std::max(f.range, g.range);
  Potential a = f.lifted(K);
  Potential b = g.lifted(K);
  for (std::size_t i = 0; i < a.table.size(); ++i) a.table[i] += b.table[i];
  return a;
}

Potential pullback(const FactorCode& code, const Potential& phi) {
  const int a = static_cast<int>(code.label_of.size());
  Potential out(phi.range, a);
  std::vector<int> w(phi.range, 0), image(phi.range, 0);
  for (std::size_t idx = 0; idx < out.table.size(); ++idx) {
    std::size_t rest = idx;
    for (int i = phi.range - 1; i >= 0; --i) {
      w[i] = static_cast<int>(rest % a);
      rest /= a;
    }
    for (int i = 0; i < phi.range; ++i) image[i] = code(w[i]);
    out.table[idx] = phi.value(image.data());
  }
  return out;
}

std::string potential_to_json(const ShiftSpace& space, const Potential& f) {
  nlohmann::ordered_json j;
  j["range"] = f.range;
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (const Word& w : enumerate_words(space, f.range))
    table[format_word(space.symbols, w)] = f.value(w);
  j["table"] = table;
  return j.dump(2) + "\n";
}

Potential potential_from_json(const ShiftSpace& space, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("range") || !j.contains("table"))
    throw std::invalid_argument("potential JSON needs 'range' and 'table'");
  int k = j["range"].get<int>();
  if (k < 1) throw std::invalid_argument("potential range must be >= 1");
  Potential f(k, space.size());
  std::vector<bool> filled(f.table.size(), false);
  for (auto it = j["table"].begin(); it != j["table"].end(); ++it) {
    Word w = parse_word(space.symbols, it.key());
    if (w.size() != k)
      throw std::invalid_argument("table word '" + it.key() + "' has wrong length");
    if (!word_allowed(space, w))
      throw std::invalid_argument("table word '" + it.key() + "' is not allowed");
    double v = it.value().get<double>();
    if (!std::isfinite(v))
      throw std::invalid_argument("table value for '" + it.key() + "' is not finite");
    f.value_ref(w) = v;
    filled[f.index(w.syms.data())] = true;
  }
  for (const Word& w : enumerate_words(space, k))
    if (!filled[f.index(w.syms.data())])
      throw std::invalid_argument("table is missing word '" +
                                  format_word(space.symbols, w) + "'");
  return f;
}

}  // namespace sftlab
