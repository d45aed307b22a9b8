#include "sftlab/factor_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sftlab {

MPWOrder MPWOrder::from_names(const ShiftSpace& space,
                              const std::vector<std::string>& names) {
  MPWOrder o;
  o.rank.assign(space.size(), -1);
  int pos = 0;
  for (const auto& name : names) {
    int i = space.index_of(name);
    if (i < 0) throw std::invalid_argument("order mentions unknown symbol '" + name + "'");
    if (o.rank[i] >= 0) throw std::invalid_argument("order repeats symbol '" + name + "'");
    o.rank[i] = pos++;
  }
  for (int i = 0; i < space.size(); ++i)
    if (o.rank[i] < 0)
      throw std::invalid_argument("order omits symbol '" + space.symbols[i] + "'");
  return o;
}

MPWOrder MPWOrder::declared(const ShiftSpace& space) {
  MPWOrder o;
  o.rank.resize(space.size());
  for (int i = 0; i < space.size(); ++i) o.rank[i] = i;
  return o;
}

SubshiftApprox::SubshiftApprox(ShiftSpace b, std::vector<Word> f) : base(std::move(b)) {
  for (auto& w : f)
    if (word_allowed(base, w)) forbidden.push_back(std::move(w));
}

bool SubshiftApprox::contains(const Word& w) const {
  if (!word_allowed(base, w)) return false;
  for (const Word& f : forbidden) {
    if (f.size() > w.size()) continue;
    for (int i = 0; i + f.size() <= w.size(); ++i) {
      bool hit = true;
      for (int k = 0; k < f.size(); ++k)
        if (w.syms[i + k] != f.syms[k]) hit = false;
      if (hit) return false;
    }
  }
  return true;
}

std::vector<Word> SubshiftApprox::words(int n) const {
  std::vector<Word> out;
  for (const Word& w : enumerate_words(base, n))
    if (contains(w)) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// diamonds

std::optional<Diamond> find_diamond(const ShiftSpace& space, const FactorCode& code,
                                    int max_len) {
  if (max_len < 2) throw std::invalid_argument("find_diamond: max_len must be >= 2");
  const int n = space.size();
  auto pair_ok = [&](int p, int q) { return code(p) == code(q); };

  // A diamond of word length L is a pair path that sits on the diagonal at
  // positions 0 and L-1 and strictly off it in between (a diagonal touch in
  // the middle would split off a shorter diamond).
  for (int len = 3; len <= max_len; ++len) {
    auto member = [&](int i, int p, int q) {
      if (i == 0 || i == len - 1) return p == q;
      return p != q && pair_ok(p, q);
    };
    // feas[i][p*n+q]: pair (p, q) is admissible at position i and extends to
    // position len-1
    std::vector<std::vector<char>> feas(len, std::vector<char>(n * n, 0));
    for (int p = 0; p < n; ++p) feas[len - 1][p * n + p] = 1;
    for (int i = len - 2; i >= 0; --i)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          if (!member(i, p, q)) continue;
          for (int p2 = 0; p2 < n && !feas[i][p * n + q]; ++p2) {
            if (!space.allows(p, p2)) continue;
            for (int q2 = 0; q2 < n; ++q2)
              if (space.allows(q, q2) && feas[i + 1][p2 * n + q2]) {
                feas[i][p * n + q] = 1;
                break;
              }
          }
        }

    int start = -1;
    for (int s = 0; s < n && start < 0; ++s)
      if (feas[0][s * n + s]) start = s;
    if (start < 0) continue;

    // greedy reconstruction, smallest (u_i, v_i) pair first
    Diamond d;
    d.u.syms.push_back(start);
    d.v.syms.push_back(start);
    int p = start, q = start;
    for (int i = 1; i < len; ++i) {
      int bp = -1, bq = -1;
      for (int p2 = 0; p2 < n; ++p2)
        for (int q2 = 0; q2 < n; ++q2) {
          if (!member(i, p2, q2) || !feas[i][p2 * n + q2]) continue;
          if (!space.allows(p, p2) || !space.allows(q, q2)) continue;
          if (bp < 0 || p2 < bp || (p2 == bp && q2 < bq)) {
            bp = p2;
            bq = q2;
          }
        }
      p = bp;
      q = bq;
      d.u.syms.push_back(p);
      d.v.syms.push_back(q);
    }
    return d;
  }
  return std::nullopt;
}

FactorClass classify_factor(const ShiftSpace& space, const FactorCode& code) {
  int bound = space.size() * space.size() + 1;
  return find_diamond(space, code, bound) ? FactorClass::InfiniteToOne
                                          : FactorClass::FiniteToOne;
}

// ---------------------------------------------------------------------------
// MPW minimality

Word MpwContext::class_minimum(const Word& w) const {
  const int n = w.size();
  std::string key;
  {
    std::ostringstream k;
    k << w.syms.front() << '|' << w.syms.back() << '|';
    for (int s : w.syms) k << code_(s) << ',';
    key = k.str();
  }
  auto it = cache_.find(key);
  if (it != cache_.end()) return Word(it->second, w.origin);

  const int a = space_.size();
  Word y = apply_code(code_, w);
  // feasible[i][q]: symbol q at position i can be extended to the fixed last
  // symbol through the image constraint
  std::vector<std::vector<char>> feasible(n, std::vector<char>(a, 0));
  feasible[n - 1][w.syms.back()] = 1;
  for (int i = n - 2; i >= 0; --i)
    for (int q = 0; q < a; ++q) {
      if (code_(q) != y.syms[i]) continue;
      if (i == 0 && q != w.syms.front()) continue;
      for (int r = 0; r < a; ++r)
        if (space_.allows(q, r) && feasible[i + 1][r]) {
          feasible[i][q] = 1;
          break;
        }
    }

  std::vector<int> min_word(n);
  min_word[0] = w.syms.front();
  for (int i = 1; i < n; ++i) {
    int best = -1;
    for (int q = 0; q < a; ++q) {
      if (code_(q) != y.syms[i] || !feasible[i][q]) continue;
      if (!space_.allows(min_word[i - 1], q)) continue;
      if (best < 0 || order_.less(q, best)) best = q;
    }
    if (best < 0) throw std::logic_error("class minimum: no feasible continuation");
    min_word[i] = best;
  }
  cache_.emplace(std::move(key), min_word);
  return Word(std::move(min_word), w.origin);
}

bool MpwContext::is_minimal(const Word& w) const {
  if (w.empty()) throw std::invalid_argument("minimality of empty word");
  if (!word_allowed(space_, w)) throw std::invalid_argument("word not allowed in space");
  if (w.size() <= 2) return true;  // no interior freedom
  return class_minimum(w) == w;
}

bool is_mpw_minimal(const ShiftSpace& space, const FactorCode& code,
                    const MPWOrder& order, const Word& w) {
  MpwContext ctx(space, code, order);
  return ctx.is_minimal(w);
}

std::vector<Word> mpw_forbidden(const ShiftSpace& space, const FactorCode& code,
                                const MPWOrder& order, int L) {
  if (L < 3) throw std::invalid_argument("mpw_forbidden: L must be >= 3");
  MpwContext ctx(space, code, order);
  std::vector<Word> out;
  for (int len = 3; len <= L; ++len) {
    for (const Word& w : enumerate_words(space, len)) {
      if (ctx.is_minimal(w)) continue;
      // skip words containing a shorter listed word
      bool contains_shorter = false;
      for (const Word& f : out) {
        if (f.size() >= len) continue;
        for (int i = 0; i + f.size() <= len && !contains_shorter; ++i) {
          bool hit = true;
          for (int k = 0; k < f.size(); ++k)
            if (w.syms[i + k] != f.syms[k]) hit = false;
          contains_shorter = hit;
        }
        if (contains_shorter) break;
      }
      if (!contains_shorter) out.push_back(w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// fibers

std::uint64_t fiber_count(const ShiftSpace& space, const FactorCode& code,
                          const Word& y) {
  if (y.empty()) return 0;
  const int a = space.size();
  std::vector<std::uint64_t> v(a, 0);
  for (int q = 0; q < a; ++q)
    if (code(q) == y.syms[0]) v[q] = 1;
  for (int i = 1; i < y.size(); ++i) {
    std::vector<std::uint64_t> next(a, 0);
    for (int q = 0; q < a; ++q) {
      if (code(q) != y.syms[i]) continue;
      std::uint64_t total = 0;
      for (int p = 0; p < a; ++p) {
        if (!v[p] || !space.allows(p, q)) continue;
        if (total > UINT64_MAX - v[p])
          throw std::overflow_error("fiber_count: overflow; use relative_entropy_profile");
        total += v[p];
      }
      next[q] = total;
    }
    v.swap(next);
  }
  std::uint64_t total = 0;
  for (std::uint64_t x : v) {
    if (total > UINT64_MAX - x)
      throw std::overflow_error("fiber_count: overflow; use relative_entropy_profile");
    total += x;
  }
  return total;
}

double relative_entropy_profile(const ShiftSpace& space, const FactorCode& code,
                                const Word& y) {
  if (y.empty()) throw std::invalid_argument("relative_entropy_profile: empty word");
  const int a = space.size();
  std::vector<double> v(a, 0.0);
  for (int q = 0; q < a; ++q)
    if (code(q) == y.syms[0]) v[q] = 1.0;
  double log_scale = 0.0;
  for (int i = 1; i < y.size(); ++i) {
    std::vector<double> next(a, 0.0);
    for (int q = 0; q < a; ++q) {
      if (code(q) != y.syms[i]) continue;
      for (int p = 0; p < a; ++p)
        if (v[p] > 0.0 && space.allows(p, q)) next[q] += v[p];
    }
    double norm = 0.0;
    for (double x : next) norm += x;
    if (norm == 0.0) throw std::invalid_argument("word not in the image language");
    for (double& x : next) x /= norm;
    log_scale += std::log(norm);
    v.swap(next);
  }
  double tail = 0.0;
  for (double x : v) tail += x;
  if (tail <= 0.0) throw std::invalid_argument("word not in the image language");
  return (log_scale + std::log(tail)) / y.size();
}

// ---------------------------------------------------------------------------
// swap pairs

namespace {

int count_occurrences(const std::vector<int>& text, const std::vector<int>& pattern) {
  int count = 0;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool hit = true;
    for (std::size_t k = 0; k < pattern.size(); ++k)
      if (text[i + k] != pattern[k]) hit = false;
    if (hit) ++count;
  }
  return count;
}

// every context word s (possibly empty) with s u prefix-admissible in Z
void collect_left_contexts(const SubshiftApprox& z, const Word& u, int max_len,
                           std::vector<std::vector<int>>& out) {
  out.push_back({});
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next_frontier;
    for (const auto& s : frontier) {
      for (int q = 0; q < z.base.size(); ++q) {
        std::vector<int> ext{q};
        ext.insert(ext.end(), s.begin(), s.end());
        // require ext + u to stay in L(Z)
        std::vector<int> joined = ext;
        joined.insert(joined.end(), u.syms.begin(), u.syms.end());
        if (z.contains(Word(joined))) {
          out.push_back(ext);
          next_frontier.push_back(ext);
        }
      }
    }
    frontier.swap(next_frontier);
  }
}

void collect_right_contexts(const SubshiftApprox& z, const Word& u, int max_len,
                            std::vector<std::vector<int>>& out) {
  out.push_back({});
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next_frontier;
    for (const auto& t : frontier) {
      for (int q = 0; q < z.base.size(); ++q) {
        std::vector<int> ext = t;
        ext.push_back(q);
        std::vector<int> joined = u.syms;
        joined.insert(joined.end(), ext.begin(), ext.end());
        if (z.contains(Word(joined))) {
          out.push_back(ext);
          next_frontier.push_back(ext);
        }
      }
    }
    frontier.swap(next_frontier);
  }
}

}  // namespace

std::optional<SwapPair> find_swap_pair(const ShiftSpace& space, const FactorCode& code,
                                       const SubshiftApprox& z, int max_len,
                                       int context_len) {
  if (z.forbidden.empty())
    throw std::invalid_argument("find_swap_pair: subshift is not proper (no forbidden words)");
  // the approximation must still cover the whole image language
  for (int n = 1; n <= context_len; ++n) {
    std::vector<Word> zn = z.words(n);
    std::vector<Word> images;
    for (const Word& w : zn) images.push_back(apply_code(code, w));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<Word> full_images;
    for (const Word& w : enumerate_words(space, n))
      full_images.push_back(apply_code(code, w));
    std::sort(full_images.begin(), full_images.end());
    full_images.erase(std::unique(full_images.begin(), full_images.end()),
                      full_images.end());
    if (images != full_images)
      throw std::invalid_argument(
          "find_swap_pair: image of the approximation loses words at length " +
          std::to_string(n));
  }

  for (int len = 3; len <= max_len; ++len) {
    for (const Word& u : z.words(len)) {
      // candidates v: same endpoints and image, allowed in base, not in L(Z)
      for (const Word& v : enumerate_words(space, len)) {
        if (v == u) continue;
        if (v.syms.front() != u.syms.front() || v.syms.back() != u.syms.back()) continue;
        if (apply_code(code, v) != apply_code(code, u)) continue;
        if (z.contains(v)) continue;

        std::vector<std::vector<int>> lefts, rights;
        collect_left_contexts(z, u, context_len, lefts);
        collect_right_contexts(z, u, context_len, rights);
        bool ok = true;
        for (const auto& s : lefts) {
          for (const auto& t : rights) {
            // require s u t in L(Z): the collectors check the two halves, the
            // joined word still needs one full test
            std::vector<int> sut = s;
            sut.insert(sut.end(), u.syms.begin(), u.syms.end());
            sut.insert(sut.end(), t.begin(), t.end());
            if (!z.contains(Word(sut))) continue;
            std::vector<int> svt = s;
            svt.insert(svt.end(), v.syms.begin(), v.syms.end());
            svt.insert(svt.end(), t.begin(), t.end());
            if (count_occurrences(svt, v.syms) != 1) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (ok) return SwapPair{u, v, context_len};
      }
    }
  }
  return std::nullopt;
}

std::string swap_pair_to_json(const ShiftSpace& space, const SwapPair& pair) {
  nlohmann::ordered_json j;
  j["u"] = format_word(space.symbols, pair.u);
  j["v"] = format_word(space.symbols, pair.v);
  j["verified_length"] = pair.verified_length;
  return j.dump(2) + "\n";
}

std::string forbidden_to_json(const ShiftSpace& space, const std::vector<Word>& words) {
  nlohmann::json list = nlohmann::json::array();
  for (const Word& w : words) list.push_back(format_word(space.symbols, w));
  return list.dump() + "\n";
}

}  // namespace sftlab
