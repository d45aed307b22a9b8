#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sftlab/factor_code.hpp"
#include "sftlab/shift_space.hpp"

namespace sftlab {

// Two distinct equal-length words with equal endpoints and equal image.
struct Diamond {
  Word u;
  Word v;
};

enum class FactorClass { FiniteToOne, InfiniteToOne };

// Strict total order on the domain alphabet used for lexicographic
// minimization within (endpoints, image) classes.
struct MPWOrder {
  std::vector<int> rank;  // rank[symbol] = position in the order

  static MPWOrder from_names(const ShiftSpace& space,
                             const std::vector<std::string>& names);
  static MPWOrder declared(const ShiftSpace& space);  // alphabet order

  bool less(int a, int b) const { return rank[a] < rank[b]; }
};

// Word pair for swapping measure out of a subshift: u occurs in Z, v does
// not, with equal endpoints and image; the single-occurrence property of v
// is verified exhaustively for contexts up to verified_length.
struct SwapPair {
  Word u;
  Word v;
  int verified_length = 0;
};

// Finite-type approximation of a subshift of the base space by a finite
// forbidden-word list.
struct SubshiftApprox {
  ShiftSpace base;
  std::vector<Word> forbidden;

  SubshiftApprox(ShiftSpace b, std::vector<Word> f);
  bool contains(const Word& w) const;  // w allowed in base and avoids the list
  std::vector<Word> words(int n) const;
};

// Shortest diamond of word length <= max_len, if any, via search over the
// pair graph {(x, x') : pi(x) = pi(x')}.
std::optional<Diamond> find_diamond(const ShiftSpace& space, const FactorCode& code,
                                    int max_len);

// InfiniteToOne iff a diamond exists within the pigeonhole bound |A|^2 + 1.
FactorClass classify_factor(const ShiftSpace& space, const FactorCode& code);

// Shared context for minimality queries; caches class minima per
// (first, last, image) so repeated window checks are cheap.
class MpwContext {
 public:
  MpwContext(const ShiftSpace& space, const FactorCode& code, MPWOrder order)
      : space_(space), code_(code), order_(std::move(order)) {}

  const ShiftSpace& space() const { return space_; }
  const FactorCode& code() const { return code_; }
  const MPWOrder& order() const { return order_; }

  // Least word of w's (endpoints, image) class in the order.
  Word class_minimum(const Word& w) const;
  bool is_minimal(const Word& w) const;

 private:
  const ShiftSpace& space_;
  const FactorCode& code_;
  MPWOrder order_;
  mutable std::map<std::string, std::vector<int>> cache_;
};

// true iff no allowed word with the same length, endpoints and image is
// lexicographically smaller; words of length <= 2 are always minimal
bool is_mpw_minimal(const ShiftSpace& space, const FactorCode& code,
                    const MPWOrder& order, const Word& w);

// Minimal forbidden list of the length-L approximation: non-minimal words of
// length <= L containing no shorter non-minimal word.
std::vector<Word> mpw_forbidden(const ShiftSpace& space, const FactorCode& code,
                                const MPWOrder& order, int L);

// Number of allowed preimage words of y, by transfer-matrix product.
// Returns 0 when y is not in the image language. Throws on overflow.
std::uint64_t fiber_count(const ShiftSpace& space, const FactorCode& code,
                          const Word& y);

// (1/|y|) log fiber_count, computed in log space (no overflow).
double relative_entropy_profile(const ShiftSpace& space, const FactorCode& code,
                                const Word& y);

// Shortest (u, v) with u in L(Z), v excluded from L(Z), equal endpoints and
// image, and exactly one occurrence of v in s v t for every context s, t
// with |s|, |t| <= context_len and s u t in L(Z). Absent if none within
// max_len.
std::optional<SwapPair> find_swap_pair(const ShiftSpace& space, const FactorCode& code,
                                       const SubshiftApprox& z, int max_len,
                                       int context_len);

std::string swap_pair_to_json(const ShiftSpace& space, const SwapPair& pair);
std::string forbidden_to_json(const ShiftSpace& space, const std::vector<Word>& words);

}  // namespace sftlab
