#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sftlab/factor_analysis.hpp"
#include "sftlab/markov.hpp"

namespace sftlab {

// Pins over a finite window. Between adjacent pins i < j the subword
// x_i..x_j is minimal and x_i..x_{j+1} is not. `truncated` is set when the
// scan from the last pin could not examine a single candidate position; when
// false, the window certifies there is no missed pin strictly left of the
// right edge.
struct PinSequence {
  std::vector<long long> pins;  // absolute coordinates, ascending
  bool truncated = false;
};

// Least n with the centered (2n+1)-window minimal and the (2n+3)-window not.
// When the window edge is reached first, `exact` is false and `value` is a
// certified lower bound.
struct NValue {
  int value = 0;
  bool exact = false;
};

// Empirical distribution of consecutive pin-gap pairs with boundary symbols.
struct ReturnStatistics {
  // (n1, n2, a, b, c) -> count; n1 < n2, symbols are domain indices
  std::map<std::tuple<int, int, int, int, int>, std::uint64_t> counts;
  std::uint64_t total = 0;
  long long sample_length = 0;
  std::uint64_t pin_count = 0;
  bool degenerate = false;
  std::string note;

  std::map<std::pair<int, int>, std::uint64_t> gap_marginal() const;  // over (n1, n2)
  std::map<int, std::uint64_t> n2_marginal() const;                   // over n2
};

// Pins generated left-to-right from `start` by repeatedly taking the least
// position where the word from the previous pin stops being minimal.
PinSequence pin_process(const MpwContext& ctx, const Word& w, long long start);
PinSequence pin_process(const ShiftSpace& space, const FactorCode& code,
                        const MPWOrder& order, const Word& w, long long start);

NValue n_of(const MpwContext& ctx, const Word& w, long long center);
NValue n_of(const ShiftSpace& space, const FactorCode& code, const MPWOrder& order,
            const Word& w, long long center);

// Number of distinct pin tails over the window: classes of starts keyed by
// their rightmost pin (starts that never pin inside form one class).
int count_pinnings(const MpwContext& ctx, const Word& w);
int count_pinnings(const ShiftSpace& space, const FactorCode& code,
                   const MPWOrder& order, const Word& w);

// Samples a trajectory, pins it from the left edge, and tabulates
// consecutive pin-gap pairs with their boundary symbols. The artificial pin
// at the left edge is excluded from the tabulation.
ReturnStatistics return_statistics(const ShiftSpace& space, const FactorCode& code,
                                   const MPWOrder& order, const MarkovMeasure& sampler,
                                   long long length, std::uint64_t seed);

std::string return_statistics_csv(const ShiftSpace& space, const ReturnStatistics& rs);
std::string return_statistics_json(const ShiftSpace& space, const ReturnStatistics& rs);

}  // namespace sftlab
