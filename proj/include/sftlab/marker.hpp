#pragma once

#include <cstdint>
#include <vector>

#include "sftlab/factor_code.hpp"
#include "sftlab/rng.hpp"
#include "sftlab/shift_space.hpp"

namespace sftlab {

// Sparse marker process: a site is marked when the driving Bernoulli(p) bit
// is 1 and the previous gap-1 bits are all 0, so marks are at least `gap`
// apart.
struct MarkerProcess {
  double p = 0.0;
  int gap = 1;
  std::uint64_t seed = 0;
};

std::vector<std::uint8_t> sample_marker(const MarkerProcess& mp, long long length);

// exact probability that a site is marked: p (1-p)^(gap-1)
double marker_density(const MarkerProcess& mp);

// Word pair with equal endpoints and image, swapped at marked positions.
struct SwapMap {
  Word u;
  Word v;
  bool bidirectional = false;  // also swap v back to u when marked

  void validate(const ShiftSpace& space, const FactorCode& code) const;
};

// Replaces u by v at every marked position where u starts (and v by u when
// bidirectional). Marks must be at least |u| apart.
Word apply_swap(const Word& x, const std::vector<std::uint8_t>& marks, const SwapMap& sm);

struct DbarEstimate {
  double exact = 0.0;     // p (1 - (1-p)^(gap-1)), mismatch under the joining
  double estimate = 0.0;  // Monte Carlo frequency
  double stderr_ = 0.0;
  double quadratic_bound = 0.0;  // (gap-1) p^2
  // marginals of the coupling, for consistency checks
  double bit_marginal = 0.0;    // frequency of driving bit 1, expect p
  double mark_marginal = 0.0;   // frequency of marks, expect p (1-p)^(gap-1)
  long long samples = 0;
};

// Mismatch probability between the marker process and its driving Bernoulli
// bits under the coupling that runs both off the same bits.
DbarEstimate dbar_marker_vs_bernoulli(double p, int gap, long long samples,
                                      std::uint64_t seed);

}  // namespace sftlab
