#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sftlab/entropy_est.hpp"
#include "sftlab/marker.hpp"
#include "sftlab/markov.hpp"
#include "sftlab/potential.hpp"

namespace sftlab {

struct TradeoffPoint {
  double p = 0.0;
  double entropy_gain = 0.0;      // at conditioning depth k
  double entropy_gain_se = 0.0;
  double entropy_gain_k1 = 0.0;   // same at depth 1, for comparison
  double entropy_gain_k1_se = 0.0;
  double integral_change = 0.0;   // |A_N f(x) - A_N f(swapped x)|
  double integral_change_se = 0.0;
  long long swaps = 0;
};

struct TradeoffSample {
  double p = 0.0;
  int seed = 0;
  double entropy_gain = 0.0;
  double entropy_gain_k1 = 0.0;
  double integral_change = 0.0;
};

struct TradeoffReport {
  std::vector<TradeoffPoint> points;
  std::vector<TradeoffSample> samples;  // one row per (p, seed)
  double fit_entropy_c1 = 0.0;   // entropy_gain ~ c1 p log(1/p)
  double fit_integral_c2 = 0.0;  // integral_change ~ c2 p
  int k = 2;
  long long length = 0;
  int seeds = 0;
  bool degenerate = false;
  std::string note;
};

// For each p: couple a base sample x with its swapped version, estimate the
// conditional-entropy gain and the change of the ergodic average of f,
// aggregated over seeds.
TradeoffReport tradeoff_experiment(const ShiftSpace& space, const FactorCode& code,
                                   const MarkovMeasure& base, const SwapMap& sm,
                                   const Potential& f,
                                   const std::vector<double>& p_grid, long long length,
                                   int seeds, std::uint64_t master_seed, int k = 2);

struct KacAbramovReport {
  double cylinder_probability = 0.0;  // exact, from the chain
  double mean_return = 0.0;           // empirical
  double mean_return_se = 0.0;
  double kac_expected = 0.0;          // 1 / cylinder_probability
  double induced_entropy = 0.0;       // empirical, return words as symbols
  double induced_entropy_se = 0.0;
  double abramov_product = 0.0;       // induced_entropy * cylinder_probability
  double chain_entropy = 0.0;         // closed form
  std::uint64_t returns = 0;
  bool degenerate = false;
  std::string note;

  bool kac_within(double sigmas) const;
  bool abramov_within(double sigmas) const;
};

// Empirical first-return and induced-entropy identities for a word cylinder
// of an ergodic Markov chain.
KacAbramovReport kac_abramov_check(const ShiftSpace& space, const MarkovMeasure& m,
                                   const Word& cylinder, long long length,
                                   std::uint64_t seed);

}  // namespace sftlab
