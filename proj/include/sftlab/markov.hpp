#pragma once

#include <cstdint>
#include <vector>

#include "sftlab/linalg.hpp"
#include "sftlab/potential.hpp"
#include "sftlab/rng.hpp"
#include "sftlab/shift_space.hpp"

namespace sftlab {

// Stationary Markov measure: a row-stochastic matrix compatible with the
// transition structure plus its stationary vector.
struct MarkovMeasure {
  Matrix transition;
  std::vector<double> stationary;

  int size() const { return transition.n; }

  // probability of the cylinder [w]
  double word_probability(const Word& w) const;

  static MarkovMeasure from_transition(const ShiftSpace& space, Matrix p);
  static MarkovMeasure bernoulli(const ShiftSpace& space,
                                 const std::vector<double>& probabilities);
  static MarkovMeasure random(const ShiftSpace& space, SplitMix64& rng);
};

// validates stochasticity, stationarity and support; throws on violation
void validate_measure(const ShiftSpace& space, const MarkovMeasure& m,
                      double tol = 1e-12);

// -sum_i pi_i sum_j P_ij log P_ij
double markov_entropy(const MarkovMeasure& m);

// exact integral of a range-k potential: sum over k-words of mu(w) f(w)
double integrate(const ShiftSpace& space, const MarkovMeasure& m, const Potential& f);

// stationary sample path of the chain
Word sample_path(const MarkovMeasure& m, long long length, SplitMix64& rng);

}  // namespace sftlab
