#pragma once

#include "sftlab/markov.hpp"
#include "sftlab/potential.hpp"
#include "sftlab/sofic.hpp"

namespace sftlab {

// Topological pressure of a locally constant potential on an irreducible
// shift of finite type: log of the Perron eigenvalue of the weighted
// transition matrix, with the weight taken on the source block. Potentials
// of range > 2 are handled by an internal higher-block recoding.
double pressure_sft(const ShiftSpace& space, const Potential& f);

// Pressure of a locally constant potential on the image shift, computed on
// the irreducible core of the presentation. Range > 1 is handled by lifting
// the core graph to label blocks.
double pressure_sofic(const SoficPresentation& presentation, const Potential& phi);

// The unique equilibrium state of a locally constant potential. For range
// k > 2 the measure lives on the (k-1)-block recoding, returned alongside.
struct Equilibrium {
  ShiftSpace block_space;  // original space when block_order == 1
  int block_order = 1;
  MarkovMeasure measure;
  double pressure = 0.0;
};

Equilibrium equilibrium_markov(const ShiftSpace& space, const Potential& f);

}  // namespace sftlab
