#pragma once

#include "sftlab/factor_code.hpp"
#include "sftlab/markov.hpp"

namespace sftlab {

struct EntropyBracket {
  double lower = 0.0;
  double upper = 0.0;
};

// Entropy rate of the image process of a Markov measure, bracketed by
// conditional block entropies: upper = H(Y_0 | Y_{-n..-1}), lower adds the
// hidden symbol X_{-n-1} to the conditioning. Upper is non-increasing and
// lower non-decreasing in n; both converge to the image entropy.
EntropyBracket pushforward_entropy_bracket(const ShiftSpace& space,
                                           const FactorCode& code,
                                           const MarkovMeasure& m, int n);

// [h(mu) - upper, h(mu) - lower]: brackets the relative entropy
// h(mu) - h(mu image).
EntropyBracket relative_entropy_bracket(const ShiftSpace& space, const FactorCode& code,
                                        const MarkovMeasure& m, int n);

}  // namespace sftlab
