#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftlab/factor_analysis.hpp"
#include "sftlab/potential.hpp"

namespace sftlab {

// Model of the variation tail: upper(n) = t log(n+2)/(n+2) and
// lower(n) = t log(n+3)/(n+3) bound var_n from above and below for n >= 1.
struct VariationTailModel {
  double t = 0.0;
  double upper(int n) const;
  double lower(int n) const;
};

struct VariationSequence {
  std::vector<double> values;  // var_0, var_1, ...; non-increasing
  // absent: nothing known past the computed range; t = 0 marks an exactly
  // vanishing tail (locally constant function)
  std::optional<VariationTailModel> tail;
};

enum class DiniVerdict { ConvergentCertified, DivergentCertified, Undetermined };

struct DiniReport {
  double p = 1.0;
  DiniVerdict verdict = DiniVerdict::Undetermined;
  double partial_sum = 0.0;                // sum of computed var_n^p
  std::optional<double> tail_bound;        // finite upper bound on the tail sum
  std::string detail;
};

// The distance-to-minimality potential: 0 on windows certified entirely
// minimal, and -t log(n+2)/(n+2) where n is the certified radius of the
// largest minimal centered window otherwise. Range 2L+1.
Potential dini_potential(const ShiftSpace& space, const FactorCode& code,
                         const MPWOrder& order, double t, int L);

// var_n = max |f(u) - f(v)| over pairs of range-words agreeing on
// coordinates [-n, n-1] of the centered window; computed for n = 0..N.
VariationSequence variation_sequence(const ShiftSpace& space, const Potential& f,
                                     int N);

// Same, from an indexed family of centered refinements f_L; verifies that
// every coarser member agrees with the finest on its window classes and then
// computes the sequence from the finest.
VariationSequence variation_sequence(const ShiftSpace& space,
                                     const std::vector<Potential>& family, int N);

// variation sequence of dini_potential with the tail model attached after
// verifying it against the computed values
VariationSequence dini_variation(const ShiftSpace& space, const FactorCode& code,
                                 const MPWOrder& order, double t, int L);

// Convergence / divergence of sum var_n^p, certified through the tail model
// (integral test); Undetermined when no tail information exists.
DiniReport p_dini_report(const VariationSequence& v, double p);

// Smallest t on a geometric grid with log(d sum_{n>=2} (n-1) n^{-t}) <= -epsilon.
struct SelectTResult {
  double t = 0.0;
  bool certified = false;
  double bound = 0.0;  // certified upper bound on the log-sum at t
};

SelectTResult select_t_for_weight(double d, double epsilon, double grid_base = 2.25,
                                  double grid_ratio = 1.0625, double grid_max = 256.0);
SelectTResult select_t(const ShiftSpace& space, const FactorCode& code, double epsilon);

// Partial sum + integral tail bracket of sum_{n>=2} m(n) n^{-t}, t > 2.
// The default multiplicity m(n) = n-1 counts every first gap below the
// second; a crude alternative is m = 1.
enum class PairMultiplicity { AllFirstGaps, Single };
std::pair<double, double> pair_weight_sum(
    double t, PairMultiplicity m = PairMultiplicity::AllFirstGaps);

}  // namespace sftlab
