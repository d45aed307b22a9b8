#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sftlab/potential.hpp"
#include "sftlab/pressure.hpp"

namespace sftlab {

struct CompensationReport {
  double max_gap = 0.0;     // max |P_X(f + phi.pi) - P_Y(phi)| over the family
  double w_estimate = 0.0;  // max signed gap: lower bound for the maximal relative pressure
  int family_size = 0;
  std::string tested_family;
  std::vector<double> gaps;  // per phi, same order as the family
  bool passes(double tol) const { return max_gap <= tol; }
};

// Grid family of potentials on the image: all range-1 and range-2 tables
// with values from {lo, lo+step, ..., hi}, plus `random_count` uniform
// random tables in [lo, hi] (range 2), seeded.
std::vector<Potential> phi_grid_family(const SoficPresentation& presentation,
                                       double lo, double hi, double step,
                                       int random_count, std::uint64_t seed);

// P_X(f + phi.pi) - P_Y(phi) over a finite family of image potentials.
CompensationReport compensation_check(const ShiftSpace& space, const FactorCode& code,
                                      const Potential& f,
                                      const std::vector<Potential>& phi_family,
                                      const std::string& family_description);

// lhs = sum p_n log(a_n / p_n) <= rhs = log sum a_n, with equality iff p is
// proportional to a; zero-probability terms contribute nothing.
std::pair<double, double> tangent_bound(const std::vector<double>& p,
                                        const std::vector<double>& a);

}  // namespace sftlab
