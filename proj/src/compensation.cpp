#include "sftlab/compensation.hpp"

#include <cmath>
#include <stdexcept>

#include "sftlab/rng.hpp"

namespace sftlab {

std::vector<Potential> phi_grid_family(const SoficPresentation& presentation,
                                       double lo, double hi, double step,
                                       int random_count, std::uint64_t seed) {
  if (step <= 0.0 || hi < lo) throw std::invalid_argument("phi_grid_family: bad grid");
  const int labels = static_cast<int>(presentation.labels.size());
  std::vector<double> grid;
  for (double v = lo; v <= hi + 1e-12; v += step) grid.push_back(v);

  std::vector<Potential> family;
  for (int range : {1, 2}) {
    std::vector<Word> words = presentation.label_words(range);
    std::vector<std::size_t> pick(words.size(), 0);
    while (true) {
      Potential phi(range, labels);
      for (std::size_t i = 0; i < words.size(); ++i)
        phi.value_ref(words[i]) = grid[pick[i]];
      family.push_back(std::move(phi));
      std::size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < grid.size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  SplitMix64 rng(stream_key(seed, "phi_family"));
  std::vector<Word> words2 = presentation.label_words(2);
  for (int r = 0; r < random_count; ++r) {
    Potential phi(2, labels);
    for (const Word& w : words2) phi.value_ref(w) = lo + (hi - lo) * rng.uniform01();
    family.push_back(std::move(phi));
  }
  return family;
}

CompensationReport compensation_check(const ShiftSpace& space, const FactorCode& code,
                                      const Potential& f,
                                      const std::vector<Potential>& phi_family,
                                      const std::string& family_description) {
  SoficPresentation presentation = sofic_presentation(space, code);
  CompensationReport report;
  report.tested_family = family_description;
  report.family_size = static_cast<int>(phi_family.size());
  bool first = true;
  for (const Potential& phi : phi_family) {
    double px = pressure_sft(space, add(f, pullback(code, phi)));
    double py = pressure_sofic(presentation, phi);
    double gap = px - py;
    report.gaps.push_back(gap);
    if (first || std::fabs(gap) > report.max_gap) report.max_gap = std::fabs(gap);
    if (first || gap > report.w_estimate) report.w_estimate = gap;
    first = false;
  }
  return report;
}

std::pair<double, double> tangent_bound(const std::vector<double>& p,
                                        const std::vector<double>& a) {
  if (p.size() != a.size()) throw std::invalid_argument("tangent_bound: length mismatch");
  double psum = 0.0, asum = 0.0, lhs = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) throw std::invalid_argument("tangent_bound: negative probability");
    if (a[i] <= 0.0) throw std::invalid_argument("tangent_bound: weights must be positive");
    psum += p[i];
    asum += a[i];
    if (p[i] > 0.0) lhs += p[i] * std::log(a[i] / p[i]);
  }
  if (std::fabs(psum - 1.0) > 1e-9)
    throw std::invalid_argument("tangent_bound: probabilities must sum to 1");
  return {lhs, std::log(asum)};
}

}  // namespace sftlab
