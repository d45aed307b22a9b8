#include "sftlab/markov.hpp"

#include <cmath>
#include <stdexcept>

namespace sftlab {

double MarkovMeasure::word_probability(const Word& w) const {
  if (w.empty()) return 1.0;
  double p = stationary[w.syms[0]];
  for (int i = 0; i + 1 < w.size(); ++i) p *= transition.at(w.syms[i], w.syms[i + 1]);
  return p;
}

MarkovMeasure MarkovMeasure::from_transition(const ShiftSpace& space, Matrix p) {
  if (p.n != space.size())
    throw std::invalid_argument("transition matrix size does not match alphabet");
  MarkovMeasure m;
  m.transition = std::move(p);
  m.stationary = stationary_distribution(m.transition);
  validate_measure(space, m, 1e-9);
  return m;
}

MarkovMeasure MarkovMeasure::bernoulli(const ShiftSpace& space,
                                       const std::vector<double>& probabilities) {
  const int n = space.size();
  if (static_cast<int>(probabilities.size()) != n)
    throw std::invalid_argument("bernoulli: wrong number of probabilities");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!space.allows(i, j) && probabilities[j] > 0.0)
        throw std::invalid_argument("bernoulli: support not compatible with transitions");
  MarkovMeasure m;
  m.transition = Matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.transition.at(i, j) = probabilities[j];
  m.stationary = probabilities;
  return m;
}

MarkovMeasure MarkovMeasure::random(const ShiftSpace& space, SplitMix64& rng) {
  const int n = space.size();
  Matrix p(n);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j)
      if (space.allows(i, j)) {
        p.at(i, j) = 0.05 + rng.uniform01();  // bounded away from zero
        row += p.at(i, j);
      }
    for (int j = 0; j < n; ++j) p.at(i, j) /= row;
  }
  return from_transition(space, std::move(p));
}

void validate_measure(const ShiftSpace& space, const MarkovMeasure& m, double tol) {
  const int n = m.size();
  if (n != space.size()) throw std::invalid_argument("measure size mismatch");
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (m.stationary[i] < -tol) throw std::invalid_argument("negative stationary mass");
    total += m.stationary[i];
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      double p = m.transition.at(i, j);
      if (p < 0.0) throw std::invalid_argument("negative transition probability");
      if (p > 0.0 && !space.allows(i, j))
        throw std::invalid_argument("measure puts mass on a disallowed transition");
      row += p;
    }
    if (std::fabs(row - 1.0) > tol) throw std::invalid_argument("row is not stochastic");
  }
  if (std::fabs(total - 1.0) > tol)
    throw std::invalid_argument("stationary vector does not sum to 1");
  // stationarity
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += m.stationary[i] * m.transition.at(i, j);
    if (std::fabs(s - m.stationary[j]) > std::max(tol, 1e-10))
      throw std::invalid_argument("vector is not stationary");
  }
}

double markov_entropy(const MarkovMeasure& m) {
  double h = 0.0;
  for (int i = 0; i < m.size(); ++i) {
    if (m.stationary[i] <= 0.0) continue;
    for (int j = 0; j < m.size(); ++j) {
      double p = m.transition.at(i, j);
      if (p > 0.0) h -= m.stationary[i] * p * std::log(p);
    }
  }
  return h;
}

double integrate(const ShiftSpace& space, const MarkovMeasure& m, const Potential& f) {
  double total = 0.0;
  for (const Word& w : enumerate_words(space, f.range)) {
    double p = m.word_probability(w);
    if (p > 0.0) total += p * f.value(w);
  }
  return total;
}

Word sample_path(const MarkovMeasure& m, long long length, SplitMix64& rng) {
  if (length <= 0) throw std::invalid_argument("sample_path: length must be positive");
  Word w;
  w.origin = 0;
  w.syms.reserve(length);
  int cur = rng.categorical(m.stationary);
  w.syms.push_back(cur);
  std::vector<double> row(m.size());
  for (long long i = 1; i < length; ++i) {
    for (int j = 0; j < m.size(); ++j) row[j] = m.transition.at(cur, j);
    cur = rng.categorical(row);
    w.syms.push_back(cur);
  }
  return w;
}

}  // namespace sftlab
