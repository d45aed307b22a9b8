#include "sftlab/dini.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sftlab/clothespin.hpp"

namespace sftlab {

double VariationTailModel::upper(int n) const {
  return t * std::log(n + 2.0) / (n + 2.0);
}

double VariationTailModel::lower(int n) const {
  return t * std::log(n + 3.0) / (n + 3.0);
}

Potential dini_potential(const ShiftSpace& space, const FactorCode& code,
                         const MPWOrder& order, double t, int L) {
  if (t <= 0.0) throw std::invalid_argument("dini_potential: t must be positive");
  if (L < 1) throw std::invalid_argument("dini_potential: L must be >= 1");
  MpwContext ctx(space, code, order);
  Potential f(2 * L + 1, space.size());
  for (const Word& w : enumerate_words(space, 2 * L + 1)) {
    NValue nv = n_of(ctx, w, w.origin + L);
    double value = 0.0;
    if (nv.exact) value = -t * std::log(nv.value + 2.0) / (nv.value + 2.0);
    f.value_ref(w) = value;
  }
  return f;
}

VariationSequence variation_sequence(const ShiftSpace& space, const Potential& f,
                                     int N) {
  if (N < 0) throw std::invalid_argument("variation_sequence: N must be >= 0");
  const int k = f.range;
  const int L = (k - 1) / 2;  // center offset of the window
  std::vector<Word> words = enumerate_words(space, k);

  VariationSequence out;
  for (int n = 0; n <= N; ++n) {
    // group words by their symbols on window coordinates [-n, n-1], i.e.
    // word indices [L-n, L+n-1] clipped to the window
    int lo = std::max(0, L - n);
    int hi = std::min(k - 1, L + n - 1);
    std::map<std::vector<int>, std::pair<double, double>> groups;
    for (const Word& w : words) {
      std::vector<int> key;
      for (int i = lo; i <= hi; ++i) key.push_back(w.syms[i]);
      double v = f.value(w);
      auto [it, fresh] = groups.try_emplace(key, std::pair<double, double>{v, v});
      if (!fresh) {
        it->second.first = std::min(it->second.first, v);
        it->second.second = std::max(it->second.second, v);
      }
    }
    double var = 0.0;
    for (const auto& [key, mm] : groups) var = std::max(var, mm.second - mm.first);
    out.values.push_back(var);
  }
  // a range-k table cannot vary once the agreement window covers it
  if (N >= k) out.tail = VariationTailModel{0.0};
  return out;
}

VariationSequence variation_sequence(const ShiftSpace& space,
                                     const std::vector<Potential>& family, int N) {
  if (family.empty()) throw std::invalid_argument("variation_sequence: empty family");
  // members are centered tables of increasing radius; check that each coarser
  // member agrees with the span of the finest over its window classes
  const Potential* finest = &family.front();
  for (const Potential& f : family) {
    if (f.range % 2 == 0)
      throw std::invalid_argument("variation_sequence: family ranges must be odd");
    if (f.range > finest->range) finest = &f;
  }
  const int fine_radius = (finest->range - 1) / 2;
  std::vector<Word> words = enumerate_words(space, finest->range);
  for (const Potential& f : family) {
    if (&f == finest) continue;
    const int radius = (f.range - 1) / 2;
    std::map<std::vector<int>, std::pair<double, double>> span;
    for (const Word& w : words) {
      std::vector<int> key(w.syms.begin() + (fine_radius - radius),
                           w.syms.begin() + (fine_radius + radius + 1));
      double v = finest->value(w);
      auto [it, fresh] = span.try_emplace(key, std::pair<double, double>{v, v});
      if (!fresh) {
        it->second.first = std::min(it->second.first, v);
        it->second.second = std::max(it->second.second, v);
      }
    }
    for (const auto& [key, mm] : span) {
      double coarse = f.value(key.data());
      if (coarse < mm.first - 1e-12 || coarse > mm.second + 1e-12)
        throw std::invalid_argument(
            "variation_sequence: family member disagrees with its refinement");
    }
  }
  return variation_sequence(space, *finest, N);
}

VariationSequence dini_variation(const ShiftSpace& space, const FactorCode& code,
                                 const MPWOrder& order, double t, int L) {
  Potential f = dini_potential(space, code, order, t, L);
  VariationSequence v = variation_sequence(space, f, L);
  VariationTailModel model{t};
  for (int n = 1; n <= L - 1 && n < static_cast<int>(v.values.size()); ++n) {
    if (v.values[n] > model.upper(n) + 1e-12)
      throw std::logic_error("dini_variation: computed variation exceeds the model");
  }
  // drop the entry at n = L: there the finite window forces an artificial
  // zero, while the model continues the true decay
  if (static_cast<int>(v.values.size()) > L) v.values.resize(L);
  v.tail = model;
  return v;
}

namespace {

// upper bound for sum_{n > M} (t log(n+2)/(n+2))^p via the integral test and
// log u <= u^a / a with a = (p-1)/(2p)
double tail_upper_bound(double t, double p, long long M) {
  if (p <= 1.0) return std::numeric_limits<double>::infinity();
  double a = (p - 1.0) / (2.0 * p);
  double exponent = (a - 1.0) * p;  // < -1
  double u0 = static_cast<double>(M) + 1.0;
  // integral_{u0}^inf a^-p u^{exponent} du
  return std::pow(t / a, p) * std::pow(u0, exponent + 1.0) / (-(exponent + 1.0));
}

}  // namespace

DiniReport p_dini_report(const VariationSequence& v, double p) {
  if (p < 1.0) throw std::invalid_argument("p_dini_report: p must be >= 1");
  DiniReport r;
  r.p = p;
  for (double x : v.values) r.partial_sum += std::pow(x, p);

  if (!v.tail) {
    r.verdict = DiniVerdict::Undetermined;
    r.detail = "no tail information beyond the computed range";
    return r;
  }
  const VariationTailModel& model = *v.tail;
  const long long computed = static_cast<long long>(v.values.size());

  if (model.t == 0.0) {
    r.verdict = DiniVerdict::ConvergentCertified;
    r.tail_bound = 0.0;
    r.detail = "variation vanishes beyond the computed range";
    return r;
  }

  if (p > 1.0) {
    // explicit partial tail plus a closed-form integral bound
    double tail = 0.0;
    const long long M = std::max<long long>(computed, 100000);
    for (long long n = computed; n < M; ++n) tail += std::pow(model.upper(static_cast<int>(n)), p);
    tail += tail_upper_bound(model.t, p, M);
    r.tail_bound = tail;
    r.verdict = DiniVerdict::ConvergentCertified;
    std::ostringstream d;
    d << "tail certified by integral test, bound " << tail;
    r.detail = d.str();
    return r;
  }

  // p = 1: the lower model t log(n+3)/(n+3) minorizes var_n, and
  // sum log(u)/u has unbounded partial sums (integral (log u)^2 / 2)
  r.verdict = DiniVerdict::DivergentCertified;
  r.detail =
      "sum exceeds any target: integral of the lower model from N to T grows as "
      "t ((log T)^2 - (log N)^2)/2";
  return r;
}

std::pair<double, double> pair_weight_sum(double t, PairMultiplicity m) {
  double convergence_edge = m == PairMultiplicity::AllFirstGaps ? 2.0 : 1.0;
  if (t <= convergence_edge)
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  double partial = 0.0;
  const long long M = 20000;
  for (long long n = 2; n <= M; ++n) {
    double mult = m == PairMultiplicity::AllFirstGaps ? (n - 1.0) : 1.0;
    partial += mult * std::pow(static_cast<double>(n), -t);
  }
  // m(n) n^-t <= x^{1+q-t} on [n-1, n] with q the multiplicity degree
  double q = m == PairMultiplicity::AllFirstGaps ? 1.0 : 0.0;
  double tail = std::pow(static_cast<double>(M), 1.0 + q - t) / (t - 1.0 - q);
  return {partial, partial + tail};
}

SelectTResult select_t_for_weight(double d, double epsilon, double grid_base,
                                  double grid_ratio, double grid_max) {
  if (d < 1.0) throw std::invalid_argument("select_t: weight d must be >= 1");
  SelectTResult best;
  double t = grid_base;
  while (t <= grid_max) {
    auto [lo, hi] = pair_weight_sum(t);
    double bound = std::log(d * hi);
    if (std::isfinite(bound) && bound <= -epsilon) {
      best.t = t;
      best.certified = true;
      best.bound = bound;
      return best;
    }
    best.t = t;
    best.bound = bound;
    t *= grid_ratio;
  }
  best.certified = false;  // epsilon unreachable on the grid
  return best;
}

SelectTResult select_t(const ShiftSpace& space, const FactorCode& code,
                       double epsilon) {
  (void)code;
  double d = std::pow(static_cast<double>(space.size()), 3.0);
  return select_t_for_weight(d, epsilon);
}

}  // namespace sftlab
