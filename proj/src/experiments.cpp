#include "sftlab/experiments.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace sftlab {

namespace {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe out;
  if (xs.empty()) return out;
  for (double x : xs) out.mean += x;
  out.mean /= xs.size();
  if (xs.size() > 1) {
    double var = 0.0;
    for (double x : xs) var += (x - out.mean) * (x - out.mean);
    var /= (xs.size() - 1);
    out.se = std::sqrt(var / xs.size());
  }
  return out;
}

// ergodic average of a range-k potential over a finite word
double potential_average(const Potential& f, const Word& w) {
  const int k = f.range;
  if (w.size() < k) return 0.0;
  double total = 0.0;
  for (int i = 0; i + k <= w.size(); ++i) total += f.value(w, i);
  return total / (w.size() - k + 1);
}

}  // namespace

TradeoffReport tradeoff_experiment(const ShiftSpace& space, const FactorCode& code,
                                   const MarkovMeasure& base, const SwapMap& sm,
                                   const Potential& f,
                                   const std::vector<double>& p_grid, long long length,
                                   int seeds, std::uint64_t master_seed, int k) {
  sm.validate(space, code);
  if (base.word_probability(sm.u) <= 0.0)
    throw std::invalid_argument("tradeoff_experiment: base never produces u");
  if (seeds < 2) throw std::invalid_argument("tradeoff_experiment: need >= 2 seeds");

  TradeoffReport report;
  report.k = k;
  report.length = length;
  report.seeds = seeds;
  const int n = sm.u.size();

  // one base path per replicate, shared by every p (common random numbers)
  struct Replicate {
    Word x;
    double hx_k, hx_1, fx;
  };
  std::vector<Replicate> reps;
  for (int r = 0; r < seeds; ++r) {
    SplitMix64 rng(stream_key(master_seed, "tradeoff_base", r));
    Replicate rep;
    rep.x = sample_path(base, length, rng);
    rep.hx_k = empirical_entropy({rep.x.syms}, k).estimate;
    rep.hx_1 = empirical_entropy({rep.x.syms}, 1).estimate;
    rep.fx = potential_average(f, rep.x);
    reps.push_back(std::move(rep));
  }

  for (double p : p_grid) {
    std::vector<double> gains, gains_k1, changes;
    long long swaps = 0;
    for (int r = 0; r < seeds; ++r) {
      MarkerProcess mp{p, n, stream_key(master_seed, "tradeoff_marker", r)};
      std::vector<std::uint8_t> marks = sample_marker(mp, length);
      Word xbar = apply_swap(reps[r].x, marks, sm);
      for (long long i = 0; i < length; ++i)
        if (reps[r].x.syms[i] != xbar.syms[i]) {
          ++swaps;
          i += n - 1;
        }
      gains.push_back(empirical_entropy({xbar.syms}, k).estimate - reps[r].hx_k);
      gains_k1.push_back(empirical_entropy({xbar.syms}, 1).estimate - reps[r].hx_1);
      changes.push_back(std::fabs(reps[r].fx - potential_average(f, xbar)));
      report.samples.push_back({p, r, gains.back(), gains_k1.back(), changes.back()});
    }
    TradeoffPoint pt;
    pt.p = p;
    MeanSe g = mean_se(gains), g1 = mean_se(gains_k1), c = mean_se(changes);
    pt.entropy_gain = g.mean;
    pt.entropy_gain_se = g.se;
    pt.entropy_gain_k1 = g1.mean;
    pt.entropy_gain_k1_se = g1.se;
    pt.integral_change = c.mean;
    pt.integral_change_se = c.se;
    pt.swaps = swaps;
    report.points.push_back(pt);
    if (swaps == 0) {
      report.degenerate = true;
      report.note = "no swaps happened at p = " + std::to_string(p);
    }
  }

  // diagnostic least-squares fits through the origin
  double sxy1 = 0.0, sxx1 = 0.0, sxy2 = 0.0, sxx2 = 0.0;
  for (const TradeoffPoint& pt : report.points) {
    double x1 = pt.p * std::log(1.0 / pt.p);
    sxy1 += x1 * pt.entropy_gain;
    sxx1 += x1 * x1;
    sxy2 += pt.p * pt.integral_change;
    sxx2 += pt.p * pt.p;
  }
  if (sxx1 > 0.0) report.fit_entropy_c1 = sxy1 / sxx1;
  if (sxx2 > 0.0) report.fit_integral_c2 = sxy2 / sxx2;
  return report;
}

bool KacAbramovReport::kac_within(double sigmas) const {
  return std::fabs(mean_return - kac_expected) <= sigmas * mean_return_se;
}

bool KacAbramovReport::abramov_within(double sigmas) const {
  return std::fabs(abramov_product - chain_entropy) <=
         sigmas * induced_entropy_se * cylinder_probability;
}

KacAbramovReport kac_abramov_check(const ShiftSpace& space, const MarkovMeasure& m,
                                   const Word& cylinder, long long length,
                                   std::uint64_t seed) {
  if (!word_allowed(space, cylinder))
    throw std::invalid_argument("kac_abramov_check: cylinder word not allowed");
  KacAbramovReport report;
  report.cylinder_probability = m.word_probability(cylinder);
  report.chain_entropy = markov_entropy(m);
  if (report.cylinder_probability <= 0.0)
    throw std::invalid_argument("kac_abramov_check: cylinder has zero probability");
  report.kac_expected = 1.0 / report.cylinder_probability;

  SplitMix64 rng(stream_key(seed, "kac_abramov"));
  Word x = sample_path(m, length, rng);

  // occurrence starts of the cylinder word
  std::vector<long long> hits;
  const int cl = cylinder.size();
  for (long long i = 0; i + cl <= length; ++i) {
    bool hit = true;
    for (int j = 0; j < cl; ++j)
      if (x.syms[i + j] != cylinder.syms[j]) hit = false;
    if (hit) hits.push_back(i);
  }
  if (hits.size() < 10) {
    report.degenerate = true;
    report.note = "cylinder visited fewer than 10 times";
    return report;
  }
  report.returns = hits.size() - 1;

  // return times and return words (blocks between consecutive starts)
  std::vector<double> returns;
  std::vector<int> return_word_ids;
  std::map<std::vector<int>, int> word_ids;
  for (std::size_t h = 0; h + 1 < hits.size(); ++h) {
    returns.push_back(static_cast<double>(hits[h + 1] - hits[h]));
    std::vector<int> rw(x.syms.begin() + hits[h], x.syms.begin() + hits[h + 1]);
    auto [it, fresh] = word_ids.try_emplace(rw, static_cast<int>(word_ids.size()));
    return_word_ids.push_back(it->second);
  }
  MeanSe ret = mean_se(returns);
  report.mean_return = ret.mean;
  report.mean_return_se = ret.se;

  // induced process entropy: return words are i.i.d. for a Markov chain,
  // so the marginal block entropy at k = 0 is the induced entropy
  EntropyEstimate induced = empirical_entropy({return_word_ids}, 0);
  report.induced_entropy = induced.estimate;
  report.induced_entropy_se = induced.stderr_;
  report.abramov_product = induced.estimate * report.cylinder_probability;
  return report;
}

}  // namespace sftlab
