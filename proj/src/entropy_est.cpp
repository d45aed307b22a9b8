#include "sftlab/entropy_est.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace sftlab {

namespace {

double entropy_from_counts(const std::vector<std::uint64_t>& joint,
                           const std::vector<std::uint64_t>& context,
                           std::uint64_t total) {
  if (total == 0) return 0.0;
  double h = 0.0;
  for (std::uint64_t c : joint) {
    if (!c) continue;
    double p = static_cast<double>(c) / total;
    h -= p * std::log(p);
  }
  for (std::uint64_t c : context) {
    if (!c) continue;
    double p = static_cast<double>(c) / total;
    h += p * std::log(p);
  }
  return h;
}

// dense (k+1)-block and k-block counts over a symbol range
struct DenseCounts {
  int alphabet;
  int k;
  std::vector<std::uint64_t> joint;    // alphabet^(k+1)
  std::vector<std::uint64_t> context;  // alphabet^k
  std::uint64_t total = 0;

  DenseCounts(int a, int kk) : alphabet(a), k(kk) {
    std::size_t cj = 1, cc = 1;
    for (int i = 0; i < k + 1; ++i) cj *= a;
    for (int i = 0; i < k; ++i) cc *= a;
    joint.assign(cj, 0);
    context.assign(cc, 0);
  }

  void add(const int* seq, std::size_t len) {
    if (static_cast<int>(len) <= k) return;
    for (std::size_t i = k; i < len; ++i) {
      std::size_t jd = 0, cd = 0;
      for (int j = 0; j <= k; ++j) jd = jd * alphabet + seq[i - k + j];
      for (int j = 0; j < k; ++j) cd = cd * alphabet + seq[i - k + j];
      ++joint[jd];
      ++context[cd];
      ++total;
    }
  }

  double entropy() const { return entropy_from_counts(joint, context, total); }
};

}  // namespace

EntropyEstimate empirical_entropy(const std::vector<std::vector<int>>& samples, int k) {
  if (k < 0) throw std::invalid_argument("empirical_entropy: k must be >= 0");
  if (samples.empty()) throw std::invalid_argument("empirical_entropy: no samples");

  int alphabet = 0;
  for (const auto& s : samples)
    for (int x : s) {
      if (x < 0) throw std::invalid_argument("empirical_entropy: negative symbol");
      if (x + 1 > alphabet) alphabet = x + 1;
    }
  if (alphabet == 0) throw std::invalid_argument("empirical_entropy: empty sequences");
  double table = std::pow(static_cast<double>(alphabet), k + 1);
  if (table > (1 << 22))
    throw std::invalid_argument("empirical_entropy: alphabet^k too large to tabulate");

  // batches: one per sequence, or 16 slices of a single sequence
  std::vector<std::pair<const int*, std::size_t>> batches;
  if (samples.size() == 1) {
    const auto& s = samples[0];
    std::size_t parts = 16;
    std::size_t chunk = s.size() / parts;
    if (chunk < static_cast<std::size_t>(k + 2)) {
      batches.push_back({s.data(), s.size()});
    } else {
      for (std::size_t b = 0; b < parts; ++b) {
        std::size_t lo = b * chunk;
        std::size_t hi = (b + 1 == parts) ? s.size() : lo + chunk;
        batches.push_back({s.data() + lo, hi - lo});
      }
    }
  } else {
    for (const auto& s : samples) batches.push_back({s.data(), s.size()});
  }

  DenseCounts pooled(alphabet, k);
  std::vector<double> batch_values;
  for (const auto& [ptr, len] : batches) {
    if (static_cast<int>(len) <= k) continue;
    DenseCounts c(alphabet, k);
    c.add(ptr, len);
    batch_values.push_back(c.entropy());
    pooled.add(ptr, len);
  }
  if (pooled.total == 0)
    throw std::invalid_argument("empirical_entropy: sequences too short");

  EntropyEstimate out;
  out.k = k;
  out.estimate = pooled.entropy();

  double mean = 0.0;
  for (double v : batch_values) mean += v;
  mean /= batch_values.size();
  if (batch_values.size() > 1) {
    double var = 0.0;
    for (double v : batch_values) var += (v - mean) * (v - mean);
    var /= (batch_values.size() - 1);
    out.stderr_ = std::sqrt(var / batch_values.size());
  } else {
    out.stderr_ = std::fabs(out.estimate) * 0.5 + 1e-3;  // single batch: crude
    out.insufficient_data = true;
  }

  // a context observed only a handful of times makes the plug-in unreliable
  for (std::size_t cd = 0; cd < pooled.context.size(); ++cd)
    if (pooled.context[cd] > 0 && pooled.context[cd] < 25)
      out.insufficient_data = true;
  if (out.insufficient_data) out.stderr_ *= 2.0;
  return out;
}

}  // namespace sftlab
