#include "sftlab/marker.hpp"

#include <cmath>
#include <stdexcept>

namespace sftlab {

std::vector<std::uint8_t> sample_marker(const MarkerProcess& mp, long long length) {
  if (mp.p <= 0.0 || mp.p >= 1.0)
    throw std::invalid_argument("sample_marker: p must be in (0, 1)");
  if (mp.gap < 1) throw std::invalid_argument("sample_marker: gap must be >= 1");
  if (length < mp.gap) throw std::invalid_argument("sample_marker: length below gap");

  SplitMix64 rng(stream_key(mp.seed, "marker"));
  // burn-in of gap-1 bits so every output site has a full history
  std::vector<std::uint8_t> bits(length + mp.gap - 1);
  for (auto& b : bits) b = rng.bernoulli(mp.p) ? 1 : 0;

  std::vector<std::uint8_t> marks(length, 0);
  for (long long i = 0; i < length; ++i) {
    long long j = i + mp.gap - 1;  // position in the padded bit string
    if (!bits[j]) continue;
    bool clear = true;
    for (int k = 1; k < mp.gap; ++k)
      if (bits[j - k]) clear = false;
    if (clear) marks[i] = 1;
  }
  return marks;
}

double marker_density(const MarkerProcess& mp) {
  return mp.p * std::pow(1.0 - mp.p, mp.gap - 1);
}

void SwapMap::validate(const ShiftSpace& space, const FactorCode& code) const {
  if (u.size() != v.size() || u.empty())
    throw std::invalid_argument("swap map: words must have equal positive length");
  if (u.syms.front() != v.syms.front() || u.syms.back() != v.syms.back())
    throw std::invalid_argument("swap map: endpoint mismatch");
  if (!word_allowed(space, u) || !word_allowed(space, v))
    throw std::invalid_argument("swap map: words must be allowed");
  if (apply_code(code, u) != apply_code(code, v))
    throw std::invalid_argument("swap map: image mismatch");
}

Word apply_swap(const Word& x, const std::vector<std::uint8_t>& marks, const SwapMap& sm) {
  if (static_cast<long long>(marks.size()) != x.size())
    throw std::invalid_argument("apply_swap: marks and word must have equal length");
  const int n = sm.u.size();
  long long last_mark = -n;
  Word out = x;
  for (long long i = 0; i < x.size(); ++i) {
    if (!marks[i]) continue;
    if (i - last_mark < n)
      throw std::invalid_argument("apply_swap: marks closer than the word length");
    last_mark = i;
    if (i + n > x.size()) continue;  // word does not fit at the right edge
    bool is_u = true, is_v = true;
    for (int k = 0; k < n; ++k) {
      if (x.syms[i + k] != sm.u.syms[k]) is_u = false;
      if (x.syms[i + k] != sm.v.syms[k]) is_v = false;
    }
    if (is_u)
      for (int k = 0; k < n; ++k) out.syms[i + k] = sm.v.syms[k];
    else if (is_v && sm.bidirectional)
      for (int k = 0; k < n; ++k) out.syms[i + k] = sm.u.syms[k];
  }
  return out;
}

DbarEstimate dbar_marker_vs_bernoulli(double p, int gap, long long samples,
                                      std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("dbar: need at least 1000 samples");
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("dbar: p must be in (0, 1)");
  if (gap < 1) throw std::invalid_argument("dbar: gap must be >= 1");

  DbarEstimate out;
  out.exact = p * (1.0 - std::pow(1.0 - p, gap - 1));
  out.quadratic_bound = (gap - 1) * p * p;

  // fresh window per sample: the marker bit differs from the driving bit
  // exactly when the site bit is 1 but the history is not clear
  SplitMix64 rng(stream_key(seed, "dbar"));
  long long mismatches = 0, bits = 0, marks = 0;
  for (long long s = 0; s < samples; ++s) {
    bool site = rng.bernoulli(p);
    bool clear = true;
    for (int k = 1; k < gap; ++k)
      if (rng.bernoulli(p)) clear = false;
    bool mark = site && clear;
    if (site) ++bits;
    if (mark) ++marks;
    if (mark != site) ++mismatches;
  }
  out.samples = samples;
  out.bit_marginal = static_cast<double>(bits) / samples;
  out.mark_marginal = static_cast<double>(marks) / samples;
  out.estimate = static_cast<double>(mismatches) / samples;
  out.stderr_ = std::sqrt(out.estimate * (1.0 - out.estimate) /
                          static_cast<double>(samples));
  return out;
}

}  // namespace sftlab
