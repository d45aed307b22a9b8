#include "sftlab/entropy_bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sftlab {

namespace {

double plogp(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

// Forward vectors over all label words of length n: for each word w,
// alpha_w(q) = P(X block compatible with w, last symbol q), plus the same
// refined by the symbol preceding the block.
struct BlockScan {
  int label_count;
  // H(Y block of length n) and H(X_{-1}, Y block of length n) accumulate here
  double block_entropy = 0.0;
  double block_entropy_with_state = 0.0;
};

BlockScan scan_blocks(const ShiftSpace& space, const FactorCode& code,
                      const MarkovMeasure& m, int n) {
  const int a = space.size();
  BlockScan out{code.image_size()};

  // depth-first over label words; carry both vectors
  struct Frame {
    int label = 0;
    std::vector<double> alpha;               // by current symbol
    std::vector<std::vector<double>> alpha0;  // by (initial hidden state, current symbol)
  };
  std::vector<Frame> stack;
  Frame root;
  root.alpha.assign(a, 0.0);
  root.alpha0.assign(a, std::vector<double>(a, 0.0));
  stack.push_back(std::move(root));

  while (!stack.empty()) {
    Frame& f = stack.back();
    int depth = static_cast<int>(stack.size()) - 1;  // symbols consumed so far
    if (f.label >= out.label_count) {
      stack.pop_back();
      if (!stack.empty()) ++stack.back().label;
      continue;
    }
    int l = f.label;
    Frame next;
    next.alpha.assign(a, 0.0);
    next.alpha0.assign(a, std::vector<double>(a, 0.0));
    if (depth == 0) {
      // first label: start from stationarity; the "previous hidden state" for
      // the refined vector is the symbol before the block
      for (int q = 0; q < a; ++q) {
        if (code(q) != l) continue;
        next.alpha[q] = m.stationary[q];
        for (int x0 = 0; x0 < a; ++x0)
          next.alpha0[x0][q] = m.stationary[x0] * m.transition.at(x0, q);
      }
    } else {
      for (int q = 0; q < a; ++q) {
        if (code(q) != l) continue;
        for (int p = 0; p < a; ++p) {
          double step = m.transition.at(p, q);
          if (step <= 0.0) continue;
          next.alpha[q] += f.alpha[p] * step;
          for (int x0 = 0; x0 < a; ++x0)
            next.alpha0[x0][q] += f.alpha0[x0][p] * step;
        }
      }
    }
    double mass = 0.0;
    for (double x : next.alpha) mass += x;
    if (mass <= 0.0) {
      ++f.label;
      continue;
    }
    if (depth + 1 == n) {
      out.block_entropy -= plogp(mass);
      for (int x0 = 0; x0 < a; ++x0) {
        double with_state = 0.0;
        for (int q = 0; q < a; ++q) with_state += next.alpha0[x0][q];
        out.block_entropy_with_state -= plogp(with_state);
      }
      ++f.label;
    } else {
      stack.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

EntropyBracket pushforward_entropy_bracket(const ShiftSpace& space,
                                           const FactorCode& code,
                                           const MarkovMeasure& m, int n) {
  if (n < 1) throw std::invalid_argument("pushforward_entropy_bracket: n must be >= 1");
  BlockScan big = scan_blocks(space, code, m, n + 1);
  BlockScan small = scan_blocks(space, code, m, n);
  EntropyBracket b;
  b.upper = big.block_entropy - small.block_entropy;
  b.lower = big.block_entropy_with_state - small.block_entropy_with_state;
  return b;
}

EntropyBracket relative_entropy_bracket(const ShiftSpace& space, const FactorCode& code,
                                        const MarkovMeasure& m, int n) {
  EntropyBracket push = pushforward_entropy_bracket(space, code, m, n);
  double h = markov_entropy(m);
  return {h - push.upper, h - push.lower};
}

}  // namespace sftlab
