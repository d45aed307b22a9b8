#pragma once

#include <cstdint>
#include <vector>

namespace sftlab {

struct EntropyEstimate {
  double estimate = 0.0;  // conditional block entropy H(X_0 | X_{-k..-1})
  double stderr_ = 0.0;   // batch-means standard error
  bool insufficient_data = false;
  int k = 0;
};

// Empirical conditional entropy from pooled (k+1)-block counts over integer
// sequences. Each sequence is one batch; a single sequence is split into 16
// batches. Sets insufficient_data (and doubles the reported error) when some
// observed context has fewer than 25 continuations.
EntropyEstimate empirical_entropy(const std::vector<std::vector<int>>& samples, int k);

}  // namespace sftlab
