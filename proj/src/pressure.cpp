#include "sftlab/pressure.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace sftlab {

namespace {

// weighted matrix B(i, j) = [i -> j allowed] exp(f(i j...)) for range <= 2
Matrix weighted_matrix(const ShiftSpace& space, const Potential& f) {
  const int n = space.size();
  Matrix b(n);
  int w[2];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!space.allows(i, j)) continue;
      w[0] = i;
      w[1] = j;
      b.at(i, j) = std::exp(f.value(w));
    }
  return b;
}

// reduce a potential of any range to range <= 2 over a block recoding
struct Reduced {
  ShiftSpace space;
  Potential f;
  int block_order;
};

Reduced reduce(const ShiftSpace& space, const Potential& f) {
  if (f.range <= 2) return {space, f, 1};
  const int n = f.range - 1;
  ShiftSpace blocks = recode_higher_block(space, n);
  std::vector<Word> block_words = enumerate_words(space, n);
  Potential g(2, blocks.size());
  int pair[2];
  for (int i = 0; i < blocks.size(); ++i)
    for (int j = 0; j < blocks.size(); ++j) {
      if (!blocks.allows(i, j)) continue;
      // the range-k word spelled by the block transition
      std::vector<int> w = block_words[i].syms;
      w.push_back(block_words[j].syms.back());
      pair[0] = i;
      pair[1] = j;
      g.table[g.index(pair)] = f.value(w.data());
    }
  return {std::move(blocks), std::move(g), n};
}

}  // namespace

double pressure_sft(const ShiftSpace& space, const Potential& f) {
  if (!is_irreducible(space))
    throw std::invalid_argument("pressure_sft requires an irreducible space");
  Reduced r = reduce(space, f);
  return std::log(perron_eigen(weighted_matrix(r.space, r.f)).value);
}

double pressure_sofic(const SoficPresentation& presentation, const Potential& phi) {
  SoficPresentation core = presentation.core();
  const int labels = static_cast<int>(core.labels.size());

  // Lift the core graph so each transition carries a full phi-range label
  // block: nodes are (state, last range-1 labels read), interned.
  using Node = std::pair<int, std::vector<int>>;
  std::map<Node, int> ids;
  std::vector<Node> nodes;
  auto intern = [&](const Node& nd) {
    auto [it, fresh] = ids.try_emplace(nd, static_cast<int>(nodes.size()));
    if (fresh) nodes.push_back(nd);
    return it->second;
  };
  {
    std::vector<Node> frontier;
    for (int s = 0; s < core.state_count(); ++s) frontier.push_back({s, {}});
    for (int step = 1; step < phi.range; ++step) {
      std::vector<Node> grown;
      for (const Node& nd : frontier)
        for (int l = 0; l < labels; ++l) {
          int t = core.next[nd.first][l];
          if (t < 0) continue;
          Node ext{t, nd.second};
          ext.second.push_back(l);
          grown.push_back(std::move(ext));
        }
      frontier.swap(grown);
    }
    for (const Node& nd : frontier) intern(nd);
  }

  const int m = static_cast<int>(nodes.size());
  if (m == 0) throw std::invalid_argument("pressure_sofic: presentation has no paths");
  Matrix b(m);
  std::vector<int> word(phi.range);
  for (int i = 0; i < m; ++i) {
    for (int l = 0; l < labels; ++l) {
      int t = core.next[nodes[i].first][l];
      if (t < 0) continue;
      std::vector<int> hist = nodes[i].second;
      hist.push_back(l);
      // the full label block spelled by this transition
      for (int k = 0; k < phi.range; ++k) word[k] = hist[k];
      hist.erase(hist.begin());
      auto it = ids.find({t, hist});
      if (it == ids.end()) continue;  // successor outside the lifted core
      b.at(i, it->second) += std::exp(phi.value(word.data()));
    }
  }
  return std::log(perron_eigen(b).value);
}

Equilibrium equilibrium_markov(const ShiftSpace& space, const Potential& f) {
  if (!is_irreducible(space))
    throw std::invalid_argument("equilibrium_markov requires an irreducible space");
  Reduced r = reduce(space, f);
  Matrix b = weighted_matrix(r.space, r.f);
  PerronResult pr = perron_eigen(b);

  const int n = r.space.size();
  Matrix p(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b.at(i, j) > 0.0)
        p.at(i, j) = b.at(i, j) * pr.right[j] / (pr.value * pr.right[i]);

  MarkovMeasure m;
  m.transition = std::move(p);
  m.stationary.resize(n);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    m.stationary[i] = pr.left[i] * pr.right[i];
    norm += m.stationary[i];
  }
  for (double& x : m.stationary) x /= norm;
  validate_measure(r.space, m, 1e-9);

  Equilibrium eq;
  eq.block_space = std::move(r.space);
  eq.block_order = r.block_order;
  eq.measure = std::move(m);
  eq.pressure = std::log(pr.value);
  return eq;
}

}  // namespace sftlab
