#include "sftlab/sofic.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sftlab {

FactorCode FactorCode::from_map(
    const ShiftSpace& space,
    const std::vector<std::pair<std::string, std::string>>& mapping) {
  FactorCode code;
  code.label_of.assign(static_cast<std::size_t>(space.size()), -1);
  for (const auto& [sym, label] : mapping) {
    int i = space.index_of(sym);
    if (i < 0) continue;  // symbol may have been trimmed
    int l = -1;
    for (std::size_t k = 0; k < code.labels.size(); ++k)
      if (code.labels[k] == label) l = static_cast<int>(k);
    if (l < 0) {
      l = static_cast<int>(code.labels.size());
      code.labels.push_back(label);
    }
    code.label_of[static_cast<std::size_t>(i)] = l;
  }
  for (int i = 0; i < space.size(); ++i)
    if (code.label_of[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("code missing symbol '" + space.symbols[i] + "'");
  return code;
}

FactorCode FactorCode::identity(const ShiftSpace& space) {
  FactorCode code;
  code.labels = space.symbols;
  code.label_of.resize(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) code.label_of[static_cast<std::size_t>(i)] = i;
  return code;
}

Word apply_code(const FactorCode& code, const Word& w) {
  Word out;
  out.origin = w.origin;
  out.syms.reserve(w.syms.size());
  for (int s : w.syms) {
    if (s < 0 || s >= static_cast<int>(code.label_of.size()))
      throw std::invalid_argument("apply_code: symbol outside code domain");
    out.syms.push_back(code.label_of[static_cast<std::size_t>(s)]);
  }
  return out;
}

namespace {

std::string set_name(const ShiftSpace& space, const std::vector<int>& set) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << ',';
    out << space.symbols[static_cast<std::size_t>(set[i])];
  }
  out << '}';
  return out.str();
}

// Coarsest partition of states with identical labeled behavior (Moore
// refinement); merged states present the same language.
std::vector<int> behavior_classes(const std::vector<std::vector<int>>& next,
                                  int label_count) {
  const int n = static_cast<int>(next.size());
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  // initial split: by set of defined labels
  {
    std::map<std::vector<bool>, int> ids;
    for (int s = 0; s < n; ++s) {
      std::vector<bool> sig(static_cast<std::size_t>(label_count));
      for (int l = 0; l < label_count; ++l) sig[static_cast<std::size_t>(l)] = next[s][l] >= 0;
      auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      cls[static_cast<std::size_t>(s)] = it->second;
    }
  }
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> refined(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.push_back(cls[static_cast<std::size_t>(s)]);
      for (int l = 0; l < label_count; ++l)
        sig.push_back(next[s][l] >= 0 ? cls[static_cast<std::size_t>(next[s][l])] : -1);
      auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      refined[static_cast<std::size_t>(s)] = it->second;
    }
    if (refined == cls) break;
    cls = refined;
  }
  return cls;
}

}  // namespace

SoficPresentation sofic_presentation(const ShiftSpace& space, const FactorCode& code) {
  if (!is_irreducible(space))
    throw std::invalid_argument("sofic_presentation requires an irreducible domain");
  const int label_count = code.image_size();

  std::vector<int> full(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) full[static_cast<std::size_t>(i)] = i;

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<int>> next;
  auto intern = [&](const std::vector<int>& set) {
    auto [it, inserted] = ids.try_emplace(set, static_cast<int>(sets.size()));
    if (inserted) {
      sets.push_back(set);
      next.emplace_back(static_cast<std::size_t>(label_count), -1);
    }
    return it->second;
  };

  std::queue<int> work;
  work.push(intern(full));
  for (std::size_t done = 0; !work.empty();) {
    int s = work.front();
    work.pop();
    ++done;
    for (int l = 0; l < label_count; ++l) {
      std::vector<int> follower;
      for (int q = 0; q < space.size(); ++q) {
        if (code(q) != l) continue;
        bool reachable = false;
        for (int p : sets[static_cast<std::size_t>(s)])
          if (space.allows(p, q)) reachable = true;
        if (reachable) follower.push_back(q);
      }
      if (follower.empty()) continue;
      bool fresh = ids.find(follower) == ids.end();
      int t = intern(follower);
      next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] = t;
      if (fresh) work.push(t);
    }
  }

  // merge behaviorally identical states
  std::vector<int> cls = behavior_classes(next, label_count);
  int class_count = *std::max_element(cls.begin(), cls.end()) + 1;

  SoficPresentation p;
  p.labels = code.labels;
  p.state_sets.assign(static_cast<std::size_t>(class_count), {});
  p.next.assign(static_cast<std::size_t>(class_count),
                std::vector<int>(static_cast<std::size_t>(label_count), -1));
  std::vector<std::set<int>> members(static_cast<std::size_t>(class_count));
  for (std::size_t s = 0; s < sets.size(); ++s) {
    int c = cls[s];
    members[static_cast<std::size_t>(c)].insert(sets[s].begin(), sets[s].end());
    for (int l = 0; l < label_count; ++l)
      if (next[s][static_cast<std::size_t>(l)] >= 0)
        p.next[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] =
            cls[static_cast<std::size_t>(next[s][static_cast<std::size_t>(l)])];
  }
  for (int c = 0; c < class_count; ++c) {
    p.state_sets[static_cast<std::size_t>(c)].assign(members[static_cast<std::size_t>(c)].begin(),
                                                     members[static_cast<std::size_t>(c)].end());
    p.state_names.push_back(set_name(space, p.state_sets[static_cast<std::size_t>(c)]));
  }
  p.initial = cls[0];
  return p;
}

std::vector<Word> SoficPresentation::label_words(int n) const {
  std::vector<Word> out;
  // DFS over (state, partial word)
  struct Frame {
    int state;
    int label;
  };
  std::vector<Frame> stack{{initial, 0}};
  std::vector<int> word;
  while (!stack.empty()) {
    Frame& f = stack.back();
    int lc = static_cast<int>(labels.size());
    if (f.label >= lc) {
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      if (!stack.empty()) ++stack.back().label;
      continue;
    }
    int t = next[static_cast<std::size_t>(f.state)][static_cast<std::size_t>(f.label)];
    if (t < 0) {
      ++f.label;
      continue;
    }
    word.push_back(f.label);
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word, 0);
      word.pop_back();
      ++f.label;
    } else {
      stack.push_back({t, 0});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SoficPresentation SoficPresentation::core() const {
  const int n = state_count();
  const int lc = static_cast<int>(labels.size());

  // Tarjan-free SCC via Kosaraju
  std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n)), bwd(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s)
    for (int l = 0; l < lc; ++l) {
      int t = next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
      if (t >= 0) {
        fwd[static_cast<std::size_t>(s)].push_back(t);
        bwd[static_cast<std::size_t>(t)].push_back(s);
      }
    }
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s0 = 0; s0 < n; ++s0) {
    if (seen[static_cast<std::size_t>(s0)]) continue;
    std::vector<std::pair<int, std::size_t>> st{{s0, 0}};
    seen[static_cast<std::size_t>(s0)] = true;
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < fwd[static_cast<std::size_t>(v)].size()) {
        int w = fwd[static_cast<std::size_t>(v)][i++];
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          st.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        st.pop_back();
      }
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int comp_count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    std::vector<int> st{*it};
    comp[static_cast<std::size_t>(*it)] = comp_count;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : bwd[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp_count;
          st.push_back(w);
        }
    }
    ++comp_count;
  }

  // terminal components: no edge leaving
  std::vector<bool> terminal(static_cast<std::size_t>(comp_count), true);
  for (int s = 0; s < n; ++s)
    for (int t : fwd[static_cast<std::size_t>(s)])
      if (comp[static_cast<std::size_t>(s)] != comp[static_cast<std::size_t>(t)])
        terminal[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])] = false;

  // pick the terminal component with the most states (ties: smallest id);
  // for images of irreducible domains it is unique
  int best = -1, best_size = -1;
  for (int c = 0; c < comp_count; ++c) {
    if (!terminal[static_cast<std::size_t>(c)]) continue;
    int size = 0;
    for (int s = 0; s < n; ++s)
      if (comp[static_cast<std::size_t>(s)] == c) ++size;
    if (size > best_size) {
      best = c;
      best_size = size;
    }
  }

  SoficPresentation out;
  out.labels = labels;
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != best) continue;
    remap[static_cast<std::size_t>(s)] = out.state_count();
    out.state_names.push_back(state_names[static_cast<std::size_t>(s)]);
    out.state_sets.push_back(state_sets[static_cast<std::size_t>(s)]);
    out.next.emplace_back(static_cast<std::size_t>(lc), -1);
  }
  for (int s = 0; s < n; ++s) {
    if (remap[static_cast<std::size_t>(s)] < 0) continue;
    for (int l = 0; l < lc; ++l) {
      int t = next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)];
      if (t >= 0 && remap[static_cast<std::size_t>(t)] >= 0)
        out.next[static_cast<std::size_t>(remap[static_cast<std::size_t>(s)])]
                [static_cast<std::size_t>(l)] = remap[static_cast<std::size_t>(t)];
    }
  }
  out.initial = 0;
  return out;
}

}  // namespace sftlab
