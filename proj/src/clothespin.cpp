#include "sftlab/clothespin.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sftlab {

PinSequence pin_process(const MpwContext& ctx, const Word& w, long long start) {
  if (!word_allowed(ctx.space(), w))
    throw std::invalid_argument("pin_process: word not allowed");
  if (start < w.origin || start > w.end())
    throw std::invalid_argument("pin_process: start outside window");

  PinSequence s;
  s.pins.push_back(start);
  long long last = start;
  const long long end = w.end();
  while (true) {
    // least i > last with w[last..i+1] non-minimal; candidate i needs i+1 <= end
    long long found = -1;
    for (long long i = last + 1; i + 1 <= end; ++i) {
      if (!ctx.is_minimal(w.slice(last, i + 1))) {
        found = i;
        break;
      }
    }
    if (found < 0) {
      // no candidate at all means the edge cut the scan short
      s.truncated = (last + 2 > end);
      break;
    }
    s.pins.push_back(found);
    last = found;
  }
  return s;
}

PinSequence pin_process(const ShiftSpace& space, const FactorCode& code,
                        const MPWOrder& order, const Word& w, long long start) {
  MpwContext ctx(space, code, order);
  return pin_process(ctx, w, start);
}

NValue n_of(const MpwContext& ctx, const Word& w, long long center) {
  if (center <= w.origin || center >= w.end())
    throw std::invalid_argument("n_of: center must be interior to the window");
  NValue out;
  const long long max_radius = std::min(center - w.origin, w.end() - center);
  for (long long n = 0;; ++n) {
    if (n + 1 > max_radius) {
      // certified: all centered windows that fit are minimal
      out.value = static_cast<int>(max_radius);
      out.exact = false;
      return out;
    }
    // the (2n+1)-window is minimal (hereditary: checked on the way up);
    // test the (2(n+1)+1)-window
    if (!ctx.is_minimal(w.slice(center - n - 1, center + n + 1))) {
      out.value = static_cast<int>(n);
      out.exact = true;
      return out;
    }
  }
}

NValue n_of(const ShiftSpace& space, const FactorCode& code, const MPWOrder& order,
            const Word& w, long long center) {
  MpwContext ctx(space, code, order);
  return n_of(ctx, w, center);
}

int count_pinnings(const MpwContext& ctx, const Word& w) {
  if (!word_allowed(ctx.space(), w))
    throw std::invalid_argument("count_pinnings: word not allowed");
  // classes keyed by the rightmost pin strictly after the start; starts that
  // never pin again form the single "no interior pin" class
  std::set<long long> tails;
  bool zero_class = false;
  for (long long start = w.origin; start <= w.end(); ++start) {
    PinSequence s = pin_process(ctx, w, start);
    if (s.pins.size() <= 1)
      zero_class = true;
    else
      tails.insert(s.pins.back());
  }
  return static_cast<int>(tails.size()) + (zero_class ? 1 : 0);
}

int count_pinnings(const ShiftSpace& space, const FactorCode& code,
                   const MPWOrder& order, const Word& w) {
  MpwContext ctx(space, code, order);
  return count_pinnings(ctx, w);
}

ReturnStatistics return_statistics(const ShiftSpace& space, const FactorCode& code,
                                   const MPWOrder& order, const MarkovMeasure& sampler,
                                   long long length, std::uint64_t seed) {
  if (length < 3) throw std::invalid_argument("return_statistics: length too small");
  MpwContext ctx(space, code, order);
  SplitMix64 rng(stream_key(seed, "return_statistics"));
  Word w = sample_path(sampler, length, rng);

  PinSequence s = pin_process(ctx, w, 0);
  ReturnStatistics rs;
  rs.sample_length = length;
  rs.pin_count = s.pins.size();
  // drop the artificial pin at the left edge
  std::vector<long long> pins(s.pins.begin() + 1, s.pins.end());
  if (pins.size() < 3) {
    rs.degenerate = true;
    rs.note = "fewer than three pins found; sampler may live on the minimal subshift";
    return rs;
  }
  for (std::size_t k = 0; k + 2 < pins.size(); ++k) {
    int n1 = static_cast<int>(pins[k + 1] - pins[k]);
    int n2 = static_cast<int>(pins[k + 2] - pins[k]);
    int a = w.at(pins[k]);
    int b = w.at(pins[k + 1]);
    int c = w.at(pins[k + 2]);
    ++rs.counts[{n1, n2, a, b, c}];
    ++rs.total;
  }
  return rs;
}

std::map<std::pair<int, int>, std::uint64_t> ReturnStatistics::gap_marginal() const {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, count] : counts)
    out[{std::get<0>(key), std::get<1>(key)}] += count;
  return out;
}

std::map<int, std::uint64_t> ReturnStatistics::n2_marginal() const {
  std::map<int, std::uint64_t> out;
  for (const auto& [key, count] : counts) out[std::get<1>(key)] += count;
  return out;
}

std::string return_statistics_json(const ShiftSpace& space, const ReturnStatistics& rs) {
  nlohmann::ordered_json j;
  j["total"] = rs.total;
  j["sample_length"] = rs.sample_length;
  j["pin_count"] = rs.pin_count;
  j["degenerate"] = rs.degenerate;
  j["note"] = rs.note;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, count] : rs.counts) {
    nlohmann::ordered_json row;
    row["n1"] = std::get<0>(key);
    row["n2"] = std::get<1>(key);
    row["a"] = space.symbols[std::get<2>(key)];
    row["b"] = space.symbols[std::get<3>(key)];
    row["c"] = space.symbols[std::get<4>(key)];
    row["count"] = count;
    rows.push_back(row);
  }
  j["counts"] = rows;
  return j.dump(2) + "\n";
}

std::string return_statistics_csv(const ShiftSpace& space, const ReturnStatistics& rs) {
  std::ostringstream out;
  out << "n1,n2,a,b,c,count\n";
  for (const auto& [key, count] : rs.counts) {
    out << std::get<0>(key) << ',' << std::get<1>(key) << ','
        << space.symbols[std::get<2>(key)] << ',' << space.symbols[std::get<3>(key)]
        << ',' << space.symbols[std::get<4>(key)] << ',' << count << '\n';
  }
  return out.str();
}

}  // namespace sftlab
