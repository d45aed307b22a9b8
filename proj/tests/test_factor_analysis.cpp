#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sftlab/factor_analysis.hpp"
#include "sftlab/rng.hpp"

using namespace sftlab;

namespace {

ShiftSpace full2() { return ShiftSpace::full({"0", "1"}); }
ShiftSpace full3() { return ShiftSpace::full({"a", "b", "c"}); }

ShiftSpace golden_mean() {
  return ShiftSpace::from_pairs({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}});
}

FactorCode e1_code(const ShiftSpace& s) {
  return FactorCode::from_map(s, {{"a", "0"}, {"b", "0"}, {"c", "1"}});
}

bool valid_diamond(const ShiftSpace& s, const FactorCode& c, const Diamond& d) {
  return d.u.size() == d.v.size() && d.u != d.v &&
         d.u.syms.front() == d.v.syms.front() && d.u.syms.back() == d.v.syms.back() &&
         apply_code(c, d.u) == apply_code(c, d.v) && word_allowed(s, d.u) &&
         word_allowed(s, d.v);
}

// oracle: all words of the same (length, endpoints, image) class, by scan
std::vector<Word> enumerate_class(const ShiftSpace& s, const FactorCode& c,
                                  const Word& w) {
  std::vector<Word> out;
  Word image = apply_code(c, w);
  for (const Word& cand : enumerate_words(s, w.size())) {
    if (cand.syms.front() != w.syms.front() || cand.syms.back() != w.syms.back())
      continue;
    if (apply_code(c, cand) != image) continue;
    out.push_back(cand);
  }
  return out;
}

// oracle: class minimum by exhaustive enumeration under the order
Word class_min_brute(const ShiftSpace& s, const FactorCode& c, const MPWOrder& o,
                     const Word& w) {
  std::vector<Word> cls = enumerate_class(s, c, w);
  Word best = cls.front();
  for (const Word& cand : cls) {
    for (int i = 0; i < cand.size(); ++i) {
      if (o.less(cand.syms[i], best.syms[i])) {
        best = cand;
        break;
      }
      if (o.less(best.syms[i], cand.syms[i])) break;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("find_diamond absent for injective-fiber codes") {
  CHECK_FALSE(find_diamond(full2(), FactorCode::identity(full2()), 10));
  CHECK_FALSE(find_diamond(golden_mean(), FactorCode::identity(golden_mean()), 10));
}

TEST_CASE("find_diamond on the merged full 3-shift finds a shortest diamond") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  auto d = find_diamond(x, pi, 5);
  REQUIRE(d);
  CHECK(d->u.size() == 3);
  CHECK(valid_diamond(x, pi, *d));
}

TEST_CASE("classify_factor") {
  ShiftSpace x = full3();
  CHECK(classify_factor(x, e1_code(x)) == FactorClass::InfiniteToOne);
  CHECK(classify_factor(full2(), FactorCode::identity(full2())) ==
        FactorClass::FiniteToOne);
  // collapse-everything code: image is a fixed point
  FactorCode collapse = FactorCode::from_map(full2(), {{"0", "0"}, {"1", "0"}});
  CHECK(classify_factor(full2(), collapse) == FactorClass::InfiniteToOne);
}

TEST_CASE("mpw minimality on the running example") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  CHECK_FALSE(is_mpw_minimal(x, pi, order, parse_word(x.symbols, "aba")));
  CHECK(is_mpw_minimal(x, pi, order, parse_word(x.symbols, "aaa")));
  CHECK(is_mpw_minimal(x, pi, order, parse_word(x.symbols, "b")));
  CHECK(is_mpw_minimal(x, pi, order, parse_word(x.symbols, "cb")));
  CHECK_THROWS_AS(is_mpw_minimal(golden_mean(), FactorCode::identity(golden_mean()),
                                 MPWOrder::declared(golden_mean()),
                                 parse_word(golden_mean().symbols, "11")),
                  std::invalid_argument);
}

TEST_CASE("minimality agrees with exhaustive class minima") {
  struct Sys {
    ShiftSpace space;
    FactorCode code;
  };
  std::vector<Sys> systems;
  systems.push_back({full3(), e1_code(full3())});
  ShiftSpace g = golden_mean();
  systems.push_back({g, FactorCode::from_map(g, {{"0", "x"}, {"1", "x"}})});

  for (auto& [space, code] : systems) {
    MPWOrder order = MPWOrder::declared(space);
    MpwContext ctx(space, code, order);
    for (int len = 3; len <= 5; ++len) {
      for (const Word& w : enumerate_words(space, len)) {
        Word oracle = class_min_brute(space, code, order, w);
        CHECK(ctx.class_minimum(w) == oracle);
        CHECK(ctx.is_minimal(w) == (w == oracle));
      }
    }
  }
}

TEST_CASE("exactly one minimal word per class") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  MpwContext ctx(x, pi, order);
  for (int len = 3; len <= 5; ++len) {
    std::map<std::vector<int>, int> minima_per_class;
    for (const Word& w : enumerate_words(x, len)) {
      std::vector<int> key = apply_code(pi, w).syms;
      key.push_back(w.syms.front());
      key.push_back(w.syms.back());
      if (ctx.is_minimal(w)) ++minima_per_class[key];
      else minima_per_class[key] += 0;
    }
    for (const auto& [key, count] : minima_per_class) CHECK(count == 1);
  }
}

TEST_CASE("no two minimal words form a diamond") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  MpwContext ctx(x, pi, order);
  for (int len = 3; len <= 4; ++len) {
    std::map<std::vector<int>, std::vector<Word>> minimal_by_class;
    for (const Word& w : enumerate_words(x, len)) {
      if (!ctx.is_minimal(w)) continue;
      std::vector<int> key = apply_code(pi, w).syms;
      key.push_back(w.syms.front());
      key.push_back(w.syms.back());
      minimal_by_class[key].push_back(w);
    }
    for (const auto& [key, words] : minimal_by_class) CHECK(words.size() == 1);
  }
}

TEST_CASE("mpw_forbidden on the running example") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);

  auto l3 = mpw_forbidden(x, pi, order, 3);
  REQUIRE(l3.size() == 9);  // every x b y
  for (const Word& w : l3) {
    CHECK(w.size() == 3);
    CHECK(x.symbols[w.syms[1]] == "b");
  }
  // no new minimal forbidden words at length 4
  auto l4 = mpw_forbidden(x, pi, order, 4);
  CHECK(l4.size() == 9);

  // identity code: everything is minimal
  ShiftSpace g = golden_mean();
  CHECK(mpw_forbidden(g, FactorCode::identity(g), MPWOrder::declared(g), 5).empty());

  CHECK_THROWS_AS(mpw_forbidden(x, pi, order, 2), std::invalid_argument);
}

TEST_CASE("fiber_count by direct enumeration") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  auto oracle = [&](const std::string& y) {
    Word target = parse_word(pi.labels, y);
    std::uint64_t count = 0;
    for (const Word& w : enumerate_words(x, target.size()))
      if (apply_code(pi, w) == target) ++count;
    return count;
  };
  for (const std::string& y : {"00", "11", "0101", "0", "10011"}) {
    CHECK(fiber_count(x, pi, parse_word(pi.labels, y)) == oracle(y));
  }
  CHECK(fiber_count(x, pi, parse_word(pi.labels, "00")) == 4);
  CHECK(fiber_count(x, pi, parse_word(pi.labels, "11")) == 1);
  CHECK(fiber_count(x, pi, parse_word(pi.labels, "0101")) == 4);

  // image-language miss: identity on golden mean, word 11
  ShiftSpace g = golden_mean();
  CHECK(fiber_count(g, FactorCode::identity(g), parse_word(g.symbols, "11")) == 0);
}

TEST_CASE("fiber_count guards against overflow") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  Word long_zeros(std::vector<int>(70, 0), 0);  // fiber 2^70
  CHECK_THROWS_AS(fiber_count(x, pi, long_zeros), std::overflow_error);
  // the log-space profile handles the same word
  CHECK(relative_entropy_profile(x, pi, long_zeros) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("relative entropy profile") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  for (int n : {1, 4, 9, 40}) {
    Word zeros(std::vector<int>(n, 0), 0);
    CHECK(relative_entropy_profile(x, pi, zeros) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    Word ones(std::vector<int>(n, 1), 0);
    CHECK(relative_entropy_profile(x, pi, ones) == doctest::Approx(0.0));
  }
  // half zeros: (1/2) log 2 exactly for the full-shift product structure
  Word mixed = parse_word(pi.labels, "0101");
  CHECK(relative_entropy_profile(x, pi, mixed) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(relative_entropy_profile(x, pi, Word({}, 0)),
                  std::invalid_argument);
  // bounded by log |alphabet| and consistent with fiber_count
  SplitMix64 rng(stream_key(3, "rep"));
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng.next() % 10);
    Word y;
    for (int i = 0; i < n; ++i) y.syms.push_back(static_cast<int>(rng.next() % 2));
    double g = relative_entropy_profile(x, pi, y);
    CHECK(g >= -1e-12);
    CHECK(g <= std::log(3.0) + 1e-12);
    CHECK(g == doctest::Approx(std::log(static_cast<double>(fiber_count(x, pi, y))) / n)
                   .epsilon(1e-10));
  }
}

TEST_CASE("fiber growth separates the two classes") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  std::uint64_t previous = 0;
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t best = 0;
    for (const Word& y : enumerate_words(full2(), n))
      best = std::max(best, fiber_count(x, pi, y));
    CHECK(best > previous);  // strict growth in the infinite-to-one case
    previous = best;
  }

  FactorCode id = FactorCode::identity(golden_mean());
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t best = 0;
    for (const Word& y : enumerate_words(golden_mean(), n))
      best = std::max(best, fiber_count(golden_mean(), id, y));
    CHECK(best <= 4);  // |alphabet|^2
  }
}

TEST_CASE("find_swap_pair on the running example") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);

  SubshiftApprox no_b(x, {parse_word(x.symbols, "b")});
  auto pair = find_swap_pair(x, pi, no_b, 6, 4);
  REQUIRE(pair);
  CHECK(format_word(x.symbols, pair->u) == "aaa");
  CHECK(format_word(x.symbols, pair->v) == "aba");
  CHECK(pair->verified_length == 4);

  SubshiftApprox no_a(x, {parse_word(x.symbols, "a")});
  auto pair2 = find_swap_pair(x, pi, no_a, 6, 4);
  REQUIRE(pair2);
  CHECK(format_word(x.symbols, pair2->u) == "bbb");
  CHECK(format_word(x.symbols, pair2->v) == "bab");

  // exact guarantees of the output
  for (const auto& p : {*pair, *pair2}) {
    CHECK(apply_code(pi, p.u) == apply_code(pi, p.v));
    CHECK(p.u.syms.front() == p.v.syms.front());
    CHECK(p.u.syms.back() == p.v.syms.back());
  }
  CHECK(no_b.contains(pair->u));
  CHECK_FALSE(no_b.contains(pair->v));

  // not proper: no forbidden words
  SubshiftApprox whole(x, {});
  CHECK_THROWS_AS(find_swap_pair(x, pi, whole, 6, 4), std::invalid_argument);

  // report serialization carries the verified context length
  std::string j = swap_pair_to_json(x, *pair);
  CHECK(j.find("\"verified_length\": 4") != std::string::npos);
  std::string fl = forbidden_to_json(x, mpw_forbidden(x, pi, MPWOrder::declared(x), 3));
  CHECK(fl.find("\"aba\"") != std::string::npos);
}

TEST_CASE("find_swap_pair rejects approximations that lose image words") {
  // forbidding c kills the label 1 entirely
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  SubshiftApprox no_c(x, {parse_word(x.symbols, "c")});
  CHECK_THROWS_AS(find_swap_pair(x, pi, no_c, 6, 3), std::invalid_argument);
}
