#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sftlab/compensation.hpp"
#include "sftlab/dini.hpp"
#include "sftlab/entropy_bounds.hpp"
#include "sftlab/pressure.hpp"
#include "sftlab/rng.hpp"

using namespace sftlab;

namespace {

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLogGolden = 0.4812118250596035;  // log((1+sqrt 5)/2)
constexpr double kLog1PlusE = 1.3132616875182228;

ShiftSpace full2() { return ShiftSpace::full({"0", "1"}); }
ShiftSpace full3() { return ShiftSpace::full({"a", "b", "c"}); }

ShiftSpace golden_mean() {
  return ShiftSpace::from_pairs({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}});
}

FactorCode e1_code(const ShiftSpace& s) {
  return FactorCode::from_map(s, {{"a", "0"}, {"b", "0"}, {"c", "1"}});
}

Potential random_potential(const ShiftSpace& s, int range, SplitMix64& rng) {
  Potential f(range, s.size());
  for (double& x : f.table) x = -2.0 + 4.0 * rng.uniform01();
  return f;
}

}  // namespace

TEST_CASE("pressure of zero potentials") {
  CHECK(pressure_sft(full2(), Potential::constant(full2(), 0.0)) ==
        doctest::Approx(kLog2).epsilon(1e-12));
  CHECK(pressure_sft(golden_mean(), Potential::constant(golden_mean(), 0.0)) ==
        doctest::Approx(kLogGolden).epsilon(1e-12));
}

TEST_CASE("pressure of a weighted full shift has a closed form") {
  // f = 1[x0 = 1]: the weighted matrix is rank one, eigenvalue 1 + e
  Potential f = Potential::on_symbols(full2(), {"1"}, 1.0);
  CHECK(pressure_sft(full2(), f) == doctest::Approx(kLog1PlusE).epsilon(1e-12));
}

TEST_CASE("pressure requires irreducibility") {
  ShiftSpace loops = ShiftSpace::from_pairs({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  CHECK_THROWS_AS(pressure_sft(loops, Potential::constant(loops, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("pressure handles range-3 potentials through recoding") {
  // oracle: a range-3 potential that only depends on the first symbol must
  // give the same pressure as its range-1 version
  ShiftSpace g = golden_mean();
  Potential f1 = Potential::on_symbols(g, {"1"}, 0.7);
  Potential f3 = f1.lifted(3);
  CHECK(pressure_sft(g, f3) == doctest::Approx(pressure_sft(g, f1)).epsilon(1e-11));
}

TEST_CASE("sofic pressure on presentations") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  SoficPresentation p = sofic_presentation(x, pi);
  Potential zero(1, 2);
  CHECK(pressure_sofic(p, zero) == doctest::Approx(kLog2).epsilon(1e-12));

  // even shift: entropy log golden mean
  ShiftSpace edges = ShiftSpace::from_pairs(
      {"e1", "e2", "e3"},
      {{"e1", "e2"}, {"e2", "e1"}, {"e2", "e3"}, {"e3", "e1"}, {"e3", "e3"}});
  FactorCode label =
      FactorCode::from_map(edges, {{"e1", "0"}, {"e2", "0"}, {"e3", "1"}});
  SoficPresentation even = sofic_presentation(edges, label);
  CHECK(pressure_sofic(even, zero) == doctest::Approx(kLogGolden).epsilon(1e-12));
}

TEST_CASE("sofic pressure with range-2 weights matches the direct eigenvalue") {
  // full 2-shift: 2-block lift has matrix M(l, l') = exp(phi(l l'));
  // oracle eigenvalue computed from the quadratic characteristic polynomial
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  SoficPresentation p = sofic_presentation(x, pi);
  Potential phi(2, 2);
  int w[2];
  auto set = [&](int a, int b, double v) {
    w[0] = a;
    w[1] = b;
    phi.table[phi.index(w)] = v;
  };
  set(0, 0, 0.3);
  set(0, 1, -0.2);
  set(1, 0, 0.1);
  set(1, 1, -0.5);
  double m00 = std::exp(0.3), m01 = std::exp(-0.2), m10 = std::exp(0.1),
         m11 = std::exp(-0.5);
  double tr = m00 + m11, det = m00 * m11 - m01 * m10;
  double lambda = 0.5 * (tr + std::sqrt(tr * tr - 4 * det));
  CHECK(pressure_sofic(p, phi) == doctest::Approx(std::log(lambda)).epsilon(1e-11));
}

TEST_CASE("equilibrium measures of classic systems") {
  {
    Equilibrium eq = equilibrium_markov(full2(), Potential::constant(full2(), 0.0));
    CHECK(eq.measure.stationary[0] == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(eq.measure.transition.at(0, 1) == doctest::Approx(0.5).epsilon(1e-11));
  }
  {
    Equilibrium eq =
        equilibrium_markov(golden_mean(), Potential::constant(golden_mean(), 0.0));
    CHECK(eq.measure.transition.at(0, 1) ==
          doctest::Approx(0.3819660112501051).epsilon(1e-10));
    CHECK(markov_entropy(eq.measure) == doctest::Approx(kLogGolden).epsilon(1e-10));
  }
  {
    Potential f = Potential::on_symbols(full2(), {"1"}, 1.0);
    Equilibrium eq = equilibrium_markov(full2(), f);
    double e = std::exp(1.0);
    CHECK(eq.measure.stationary[1] == doctest::Approx(e / (1 + e)).epsilon(1e-11));
    CHECK(eq.measure.transition.at(0, 1) == doctest::Approx(e / (1 + e)).epsilon(1e-11));
  }
}

TEST_CASE("equilibrium of a range-3 potential lives on the block recoding") {
  ShiftSpace g = golden_mean();
  SplitMix64 rng(stream_key(47, "range3"));
  Potential f = random_potential(g, 3, rng);
  Equilibrium eq = equilibrium_markov(g, f);
  CHECK(eq.block_order == 2);
  CHECK(eq.block_space.size() == 3);  // allowed 2-words of the golden mean
  double p = pressure_sft(g, f);
  CHECK(eq.pressure == doctest::Approx(p).epsilon(1e-11));
  // integral through the block chain: block 2-words spell original 3-words
  double integral = 0.0;
  for (const Word& bw : enumerate_words(eq.block_space, 2)) {
    Word w = expand_block_word(g, eq.block_space, 2, bw);
    integral += eq.measure.word_probability(bw) * f.value(w);
  }
  CHECK(markov_entropy(eq.measure) + integral == doctest::Approx(p).epsilon(1e-9));
}

TEST_CASE("markov entropy closed forms") {
  CHECK(markov_entropy(MarkovMeasure::bernoulli(full2(), {0.5, 0.5})) ==
        doctest::Approx(kLog2).epsilon(1e-12));
  Matrix point(2);
  point.at(0, 0) = 1.0;
  point.at(1, 0) = 1.0;
  MarkovMeasure fixed = MarkovMeasure::from_transition(full2(), point);
  CHECK(markov_entropy(fixed) == doctest::Approx(0.0));
}

TEST_CASE("variational identity and inequality") {
  ShiftSpace x = full3();
  SplitMix64 rng(stream_key(21, "variational"));
  for (int trial = 0; trial < 20; ++trial) {
    Potential f = random_potential(x, 2, rng);
    Equilibrium eq = equilibrium_markov(x, f);
    double p = pressure_sft(x, f);
    CHECK(eq.pressure == doctest::Approx(p).epsilon(1e-11));
    double identity =
        markov_entropy(eq.measure) + integrate(x, eq.measure, f) - p;
    CHECK(std::fabs(identity) < 1e-9);
    for (int m = 0; m < 5; ++m) {
      MarkovMeasure mm = MarkovMeasure::random(x, rng);
      CHECK(markov_entropy(mm) + integrate(x, mm, f) <= p + 1e-9);
    }
  }
}

TEST_CASE("pressure laws") {
  ShiftSpace g = golden_mean();
  SplitMix64 rng(stream_key(23, "laws"));
  for (int trial = 0; trial < 10; ++trial) {
    Potential f = random_potential(g, 2, rng);
    double c = -1.0 + 2.0 * rng.uniform01();
    Potential fc = f;
    for (double& v : fc.table) v += c;
    CHECK(pressure_sft(g, fc) ==
          doctest::Approx(pressure_sft(g, f) + c).epsilon(1e-10));

    Potential bigger = f;
    for (double& v : bigger.table) v += rng.uniform01();
    CHECK(pressure_sft(g, f) <= pressure_sft(g, bigger) + 1e-10);
  }
}

TEST_CASE("pushforward brackets: i.i.d. image collapses to a point") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MarkovMeasure uniform = MarkovMeasure::bernoulli(x, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  double h23 = -(2.0 / 3) * std::log(2.0 / 3) - (1.0 / 3) * std::log(1.0 / 3);
  for (int n : {1, 4, 8}) {
    EntropyBracket b = pushforward_entropy_bracket(x, pi, uniform, n);
    CHECK(b.upper == doctest::Approx(h23).epsilon(1e-12));
    CHECK(b.lower == doctest::Approx(h23).epsilon(1e-12));
  }
}

TEST_CASE("pushforward brackets: identity code collapses at n = 1") {
  ShiftSpace g = golden_mean();
  FactorCode id = FactorCode::identity(g);
  SplitMix64 rng(stream_key(29, "idbracket"));
  MarkovMeasure m = MarkovMeasure::random(g, rng);
  EntropyBracket b = pushforward_entropy_bracket(g, id, m, 1);
  CHECK(b.upper == doctest::Approx(markov_entropy(m)).epsilon(1e-11));
  CHECK(b.lower == doctest::Approx(markov_entropy(m)).epsilon(1e-11));
}

TEST_CASE("pushforward brackets shrink monotonically") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  SplitMix64 rng(stream_key(31, "bracket_mono"));
  for (int trial = 0; trial < 5; ++trial) {
    MarkovMeasure m = MarkovMeasure::random(x, rng);
    double prev_upper = 1e100, prev_lower = -1e100;
    for (int n = 1; n <= 6; ++n) {
      EntropyBracket b = pushforward_entropy_bracket(x, pi, m, n);
      CHECK(b.lower <= b.upper + 1e-12);
      CHECK(b.upper <= prev_upper + 1e-12);
      CHECK(b.lower >= prev_lower - 1e-12);
      prev_upper = b.upper;
      prev_lower = b.lower;
    }
  }
}

TEST_CASE("relative entropy brackets") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MarkovMeasure uniform = MarkovMeasure::bernoulli(x, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  EntropyBracket b = relative_entropy_bracket(x, pi, uniform, 8);
  double expect = (2.0 / 3) * std::log(2.0);
  CHECK(b.lower == doctest::Approx(expect).epsilon(1e-9));
  CHECK(b.upper == doctest::Approx(expect).epsilon(1e-9));

  ShiftSpace g = golden_mean();
  SplitMix64 rng(stream_key(37, "rel"));
  MarkovMeasure m = MarkovMeasure::random(g, rng);
  EntropyBracket idb = relative_entropy_bracket(g, FactorCode::identity(g), m, 3);
  CHECK(std::fabs(idb.lower) < 1e-10);
  CHECK(std::fabs(idb.upper) < 1e-10);

  // measure on the {a, c} subsystem: the code is injective there
  MarkovMeasure ac = MarkovMeasure::bernoulli(x, {0.4, 0.0, 0.6});
  EntropyBracket acb = relative_entropy_bracket(x, pi, ac, 4);
  CHECK(std::fabs(acb.lower) < 1e-9);
  CHECK(std::fabs(acb.upper) < 1e-9);
}

TEST_CASE("distance-to-minimality potential values") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  const double t = 2.0;
  {
    Potential f = dini_potential(x, pi, order, t, 2);
    CHECK(f.range == 5);
    Word w = parse_word(x.symbols, "aabaa");
    CHECK(f.value(w) == doctest::Approx(-t * std::log(2.0) / 2.0).epsilon(1e-12));
    Word min_w = parse_word(x.symbols, "aaaaa");
    CHECK(f.value(min_w) == doctest::Approx(0.0));
    Word ac = parse_word(x.symbols, "acaca");
    CHECK(f.value(ac) == doctest::Approx(0.0));
  }
  {
    Potential f = dini_potential(x, pi, order, t, 4);
    Word w = parse_word(x.symbols, "aaaaaaaba");  // nearest non-minimality at radius 3
    CHECK(f.value(w) == doctest::Approx(-t * std::log(5.0) / 5.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(dini_potential(x, pi, order, 0.0, 2), std::invalid_argument);
}

TEST_CASE("variation sequences") {
  ShiftSpace x = full3();
  {
    VariationSequence v = variation_sequence(x, Potential::constant(x, 0.7), 4);
    for (double value : v.values) CHECK(value == doctest::Approx(0.0));
    REQUIRE(v.tail);
    CHECK(v.tail->t == 0.0);
  }
  {
    Potential f = Potential::on_symbols(full2(), {"1"}, 1.0);
    VariationSequence v = variation_sequence(full2(), f, 3);
    CHECK(v.values[0] == doctest::Approx(1.0));
    CHECK(v.values[1] == doctest::Approx(0.0));
    CHECK(v.values[2] == doctest::Approx(0.0));
  }
}

TEST_CASE("variation_sequence accepts consistent families and rejects broken ones") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  std::vector<Potential> family;
  for (int L = 1; L <= 3; ++L) family.push_back(dini_potential(x, pi, order, 1.0, L));
  VariationSequence from_family = variation_sequence(x, family, 3);
  VariationSequence from_finest = variation_sequence(x, family.back(), 3);
  CHECK(from_family.values == from_finest.values);

  family[0].table[0] += 0.5;  // corrupt the coarsest member
  CHECK_THROWS_AS(variation_sequence(x, family, 3), std::invalid_argument);
}

TEST_CASE("variation of the distance-to-minimality potential matches the model") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  const double t = 1.0;
  const int L = 4;
  VariationSequence v = dini_variation(x, pi, order, t, L);
  REQUIRE(v.tail);
  CHECK(v.tail->t == t);
  // var_0 peaks at the radius-1 value; var_n then follows t log(n+2)/(n+2)
  CHECK(v.values[0] == doctest::Approx(t * std::log(3.0) / 3.0).epsilon(1e-12));
  for (int n = 1; n <= L - 1; ++n)
    CHECK(v.values[n] == doctest::Approx(t * std::log(n + 2.0) / (n + 2.0)).epsilon(1e-12));
  for (std::size_t n = 1; n < v.values.size(); ++n)
    CHECK(v.values[n] <= v.values[n - 1] + 1e-15);
}

TEST_CASE("p-summability verdicts") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  MPWOrder order = MPWOrder::declared(x);
  VariationSequence v = dini_variation(x, pi, order, 1.0, 3);

  CHECK(p_dini_report(v, 1.0).verdict == DiniVerdict::DivergentCertified);
  for (double p : {1.1, 1.5, 2.0}) {
    DiniReport r = p_dini_report(v, p);
    CHECK(r.verdict == DiniVerdict::ConvergentCertified);
    REQUIRE(r.tail_bound);
    CHECK(*r.tail_bound >= 0.0);
    CHECK(std::isfinite(*r.tail_bound));
  }
  CHECK_THROWS_AS(p_dini_report(v, 0.5), std::invalid_argument);

  VariationSequence zero = variation_sequence(x, Potential::constant(x, 0.0), 3);
  DiniReport rz = p_dini_report(zero, 1.0);
  CHECK(rz.verdict == DiniVerdict::ConvergentCertified);
  CHECK(rz.partial_sum == doctest::Approx(0.0));

  VariationSequence unknown;
  unknown.values = {0.5, 0.4};
  CHECK(p_dini_report(unknown, 1.5).verdict == DiniVerdict::Undetermined);
}

TEST_CASE("pair weight sum and t selection") {
  // zeta(3) - zeta(4), since sum (n-1) n^-4 telescopes into zeta values
  auto [lo, hi] = pair_weight_sum(4.0);
  double zeta_diff = 1.2020569031595943 - 1.0823232337111382;
  CHECK(lo <= zeta_diff + 1e-12);
  CHECK(hi >= zeta_diff - 1e-12);
  CHECK(hi - lo < 1e-8);
  CHECK(std::log(hi) < 0.0);  // the d = 1 bound is already negative at t = 4

  SelectTResult r1 = select_t_for_weight(1.0, 0.1);
  CHECK(r1.certified);
  CHECK(r1.bound <= -0.1);

  ShiftSpace x = full3();
  SelectTResult r27 = select_t(x, e1_code(x), 0.1);
  CHECK(r27.certified);
  CHECK(r27.bound <= -0.1);
  CHECK(r27.t > 2.0);
  // certified means: 27 * (sum bracket upper end) <= e^-0.1
  auto [plo, phi_] = pair_weight_sum(r27.t);
  CHECK(std::log(27.0 * phi_) <= -0.1 + 1e-12);

  SelectTResult unreachable = select_t_for_weight(27.0, 1e9);
  CHECK_FALSE(unreachable.certified);

  // the single-count multiplicity gives the plain zeta tail
  auto [slo, shi] = pair_weight_sum(4.0, PairMultiplicity::Single);
  double zeta4_tail = 1.0823232337111382 - 1.0;  // zeta(4) - 1
  CHECK(slo <= zeta4_tail + 1e-12);
  CHECK(shi >= zeta4_tail - 1e-12);
}

TEST_CASE("compensation check on the exact candidate") {
  ShiftSpace x = full3();
  FactorCode pi = e1_code(x);
  Potential f0 = Potential::on_symbols(x, {"a", "b"}, -std::log(2.0));

  SoficPresentation p = sofic_presentation(x, pi);
  // closed form on both sides for range-1 phi = beta 1[y = 1]
  for (double beta : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    Potential phi(1, 2);
    phi.table[1] = beta;
    double px = pressure_sft(x, add(f0, pullback(pi, phi)));
    double py = pressure_sofic(p, phi);
    double closed = std::log(1.0 + std::exp(beta));
    CHECK(px == doctest::Approx(closed).epsilon(1e-11));
    CHECK(py == doctest::Approx(closed).epsilon(1e-11));
  }

  auto family = phi_grid_family(p, -2.0, 2.0, 1.0, 50, 17);
  CHECK(family.size() == 25 + 625 + 50);
  CompensationReport rep = compensation_check(x, pi, f0, family, "grid test");
  CHECK(rep.max_gap < 1e-9);
  CHECK(rep.passes(1e-9));
  CHECK(rep.w_estimate <= rep.max_gap);

  // f = 0 is not a compensation function: the zero-phi gap is log 3 - log 2
  CompensationReport bad = compensation_check(
      x, pi, Potential::constant(x, 0.0), {Potential(1, 2)}, "zero only");
  CHECK(bad.max_gap == doctest::Approx(std::log(3.0) - std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("tangent line bound") {
  {
    auto [lhs, rhs] = tangent_bound({0.5, 0.5}, {1.0, 1.0});
    CHECK(lhs == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }
  {
    auto [lhs, rhs] = tangent_bound({0.9, 0.1}, {0.5, 0.5});
    CHECK(lhs == doctest::Approx(-0.3680642071684973).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(0.0));
  }
  {
    double e = std::exp(1.0);
    auto [lhs, rhs] = tangent_bound({1.0, 0.0}, {e, e});
    CHECK(lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rhs == doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-12));
  }
  SplitMix64 rng(stream_key(41, "tangent"));
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.next() % 5);
    std::vector<double> p(n), a(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      p[i] = rng.uniform01();
      total += p[i];
      a[i] = 0.1 + rng.uniform01();
    }
    for (double& x : p) x /= total;
    auto [lhs, rhs] = tangent_bound(p, a);
    CHECK(lhs <= rhs + 1e-12);

    // equality iff p proportional to a
    double asum = 0.0;
    for (double x : a) asum += x;
    std::vector<double> prop = a;
    for (double& x : prop) x /= asum;
    auto [lhs2, rhs2] = tangent_bound(prop, a);
    CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-12));
  }
  CHECK_THROWS_AS(tangent_bound({0.5, 0.6}, {1.0, 1.0}), std::invalid_argument);
}
