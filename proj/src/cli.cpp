#include "sftlab/cli.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sftlab/clothespin.hpp"
#include "sftlab/compensation.hpp"
#include "sftlab/dini.hpp"
#include "sftlab/entropy_bounds.hpp"
#include "sftlab/experiments.hpp"
#include "sftlab/pressure.hpp"
#include "sftlab/report.hpp"
#include "sftlab/system_spec.hpp"

namespace sftlab {

namespace {

using nlohmann::ordered_json;

struct Output {
  std::string path;    // empty: stdout
  std::string format = "json";

  void emit(const ordered_json& report, const std::string& csv) const {
    std::string text = format == "csv" ? csv : report.dump(2) + "\n";
    if (path.empty())
      std::cout << text;
    else
      write_text_file(path, text);
  }
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--out", out.path, "output file (default: stdout)");
  cmd->add_option("--format", out.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stod(part));
  if (out.empty()) throw std::invalid_argument("empty numeric list");
  return out;
}

ordered_json word_json(const ShiftSpace& space, const Word& w) {
  return format_word(space.symbols, w);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"analysis toolkit for factor maps of shifts of finite type"};
  app.require_subcommand(1);
  int exit_status = 0;

  // ---- validate ------------------------------------------------------------
  std::string spec_path;
  {
    auto* cmd = app.add_subcommand("validate", "schema-check a system file");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      ordered_json result;
      result["ok"] = true;
      result["symbols"] = spec.space.symbols;
      result["irreducible"] = is_irreducible(spec.space);
      result["warnings"] = spec.warnings;
      ordered_json params{{"spec", spec_path}, {"spec_hash", hash_file(spec_path)}};
      std::cout << report_envelope("validate", params, result).dump(2) << "\n";
      for (const auto& w : spec.warnings) std::cerr << "warning: " << w << "\n";
    });
  }

  // ---- analyze -------------------------------------------------------------
  Output an_out;
  {
    auto* cmd = app.add_subcommand("analyze",
                                   "irreducibility, diamond search, classification");
    cmd->add_option("--spec", spec_path, "system file")->required();
    add_output_options(cmd, an_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      ordered_json result;
      result["irreducible"] = is_irreducible(spec.space);
      FactorClass cls = classify_factor(spec.space, spec.code);
      result["classification"] =
          cls == FactorClass::InfiniteToOne ? "InfiniteToOne" : "FiniteToOne";
      auto d = find_diamond(spec.space, spec.code,
                            spec.space.size() * spec.space.size() + 1);
      if (d) {
        result["diamond"] = ordered_json::array(
            {word_json(spec.space, d->u), word_json(spec.space, d->v)});
      } else {
        result["diamond"] = nullptr;
      }
      ordered_json params{{"spec", spec_path}, {"spec_hash", hash_file(spec_path)}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "key,value\nirreducible," << result["irreducible"]
          << "\nclassification," << result["classification"].get<std::string>() << "\n";
      an_out.emit(report_envelope("analyze", params, result), csv.str());
    });
  }

  // ---- mpw -----------------------------------------------------------------
  Output mpw_out;
  int mpw_max_len = 4;
  {
    auto* cmd = app.add_subcommand("mpw", "minimal forbidden words up to a length");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--max-len", mpw_max_len, "maximum word length")->required();
    add_output_options(cmd, mpw_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      auto words = mpw_forbidden(spec.space, spec.code, spec.order, mpw_max_len);
      ordered_json result;
      ordered_json list = ordered_json::array();
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "word\n";
      for (const Word& w : words) {
        list.push_back(word_json(spec.space, w));
        csv << format_word(spec.space.symbols, w) << "\n";
      }
      result["forbidden"] = list;
      result["count"] = words.size();
      ordered_json params{{"spec", spec_path},
                          {"spec_hash", hash_file(spec_path)},
                          {"max_len", mpw_max_len}};
      mpw_out.emit(report_envelope("mpw", params, result), csv.str());
    });
  }

  // ---- pressure ------------------------------------------------------------
  Output pr_out;
  std::string pr_potential, pr_side = "X";
  {
    auto* cmd = app.add_subcommand("pressure", "topological pressure of a potential");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--potential", pr_potential, "potential file (default: zero)");
    cmd->add_option("--side", pr_side, "X: domain pressure, Y: image pressure")
        ->check(CLI::IsMember({"X", "Y"}));
    add_output_options(cmd, pr_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      double value = 0.0;
      if (pr_side == "X") {
        Potential f = pr_potential.empty()
                          ? Potential::constant(spec.space, 0.0)
                          : potential_from_json(spec.space, read_file(pr_potential));
        value = pressure_sft(spec.space, f);
      } else {
        SoficPresentation pres = sofic_presentation(spec.space, spec.code);
        ShiftSpace image_alphabet = ShiftSpace::full(pres.labels);
        Potential phi = pr_potential.empty()
                            ? Potential(1, static_cast<int>(pres.labels.size()))
                            : potential_from_json(image_alphabet, read_file(pr_potential));
        value = pressure_sofic(pres, phi);
      }
      ordered_json result{{"pressure", value}};
      ordered_json params{{"spec", spec_path},
                          {"spec_hash", hash_file(spec_path)},
                          {"side", pr_side},
                          {"potential", pr_potential.empty() ? "zero" : pr_potential}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "pressure\n" << value << "\n";
      pr_out.emit(report_envelope("pressure", params, result), csv.str());
    });
  }

  // ---- equilibrium ---------------------------------------------------------
  Output eq_out;
  std::string eq_potential;
  {
    auto* cmd = app.add_subcommand("equilibrium",
                                   "equilibrium Markov measure of a potential");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--potential", eq_potential, "potential file (default: zero)");
    add_output_options(cmd, eq_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      Potential f = eq_potential.empty()
                        ? Potential::constant(spec.space, 0.0)
                        : potential_from_json(spec.space, read_file(eq_potential));
      Equilibrium eq = equilibrium_markov(spec.space, f);
      ordered_json result;
      result["pressure"] = eq.pressure;
      result["entropy"] = markov_entropy(eq.measure);
      result["block_order"] = eq.block_order;
      result["symbols"] = eq.block_space.symbols;
      ordered_json trans = ordered_json::array();
      for (int i = 0; i < eq.block_space.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < eq.block_space.size(); ++j)
          row.push_back(eq.measure.transition.at(i, j));
        trans.push_back(row);
      }
      result["transition"] = trans;
      result["stationary"] = eq.measure.stationary;
      ordered_json params{{"spec", spec_path},
                          {"spec_hash", hash_file(spec_path)},
                          {"potential", eq_potential.empty() ? "zero" : eq_potential}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "from,to,probability\n";
      for (int i = 0; i < eq.block_space.size(); ++i)
        for (int j = 0; j < eq.block_space.size(); ++j)
          if (eq.measure.transition.at(i, j) > 0.0)
            csv << eq.block_space.symbols[i] << ',' << eq.block_space.symbols[j] << ','
                << eq.measure.transition.at(i, j) << "\n";
      eq_out.emit(report_envelope("equilibrium", params, result), csv.str());
    });
  }

  // ---- check-compensation ----------------------------------------------------
  Output cc_out;
  std::string cc_potential, cc_grid = "-2:2:1";
  double cc_t = 0.0, cc_tol = 1e-9;
  int cc_radius = 2, cc_random = 50;
  std::uint64_t cc_seed = 0;
  {
    auto* cmd = app.add_subcommand(
        "check-compensation",
        "pressure-gap check of a candidate compensation function");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--potential", cc_potential,
                    "candidate potential file (default: distance-to-minimality "
                    "potential from --t/--radius)");
    cmd->add_option("--t", cc_t, "strength of the built-in candidate");
    cmd->add_option("--radius", cc_radius, "window radius of the built-in candidate");
    cmd->add_option("--phi-grid", cc_grid, "lo:hi:step for the test family");
    cmd->add_option("--phi-random", cc_random, "number of random test potentials");
    cmd->add_option("--seed", cc_seed, "seed for the random part of the family")
        ->required();
    cmd->add_option("--tol", cc_tol, "pass threshold for the maximal |gap|");
    add_output_options(cmd, cc_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      Potential f = [&]() {
        if (!cc_potential.empty())
          return potential_from_json(spec.space, read_file(cc_potential));
        if (cc_t <= 0.0)
          throw std::invalid_argument("need --potential or a positive --t");
        return dini_potential(spec.space, spec.code, spec.order, cc_t, cc_radius);
      }();
      double lo, hi, step;
      {
        std::stringstream in(cc_grid);
        std::string a, b, c;
        if (!std::getline(in, a, ':') || !std::getline(in, b, ':') ||
            !std::getline(in, c, ':'))
          throw std::invalid_argument("--phi-grid must be lo:hi:step");
        lo = std::stod(a);
        hi = std::stod(b);
        step = std::stod(c);
      }
      SoficPresentation pres = sofic_presentation(spec.space, spec.code);
      auto family = phi_grid_family(pres, lo, hi, step, cc_random, cc_seed);
      std::ostringstream family_desc;
      family_desc << "range-1 and range-2 grid " << cc_grid << " plus " << cc_random
                  << " random tables";
      CompensationReport rep =
          compensation_check(spec.space, spec.code, f, family, family_desc.str());
      bool pass = rep.passes(cc_tol);
      ordered_json result;
      result["max_gap"] = rep.max_gap;
      result["w_estimate"] = rep.w_estimate;
      result["family_size"] = rep.family_size;
      result["tested_family"] = rep.tested_family;
      result["pass"] = pass;
      ShiftSpace image_alphabet = ShiftSpace::full(pres.labels);
      ordered_json tested = ordered_json::array();
      for (std::size_t i = 0; i < family.size(); ++i) {
        ordered_json entry = nlohmann::ordered_json::parse(
            potential_to_json(image_alphabet, family[i]));
        entry["gap"] = rep.gaps[i];
        tested.push_back(entry);
      }
      result["tested"] = tested;
      ordered_json params{{"spec", spec_path},      {"spec_hash", hash_file(spec_path)},
                          {"seed", cc_seed},        {"tol", cc_tol},
                          {"phi_grid", cc_grid},    {"phi_random", cc_random},
                          {"potential", cc_potential.empty() ? "built-in" : cc_potential},
                          {"t", cc_t},              {"radius", cc_radius}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "phi_index,gap\n";
      for (std::size_t i = 0; i < rep.gaps.size(); ++i) csv << i << ',' << rep.gaps[i] << "\n";
      cc_out.emit(report_envelope("check-compensation", params, result), csv.str());
      if (!pass) exit_status = 2;
    });
  }

  // ---- dini ------------------------------------------------------------------
  Output dini_out;
  double dini_p = 1.0, dini_t = 1.0;
  int dini_radius = 3;
  {
    auto* cmd = app.add_subcommand(
        "dini", "variation sequence and p-summability of the built-in potential");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--p", dini_p, "summability exponent")->required();
    cmd->add_option("--radius", dini_radius, "window radius");
    cmd->add_option("--t", dini_t, "potential strength");
    add_output_options(cmd, dini_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      VariationSequence v =
          dini_variation(spec.space, spec.code, spec.order, dini_t, dini_radius);
      DiniReport rep = p_dini_report(v, dini_p);
      ordered_json result;
      result["p"] = rep.p;
      result["verdict"] = rep.verdict == DiniVerdict::ConvergentCertified
                              ? "ConvergentCertified"
                              : rep.verdict == DiniVerdict::DivergentCertified
                                    ? "DivergentCertified"
                                    : "Undetermined";
      result["partial_sum"] = rep.partial_sum;
      if (rep.tail_bound)
        result["tail_bound"] = *rep.tail_bound;
      else
        result["tail_bound"] = nullptr;
      result["detail"] = rep.detail;
      result["variation"] = v.values;
      ordered_json params{{"spec", spec_path},
                          {"spec_hash", hash_file(spec_path)},
                          {"p", dini_p},
                          {"t", dini_t},
                          {"radius", dini_radius}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "n,var\n";
      for (std::size_t n = 0; n < v.values.size(); ++n) csv << n << ',' << v.values[n] << "\n";
      dini_out.emit(report_envelope("dini", params, result), csv.str());
    });
  }

  // ---- clothespin --------------------------------------------------------------
  Output pin_out;
  std::string pin_word;
  long long pin_center = std::numeric_limits<long long>::min();
  long long pin_start = 0;
  {
    auto* cmd = app.add_subcommand("clothespin", "pin a finite window");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--word", pin_word, "window to pin")->required();
    cmd->add_option("--center", pin_center, "also evaluate the central radius there");
    cmd->add_option("--start", pin_start, "start coordinate of the process");
    add_output_options(cmd, pin_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      Word w = parse_word(spec.space.symbols, pin_word);
      MpwContext ctx(spec.space, spec.code, spec.order);
      PinSequence s = pin_process(ctx, w, pin_start);
      ordered_json result;
      result["pins"] = s.pins;
      result["truncated"] = s.truncated;
      result["distinct_pinnings"] = count_pinnings(ctx, w);
      if (pin_center != std::numeric_limits<long long>::min()) {
        NValue nv = n_of(ctx, w, pin_center);
        result["n_value"] = nv.value;
        result["n_exact"] = nv.exact;
      }
      ordered_json params{{"spec", spec_path},
                          {"spec_hash", hash_file(spec_path)},
                          {"word", pin_word},
                          {"start", pin_start}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "pin\n";
      for (long long p : s.pins) csv << p << "\n";
      pin_out.emit(report_envelope("clothespin", params, result), csv.str());
    });
  }

  // ---- simulate-tradeoff ---------------------------------------------------------
  Output tr_out;
  std::string tr_u, tr_v, tr_pgrid = "0.01,0.02,0.05,0.1", tr_base;
  long long tr_length = 1000000;
  int tr_seeds = 20, tr_k = 2, tr_radius = 3;
  double tr_t = 0.0;
  std::uint64_t tr_seed = 0;
  {
    auto* cmd = app.add_subcommand(
        "simulate-tradeoff", "entropy gain vs integral change of marked swaps");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--u", tr_u, "word to swap out")->required();
    cmd->add_option("--v", tr_v, "word to swap in")->required();
    cmd->add_option("--p-grid", tr_pgrid, "comma list of marker densities");
    cmd->add_option("--length", tr_length, "sample length per replicate");
    cmd->add_option("--seeds", tr_seeds, "number of replicates");
    cmd->add_option("--seed", tr_seed, "master seed")->required();
    cmd->add_option("--k", tr_k, "conditioning depth of the entropy estimate");
    cmd->add_option("--base-probs", tr_base,
                    "comma list of symbol probabilities for the i.i.d. base "
                    "(default: uniform off the swap-in word's support)");
    cmd->add_option("--t", tr_t, "potential strength (default: selected)");
    cmd->add_option("--radius", tr_radius, "potential window radius");
    add_output_options(cmd, tr_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      SwapMap sm{parse_word(spec.space.symbols, tr_u),
                 parse_word(spec.space.symbols, tr_v)};
      sm.validate(spec.space, spec.code);
      std::vector<double> base_probs;
      if (!tr_base.empty()) {
        base_probs = parse_grid(tr_base);
      } else {
        // uniform over the symbols of u; keeps the base off the swapped-in word
        std::vector<bool> used(spec.space.size(), false);
        for (int s : sm.u.syms) used[s] = true;
        int count = 0;
        for (bool b : used) count += b ? 1 : 0;
        base_probs.assign(spec.space.size(), 0.0);
        for (int i = 0; i < spec.space.size(); ++i)
          if (used[i]) base_probs[i] = 1.0 / count;
      }
      MarkovMeasure base = MarkovMeasure::bernoulli(spec.space, base_probs);
      double t = tr_t > 0.0 ? tr_t : select_t(spec.space, spec.code, 0.1).t;
      Potential f = dini_potential(spec.space, spec.code, spec.order, t, tr_radius);
      TradeoffReport rep =
          tradeoff_experiment(spec.space, spec.code, base, sm, f,
                              parse_grid(tr_pgrid), tr_length, tr_seeds, tr_seed, tr_k);
      ordered_json result;
      result["degenerate"] = rep.degenerate;
      result["note"] = rep.note;
      result["fit_entropy_c1"] = rep.fit_entropy_c1;
      result["fit_integral_c2"] = rep.fit_integral_c2;
      ordered_json pts = ordered_json::array();
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "p,seed,entropy_gain,entropy_gain_k1,integral_change\n";
      for (const TradeoffSample& smp : rep.samples)
        csv << smp.p << ',' << smp.seed << ',' << smp.entropy_gain << ','
            << smp.entropy_gain_k1 << ',' << smp.integral_change << "\n";
      bool pass = !rep.degenerate;
      double prev_ratio = -1.0;
      for (const TradeoffPoint& pt : rep.points) {
        ordered_json pj;
        pj["p"] = pt.p;
        pj["entropy_gain"] = pt.entropy_gain;
        pj["entropy_gain_se"] = pt.entropy_gain_se;
        pj["entropy_gain_k1"] = pt.entropy_gain_k1;
        pj["entropy_gain_k1_se"] = pt.entropy_gain_k1_se;
        pj["integral_change"] = pt.integral_change;
        pj["integral_change_se"] = pt.integral_change_se;
        pj["swaps"] = pt.swaps;
        pts.push_back(pj);
        if (pt.entropy_gain <= 0.0) pass = false;
        double ratio = pt.integral_change > 0.0 ? pt.entropy_gain / pt.integral_change
                                                : 0.0;
        if (prev_ratio >= 0.0 && ratio >= prev_ratio) pass = false;  // grid ascends in p
        prev_ratio = ratio;
      }
      result["points"] = pts;
      result["pass"] = pass;
      ordered_json params{{"spec", spec_path},  {"spec_hash", hash_file(spec_path)},
                          {"seed", tr_seed},    {"u", tr_u},
                          {"v", tr_v},          {"p_grid", tr_pgrid},
                          {"length", tr_length},{"seeds", tr_seeds},
                          {"k", tr_k},          {"t", t},
                          {"radius", tr_radius}};
      tr_out.emit(report_envelope("simulate-tradeoff", params, result), csv.str());
      if (!pass) exit_status = 2;
    });
  }

  // ---- check-kac-abramov -----------------------------------------------------------
  Output kac_out;
  std::string kac_cylinder, kac_potential;
  long long kac_length = 1000000;
  std::uint64_t kac_seed = 0;
  {
    auto* cmd = app.add_subcommand(
        "check-kac-abramov", "first-return and induced-entropy identities");
    cmd->add_option("--spec", spec_path, "system file")->required();
    cmd->add_option("--cylinder", kac_cylinder, "cylinder word")->required();
    cmd->add_option("--length", kac_length, "trajectory length");
    cmd->add_option("--seed", kac_seed, "seed")->required();
    cmd->add_option("--potential", kac_potential,
                    "measure = equilibrium of this potential (default: zero)");
    add_output_options(cmd, kac_out);
    cmd->callback([&]() {
      SystemSpec spec = load_system_file(spec_path);
      Potential f = kac_potential.empty()
                        ? Potential::constant(spec.space, 0.0)
                        : potential_from_json(spec.space, read_file(kac_potential));
      Equilibrium eq = equilibrium_markov(spec.space, f);
      if (eq.block_order != 1)
        throw std::invalid_argument("check-kac-abramov: potential range must be <= 2");
      Word cyl = parse_word(spec.space.symbols, kac_cylinder);
      KacAbramovReport rep =
          kac_abramov_check(spec.space, eq.measure, cyl, kac_length, kac_seed);
      bool pass = !rep.degenerate && rep.kac_within(3.0) && rep.abramov_within(3.0);
      ordered_json result;
      result["cylinder_probability"] = rep.cylinder_probability;
      result["mean_return"] = rep.mean_return;
      result["mean_return_se"] = rep.mean_return_se;
      result["kac_expected"] = rep.kac_expected;
      result["induced_entropy"] = rep.induced_entropy;
      result["induced_entropy_se"] = rep.induced_entropy_se;
      result["abramov_product"] = rep.abramov_product;
      result["chain_entropy"] = rep.chain_entropy;
      result["returns"] = rep.returns;
      result["degenerate"] = rep.degenerate;
      result["pass"] = pass;
      ordered_json params{{"spec", spec_path},
                          {"spec_hash", hash_file(spec_path)},
                          {"seed", kac_seed},
                          {"cylinder", kac_cylinder},
                          {"length", kac_length},
                          {"sigmas", 3.0}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "key,value\nmean_return," << rep.mean_return << "\nkac_expected,"
          << rep.kac_expected << "\nabramov_product," << rep.abramov_product
          << "\nchain_entropy," << rep.chain_entropy << "\n";
      kac_out.emit(report_envelope("check-kac-abramov", params, result), csv.str());
      if (!pass) exit_status = 2;
    });
  }

  // ---- dbar ------------------------------------------------------------------------
  Output dbar_out;
  double dbar_p = 0.05;
  int dbar_n = 3;
  long long dbar_samples = 100000;
  std::uint64_t dbar_seed = 0;
  {
    auto* cmd = app.add_subcommand(
        "dbar", "marker-vs-driving-bits mismatch under the explicit coupling");
    cmd->add_option("--p", dbar_p, "bit density")->required();
    cmd->add_option("--n", dbar_n, "marker gap")->required();
    cmd->add_option("--samples", dbar_samples, "Monte Carlo samples");
    cmd->add_option("--seed", dbar_seed, "seed")->required();
    add_output_options(cmd, dbar_out);
    cmd->callback([&]() {
      DbarEstimate est = dbar_marker_vs_bernoulli(dbar_p, dbar_n, dbar_samples, dbar_seed);
      bool pass = std::fabs(est.estimate - est.exact) <= 3.0 * est.stderr_ &&
                  est.exact <= est.quadratic_bound + 1e-15;
      ordered_json result;
      result["exact"] = est.exact;
      result["estimate"] = est.estimate;
      result["stderr"] = est.stderr_;
      result["quadratic_bound"] = est.quadratic_bound;
      result["pass"] = pass;
      ordered_json params{{"seed", dbar_seed},
                          {"p", dbar_p},
                          {"n", dbar_n},
                          {"samples", dbar_samples},
                          {"sigmas", 3.0}};
      std::ostringstream csv;
      csv << std::setprecision(17);
      csv << "exact,estimate,stderr,quadratic_bound\n"
          << est.exact << ',' << est.estimate << ',' << est.stderr_ << ','
          << est.quadratic_bound << "\n";
      dbar_out.emit(report_envelope("dbar", params, result), csv.str());
      if (!pass) exit_status = 2;
    });
  }

  std::vector<const char*> argv;
  argv.push_back(kToolName);
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_status;
}

}  // namespace sftlab
