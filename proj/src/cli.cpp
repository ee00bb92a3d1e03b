#include "survopt/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "survopt/attr.hpp"
#include "survopt/csvio.hpp"
#include "survopt/eoq.hpp"
#include "survopt/fuzzy.hpp"
#include "survopt/ga.hpp"
#include "survopt/horizon.hpp"
#include "survopt/numeric.hpp"
#include "survopt/rng.hpp"
#include "survopt/scenario.hpp"
#include "survopt/sim.hpp"
#include "survopt/srs.hpp"
#include "survopt/stats.hpp"
#include "survopt/strat.hpp"

namespace survopt::cli {

namespace fs = std::filesystem;
using csvio::Table;

namespace {

std::string num(double v) { return csvio::format_double(v); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);  // binary keeps LF endings
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << text;
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

void print_table(std::ostream& os, const Table& t) {
  std::vector<std::size_t> w(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) w[c] = t.header[c].size();
  for (const auto& r : t.rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size())
        os << std::string(w[c] - cells[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

// ---------------------------------------------------------------- fixtures

scenario::Scenario load_fixture(const std::string& name) {
  return scenario::load_scenario(data_dir() / name);
}

stats::StratifiedFrame load_frame() {
  auto sc = load_fixture("stratified_frame.json");
  if (auto* fr = std::get_if<stats::StratifiedFrame>(&sc.payload)) return *fr;
  throw std::runtime_error("stratified_frame.json: unexpected payload kind");
}

scenario::SrsSet load_srs() {
  auto sc = load_fixture("srs_populations.json");
  if (auto* s = std::get_if<scenario::SrsSet>(&sc.payload)) return std::move(*s);
  throw std::runtime_error("srs_populations.json: unexpected payload kind");
}

scenario::AttrSet load_attr() {
  auto sc = load_fixture("attribute_populations.json");
  if (auto* s = std::get_if<scenario::AttrSet>(&sc.payload)) return std::move(*s);
  throw std::runtime_error("attribute_populations.json: unexpected payload kind");
}

scenario::EoqScenario load_eoq() {
  auto sc = load_fixture("eoq_example.json");
  if (auto* s = std::get_if<scenario::EoqScenario>(&sc.payload)) return std::move(*s);
  throw std::runtime_error("eoq_example.json: unexpected payload kind");
}

horizon::HorizonParams load_horizon() {
  auto sc = load_fixture("horizon_example.json");
  if (auto* s = std::get_if<horizon::HorizonParams>(&sc.payload)) return *s;
  throw std::runtime_error("horizon_example.json: unexpected payload kind");
}

const srs::Population& srs_by_name(const scenario::SrsSet& s,
                                   const std::string& name) {
  for (std::size_t i = 0; i < s.names.size(); ++i)
    if (s.names[i] == name) return s.pops[i];
  throw std::runtime_error("bundled srs population missing: " + name);
}

const attr::Population& attr_by_name(const scenario::AttrSet& s,
                                     const std::string& name) {
  for (std::size_t i = 0; i < s.names.size(); ++i)
    if (s.names[i] == name) return s.pops[i];
  throw std::runtime_error("bundled attribute population missing: " + name);
}

// ----------------------------------------------------- attribute row blocks

// Combination member used for the weighted optimum: the ratio-type shapes
// for a positive point-biserial correlation, the product-type degenerates
// (K3 = K5 = 0) otherwise.
attr::Member weighted_member(const attr::Population& p) {
  attr::Member m;
  if (p.rho < 0.0) {
    m.K3 = 0.0;
    m.K5 = 0.0;
  }
  return m;
}

std::vector<std::string> member_header() {
  return {"member_id", "K1", "K2", "K3", "K4", "K5",
          "alpha",     "beta", "lambda", "bias", "mse", "pre"};
}

std::vector<std::string> shift_cells(const attr::Member& m) {
  return {num(m.K1), num(m.K2), num(m.K3), "-", "-", num(m.alpha), "-", "-"};
}

std::vector<std::string> mixed_cells(const attr::Member& m) {
  return {"-", "-", "-", num(m.K4), num(m.K5), "-", num(m.beta), num(m.lambda)};
}

std::vector<std::string> full_cells(const attr::Member& m) {
  return {num(m.K1), num(m.K2), num(m.K3), num(m.K4),
          num(m.K5), num(m.alpha), num(m.beta), num(m.lambda)};
}

std::vector<std::string> blank_cells() {
  return {"-", "-", "-", "-", "-", "-", "-", "-"};
}

void push_member_row(Table& t, const std::string& id,
                     const std::vector<std::string>& ks,
                     const std::string& bias, double mse, double pre) {
  std::vector<std::string> r;
  r.reserve(12);
  r.push_back(id);
  r.insert(r.end(), ks.begin(), ks.end());
  r.push_back(bias);
  r.push_back(num(mse));
  r.push_back(num(pre));
  t.rows.push_back(std::move(r));
}

// The ten display rows of one population: the plain mean, four members of
// the shift family, four of the mixed family, and the weighted optimum.
// Two-phase populations switch to the double-sampling forms (which do not
// expose a bias) and to the (n, gamma) naming of the exponent slots.
void append_member_block(Table& t, const attr::Population& p,
                         const std::string& suffix, Convention conv) {
  const bool dual = p.two_phase();

  push_member_row(t, "mean" + suffix, blank_cells(), "0", attr::mse_mean(p),
                  100.0);

  struct ShiftRow {
    const char* id;
    double k3, alpha;
  };
  const ShiftRow shifts[] = {{"unit_ratio", 0.0, 1.0},
                             {"unit_product", 0.0, -1.0},
                             {"shift_ratio", 1.0, 1.0},
                             {"shift_product", 1.0, -1.0}};
  for (const auto& s : shifts) {
    attr::Member m;
    m.K3 = s.k3;
    m.alpha = s.alpha;
    const double mse = dual ? attr::mse_shift_d(p, m) : attr::mse_shift(p, m);
    const std::string bias = dual ? "-" : num(attr::bias_shift(p, m));
    push_member_row(t, s.id + suffix, shift_cells(m), bias, mse,
                    attr::pre(p, mse));
  }

  struct MixedRow {
    const char* id;
    double beta, lambda;
  };
  const MixedRow single[] = {{"mixed_b1_l1", 1.0, 1.0},
                             {"mixed_b1_lm1", 1.0, -1.0},
                             {"mixed_b0_l1", 0.0, 1.0},
                             {"mixed_b0_lm1", 0.0, -1.0}};
  const MixedRow two_phase[] = {{"mixed_n1_g1", 1.0, 1.0},
                                {"mixed_n1_gm1", 1.0, -1.0},
                                {"mixed_n0_g1", 0.0, 1.0},
                                {"mixed_n0_gm1", 0.0, -1.0}};
  for (const auto& s : dual ? two_phase : single) {
    attr::Member m;
    m.K5 = 0.0;
    m.beta = s.beta;
    m.lambda = s.lambda;
    const double mse =
        dual ? attr::mse_mixed_d(p, m, conv) : attr::mse_mixed(p, m);
    const std::string bias = dual ? "-" : num(attr::bias_mixed(p, m));
    push_member_row(t, s.id + suffix, mixed_cells(m), bias, mse,
                    attr::pre(p, mse));
  }

  const attr::Member cfg = weighted_member(p);
  const attr::Weights w =
      dual ? attr::solve_weights_d(p, cfg) : attr::solve_weights(p, cfg);
  const double mse = dual ? attr::mse_weighted_d(p, cfg, w)
                          : attr::mse_weighted(p, cfg, w);
  push_member_row(t, "weighted_opt" + suffix, full_cells(cfg), "0", mse,
                  attr::pre(p, mse));
}

// ------------------------------------------------------- repro generators

Table make_ch1_52() {
  const auto fr = load_frame();
  Table t;
  t.header = {"estimator", "mse", "pre"};
  for (const auto& r : strat::pre_table(fr))
    t.rows.push_back({r.name, num(r.mse), num(r.pre)});
  return t;
}

Table make_ch2_41() {
  const auto set = load_srs();
  const auto& p1 = srs_by_name(set, "I");
  const auto& p2 = srs_by_name(set, "II");
  Table t;
  t.header = {"estimator", "population", "k_or_m1", "m2", "mse"};
  auto row = [&](const char* est, const char* pop, double mse) {
    t.rows.push_back({est, pop, "-", "-", num(mse)});
  };
  using srs::Shift;
  row("mean", "I", srs::mse_mean(p1));
  row("mean", "II", srs::mse_mean(p2));
  row("ratio", "I", srs::mse_ratio(p1, Shift::none));
  row("product", "II", srs::mse_product(p2, Shift::none));
  row("ratio_cx", "I", srs::mse_ratio(p1, Shift::cv));
  row("product_cx", "II", srs::mse_product(p2, Shift::cv));
  row("ratio_rho", "I", srs::mse_ratio(p1, Shift::corr));
  row("product_rho", "II", srs::mse_product(p2, Shift::corr));
  row("dual_ratio", "I", srs::mse_dual_ratio(p1, Shift::none));
  row("dual_product", "II", srs::mse_dual_product(p2, Shift::none));
  row("dual_ratio_cx", "I", srs::mse_dual_ratio(p1, Shift::cv));
  row("dual_product_cx", "II", srs::mse_dual_product(p2, Shift::cv));
  row("dual_ratio_rho", "I", srs::mse_dual_ratio(p1, Shift::corr));
  row("dual_product_rho", "II", srs::mse_dual_product(p2, Shift::corr));
  return t;
}

Table make_ch2_42() {
  const auto set = load_srs();
  const auto& p1 = srs_by_name(set, "I");
  const auto& p2 = srs_by_name(set, "II");
  Table t;
  t.header = {"estimator", "population", "k_or_m1", "m2", "mse"};
  auto row = [&](const char* est, const char* pop, const srs::KOpt& o) {
    t.rows.push_back({est, pop, num(o.k), "-", num(o.mse)});
  };
  using srs::Shift;
  row("opt_dual_ratio", "I", srs::opt_dual_ratio(p1, Shift::none));
  row("opt_dual_product", "II", srs::opt_dual_product(p2, Shift::none));
  row("opt_dual_ratio_cx", "I", srs::opt_dual_ratio(p1, Shift::cv));
  row("opt_dual_product_cx", "II", srs::opt_dual_product(p2, Shift::cv));
  row("opt_dual_ratio_rho", "I", srs::opt_dual_ratio(p1, Shift::corr));
  row("opt_dual_product_rho", "II", srs::opt_dual_product(p2, Shift::corr));
  return t;
}

Table make_ch2_43() {
  const auto set = load_srs();
  const auto& p1 = srs_by_name(set, "I");
  const auto& p2 = srs_by_name(set, "II");
  Table t;
  t.header = {"estimator", "population", "k_or_m1", "m2", "mse"};
  const auto o1 = srs::opt_two_param(p1, srs::TwoParamConfig{});
  srs::TwoParamConfig c2;
  c2.alpha = -1.0;  // product-type branch for the negative-rho population
  c2.beta = -1.0;
  const auto o2 = srs::opt_two_param(p2, c2);
  t.rows.push_back({"two_param", "I", num(o1.m1), num(o1.m2), num(o1.mse)});
  t.rows.push_back({"two_param", "II", num(o2.m1), num(o2.m2), num(o2.mse)});
  return t;
}

Table make_ch3_31() {
  const auto set = load_attr();
  Table t;
  t.header = {"coefficient", "value"};
  for (const char* name : {"p1", "p2"}) {
    const auto& p = attr_by_name(set, name);
    const auto w = attr::solve_weights(p, weighted_member(p));
    const std::string at = std::string("@") + name;
    t.rows.push_back({"mean" + at, num(w.w1)});
    t.rows.push_back({"shift" + at, num(w.w2)});
    t.rows.push_back({"mixed" + at, num(w.w3)});
  }
  return t;
}

Table make_ch3_32() {
  const auto set = load_attr();
  Table t;
  t.header = member_header();
  append_member_block(t, attr_by_name(set, "p1"), "@p1", Convention::strict);
  append_member_block(t, attr_by_name(set, "p2"), "@p2", Convention::strict);
  return t;
}

Table make_ch3_52() {
  const auto set = load_attr();
  Table t;
  t.header = member_header();
  append_member_block(t, attr_by_name(set, "d1"), "@d1", Convention::strict);
  append_member_block(t, attr_by_name(set, "d2"), "@d2", Convention::strict);
  return t;
}

Table make_appendix_shift(const char* pop_name, double alpha,
                          const char* pos_prefix, const char* neg_prefix) {
  const auto set = load_attr();
  const auto& p = attr_by_name(set, pop_name);
  Table t;
  t.header = member_header();
  for (const auto& c : attr::member_catalog(p)) {
    for (const double k2 : {1.0, -1.0}) {
      attr::Member m;
      m.K1 = c.first;
      m.K2 = k2;
      m.K3 = c.second;
      m.alpha = alpha;
      const double mse = attr::mse_shift(p, m);
      push_member_row(t, (k2 > 0.0 ? pos_prefix : neg_prefix) + c.id,
                      shift_cells(m), num(attr::bias_shift(p, m)), mse,
                      attr::pre(p, mse));
    }
  }
  return t;
}

Table make_appendix_a() { return make_appendix_shift("p1", 1.0, "a", "b"); }
Table make_appendix_b() { return make_appendix_shift("p2", -1.0, "c", "d"); }

Table make_appendix_c() {
  const auto set = load_attr();
  const auto& p = attr_by_name(set, "p1");
  Table t;
  t.header = member_header();
  for (const auto& c : attr::member_catalog(p)) {
    attr::Member m;
    m.K4 = c.first;
    m.K5 = c.second;
    m.beta = 1.0;
    m.lambda = 1.0;
    const double mse = attr::mse_mixed(p, m);
    push_member_row(t, c.id, mixed_cells(m), num(attr::bias_mixed(p, m)), mse,
                    attr::pre(p, mse));
  }
  return t;
}

Table make_ch4_example() {
  const auto eq = load_eoq();
  Table t;
  t.header = {"model", "Q", "K", "cost", "converged"};
  auto row = [&](const char* id, const eoq::EoqSolution& s) {
    t.rows.push_back(
        {id, num(s.Q), num(s.K), num(s.cost), s.converged ? "true" : "false"});
  };
  row("crisp", eoq::solve_crisp(eq.crisp));
  row("fuzzy", eoq::solve_fuzzy(eq.fuzzy));
  row("crisp_no_release", eoq::solve_no_release(eq.crisp));
  row("fuzzy_no_release", eoq::solve_no_release(eq.fuzzy));
  return t;
}

Table make_ch5_table1() {
  const auto par = load_horizon();
  Table t;
  t.header = {"m", "k", "t_r", "t1", "T", "Q", "TC"};
  const std::pair<int, double> anchors[] = {
      {1, 0.4485}, {2, 0.4993}, {1, 0.3582}, {2, 0.2995}};
  for (const auto& [m, k] : anchors) {
    const auto c = horizon::total_cost(m, k, par);
    if (c) {
      t.rows.push_back({std::to_string(m), num(k), num(c->tr), num(c->t1),
                        num(c->T), num(c->Q), num(c->TC)});
    } else {
      t.rows.push_back(
          {std::to_string(m), num(k), "nan", "nan", "nan", "nan", "nan"});
    }
  }
  return t;
}

struct ReproSpec {
  double tol = 0.0;
  Table (*make)() = nullptr;
};

const std::map<std::string, ReproSpec>& repro_registry() {
  static const std::map<std::string, ReproSpec> reg = {
      {"ch1-5.2", {0.02, make_ch1_52}},
      {"ch2-4.1", {0.005, make_ch2_41}},
      {"ch2-4.2", {0.01, make_ch2_42}},
      {"ch2-4.3", {0.01, make_ch2_43}},
      {"ch3-3.1", {0.01, make_ch3_31}},
      {"ch3-3.2", {0.02, make_ch3_32}},
      {"ch3-5.2", {0.02, make_ch3_52}},
      {"ch3-appendix-a", {0.02, make_appendix_a}},
      {"ch3-appendix-b", {0.02, make_appendix_b}},
      {"ch3-appendix-c", {0.02, make_appendix_c}},
      {"ch4-example", {0.01, make_ch4_example}},
      {"ch5-table1", {0.001, make_ch5_table1}},
  };
  return reg;
}

// ------------------------------------------------------- validation suites

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

using CheckBody = std::function<std::pair<bool, std::string>()>;

void run_check(std::vector<Check>& out, const std::string& name,
               const CheckBody& body) {
  try {
    auto [ok, detail] = body();
    out.push_back({name, ok, std::move(detail)});
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

std::vector<Check> suite_sampling_mc(std::uint64_t seed) {
  std::vector<Check> out;

  run_check(out, "ratio-mse-vs-first-order", [&] {
    sim::PopulationTargets tg;
    tg.N = 200;
    tg.ybar = 50.0;
    tg.cy = 0.5;
    tg.xbar = 80.0;
    tg.cx = 0.4;
    tg.rho = 0.9;
    const auto pop = sim::generate_population(tg, seed);
    sim::MseOptions mo;
    mo.estimator = sim::Estimator::ratio;
    mo.n = 30;
    mo.replicates = 100000;
    mo.seed = seed + 1;
    const auto r = sim::empirical_mse(pop, mo);
    srs::Population sp;
    sp.N = 200.0;
    sp.n = 30.0;
    sp.ybar = pop.ybar;
    sp.xbar = pop.xbar;
    sp.cy = pop.cy;
    sp.cx = pop.cx;
    sp.rho = pop.rho;
    const double theory = srs::mse_ratio(sp, srs::Shift::none);
    const double rel = std::abs(r.mse - theory) / theory;
    return std::pair{rel <= 0.10, "empirical " + sci(r.mse) + " vs formula " +
                                      sci(theory) + ", rel " + sci(rel) +
                                      " (tol 1e-01)"};
  });

  run_check(out, "mc-determinism", [&] {
    sim::PopulationTargets tg;
    tg.N = 120;
    tg.ybar = 20.0;
    tg.cy = 0.4;
    tg.xbar = 30.0;
    tg.cx = 0.3;
    tg.rho = 0.6;
    const auto pop = sim::generate_population(tg, seed + 3);
    sim::MseOptions mo;
    mo.estimator = sim::Estimator::ratio;
    mo.n = 25;
    mo.replicates = 20000;
    mo.seed = seed + 4;
    const auto a = sim::empirical_mse(pop, mo);
    const auto b = sim::empirical_mse(pop, mo);
    const bool same = a.mse == b.mse && a.bias == b.bias;
    return std::pair{same, same ? std::string("two runs bitwise identical")
                                : "mse " + sci(a.mse) + " vs " + sci(b.mse)};
  });

  run_check(out, "enumeration-vs-direct-average", [&] {
    sim::SyntheticPopulation pop;
    pop.N = 6;
    pop.y = {3.0, 7.0, 11.0, 2.0, 9.0, 5.0};
    pop.x = {2.0, 6.0, 9.0, 1.0, 8.0, 4.0};
    sim::MseOptions mo;
    mo.estimator = sim::Estimator::ratio;
    mo.n = 2;
    const auto r = sim::empirical_mse(pop, mo);
    double ybar = 0.0, xbar = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      ybar += pop.y[i] / 6.0;
      xbar += pop.x[i] / 6.0;
    }
    double acc = 0.0;
    int cnt = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) {
        const double ys = (pop.y[i] + pop.y[j]) / 2.0;
        const double xs = (pop.x[i] + pop.x[j]) / 2.0;
        const double est = ys * xbar / xs;
        acc += (est - ybar) * (est - ybar);
        ++cnt;
      }
    const double direct = acc / cnt;
    const double err = std::abs(r.mse - direct);
    const bool ok = r.enumerated && err <= 1e-12 * std::max(1.0, direct);
    return std::pair{ok, "enumerated " + sci(r.mse) + " vs direct " +
                             sci(direct) + ", abs err " + sci(err)};
  });

  run_check(out, "enumerated-mean-unbiased", [&] {
    sim::SyntheticPopulation pop;
    pop.N = 6;
    pop.y = {3.0, 7.0, 11.0, 2.0, 9.0, 5.0};
    sim::MseOptions mo;
    mo.estimator = sim::Estimator::mean;
    mo.n = 2;
    const auto r = sim::empirical_mse(pop, mo);
    const bool ok = r.enumerated && std::abs(r.bias) <= 1e-12;
    return std::pair{ok, "bias over all 15 samples " + sci(r.bias)};
  });

  run_check(out, "attribute-prevalence", [&] {
    sim::PopulationTargets tg;
    tg.N = 150;
    tg.ybar = 10.0;
    tg.cy = 0.4;
    tg.P = 0.3;
    tg.rho = 0.5;
    const auto pop = sim::generate_population(tg, seed + 7);
    const bool ok =
        pop.phi.size() == 150 && std::abs(pop.p - 0.3) <= 1.0 / 150.0 + 1e-12;
    return std::pair{ok, "achieved prevalence " + sci(pop.p) +
                             " for target 3e-01 (slack one unit)"};
  });

  return out;
}

std::vector<Check> suite_fuzzy(std::uint64_t seed) {
  std::vector<Check> out;
  using fuzzy::TrapezoidalFuzzy;

  auto canonical_draw = [](num::Rng& rng, double lo, double hi) {
    std::array<double, 4> v = {rng.uniform(lo, hi), rng.uniform(lo, hi),
                               rng.uniform(lo, hi), rng.uniform(lo, hi)};
    std::sort(v.begin(), v.end());
    return TrapezoidalFuzzy{v[0], v[1], v[2], v[3]};
  };

  run_check(out, "graded-mean-additivity", [&] {
    num::Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const auto A = canonical_draw(rng, -50.0, 50.0);
      const auto B = canonical_draw(rng, -50.0, 50.0);
      const double scale =
          std::max({1.0, std::abs(fuzzy::graded_mean(A)),
                    std::abs(fuzzy::graded_mean(B))});
      const double e1 = std::abs(fuzzy::graded_mean(fuzzy::fuzzy_add(A, B)) -
                                 fuzzy::graded_mean(A) - fuzzy::graded_mean(B));
      const double e2 = std::abs(fuzzy::graded_mean(fuzzy::fuzzy_sub(A, B)) -
                                 fuzzy::graded_mean(A) + fuzzy::graded_mean(B));
      worst = std::max(worst, std::max(e1, e2) / scale);
    }
    return std::pair{worst <= 1e-9,
                     "worst rel defect " + sci(worst) + " over 10000 pairs"};
  });

  run_check(out, "graded-mean-positive-scaling", [&] {
    num::Rng rng(seed + 1);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const auto A = canonical_draw(rng, -40.0, 40.0);
      const double k = rng.uniform(1e-3, 100.0);
      const double got = fuzzy::graded_mean(fuzzy::fuzzy_mul(fuzzy::crisp(k), A));
      const double want = k * fuzzy::graded_mean(A);
      worst = std::max(worst, std::abs(got - want) /
                                  std::max(1.0, std::abs(want)));
    }
    return std::pair{worst <= 1e-9,
                     "worst rel defect " + sci(worst) + " over 10000 scalings"};
  });

  run_check(out, "crisp-degenerate-collapse", [&] {
    num::Rng rng(seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double x = rng.uniform(-50.0, 50.0);
      double y = rng.uniform(0.2, 50.0);
      if (rng.uniform() < 0.5) y = -y;
      const auto X = fuzzy::crisp(x);
      const auto Y = fuzzy::crisp(y);
      auto defect = [](const TrapezoidalFuzzy& got, double want) {
        const double scale = std::max(1.0, std::abs(want));
        return std::max({std::abs(got.c - want), std::abs(got.a - want),
                         std::abs(got.b - want), std::abs(got.d - want)}) /
               scale;
      };
      worst = std::max(worst, defect(fuzzy::fuzzy_add(X, Y), x + y));
      worst = std::max(worst, defect(fuzzy::fuzzy_sub(X, Y), x - y));
      worst = std::max(worst, defect(fuzzy::fuzzy_mul(X, Y), x * y));
      worst = std::max(worst, defect(fuzzy::fuzzy_div(X, Y), x / y));
    }
    return std::pair{worst <= 1e-12,
                     "worst component defect " + sci(worst) +
                         " over 10000 crisp pairs, all four operations"};
  });

  run_check(out, "graded-mean-quadrature-agreement", [&] {
    num::Rng rng(seed + 3);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const auto A = canonical_draw(rng, -20.0, 20.0);
      const double closed = fuzzy::graded_mean(A);
      const double quad = fuzzy::graded_mean_quad(A);
      worst = std::max(worst, std::abs(closed - quad) /
                                  std::max(1.0, std::abs(closed)));
    }
    return std::pair{worst <= 1e-9,
                     "worst rel gap " + sci(worst) + " over 200 trapezoids"};
  });

  run_check(out, "membership-shape", [&] {
    num::Rng rng(seed + 4);
    for (int i = 0; i < 1000; ++i) {
      const auto A = canonical_draw(rng, -10.0, 10.0);
      if (fuzzy::membership((A.a + A.b) / 2.0, A) != 1.0)
        return std::pair{false, std::string("core grade below 1")};
      if (fuzzy::membership(A.c - 1.0, A) != 0.0 ||
          fuzzy::membership(A.d + 1.0, A) != 0.0)
        return std::pair{false, std::string("support leak")};
      const double mid = fuzzy::membership((A.c + A.a) / 2.0, A);
      if (mid < 0.0 || mid > 1.0)
        return std::pair{false, std::string("left flank out of [0,1]")};
    }
    return std::pair{true, std::string("core, support and flank grades over "
                                       "1000 canonical trapezoids")};
  });

  return out;
}

std::vector<Check> suite_eoq(std::uint64_t seed) {
  std::vector<Check> out;

  run_check(out, "crisp-stationary-grid-minimal", [&] {
    const auto eq = load_eoq();
    const auto s = eoq::solve_crisp(eq.crisp);
    const double dQ = num::fd1(
        [&](double x) { return eoq::crisp_cost(x, s.K, eq.crisp); }, s.Q, 1e-3);
    const double dK = num::fd1(
        [&](double x) { return eoq::crisp_cost(s.Q, x, eq.crisp); }, s.K, 1e-3);
    double best = 1e300;
    for (double q = eq.crisp.W; q <= 3.0 * eq.crisp.W; q += 0.05)
      for (double k = 0.05; k <= eq.crisp.W; k += 0.05)
        best = std::min(best, eoq::crisp_cost(q, k, eq.crisp));
    const bool ok = s.converged && std::abs(dQ) < 1e-5 * (1.0 + s.cost) &&
                    std::abs(dK) < 1e-5 * (1.0 + s.cost) &&
                    best >= s.cost - 1e-6;
    return std::pair{ok, "cost " + sci(s.cost) + ", grid best " + sci(best) +
                             ", |dC/dQ| " + sci(std::abs(dQ))};
  });

  run_check(out, "fuzzy-grid-minimal", [&] {
    const auto eq = load_eoq();
    const auto s = eoq::solve_fuzzy(eq.fuzzy);
    double best = 1e300;
    for (double q = eq.crisp.W; q <= 3.0 * eq.crisp.W; q += 0.05)
      for (double k = 0.05; k <= eq.crisp.W; k += 0.05)
        best = std::min(best, eoq::fuzzy_cost(q, k, eq.fuzzy).value);
    const bool ok = s.converged && best >= s.cost - 1e-6;
    return std::pair{ok, "graded cost " + sci(s.cost) + ", grid best " +
                             sci(best)};
  });

  run_check(out, "policy-gap-identity", [&] {
    num::Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      eoq::EoqParams p;
      p.D = rng.uniform(0.5, 3000.0);
      p.Ct = rng.uniform(0.5, 3000.0);
      const double f = rng.uniform(0.5, 3000.0);
      const double h = rng.uniform(0.5, 3000.0);
      p.F = std::max(f, h) + 0.5;
      p.H = std::min(f, h);
      p.W = rng.uniform(0.5, 3000.0);
      p.A = rng.uniform(0.5, 3000.0);
      p.Ct_star = rng.uniform(0.5, 3000.0);
      const double q = p.W + rng.uniform(0.1, 500.0);
      const double k = rng.uniform(0.1, p.W);
      const double lhs = eoq::no_release_cost(q, p) - eoq::crisp_cost(q, k, p);
      const double rhs =
          (1.0 - p.W / q) *
          (p.D * (*p.Ct_star - p.Ct / k) - k / 2.0 * (p.F - p.H));
      const double den = std::max({1.0, std::abs(lhs), std::abs(rhs)});
      worst = std::max(worst, std::abs(lhs - rhs) / den);
    }
    return std::pair{worst <= 1e-9,
                     "worst rel defect " + sci(worst) + " over 1000 draws"};
  });

  run_check(out, "crisp-degenerate-fuzzy-match", [&] {
    const auto eq = load_eoq();
    eoq::FuzzyEoqParams fp;
    fp.D = fuzzy::crisp(eq.crisp.D);
    fp.F = fuzzy::crisp(eq.crisp.F);
    fp.H = fuzzy::crisp(eq.crisp.H);
    fp.A = fuzzy::crisp(eq.crisp.A);
    fp.W = fuzzy::crisp(eq.crisp.W);
    fp.Ct = eq.crisp.Ct;
    fp.Ct_star = eq.crisp.Ct_star;
    const auto a = eoq::solve_crisp(eq.crisp);
    const auto b = eoq::solve_fuzzy(fp);
    const double gap = std::max({std::abs(a.Q - b.Q), std::abs(a.K - b.K),
                                 std::abs(a.cost - b.cost)});
    return std::pair{gap <= 1e-9 * (1.0 + a.cost),
                     "largest field gap " + sci(gap)};
  });

  run_check(out, "no-release-closed-form", [&] {
    const auto eq = load_eoq();
    const auto s = eoq::solve_no_release(eq.crisp);
    const double d = num::fd1(
        [&](double x) { return eoq::no_release_cost(x, eq.crisp); }, s.Q, 1e-3);
    double best = 1e300;
    for (double q = eq.crisp.W; q <= 4.0 * eq.crisp.W; q += 0.01)
      best = std::min(best, eoq::no_release_cost(q, eq.crisp));
    const bool ok =
        std::abs(d) < 1e-5 * (1.0 + s.cost) && best >= s.cost - 1e-6;
    return std::pair{ok, "cost " + sci(s.cost) + ", grid best " + sci(best)};
  });

  run_check(out, "release-rule-boundary", [&] {
    auto eq = load_eoq();
    const double K = eoq::solve_crisp(eq.crisp).K;
    const double boundary =
        eq.crisp.Ct / K + K * (eq.crisp.F - eq.crisp.H) / (2.0 * eq.crisp.D);
    eq.crisp.Ct_star = boundary + 1e-9;
    const bool above = eoq::k_release_economical(eq.crisp, K);
    eq.crisp.Ct_star = boundary - 1e-9;
    const bool below = eoq::k_release_economical(eq.crisp, K);
    return std::pair{above && !below,
                     "predicate flips across Ct* = " + sci(boundary)};
  });

  return out;
}

std::vector<Check> suite_horizon(std::uint64_t seed) {
  std::vector<Check> out;

  run_check(out, "rate-laws", [&] {
    const auto p = load_horizon();
    const auto c = horizon::total_cost(2, 0.5, p);
    if (!c) return std::pair{false, std::string("reference cycle infeasible")};
    const double T = c->T, t1 = c->t1, tr = c->tr;
    const double h = 1e-6;
    num::Rng rng(seed);
    auto fd = [&](const std::function<double(double)>& f, double t) {
      return (f(t + h) - f(t - h)) / (2.0 * h);
    };
    double worst = 0.0;
    auto probe = [&](double lo, double hi,
                     const std::function<double(double)>& f,
                     const std::function<double(double)>& rhs, double scale) {
      for (int i = 0; i < 30; ++i) {
        const double t = rng.uniform(lo, hi);
        worst = std::max(worst, std::abs(fd(f, t) - rhs(t)) / scale);
      }
    };
    auto qr = [&](double t) { return horizon::inventory_rw(t, p, tr); };
    auto qo = [&](double t) { return horizon::inventory_ow(t, p, tr, t1); };
    auto qs = [&](double t) { return horizon::shortage_level(t, p, t1, T); };
    probe(0.001, p.mu2 - 0.001, qr,
          [&](double t) { return -(p.a + p.b * qr(t)); }, p.a);
    probe(p.mu2 + 0.001, tr - 0.001, qr,
          [&](double t) { return -(p.a + (p.beta + p.b) * qr(t)); }, p.a);
    probe(p.mu1 + 0.001, tr - 0.001, qo,
          [&](double t) { return -p.alpha * qo(t); }, p.W1);
    probe(tr + 0.001, t1 - 0.001, qo,
          [&](double t) { return -(p.a + (p.alpha + p.b) * qo(t)); }, p.a);
    probe(t1 + 0.001, T - 0.001, qs,
          [&](double t) { return -p.a * (1.0 - p.delta * (T - t)); }, p.a);
    return std::pair{worst < 1e-5, "worst scaled residual " + sci(worst) +
                                       " over 150 probe points (tol 1e-05)"};
  });

  run_check(out, "boundaries-and-continuity", [&] {
    const auto p = load_horizon();
    const auto c = horizon::total_cost(2, 0.5, p);
    if (!c) return std::pair{false, std::string("reference cycle infeasible")};
    const double T = c->T, t1 = c->t1, tr = c->tr;
    auto left = [](double x) { return std::nextafter(x, -1.0); };
    auto right = [](double x) { return std::nextafter(x, 1e9); };
    double worst = 0.0;
    auto take = [&](double v) { worst = std::max(worst, std::abs(v)); };
    take(horizon::inventory_rw(left(p.mu2), p, tr) -
         horizon::inventory_rw(right(p.mu2), p, tr));
    take(horizon::inventory_ow(left(tr), p, tr, t1) -
         horizon::inventory_ow(right(tr), p, tr, t1));
    take(horizon::inventory_rw(tr, p, tr));
    take(horizon::inventory_ow(t1, p, tr, t1));
    take(horizon::shortage_level(t1, p, t1, T));
    take(horizon::inventory_ow(0.0, p, tr, t1) - p.W1);
    take(horizon::shortage_level(T, p, t1, T) + c->BI);
    return std::pair{worst <= 1e-9,
                     "worst boundary defect " + sci(worst) + " (tol 1e-09)"};
  });

  run_check(out, "components-vs-quadrature", [&] {
    const auto p = load_horizon();
    const auto c = horizon::total_cost(2, 0.5, p);
    if (!c) return std::pair{false, std::string("reference cycle infeasible")};
    const double T = c->T, t1 = c->t1, tr = c->tr;
    auto disc = [&](double t) { return std::exp(-p.R * t); };
    auto qr = [&](double t) { return horizon::inventory_rw(t, p, tr) * disc(t); };
    auto qo = [&](double t) {
      return horizon::inventory_ow(t, p, tr, t1) * disc(t);
    };
    const double i1 = num::integrate(qr, 0.0, p.mu2, 1e-8);
    const double i2 = num::integrate(qr, p.mu2, tr, 1e-8);
    const double j1 = num::integrate(qo, 0.0, p.mu1, 1e-8);
    const double j2 = num::integrate(qo, p.mu1, tr, 1e-8);
    const double j3 = num::integrate(qo, tr, t1, 1e-8);
    const double sc =
        -p.C3 *
        num::integrate(
            [&](double t) { return horizon::shortage_level(t, p, t1, T) * disc(t); },
            t1, T, 1e-8);
    const double lc = p.C4 * p.a * p.delta *
                      num::integrate([&](double t) { return (T - t) * disc(t); },
                                     t1, T, 1e-8);
    double worst = 0.0;
    auto rel = [&](double closed, double quad) {
      worst = std::max(worst, std::abs(closed - quad) /
                                  std::max(1.0, std::abs(quad)));
    };
    rel(c->HCr, p.Chr * (i1 + i2));
    rel(c->HCo, p.Cho * (j1 + j2 + j3));
    rel(c->DCr, p.C2 * p.beta * i2);
    rel(c->DCo, p.C2 * p.alpha * (j2 + j3));
    rel(c->SC, sc);
    rel(c->LC, lc);
    return std::pair{worst < 1e-6, "worst component gap " + sci(worst) +
                                       " (tol 1e-06), six components"};
  });

  run_check(out, "k-root-curvature", [&] {
    const auto p = load_horizon();
    for (int m = 1; m <= 3; ++m) {
      const auto s = horizon::solve_k(m, p);
      if (!s) return std::pair{false, "no k root at m = " + std::to_string(m)};
      if (!(s->d2 > 0.0))
        return std::pair{false, "non-convex root at m = " + std::to_string(m) +
                                    ", d2 " + sci(s->d2)};
    }
    return std::pair{true,
                     std::string("second difference positive at m = 1, 2, 3")};
  });

  run_check(out, "replication-factor-sum", [&] {
    num::Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double R = rng.uniform(0.01, 1.0);
      const double H = rng.uniform(1.0, 30.0);
      const int m = rng.uniform_int(1, 12);
      double sum = 0.0;
      for (int j = 0; j < m; ++j) sum += std::exp(-R * j * H / m);
      worst = std::max(
          worst, std::abs(horizon::geometric_factor(R, H, m) - sum) / sum);
    }
    return std::pair{worst < 1e-12,
                     "worst rel gap to the discounted cycle sum " + sci(worst)};
  });

  run_check(out, "handover-solver", [&] {
    const auto p = load_horizon();
    const auto tr = horizon::solve_tr(p, 4.6241);
    if (!tr) return std::pair{false, std::string("no handover root at t1 = 4.6241")};
    const double gap = std::abs(*tr - 4.606730);
    const bool rejects = !horizon::solve_tr(p, 0.5);
    return std::pair{gap <= 5e-6 && rejects,
                     "root " + sci(*tr) + ", gap to pinned value " + sci(gap) +
                         ", infeasible t1 rejected"};
  });

  return out;
}

const std::map<std::string, std::vector<Check> (*)(std::uint64_t)>&
suite_registry() {
  static const std::map<std::string, std::vector<Check> (*)(std::uint64_t)>
      reg = {{"sampling-mc", suite_sampling_mc},
             {"fuzzy", suite_fuzzy},
             {"eoq", suite_eoq},
             {"horizon", suite_horizon}};
  return reg;
}

// ------------------------------------------------------------ solve tables

Table solve_stratified(const stats::StratifiedFrame& fr, Convention conv) {
  Table t;
  t.header = {"estimator", "mse", "pre"};
  for (const auto& r : strat::pre_table(fr, conv))
    t.rows.push_back({r.name, num(r.mse), num(r.pre)});
  return t;
}

Table solve_srs(const scenario::SrsSet& set, Convention conv) {
  Table t;
  t.header = {"estimator", "population", "k_or_m1", "m2", "mse"};
  using srs::Shift;
  for (std::size_t i = 0; i < set.pops.size(); ++i) {
    const auto& p = set.pops[i];
    const std::string& name = set.names[i];
    auto plain = [&](const char* est, double mse) {
      t.rows.push_back({est, name, "-", "-", num(mse)});
    };
    auto opt = [&](const char* est, const srs::KOpt& o) {
      t.rows.push_back({est, name, num(o.k), "-", num(o.mse)});
    };
    plain("mean", srs::mse_mean(p));
    plain("ratio", srs::mse_ratio(p, Shift::none));
    plain("ratio_cx", srs::mse_ratio(p, Shift::cv));
    plain("ratio_rho", srs::mse_ratio(p, Shift::corr));
    plain("product", srs::mse_product(p, Shift::none));
    plain("product_cx", srs::mse_product(p, Shift::cv));
    plain("product_rho", srs::mse_product(p, Shift::corr));
    plain("dual_ratio", srs::mse_dual_ratio(p, Shift::none));
    plain("dual_ratio_cx", srs::mse_dual_ratio(p, Shift::cv));
    plain("dual_ratio_rho", srs::mse_dual_ratio(p, Shift::corr));
    plain("dual_product", srs::mse_dual_product(p, Shift::none));
    plain("dual_product_cx", srs::mse_dual_product(p, Shift::cv));
    plain("dual_product_rho", srs::mse_dual_product(p, Shift::corr));
    opt("opt_dual_ratio", srs::opt_dual_ratio(p, Shift::none));
    opt("opt_dual_ratio_cx", srs::opt_dual_ratio(p, Shift::cv));
    opt("opt_dual_ratio_rho", srs::opt_dual_ratio(p, Shift::corr));
    opt("opt_dual_product", srs::opt_dual_product(p, Shift::none, conv));
    opt("opt_dual_product_cx", srs::opt_dual_product(p, Shift::cv, conv));
    opt("opt_dual_product_rho", srs::opt_dual_product(p, Shift::corr, conv));
    srs::TwoParamConfig cfg;
    if (p.rho < 0.0) {
      cfg.alpha = -1.0;
      cfg.beta = -1.0;
    }
    const auto o = srs::opt_two_param(p, cfg);
    t.rows.push_back({"two_param", name, num(o.m1), num(o.m2), num(o.mse)});
  }
  return t;
}

Table solve_attr(const scenario::AttrSet& set, Convention conv) {
  Table t;
  t.header = member_header();
  for (std::size_t i = 0; i < set.pops.size(); ++i)
    append_member_block(t, set.pops[i], "@" + set.names[i], conv);
  return t;
}

Table solve_eoq(const scenario::EoqScenario& eq, const std::string& model) {
  Table t;
  t.header = {"model", "Q", "K", "cost", "converged"};
  auto row = [&](const char* id, const eoq::EoqSolution& s) {
    t.rows.push_back(
        {id, num(s.Q), num(s.K), num(s.cost), s.converged ? "true" : "false"});
  };
  row("crisp", eoq::solve_crisp(eq.crisp));
  row("fuzzy", eoq::solve_fuzzy(eq.fuzzy));
  if (eq.crisp.Ct_star) {
    row("crisp_no_release", eoq::solve_no_release(eq.crisp));
    row("fuzzy_no_release", eoq::solve_no_release(eq.fuzzy));
  }
  if (!model.empty()) {
    Table f;
    f.header = t.header;
    for (auto& r : t.rows)
      if (r[0] == model) f.rows.push_back(std::move(r));
    if (f.rows.empty())
      throw std::invalid_argument("unknown model for this scenario: " + model);
    return f;
  }
  return t;
}

}  // namespace

// ------------------------------------------------------------ entry points

fs::path data_dir() {
  if (const char* env = std::getenv("SURVOPT_DATA")) return fs::path(env);
#ifdef SURVOPT_DATA_DIR
  return fs::path(SURVOPT_DATA_DIR);
#else
  return fs::path("data");
#endif
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  if (const char* env = std::getenv("SURVOPT_SEED")) {
    const std::string_view sv(env);
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (sv.empty() || ec != std::errc() || p != sv.data() + sv.size())
      throw std::invalid_argument(
          "SURVOPT_SEED must be an unsigned integer, got \"" +
          std::string(sv) + "\"");
    return v;
  }
  return 1;
}

int cmd_repro(const std::string& table_id, const fs::path& out_path) {
  const auto& reg = repro_registry();
  const auto it = reg.find(table_id);
  if (it == reg.end()) {
    std::cerr << "unknown table id: " << table_id << "\nknown ids:";
    for (const auto& [id, spec] : reg) std::cerr << ' ' << id;
    std::cerr << '\n';
    return 2;
  }
  try {
    const Table computed = it->second.make();
    fs::path out = out_path.empty() ? fs::path(table_id + ".csv") : out_path;
    ensure_parent(out);
    csvio::write_csv(out, computed);

    const fs::path ref_path = data_dir() / "ref" / (table_id + ".csv");
    const Table reference = csvio::read_csv(ref_path);
    const auto rep = csvio::diff_tables(computed, reference, it->second.tol);
    const std::string text =
        csvio::render_report(table_id, rep, it->second.tol);
    fs::path rep_path = out;
    rep_path.replace_extension(".report.txt");
    write_text(rep_path, text);

    std::cout << text;
    std::cout << "computed:  " << out.string() << '\n'
              << "reference: " << ref_path.string() << '\n'
              << "report:    " << rep_path.string() << '\n';
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "repro " << table_id << " failed: " << e.what() << '\n';
    return 1;
  }
}

int cmd_validate(const std::string& suite, std::optional<std::uint64_t> seed,
                 const fs::path& out_path) {
  const auto& reg = suite_registry();
  std::vector<std::string> order;
  if (suite == "all") {
    for (const auto& [name, fn] : reg) order.push_back(name);
  } else if (reg.count(suite)) {
    order.push_back(suite);
  } else {
    std::cerr << "unknown suite: " << suite
              << "\nknown: sampling-mc fuzzy eoq horizon all\n";
    return 2;
  }

  std::uint64_t s = 0;
  try {
    s = resolve_seed(seed);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  nlohmann::json checks = nlohmann::json::array();
  int passed = 0, failed = 0;
  for (const auto& name : order) {
    std::vector<Check> res;
    try {
      res = reg.at(name)(s);
    } catch (const std::exception& e) {
      res.push_back({"setup", false, std::string("exception: ") + e.what()});
    }
    for (const auto& c : res) {
      checks.push_back({{"suite", name},
                        {"check", c.name},
                        {"ok", c.ok},
                        {"detail", c.detail}});
      (c.ok ? passed : failed)++;
      std::cout << (c.ok ? "[ ok ] " : "[FAIL] ") << name << '/' << c.name
                << ": " << c.detail << '\n';
    }
  }

  nlohmann::json doc;
  doc["suite"] = suite;
  doc["seed"] = s;
  doc["checks"] = checks;
  doc["passed"] = passed;
  doc["failed"] = failed;
  doc["ok"] = failed == 0;

  fs::path out =
      out_path.empty() ? fs::path("validate-" + suite + ".json") : out_path;
  try {
    ensure_parent(out);
    write_text(out, doc.dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << "cannot write verdict: " << e.what() << '\n';
    return 1;
  }
  std::cout << "suite " << suite << ": " << passed << " passed, " << failed
            << " failed; verdict " << out.string() << '\n';
  return failed == 0 ? 0 : 1;
}

int cmd_solve(const fs::path& scenario_path, const SolveOptions& opt) {
  scenario::Scenario sc;
  try {
    sc = scenario::load_scenario(scenario_path);
  } catch (const scenario::SchemaError& e) {
    std::cerr << "schema violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cannot load scenario: " << e.what() << '\n';
    return 2;
  }

  try {
    std::cout << "scenario: " << sc.label << " (" << sc.kind << ")\n";
    Table t;
    std::optional<Table> components;

    if (const auto* fr = std::get_if<stats::StratifiedFrame>(&sc.payload)) {
      t = solve_stratified(*fr, opt.convention);
    } else if (const auto* s = std::get_if<scenario::SrsSet>(&sc.payload)) {
      t = solve_srs(*s, opt.convention);
    } else if (const auto* a = std::get_if<scenario::AttrSet>(&sc.payload)) {
      t = solve_attr(*a, opt.convention);
    } else if (const auto* e = std::get_if<scenario::EoqScenario>(&sc.payload)) {
      t = solve_eoq(*e, opt.model);
    } else if (const auto* h =
                   std::get_if<horizon::HorizonParams>(&sc.payload)) {
      horizon::HorizonPolicy pol;
      if (opt.ga) {
        ga::GaConfig cfg;
        cfg.seed = resolve_seed(opt.seed);
        pol = ga::ga_optimize(*h, cfg);
      } else {
        pol = horizon::optimize(*h);
      }
      t.header = {"m", "k", "t_r", "t1", "T", "Q", "TC", "converged"};
      t.rows.push_back({std::to_string(pol.m), num(pol.k), num(pol.tr),
                        num(pol.t1), num(pol.T), num(pol.Q), num(pol.TC),
                        pol.converged ? "true" : "false"});
      const auto c = horizon::total_cost(pol.m, pol.k, *h);
      if (c) {
        Table ct;
        ct.header = {"m",   "k",   "OC", "HCr", "HCo",
                     "DCr", "DCo", "SC", "LC",  "PC"};
        ct.rows.push_back({std::to_string(pol.m), num(pol.k), num(c->OC),
                           num(c->HCr), num(c->HCo), num(c->DCr), num(c->DCo),
                           num(c->SC), num(c->LC), num(c->PC)});
        components = std::move(ct);
      }
    } else {
      throw std::runtime_error("scenario has no payload");
    }

    print_table(std::cout, t);
    if (components) {
      std::cout << "cost components (per cycle, present value):\n";
      print_table(std::cout, *components);
    }

    if (opt.out) {
      ensure_parent(*opt.out);
      csvio::write_csv(*opt.out, t);
      std::cout << "csv: " << opt.out->string() << '\n';
      if (components) {
        fs::path cp = *opt.out;
        cp.replace_filename(cp.stem().string() + "-components" +
                            cp.extension().string());
        csvio::write_csv(cp, *components);
        std::cout << "csv: " << cp.string() << '\n';
      }
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "solve failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solve failed: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace survopt::cli
