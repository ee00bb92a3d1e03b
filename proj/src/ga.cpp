#include "survopt/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "survopt/rng.hpp"

namespace survopt::ga {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_config(const GaConfig& cfg) {
  if (cfg.population_size < 2)
    throw std::invalid_argument("population_size must be at least 2");
  if (cfg.generations < 0)
    throw std::invalid_argument("generations must be non-negative");
  if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0)
    throw std::invalid_argument("crossover_rate must lie in [0, 1]");
  if (cfg.mutation_rate < 0.0 || cfg.mutation_rate > 1.0)
    throw std::invalid_argument("mutation_rate must lie in [0, 1]");
  if (cfg.m_min < 1 || cfg.m_max < cfg.m_min)
    throw std::invalid_argument("cycle-count bounds need 1 <= m_min <= m_max");
}

struct Individual {
  int m = 1;
  double k = 0.5;
  double fit = -kInf;  // -TC; infeasible individuals sink to -inf
};

double clamp_k(double k) { return std::clamp(k, 0.001, 0.999); }

double fitness(const horizon::HorizonParams& par, int m, double k) {
  const auto c = horizon::total_cost(m, k, par);
  return c ? -c->TC : -kInf;
}

double replay_tc(const horizon::HorizonParams& par, const DemoRow& r) {
  const auto c = horizon::total_cost(r.m, r.k, par);
  return c ? c->TC : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

horizon::HorizonPolicy ga_optimize(const horizon::HorizonParams& par,
                                   const GaConfig& cfg) {
  horizon::validate(par);
  check_config(cfg);
  num::Rng rng(cfg.seed);

  std::vector<Individual> pop(static_cast<std::size_t>(cfg.population_size));
  for (auto& ind : pop) {
    ind.m = rng.uniform_int(cfg.m_min, cfg.m_max);
    ind.k = clamp_k(rng.uniform(0.001, 0.999));
    ind.fit = fitness(par, ind.m, ind.k);
  }

  auto tournament = [&]() -> const Individual& {
    const auto& x = pop[static_cast<std::size_t>(
        rng.uniform_int(0, cfg.population_size - 1))];
    const auto& y = pop[static_cast<std::size_t>(
        rng.uniform_int(0, cfg.population_size - 1))];
    return x.fit >= y.fit ? x : y;
  };

  Individual best;
  for (int gen = 0; gen < cfg.generations; ++gen) {
    for (const auto& ind : pop)
      if (ind.fit > best.fit) best = ind;

    std::vector<Individual> next;
    next.reserve(pop.size());
    next.push_back(best);  // elite
    while (next.size() < pop.size()) {
      Individual c1 = tournament();
      Individual c2 = tournament();
      if (rng.uniform() < cfg.crossover_rate) {
        const double u = rng.uniform();
        const double k1 = u * c1.k + (1.0 - u) * c2.k;
        const double k2 = u * c2.k + (1.0 - u) * c1.k;
        c1.k = clamp_k(k1);
        c2.k = clamp_k(k2);
        if (rng.uniform() < 0.5) std::swap(c1.m, c2.m);
      }
      for (Individual* c : {&c1, &c2}) {
        if (rng.uniform() < cfg.mutation_rate)
          c->k = clamp_k(c->k + 0.08 * rng.normal());
        if (rng.uniform() < cfg.mutation_rate) {
          // step the cycle count; without this m never leaves its initial set
          const int step = rng.uniform() < 0.5 ? -1 : 1;
          c->m = std::clamp(c->m + step, cfg.m_min, cfg.m_max);
        }
        c->fit = fitness(par, c->m, c->k);
        if (next.size() < pop.size()) next.push_back(*c);
      }
    }
    pop = std::move(next);
  }
  for (const auto& ind : pop)
    if (ind.fit > best.fit) best = ind;

  const auto c = horizon::total_cost(best.m, best.k, par);
  if (!c)
    throw std::runtime_error(
        "genetic search found no feasible policy in the configured range");
  horizon::HorizonPolicy pol;
  pol.m = best.m;
  pol.k = best.k;
  pol.T = c->T;
  pol.t1 = c->t1;
  pol.tr = c->tr;
  pol.W2 = c->W2;
  pol.S = c->S;
  pol.BI = c->BI;
  pol.Q = c->Q;
  pol.TC = c->TC;
  pol.converged = true;
  return pol;
}

std::array<DemoReplay, 2> demo_crossover(const horizon::HorizonParams& par,
                                         const DemoRow& r1,
                                         const DemoRow& r2) {
  DemoRow a = r1, b = r2;
  std::swap(a.tr, b.tr);
  std::swap(a.t1, b.t1);
  return {DemoReplay{a, replay_tc(par, a)}, DemoReplay{b, replay_tc(par, b)}};
}

DemoReplay demo_mutation(const horizon::HorizonParams& par, const DemoRow& r) {
  DemoRow a = r;
  std::swap(a.tr, a.t1);
  return DemoReplay{a, replay_tc(par, a)};
}

}  // namespace survopt::ga
