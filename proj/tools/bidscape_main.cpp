#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidscape/clickprice.hpp"
#include "bidscape/exact.hpp"
#include "bidscape/factor_lp.hpp"
#include "bidscape/graph.hpp"
#include "bidscape/instances.hpp"
#include "bidscape/io.hpp"
#include "bidscape/oracle.hpp"
#include "bidscape/parallel.hpp"
#include "bidscape/uniform.hpp"

namespace {

using namespace bidscape;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitIo = 1;
constexpr int kExitStructure = 2;
constexpr int kExitSolver = 3;

ordered_json money_json(Money m) {
  return {{"decimal", money_to_string(m)}, {"micro", m}};
}

ordered_json strategy_json(const Instance& inst, const MixedStrategy& s) {
  ordered_json atoms = ordered_json::array();
  for (const auto& [bids, weight] : s.atoms) {
    ordered_json jb = ordered_json::object();
    for (std::size_t k = 0; k < bids.size(); ++k)
      if (bids[k] != 0) jb[inst.keyword_id(k)] = bids[k];
    atoms.push_back({{"weight", weight}, {"bids", std::move(jb)}});
  }
  return {{"atoms", std::move(atoms)}};
}

Money resolve_budget(const Instance& inst, std::optional<Money> flag) {
  if (flag) return *flag;
  if (inst.budget()) return *inst.budget();
  throw std::runtime_error("no budget: pass --budget or store one in the instance");
}

struct SolveOutcome {
  MixedStrategy strategy;
};

SolveOutcome dispatch(const Instance& inst, Money budget, const std::string& method,
                      Money unit) {
  GridSpec grid = default_grid(inst);
  grid.budget_unit = unit;
  if (method == "uniform") return {uniform_mixture(inst, best_uniform(inst, budget))};
  if (method == "single") return {uniform_mixture(inst, best_single_bid(inst, budget))};
  if (method == "approx-half") return {uniform_mixture(inst, half_strategy(inst, budget))};
  if (method == "approx-e")
    return {one_minus_inv_e_strategy(inst, budget, 256)};
  if (method == "matching") return {solve_matching(inst, budget).strategy};
  if (method == "stars") return {solve_union_of_stars(inst, budget).strategy};
  if (method == "nested") {
    DpSolution s = solve_nested_dp(inst, budget, grid);
    return {MixedStrategy{{{std::move(s.bids), 1.0}}}};
  }
  if (method == "laminar") {
    DpSolution s = solve_laminar_dp(inst, budget, grid);
    return {MixedStrategy{{{std::move(s.bids), 1.0}}}};
  }
  if (method == "oracle")
    return {brute_force_randomized(inst, budget, grid).strategy};
  throw std::invalid_argument("unknown method " + method);
}

int check_structure(const Instance& inst, const std::string& method) {
  const StructureReport rep = analyze_structure(inst);
  if (method == "matching" && !rep.is_matching) {
    std::cerr << "method=matching requires a matching instance\n";
    return kExitStructure;
  }
  if (method == "stars" && !rep.is_star_union) {
    std::cerr << "method=stars requires a union of stars\n";
    return kExitStructure;
  }
  if (method == "nested" && !rep.is_nested) {
    std::cerr << "method=nested requires nested keyword neighborhoods\n";
    return kExitStructure;
  }
  if (method == "laminar" && !rep.is_laminar) {
    std::cerr << "method=laminar requires laminar keyword neighborhoods\n";
    return kExitStructure;
  }
  return 0;
}

int run_solve(const std::string& path, std::optional<Money> budget_flag,
              const std::string& method, Money unit, const std::string& out) {
  Instance inst;
  Money budget = 0;
  try {
    inst = load_instance(path);
    budget = resolve_budget(inst, budget_flag);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }

  if (int rc = check_structure(inst, method)) return rc;

  SolveOutcome outcome;
  double wall_ms = 0.0;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    outcome = dispatch(inst, budget, method, unit);
    wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  } catch (const std::exception& e) {
    std::cerr << "solver failed: " << e.what() << '\n';
    return kExitSolver;
  }

  // Never trust the solver's own accounting.
  const MixedEval ev = evaluate_mixed(inst, outcome.strategy);
  if (ev.spend > static_cast<double>(budget) + 1.0) {
    std::cerr << "solver overspent: " << ev.spend << " > " << budget << "\n";
    return kExitSolver;
  }
  const OmegaSolution omega = omega_bound(inst, budget);

  ordered_json report;
  report["method"] = method;
  report["budget"] = money_json(budget);
  report["spend"] = {{"decimal", money_to_string(std::llround(ev.spend))},
                     {"micro", ev.spend}};
  report["traffic"] = ev.traffic;
  if (omega.clicks > 0.0)
    report["ratio_vs_omega"] = ev.traffic / omega.clicks;
  else
    report["ratio_vs_omega"] = nullptr;
  report["wall_ms"] = wall_ms;
  report["strategy"] = strategy_json(inst, outcome.strategy);

  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out.empty()) {
    std::ofstream f(out);
    if (!(f << text)) {
      std::cerr << "cannot write " << out << '\n';
      return kExitIo;
    }
  }
  return 0;
}

int run_bound(const std::string& path, std::optional<Money> budget_flag,
              const std::string& out) {
  Instance inst;
  Money budget = 0;
  try {
    inst = load_instance(path);
    budget = resolve_budget(inst, budget_flag);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }

  OmegaSolution omega;
  try {
    omega = omega_bound(inst, budget);
    const ClickPriceCurve curve = build_curve(omega);
    Money integral = 0;
    for (const CurveStep& s : curve.steps()) integral += s.cost;
    if (integral != omega.spend) {
      std::cerr << "curve integral mismatch: " << integral << " vs " << omega.spend
                << '\n';
      return kExitSolver;
    }

    ordered_json totals;
    totals["clicks_omega"] = omega.clicks;
    totals["spend_omega"] = money_json(omega.spend);
    totals["budget"] = money_json(budget);
    std::cout << totals.dump(2) << '\n';

    if (out.empty()) {
      write_curve_csv(std::cout, curve);
    } else {
      std::ofstream f(out);
      if (!f) {
        std::cerr << "cannot write " << out << '\n';
        return kExitIo;
      }
      write_curve_csv(f, curve);
    }
  } catch (const std::exception& e) {
    std::cerr << "solver failed: " << e.what() << '\n';
    return kExitSolver;
  }
  return 0;
}

int run_lp_alpha(double epsilon, const std::string& out) {
  if (!(epsilon > 0.0 && epsilon <= 0.25)) {
    std::cerr << "epsilon must lie in (0, 0.25]\n";
    return kExitIo;
  }
  const int K = static_cast<int>(std::llround(1.0 / epsilon));

  try {
    const AlphaResult best = search_alpha(K);
    const FactorGrid grid = make_factor_grid(K, best.alpha_mil);
    const LpSolution sol = solve_lp(build_dual(grid));
    if (sol.status != LpStatus::optimal) {
      std::cerr << "LP solve failed\n";
      return kExitSolver;
    }

    ordered_json summary;
    summary["epsilon"] = grid.eps();
    summary["grid_points"] = K + 1;
    summary["alpha_star"] = best.alpha;
    summary["lp_objective"] = best.objective;
    std::cout << summary.dump(2) << '\n';

    std::vector<double> rs(K + 1), hs(K + 1);
    for (int i = 0; i <= K; ++i) {
      rs[i] = grid.point(i);
      hs[i] = static_cast<std::size_t>(i) < sol.duals.size() ? sol.duals[i] : 0.0;
    }
    const auto mixture = dual_to_strategy(sol, grid);

    if (out.empty()) {
      write_lp_curve_csv(std::cout, rs, hs);
      write_lp_mixture_csv(std::cout, mixture);
    } else {
      std::ofstream fc(out + ".curve.csv"), fm(out + ".mixture.csv");
      if (!fc || !fm) {
        std::cerr << "cannot write " << out << ".*.csv\n";
        return kExitIo;
      }
      write_lp_curve_csv(fc, rs, hs);
      write_lp_mixture_csv(fm, mixture);
    }
  } catch (const std::exception& e) {
    std::cerr << "solver failed: " << e.what() << '\n';
    return kExitSolver;
  }
  return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_edges(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (text.empty()) return edges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge needs u-v: " + item);
    edges.emplace_back(std::stoul(item.substr(0, dash)),
                       std::stoul(item.substr(dash + 1)));
  }
  return edges;
}

std::vector<std::vector<std::size_t>> parse_sets(const std::string& text) {
  std::vector<std::vector<std::size_t>> sets;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::vector<std::size_t> s;
    std::stringstream gs(group);
    std::string item;
    while (std::getline(gs, item, ',')) s.push_back(std::stoul(item));
    sets.push_back(std::move(s));
  }
  return sets;
}

}  // namespace

int main(int argc, char** argv) {
  bidscape::apply_thread_cap();

  CLI::App app{"budget-constrained bidding toolkit"};
  app.require_subcommand(1);

  std::string instance_path, method = "uniform", out_path;
  std::optional<Money> budget_flag;
  Money unit = 10000;
  double epsilon = 0.02;

  auto* solve = app.add_subcommand("solve", "run one solver and report");
  solve->add_option("--instance", instance_path, "instance JSON")->required();
  solve->add_option("--budget", budget_flag, "budget in micro-units");
  solve
      ->add_option("--method", method,
                   "uniform|single|matching|stars|nested|laminar|oracle|"
                   "approx-half|approx-e")
      ->required();
  solve->add_option("--unit", unit, "budget granularity for DP methods, micro-units")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", out_path, "also write the report here");

  auto* bound = app.add_subcommand("bound", "omega bound and click-price curve");
  bound->add_option("--instance", instance_path, "instance JSON")->required();
  bound->add_option("--budget", budget_flag, "budget in micro-units");
  bound->add_option("--out", out_path, "curve CSV path (default stdout)");

  auto* lp = app.add_subcommand("lp-alpha", "factor-revealing LP analysis");
  lp->add_option("--epsilon", epsilon, "grid step in (0, 0.25]")->required();
  lp->add_option("--out", out_path, "CSV path prefix (default stdout)");

  auto* gen = app.add_subcommand("gen", "emit a generated instance");
  std::string kind, edges_text, sets_text, structure = "general";
  std::uint64_t seed = 1;
  std::size_t vertices = 3, k_star = 1, elements = 0;
  std::size_t nk = 3, nq = 4, max_slots = 3;
  double alpha = 0.5, slack = 1e-3;
  Money eps_money = 0;
  gen->add_option("--kind", kind, "tight|single-bid-tight|vc|coverage|random")
      ->required();
  gen->add_option("--out", out_path, "output path (default stdout)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--slack", slack, "tight curve slack");
  gen->add_option("--alpha", alpha, "single-bid-tight alpha");
  gen->add_option("--eps", eps_money, "epsilon in micro-units");
  gen->add_option("--vertices", vertices, "vc vertex count");
  gen->add_option("--edges", edges_text, "vc edges, e.g. 0-1,1-2");
  gen->add_option("--k", k_star, "cover / selection size");
  gen->add_option("--sets", sets_text, "coverage sets, e.g. 0,1;1,2");
  gen->add_option("--elements", elements, "coverage universe size");
  gen->add_option("--keywords", nk, "random keyword count");
  gen->add_option("--queries", nq, "random query count");
  gen->add_option("--slots", max_slots, "random max slots per query");
  gen->add_option("--structure", structure, "general|matching|nested|laminar");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed())
    return run_solve(instance_path, budget_flag, method, unit, out_path);
  if (bound->parsed()) return run_bound(instance_path, budget_flag, out_path);
  if (lp->parsed()) return run_lp_alpha(epsilon, out_path);

  // gen
  try {
    Instance inst;
    if (kind == "tight") {
      CurveSpec spec;
      spec.f = worst_case_curve;
      spec.clicks = 1.0;
      spec.budget = 1.0;
      spec.slack = slack;
      inst = build_tight_instance(spec).inst;
    } else if (kind == "single-bid-tight") {
      inst = tight_single_bid_instance(alpha, eps_money ? eps_money : 10000).inst;
    } else if (kind == "vc") {
      VcGraph h{vertices, parse_edges(edges_text)};
      Money eps = eps_money;
      if (eps == 0) {
        const Money ne = static_cast<Money>(h.edges.size());
        eps = ne > 0 ? kMicro / (ne * ne) : 10000;
      }
      inst = from_vertex_cover(h, k_star, eps).inst;
    } else if (kind == "coverage") {
      auto sets = parse_sets(sets_text);
      std::size_t n = elements;
      if (n == 0)
        for (const auto& s : sets)
          for (std::size_t e : s) n = std::max(n, e + 1);
      inst = from_max_coverage(sets, n, k_star).inst;
    } else if (kind == "random") {
      Shape shape = Shape::general;
      if (structure == "matching") shape = Shape::matching;
      else if (structure == "nested") shape = Shape::nested;
      else if (structure == "laminar") shape = Shape::laminar;
      else if (structure != "general")
        throw std::invalid_argument("unknown structure " + structure);
      inst = random_instance(seed, nk, nq, max_slots, shape);
    } else {
      throw std::invalid_argument("unknown kind " + kind);
    }

    if (out_path.empty())
      std::cout << instance_to_json(inst);
    else
      save_instance(inst, out_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
