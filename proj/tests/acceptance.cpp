// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every check is stated against an independent reference (exhaustive oracle,
// closed-form value, or exact arithmetic identity), never against the unit
// under test itself.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bidscape/clickprice.hpp"
#include "bidscape/exact.hpp"
#include "bidscape/factor_lp.hpp"
#include "bidscape/graph.hpp"
#include "bidscape/instances.hpp"
#include "bidscape/io.hpp"
#include "bidscape/landscape.hpp"
#include "bidscape/oracle.hpp"
#include "bidscape/parallel.hpp"
#include "bidscape/simplex.hpp"
#include "bidscape/uniform.hpp"
#include "fixtures.hpp"

namespace {

using namespace bidscape;
using Clock = std::chrono::steady_clock;

std::string num(double v, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

struct Report {
  int fails = 0;
  std::string first;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (first.empty()) first = what;
    ++fails;
  }
};

int g_failed_criteria = 0;

void run(int id, const std::string& label,
         const std::function<void(Report&)>& body) {
  Report r;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    ++r.fails;
    if (r.first.empty()) r.first = std::string("exception: ") + e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::string line = r.fails == 0 ? "[PASS] " : "[FAIL] ";
  line += (id < 10 ? " " : "") + std::to_string(id) + ". " + label;
  line += " (" + num(ms, 4) + " ms";
  if (!r.note.empty()) line += "; " + r.note;
  if (r.fails > 0)
    line += "; " + std::to_string(r.fails) + " failed, first: " + r.first;
  line += ")";
  std::printf("%s\n", line.c_str());
  std::fflush(stdout);
  if (r.fails > 0) ++g_failed_criteria;
}

Shape shape_for(std::uint64_t seed) { return static_cast<Shape>(seed % 4); }

Money random_budget(std::mt19937_64& rng, const Instance& inst) {
  const auto top = static_cast<std::uint64_t>(2 * *inst.budget());
  return 1 + static_cast<Money>(rng() % top);
}

GridSpec instance_grid(const Instance& inst, Money unit) {
  GridSpec g;
  g.bid_levels.push_back(0);
  for (Money b : interesting_bids(inst)) g.bid_levels.push_back(b);
  g.budget_unit = unit;
  return g;
}

// ---- criterion 1 and 2: the four-position example ----

void criterion_catalog(Report& r) {
  const SlotTable table = fixtures::four_positions();
  struct Row {
    Money lo, hi;
    Money cost;
    double clicks;
  };
  const Row rows[] = {
      {0, 499999, 0, 0.0},
      {500000, 1599999, 100000, 0.20},
      {1600000, 1999999, 400000, 0.25},
      {2000000, 2599999, 900000, 0.45},
      {2600000, 99000000, 1300000, 0.50},
  };
  int probes = 0;
  for (const Row& row : rows)
    for (Money b : {row.lo, row.hi}) {
      const Outcome o = table.cost_clicks_at(b);
      r.expect(o.cost == row.cost && o.clicks == row.clicks,
               "outcome mismatch at bid " + std::to_string(b));
      ++probes;
    }
  r.note = "5 ranges, " + std::to_string(probes) + " probes";
}

void criterion_single_query_mix(Report& r) {
  const Landscape ls = landscape_from_slots(fixtures::four_positions());
  const LandscapeMix mix = optimal_landscape_mix(ls, 1000000);
  r.expect(std::abs(mix.clicks - 0.4625) <= 1e-9,
           "clicks " + num(mix.clicks, 12));
  r.expect(mix.spend == 1000000.0, "spend " + num(mix.spend, 12));
  r.expect(mix.dist.atoms.size() <= 2, "more than two atoms");

  std::vector<SweepPoint> pts;
  for (std::size_t i = 0; i < ls.points().size(); ++i)
    pts.push_back({ls.points()[i].cost, ls.points()[i].clicks, i});
  const double ref = corners_value_at(upper_corners(std::move(pts)), 1000000);
  r.expect(std::abs(mix.clicks - ref) <= 1e-9,
           "hull reference " + num(ref, 12));
  r.note = "clicks " + num(mix.clicks, 6) + " at spend " + num(mix.spend, 8);
}

// ---- criterion 3, 4, 5: curve identities and uniform guarantees ----

void criterion_curve_identity(Report& r) {
  std::mt19937_64 rng(301);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = random_instance(seed, 4, 6, 3, shape_for(seed));
    const Money budget = random_budget(rng, inst);
    const OmegaSolution omega = omega_bound(inst, budget);
    const ClickPriceCurve curve = build_curve(omega);
    Money sum = 0;
    for (const CurveStep& s : curve.steps()) sum += s.cost;
    r.expect(sum == omega.spend,
             "seed " + std::to_string(seed) + ": step sum " +
                 std::to_string(sum) + " vs spend " +
                 std::to_string(omega.spend));
    r.expect(curve.total_cost() == omega.spend,
             "seed " + std::to_string(seed) + ": total_cost mismatch");
  }
  r.note = "200 instances, exact integer identity";
}

void criterion_half(Report& r) {
  std::mt19937_64 rng(401);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = random_instance(seed, 4, 6, 3, shape_for(seed));
    const Money budget = random_budget(rng, inst);
    const OmegaSolution omega = omega_bound(inst, budget);
    const UniformStrategy s = half_strategy(inst, budget);
    r.expect(s.traffic >= 0.5 * omega.clicks,
             "seed " + std::to_string(seed) + ": traffic " +
                 num(s.traffic, 12) + " < half of " + num(omega.clicks, 12));
    r.expect(s.spend <= static_cast<double>(budget),
             "seed " + std::to_string(seed) + ": overspend");
  }
  const SingleBidTight t = tight_single_bid_instance(0.5, 1000);
  const UniformStrategy sb = best_single_bid(t.inst, t.budget);
  const double ratio = sb.traffic / t.optimal;
  r.expect(ratio <= 0.502, "tight single-bid ratio " + num(ratio, 6));
  r.note = "200 instances; tight single-bid ratio " + num(ratio, 6);
}

void criterion_inv_e(Report& r) {
  const double floor_ratio = 1.0 - 1.0 / std::numbers::e - 0.01;
  std::mt19937_64 rng(501);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = random_instance(seed, 4, 6, 3, shape_for(seed));
    const Money budget = random_budget(rng, inst);
    const OmegaSolution omega = omega_bound(inst, budget);
    const MixedStrategy s = one_minus_inv_e_strategy(inst, budget, 256);
    const MixedEval ev = evaluate_mixed(inst, s);
    r.expect(ev.traffic >= floor_ratio * omega.clicks,
             "seed " + std::to_string(seed) + ": traffic " +
                 num(ev.traffic, 12) + " below floor of " +
                 num(omega.clicks, 12));
    r.expect(ev.spend <= static_cast<double>(budget),
             "seed " + std::to_string(seed) + ": overspend");
  }

  CurveSpec spec;
  spec.f = worst_case_curve;
  spec.clicks = 1.0;
  spec.budget = 1.0;
  spec.slack = 1e-3;
  const double cap = 1.0 - 1.0 / std::numbers::e + 0.02;
  double ratio = 0.0;
  std::size_t grid_points = 0;
  {
    const TightInstance tight = build_tight_instance(spec);
    grid_points = tight.grid.size();
    const UniformStrategy u = best_uniform(tight.inst, tight.budget);
    ratio = u.traffic / tight.clicks;
  }
  r.expect(ratio <= cap, "adversarial uniform ratio " + num(ratio, 6));
  r.note = "200 instances; adversarial ratio " + num(ratio, 6) + " vs cap " +
           num(cap, 6) + " on " + std::to_string(grid_points) + " grid points";
}

// ---- criterion 6: uniform optimizer vs grid brute force, and scaling ----

Instance timing_instance(std::size_t n) {
  Instance inst;
  inst.add_keyword("k");
  for (std::size_t i = 0; i < n; ++i) {
    const Money bid = 64 * (1 + static_cast<Money>((i * 37) % 96));
    const double ctr = static_cast<double>((i * 13) % 64 + 1) / 64.0;
    inst.add_query("q" + std::to_string(i), 1.0, SlotTable({{bid, ctr}}));
    inst.add_edge(0, i);
  }
  return inst;
}

double best_uniform_ms(const Instance& inst, Money budget, int reps) {
  double best = 1e100;
  double sink = 0.0;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    sink += best_uniform(inst, budget).traffic;
    best = std::min(
        best, std::chrono::duration<double, std::milli>(Clock::now() - t0)
                  .count());
  }
  if (sink < 0) std::printf(".");
  return best;
}

void criterion_uniform_exact_and_scaling(Report& r) {
  std::mt19937_64 rng(601);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = random_instance(seed, 3, 5, 3, shape_for(seed));
    const Money budget = random_budget(rng, inst);
    std::vector<Money> levels{0};
    for (Money b : interesting_bids(inst)) levels.push_back(b);
    std::vector<SweepPoint> pts;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const EvalResult ev = evaluate(inst, uniform_bids(inst, levels[i]));
      pts.push_back({ev.spend, ev.traffic, i});
    }
    const double ref = corners_value_at(upper_corners(std::move(pts)), budget);
    const UniformStrategy u = best_uniform(inst, budget);
    r.expect(u.traffic == ref, "seed " + std::to_string(seed) +
                                   ": best_uniform " + num(u.traffic, 12) +
                                   " vs brute force " + num(ref, 12));
  }

  const std::array<std::size_t, 3> sizes{1000, 10000, 100000};
  const std::array<int, 3> reps{20, 5, 1};
  std::array<double, 3> ms{};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Instance inst = timing_instance(sizes[i]);
    const Money top = evaluate(inst, uniform_bids(inst, 64 * 96)).spend;
    ms[i] = best_uniform_ms(inst, top / 2, reps[i]);
  }
  auto nlogn = [](double n) { return n * std::log(n); };
  const double limit01 = 2.0 * nlogn(10000.0) / nlogn(1000.0);
  const double limit12 = 2.0 * nlogn(100000.0) / nlogn(10000.0);
  r.expect(ms[1] / ms[0] <= limit01,
           "10k/1k ratio " + num(ms[1] / ms[0], 4) + " > " + num(limit01, 4));
  r.expect(ms[2] / ms[1] <= limit12,
           "100k/10k ratio " + num(ms[2] / ms[1], 4) + " > " + num(limit12, 4));
  r.note = "100 exact matches; times " + num(ms[0], 3) + "/" + num(ms[1], 3) +
           "/" + num(ms[2], 3) + " ms at N=1e3/1e4/1e5";
}

// ---- criterion 7: structured solvers vs the oracle, exhaustively ----

std::vector<SlotTable> small_tables() {
  const Money bids[] = {128, 256, 384};
  const double ctrs[] = {0.5, 1.0};
  std::vector<SlotTable> out;
  for (Money b : bids)
    for (double c : ctrs) out.push_back(SlotTable({{b, c}}));
  const std::pair<double, double> ctr_pairs[] = {{1.0, 1.0}, {1.0, 0.5},
                                                 {0.5, 0.5}};
  for (Money b1 : bids)
    for (Money b2 : bids) {
      if (b2 > b1) continue;
      for (auto [c1, c2] : ctr_pairs)
        out.push_back(SlotTable({{b1, c1}, {b2, c2}}));
    }
  return out;
}

void criterion_structured_exact(Report& r) {
  const std::vector<SlotTable> tables = small_tables();
  const GridSpec grid{{0, 128, 256, 384}, 64};
  std::vector<Money> budgets;
  for (Money u = 0; u <= 6; ++u) budgets.push_back(u * 64);

  int matching_count = 0;
  for (std::size_t t0 = 0; t0 < tables.size(); ++t0) {
    Instance one;
    one.add_keyword("k0");
    one.add_query("q0", 1.0, tables[t0]);
    one.add_edge(0, 0);
    for (Money b : budgets) {
      const ExactSolution sm = solve_matching(one, b);
      const RandomizedSolution rnd = brute_force_randomized(one, b, grid);
      r.expect(sm.traffic == rnd.traffic,
               "matching t" + std::to_string(t0) + " budget " +
                   std::to_string(b));
      r.expect(sm.spend <= b, "matching overspend");
    }
    ++matching_count;
    for (std::size_t t1 = 0; t1 < tables.size(); ++t1) {
      Instance two;
      two.add_keyword("k0");
      two.add_keyword("k1");
      two.add_query("q0", 1.0, tables[t0]);
      two.add_query("q1", 1.0, tables[t1]);
      two.add_edge(0, 0);
      two.add_edge(1, 1);
      for (Money b : budgets) {
        const ExactSolution sm = solve_matching(two, b);
        const RandomizedSolution rnd = brute_force_randomized(two, b, grid);
        r.expect(sm.traffic == rnd.traffic,
                 "matching t" + std::to_string(t0) + "," + std::to_string(t1) +
                     " budget " + std::to_string(b));
      }
      ++matching_count;
    }
  }

  int nested_count = 0;
  for (std::size_t t0 = 0; t0 < tables.size(); ++t0)
    for (std::size_t t1 = 0; t1 < tables.size(); ++t1) {
      const std::size_t t2 = (5 * t0 + 7 * t1) % tables.size();
      Instance inst;
      inst.add_keyword("k0");
      inst.add_keyword("k1");
      inst.add_keyword("k2");
      inst.add_query("q0", 1.0, tables[t0]);
      inst.add_query("q1", 1.0, tables[t1]);
      inst.add_query("q2", 1.0, tables[t2]);
      inst.add_edge(0, 0);
      inst.add_edge(1, 0);
      inst.add_edge(1, 1);
      inst.add_edge(2, 0);
      inst.add_edge(2, 1);
      inst.add_edge(2, 2);
      for (Money b : budgets) {
        const DpSolution dp = solve_nested_dp(inst, b, grid);
        const OracleResult o = brute_force_deterministic(inst, b, grid);
        r.expect(dp.traffic == o.traffic,
                 "nested t" + std::to_string(t0) + "," + std::to_string(t1) +
                     " budget " + std::to_string(b));
        r.expect(dp.spend <= b, "nested overspend");
      }
      ++nested_count;
    }

  int laminar_count = 0;
  for (std::size_t t0 = 0; t0 < tables.size(); ++t0)
    for (std::size_t t1 = 0; t1 < tables.size(); ++t1) {
      const std::size_t t2 = (11 * t0 + 13 * t1) % tables.size();
      Instance inst;
      inst.add_keyword("k0");
      inst.add_keyword("k1");
      inst.add_keyword("k2");
      inst.add_query("q0", 1.0, tables[t0]);
      inst.add_query("q1", 1.0, tables[t1]);
      inst.add_query("q2", 1.0, tables[t2]);
      inst.add_edge(0, 0);
      inst.add_edge(0, 1);
      inst.add_edge(0, 2);
      inst.add_edge(1, 0);
      inst.add_edge(2, 1);
      for (Money b : budgets) {
        const DpSolution dp = solve_laminar_dp(inst, b, grid);
        const OracleResult o = brute_force_deterministic(inst, b, grid);
        r.expect(dp.traffic == o.traffic,
                 "laminar t" + std::to_string(t0) + "," + std::to_string(t1) +
                     " budget " + std::to_string(b));
        r.expect(dp.spend <= b, "laminar overspend");
      }
      ++laminar_count;
    }

  r.note = std::to_string(matching_count) + "/" + std::to_string(nested_count) +
           "/" + std::to_string(laminar_count) +
           " matching/nested/laminar instances, 7 budgets each";
}

// ---- criterion 8: binarization preserves the grid optimum ----

void criterion_binarize(Report& r) {
  const GridSpec grid{{0, 512, 1536, 3072, 6144}, 1};
  int grown = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = random_instance(seed, 4, 5, 2, Shape::laminar);
    const Money budget = *inst.budget();
    const Instance bin = binarize_laminar(inst);
    r.expect(bin.n_keywords() <= 2 * inst.n_keywords(),
             "seed " + std::to_string(seed) + ": keywords " +
                 std::to_string(bin.n_keywords()));
    if (bin.n_keywords() > inst.n_keywords()) ++grown;
    const OracleResult orig = brute_force_deterministic(inst, budget, grid);
    const OracleResult after = brute_force_deterministic(bin, budget, grid);
    r.expect(orig.traffic == after.traffic,
             "seed " + std::to_string(seed) + ": " + num(orig.traffic, 12) +
                 " vs " + num(after.traffic, 12));
  }
  r.note = "100 instances, " + std::to_string(grown) + " gained dummies";
}

// ---- criterion 9: budget randomization dominates the sweep ----

void criterion_randomize_budgets(Report& r) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = random_instance(seed, 3, 4, 2, Shape::nested);
    const GridSpec grid = instance_grid(inst, 64);
    const Money budget = *inst.budget();
    const std::vector<SweepEntry> sweep = budget_sweep(inst, budget, grid);
    r.expect(!sweep.empty(), "empty sweep at seed " + std::to_string(seed));
    std::vector<SweepPoint> pts;
    for (std::size_t i = 0; i < sweep.size(); ++i)
      pts.push_back({sweep[i].budget, sweep[i].traffic, i});
    const std::vector<SweepPoint> corners = upper_corners(std::move(pts));
    for (const SweepEntry& e : sweep) {
      const RandomizedSolution rnd = randomize_over_budgets(sweep, e.budget);
      r.expect(rnd.traffic >= e.traffic,
               "seed " + std::to_string(seed) + " budget " +
                   std::to_string(e.budget) + ": randomized below sweep");
      r.expect(rnd.spend <= static_cast<double>(e.budget) + 1e-6,
               "seed " + std::to_string(seed) + ": overspend");
    }
    for (const SweepPoint& c : corners) {
      const RandomizedSolution rnd = randomize_over_budgets(sweep, c.cost);
      r.expect(rnd.traffic == c.traffic,
               "seed " + std::to_string(seed) + " corner " +
                   std::to_string(c.cost) + ": " + num(rnd.traffic, 12) +
                   " vs " + num(c.traffic, 12));
    }
  }
  r.note = "100 sweeps, dominance everywhere, equality at corners";
}

// ---- criterion 10: factor-revealing LP ----

void criterion_factor_lp(Report& r) {
  const AlphaResult a50 = search_alpha(50);
  r.expect(a50.alpha_mil >= 612 && a50.alpha_mil <= 652,
           "alpha " + std::to_string(a50.alpha_mil) + " mils");

  const FactorGrid g50 = make_factor_grid(50, a50.alpha_mil);
  const LpSolution p50 = solve_lp(build_primal(g50));
  const LpSolution d50 = solve_lp(build_dual(g50));
  r.expect(p50.status == LpStatus::optimal, "primal not optimal");
  r.expect(d50.status == LpStatus::optimal, "dual not optimal");
  const double gap = std::abs(p50.objective - d50.objective);
  r.expect(gap <= 1e-6, "duality gap " + num(gap, 6));

  const AlphaResult a100 = search_alpha(100);
  const FactorGrid g100 = make_factor_grid(100, a100.alpha_mil);
  const LpSolution d100 = solve_lp(build_dual(g100));
  r.expect(d100.status == LpStatus::optimal, "fine dual not optimal");
  double sup = 0.0;
  for (std::size_t i = 0; i < d100.duals.size(); ++i) {
    const double rr = static_cast<double>(i) / 100.0;
    sup = std::max(sup, std::abs(d100.duals[i] - worst_case_curve(rr)));
  }
  r.expect(sup <= 0.05, "curve sup-norm " + num(sup, 6));
  r.note = "alpha(1/50) = " + num(a50.alpha, 4) + ", alpha(1/100) = " +
           num(a100.alpha, 4) + ", gap " + num(gap, 3) + ", sup " +
           num(sup, 4);
}

// ---- criterion 11: vertex-cover reduction over all small graphs ----

struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

std::vector<SmallGraph> all_graphs_up_to_6() {
  std::vector<SmallGraph> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::vector<std::size_t>> pair_idx(n,
                                                   std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        pair_idx[i][j] = pair_idx[j][i] = pairs.size();
        pairs.emplace_back(i, j);
      }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> edge_maps;
    do {
      std::vector<std::size_t> map(pairs.size());
      for (std::size_t e = 0; e < pairs.size(); ++e)
        map[e] = pair_idx[perm[pairs[e].first]][perm[pairs[e].second]];
      edge_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint32_t all = (1u << pairs.size()) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
      bool canonical = true;
      for (const auto& map : edge_maps) {
        std::uint32_t image = 0;
        for (std::size_t e = 0; e < pairs.size(); ++e)
          if (mask & (1u << e)) image |= 1u << map[e];
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      SmallGraph g;
      g.n = n;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask & (1u << e)) g.edges.push_back(pairs[e]);
      out.push_back(std::move(g));
      if (pairs.empty()) break;
    }
  }
  return out;
}

std::size_t min_vertex_cover(const SmallGraph& g) {
  std::size_t best = g.n;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
    bool covers = true;
    for (auto [u, v] : g.edges)
      if (!(s & (1u << u)) && !(s & (1u << v))) {
        covers = false;
        break;
      }
    if (covers)
      best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

void criterion_vertex_cover(Report& r) {
  const std::vector<SmallGraph> graphs = all_graphs_up_to_6();
  r.expect(graphs.size() == 208,
           "graph census " + std::to_string(graphs.size()));
  const Money eps = 4000;
  int achievable = 0, blocked = 0;
  for (const SmallGraph& g : graphs) {
    const std::size_t vc = min_vertex_cover(g);
    VcGraph h;
    h.n = g.n;
    h.edges = g.edges;
    for (std::size_t k = 1; k <= g.n; ++k) {
      const VcInstance vci = from_vertex_cover(h, k, eps);
      const GridSpec grid{{0, eps, 1000000}, 1};
      const OracleResult o =
          brute_force_deterministic(vci.inst, vci.budget, grid);
      const bool hit = o.traffic >= vci.threshold;
      const bool expected = vc <= k;
      r.expect(hit == expected,
               "n=" + std::to_string(g.n) + " edges=" +
                   std::to_string(g.edges.size()) + " k=" + std::to_string(k) +
                   ": oracle " + num(o.traffic, 8) + " vs threshold " +
                   num(vci.threshold, 8) + " (cover " + std::to_string(vc) +
                   ")");
      (hit ? achievable : blocked)++;
    }
  }
  r.note = std::to_string(graphs.size()) + " graphs, " +
           std::to_string(achievable) + " reachable / " +
           std::to_string(blocked) + " blocked thresholds";
}

// ---- criterion 12: max-coverage reduction over all small systems ----

void criterion_max_coverage(Report& r) {
  long systems = 0;
  long checks = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::array<std::uint8_t, 64>> remap;
    do {
      std::array<std::uint8_t, 64> table{};
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        std::uint32_t image = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) image |= 1u << perm[i];
        table[mask] = static_cast<std::uint8_t>(image);
      }
      remap.push_back(table);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::array<std::uint8_t, 4>> combos;
    std::array<std::uint8_t, 4> cur{};
    auto emit = [&](std::size_t m) {
      std::uint32_t u = 0;
      for (std::size_t i = 0; i < m; ++i) u |= cur[i];
      if (u != full) return;
      for (std::size_t i = m; i < 4; ++i) cur[i] = 0;
      combos.push_back(cur);
    };
    for (std::uint32_t a = 1; a <= full; ++a) {
      cur[0] = static_cast<std::uint8_t>(a);
      emit(1);
      for (std::uint32_t b = a + 1; b <= full; ++b) {
        cur[1] = static_cast<std::uint8_t>(b);
        emit(2);
        for (std::uint32_t c = b + 1; c <= full; ++c) {
          cur[2] = static_cast<std::uint8_t>(c);
          emit(3);
          for (std::uint32_t d = c + 1; d <= full; ++d) {
            cur[3] = static_cast<std::uint8_t>(d);
            emit(4);
          }
          cur[3] = 0;
        }
        cur[2] = 0;
      }
      cur[1] = 0;
    }

    for (const auto& combo : combos) {
      std::size_t m = 0;
      while (m < 4 && combo[m] != 0) ++m;
      bool canonical = true;
      for (const auto& table : remap) {
        std::array<std::uint8_t, 4> image{};
        for (std::size_t i = 0; i < m; ++i) image[i] = table[combo[i]];
        std::sort(image.begin(), image.begin() + m);
        if (std::lexicographical_compare(image.begin(), image.begin() + m,
                                         combo.begin(), combo.begin() + m)) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      ++systems;

      std::vector<std::vector<std::size_t>> sets(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t e = 0; e < n; ++e)
          if (combo[i] & (1u << e)) sets[i].push_back(e);

      for (std::size_t k = 1; k <= m; ++k) {
        int best = 0;
        for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
          if (std::popcount(pick) != static_cast<int>(k)) continue;
          std::uint32_t u = 0;
          for (std::size_t i = 0; i < m; ++i)
            if (pick & (1u << i)) u |= combo[i];
          best = std::max(best, std::popcount(u));
        }
        const CoverageInstance ci = from_max_coverage(sets, n, k);
        const GridSpec grid{{0, 1000000}, 1};
        const OracleResult o =
            brute_force_deterministic(ci.inst, ci.budget, grid);
        r.expect(o.traffic == static_cast<double>(best),
                 "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" +
                     std::to_string(k) + ": oracle " + num(o.traffic, 8) +
                     " vs coverage " + std::to_string(best));
        ++checks;
      }
    }
  }
  r.note = std::to_string(systems) + " canonical systems, " +
           std::to_string(checks) + " coverage checks";
}

}  // namespace

int main() {
  apply_thread_cap();
  std::printf("acceptance suite\n");

  run(1, "four-position outcomes are exact in micro-money", criterion_catalog);
  run(2, "randomized single-query mix buys 0.4625 clicks for exactly $1",
      criterion_single_query_mix);
  run(3, "curve step costs sum to the adversary spend exactly",
      criterion_curve_identity);
  run(4, "half strategy keeps half the adversary clicks within budget",
      criterion_half);
  run(5, "left-endpoint mixture clears 1 - 1/e - 0.01; uniform capped on "
         "the adversarial curve",
      criterion_inv_e);
  run(6, "uniform optimizer equals grid brute force and scales near N log N",
      criterion_uniform_exact_and_scaling);
  run(7, "structured solvers match the oracle exhaustively",
      criterion_structured_exact);
  run(8, "binarization preserves oracle traffic with at most 2x keywords",
      criterion_binarize);
  run(9, "budget randomization dominates every sweep, exact at corners",
      criterion_randomize_budgets);
  run(10, "factor LP lands near 1 - 1/e with tight duality and curve match",
      criterion_factor_lp);
  run(11, "vertex-cover thresholds are reachable exactly when covers exist",
      criterion_vertex_cover);
  run(12, "coverage reduction optimum equals exhaustive maximum coverage",
      criterion_max_coverage);

  if (g_failed_criteria == 0) {
    std::printf("acceptance: 12/12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failed_criteria);
  return 1;
}
