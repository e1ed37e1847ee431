#include "bidscape/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "bidscape/uniform.hpp"

namespace bidscape {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void validate_grid(const GridSpec& grid) {
  if (grid.bid_levels.empty() || grid.bid_levels.front() != 0)
    throw std::invalid_argument("bid grid must start at zero");
  for (std::size_t i = 1; i < grid.bid_levels.size(); ++i)
    if (grid.bid_levels[i] <= grid.bid_levels[i - 1])
      throw std::invalid_argument("bid grid must be strictly increasing");
  if (grid.budget_unit < 1)
    throw std::invalid_argument("budget unit must be positive");
}

Money ceil_units(Money cost, Money unit) { return (cost + unit - 1) / unit; }

double cross(const SweepPoint& o, const SweepPoint& a, const SweepPoint& b) {
  return static_cast<double>(a.cost - o.cost) * (b.traffic - o.traffic) -
         (a.traffic - o.traffic) * static_cast<double>(b.cost - o.cost);
}

Landscape weighted_landscape(const Query& q) {
  if (q.weight == 1.0) return q.landscape;
  std::vector<LandscapePoint> pts = q.landscape.points();
  for (auto& p : pts) p.clicks *= q.weight;
  return Landscape(std::move(pts));
}

// Fractional knapsack over independent landscapes, one bid per unit.
struct UnitGreedy {
  std::vector<std::vector<HullPoint>> hulls;
  std::vector<std::size_t> reach;  // hull vertex fully taken per unit
  struct Cut {
    std::size_t unit = 0;
    std::size_t vertex = 0;
    double fraction = 0.0;
  };
  std::optional<Cut> cut;
  Money spend = 0;
  double traffic = 0.0;
};

UnitGreedy greedy_over_units(const std::vector<Landscape>& units, Money budget) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");

  UnitGreedy g;
  g.hulls.reserve(units.size());
  for (const Landscape& ls : units) g.hulls.push_back(convex_hull(ls));
  g.reach.assign(units.size(), 0);

  struct Seg {
    double price;
    std::size_t unit;
    std::size_t v;
    Money dcost;
    double dtraffic;
  };
  std::vector<Seg> segs;
  double base = 0.0;
  for (std::size_t u = 0; u < g.hulls.size(); ++u) {
    const auto& hull = g.hulls[u];
    base += hull.front().clicks;
    for (std::size_t v = 1; v < hull.size(); ++v) {
      const Money dc = hull[v].cost - hull[v - 1].cost;
      const double dt = hull[v].clicks - hull[v - 1].clicks;
      if (dt <= 0.0) continue;
      segs.push_back({static_cast<double>(dc) / dt, u, v, dc, dt});
    }
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
    if (a.price != b.price) return a.price < b.price;
    if (a.unit != b.unit) return a.unit < b.unit;
    return a.v < b.v;
  });

  std::vector<SweepPoint> pts;
  pts.reserve(segs.size() + 1);
  pts.push_back({0, base, 0});
  Money csum = 0;
  double tsum = base;
  Money remaining = budget;
  bool stopped = false;
  for (const Seg& s : segs) {
    csum += s.dcost;
    tsum += s.dtraffic;
    pts.push_back({csum, tsum, pts.size()});
    if (stopped) continue;
    if (s.dcost <= remaining) {
      remaining -= s.dcost;
      g.reach[s.unit] = s.v;
    } else {
      if (remaining > 0)
        g.cut = UnitGreedy::Cut{s.unit, s.v,
                                static_cast<double>(remaining) /
                                    static_cast<double>(s.dcost)};
      stopped = true;
    }
  }

  g.spend = g.cut ? budget : budget - remaining;
  g.traffic = corners_value_at(upper_corners(std::move(pts)), budget);
  return g;
}

ExactSolution package_greedy(const UnitGreedy& g,
                             const std::vector<std::size_t>& unit_keyword,
                             std::size_t n_keywords) {
  BidVector lo(n_keywords, 0);
  for (std::size_t u = 0; u < g.reach.size(); ++u)
    lo[unit_keyword[u]] = g.hulls[u][g.reach[u]].bid;

  ExactSolution out;
  out.spend = g.spend;
  out.traffic = g.traffic;
  if (g.cut) {
    BidVector hi = lo;
    hi[unit_keyword[g.cut->unit]] = g.hulls[g.cut->unit][g.cut->vertex].bid;
    out.strategy.atoms = {{std::move(lo), 1.0 - g.cut->fraction},
                          {std::move(hi), g.cut->fraction}};
  } else {
    out.strategy.atoms = {{std::move(lo), 1.0}};
  }
  return out;
}

}  // namespace

GridSpec default_grid(const Instance& inst) {
  GridSpec g;
  g.bid_levels = interesting_bids(inst);
  if (g.bid_levels.empty() || g.bid_levels.front() != 0)
    g.bid_levels.insert(g.bid_levels.begin(), 0);
  return g;
}

std::vector<SweepPoint> upper_corners(std::vector<SweepPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("no sweep points");
  std::sort(pts.begin(), pts.end(), [](const SweepPoint& a, const SweepPoint& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.traffic != b.traffic) return a.traffic > b.traffic;
    return a.tag < b.tag;
  });
  std::vector<SweepPoint> hull;
  for (const SweepPoint& p : pts) {
    if (!hull.empty() && (p.cost == hull.back().cost || p.traffic <= hull.back().traffic))
      continue;
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) >= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

double corners_value_at(const std::vector<SweepPoint>& corners, Money budget) {
  if (corners.empty()) throw std::invalid_argument("empty hull");
  if (budget >= corners.back().cost) return corners.back().traffic;
  if (budget < corners.front().cost)
    throw std::invalid_argument("budget below the cheapest outcome");
  std::size_t lo = 0;
  for (std::size_t i = 1; i < corners.size() && corners[i].cost <= budget; ++i)
    lo = i;
  const SweepPoint& a = corners[lo];
  const SweepPoint& b = corners[lo + 1];
  const double f = static_cast<double>(budget - a.cost) /
                   static_cast<double>(b.cost - a.cost);
  return a.traffic + f * (b.traffic - a.traffic);
}

ExactSolution solve_matching(const Instance& inst, Money budget) {
  if (!analyze_structure(inst).is_matching)
    throw std::invalid_argument("instance is not a matching");

  std::vector<Landscape> units;
  std::vector<std::size_t> unit_keyword;
  for (std::size_t q = 0; q < inst.n_queries(); ++q) {
    const auto& ks = inst.query_keywords(q);
    if (ks.empty()) continue;
    units.push_back(weighted_landscape(inst.query(q)));
    unit_keyword.push_back(ks.front());
  }
  return package_greedy(greedy_over_units(units, budget), unit_keyword,
                        inst.n_keywords());
}

ExactSolution solve_union_of_stars(const Instance& inst, Money budget) {
  if (!analyze_structure(inst).is_star_union)
    throw std::invalid_argument("instance is not a union of stars");

  std::vector<Landscape> units;
  std::vector<std::size_t> unit_keyword;
  std::vector<bool> seen_k(inst.n_keywords(), false);
  std::vector<bool> seen_q(inst.n_queries(), false);
  for (std::size_t k0 = 0; k0 < inst.n_keywords(); ++k0) {
    if (seen_k[k0]) continue;
    // Collect the connected component around k0.
    std::vector<std::size_t> ks{k0}, qs;
    seen_k[k0] = true;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t q : inst.keyword_queries(ks[i])) {
        if (seen_q[q]) continue;
        seen_q[q] = true;
        qs.push_back(q);
        for (std::size_t k : inst.query_keywords(q)) {
          if (!seen_k[k]) {
            seen_k[k] = true;
            ks.push_back(k);
          }
        }
      }
    }
    if (qs.empty()) continue;
    if (ks.size() == 1) {
      std::sort(qs.begin(), qs.end());
      units.push_back(aggregate_landscape(inst, qs));
      unit_keyword.push_back(k0);
    } else {
      // Query-centered star: bid through the lowest keyword, drop the rest.
      units.push_back(weighted_landscape(inst.query(qs.front())));
      unit_keyword.push_back(*std::min_element(ks.begin(), ks.end()));
    }
  }
  return package_greedy(greedy_over_units(units, budget), unit_keyword,
                        inst.n_keywords());
}

IncrementalStats incremental_stats(const Instance& inst,
                                   const std::vector<std::size_t>& order,
                                   const GridSpec& grid) {
  validate_grid(grid);
  const std::size_t L = grid.bid_levels.size();
  IncrementalStats inc;
  inc.traffic.assign(order.size(), std::vector<double>(L, 0.0));
  inc.cost.assign(order.size(), std::vector<Money>(L, 0));

  std::vector<std::size_t> prev;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& cur = inst.keyword_queries(order[i]);
    if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()))
      throw std::invalid_argument("order is not nested");
    std::vector<std::size_t> diff;
    std::set_difference(cur.begin(), cur.end(), prev.begin(), prev.end(),
                        std::back_inserter(diff));
    for (std::size_t l = 0; l < L; ++l) {
      Money c = 0;
      double t = 0.0;
      for (std::size_t q : diff) {
        const Query& query = inst.query(q);
        const LandscapePoint& p = query.landscape.outcome_at(grid.bid_levels[l]);
        c += p.cost;
        t += query.weight * p.clicks;
      }
      inc.cost[i][l] = c;
      inc.traffic[i][l] = t;
    }
    prev.assign(cur.begin(), cur.end());
  }
  return inc;
}

DpSolution solve_nested_dp(const Instance& inst, Money budget, const GridSpec& grid) {
  validate_grid(grid);
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  StructureReport rep = analyze_structure(inst);
  if (!rep.is_nested) throw std::invalid_argument("instance is not nested");

  const auto& order = rep.nested_order;  // innermost first
  const std::size_t n = order.size();
  BidVector bids(inst.n_keywords(), 0);
  if (n > 0) {
    const std::size_t L = grid.bid_levels.size();
    const std::size_t U = static_cast<std::size_t>(budget / grid.budget_unit);
    if (static_cast<double>(n) * L * (U + 1) > 5e7)
      throw std::length_error("grid overflow: too many DP cells");
    const std::size_t W = U + 1;
    const IncrementalStats inc = incremental_stats(inst, order, grid);

    // Suffix maxima over bid levels of the previous layer, with argument
    // records for the traceback. Layer zero is identically zero.
    std::vector<double> G(L * W, 0.0);
    std::vector<std::uint32_t> Garg(L * W);
    for (std::size_t l = 0; l < L; ++l)
      std::fill_n(Garg.begin() + l * W, W, static_cast<std::uint32_t>(l));

    std::vector<std::vector<std::uint32_t>> choice(n);
    std::vector<double> F(L * W);
    std::vector<double> nextG(L * W);
    std::vector<std::uint32_t> nextGarg(L * W);
    for (std::size_t i = 0; i < n; ++i) {
      choice[i].assign(L * W, std::numeric_limits<std::uint32_t>::max());
      for (std::size_t l = 0; l < L; ++l) {
        const Money cu = ceil_units(inc.cost[i][l], grid.budget_unit);
        const double t = inc.traffic[i][l];
        for (std::size_t u = 0; u < W; ++u) {
          if (cu > static_cast<Money>(u)) {
            F[l * W + u] = kNegInf;
          } else {
            const std::size_t p = l * W + (u - cu);
            F[l * W + u] = t + G[p];
            choice[i][l * W + u] = Garg[p];
          }
        }
      }
      for (std::size_t l = L; l-- > 0;) {
        for (std::size_t u = 0; u < W; ++u) {
          if (l + 1 < L && nextG[(l + 1) * W + u] > F[l * W + u]) {
            nextG[l * W + u] = nextG[(l + 1) * W + u];
            nextGarg[l * W + u] = nextGarg[(l + 1) * W + u];
          } else {
            nextG[l * W + u] = F[l * W + u];
            nextGarg[l * W + u] = static_cast<std::uint32_t>(l);
          }
        }
      }
      G.swap(nextG);
      Garg.swap(nextGarg);
    }

    // G now maxes the last layer; entry (0, U) covers all bid levels.
    std::size_t l = Garg[U];
    std::size_t u = U;
    for (std::size_t i = n; i-- > 0;) {
      bids[order[i]] = grid.bid_levels[l];
      if (i > 0) {
        const std::uint32_t below = choice[i][l * W + u];
        u -= static_cast<std::size_t>(ceil_units(inc.cost[i][l], grid.budget_unit));
        l = below;
      }
    }
  }

  DpSolution out;
  out.bids = std::move(bids);
  const EvalResult ev = evaluate(inst, out.bids);
  out.spend = ev.spend;
  out.traffic = ev.traffic;
  if (out.spend > budget) throw std::logic_error("DP overspent its budget");
  return out;
}

namespace {

// Laminar forest over distinct nonempty neighborhoods; equal neighborhoods
// share one node rooted at their lowest keyword.
struct LaminarTree {
  std::vector<std::size_t> rep;                 // node -> keyword
  std::vector<std::vector<std::size_t>> members;  // node -> keywords
  std::vector<std::ptrdiff_t> parent;           // node -> node or -1
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> roots;
};

LaminarTree build_laminar_tree(const Instance& inst, const StructureReport& rep) {
  LaminarTree t;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < inst.n_keywords(); ++k) {
    if (!inst.keyword_queries(k).empty()) groups[inst.keyword_queries(k)].push_back(k);
  }
  std::vector<std::ptrdiff_t> node_of(inst.n_keywords(), -1);
  for (const auto& [qs, ks] : groups) {
    node_of[ks.front()] = static_cast<std::ptrdiff_t>(t.rep.size());
    t.rep.push_back(ks.front());
    t.members.push_back(ks);
  }
  // Sort nodes by representative for deterministic numbering.
  // (std::map iterates by query-set order; renumber by keyword instead.)
  std::vector<std::size_t> order(t.rep.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return t.rep[a] < t.rep[b]; });
  LaminarTree s;
  s.rep.reserve(order.size());
  s.members.reserve(order.size());
  for (std::size_t i : order) {
    node_of[t.rep[i]] = static_cast<std::ptrdiff_t>(s.rep.size());
    s.rep.push_back(t.rep[i]);
    s.members.push_back(t.members[i]);
  }
  s.parent.assign(s.rep.size(), -1);
  s.children.resize(s.rep.size());
  for (std::size_t i = 0; i < s.rep.size(); ++i) {
    const std::ptrdiff_t pk = rep.laminar_parent[s.rep[i]];
    if (pk < 0) {
      s.roots.push_back(i);
    } else {
      // The parent of a lowest-of-its-group keyword is itself such a keyword.
      const std::ptrdiff_t pn = node_of[static_cast<std::size_t>(pk)];
      s.parent[i] = pn;
      s.children[static_cast<std::size_t>(pn)].push_back(i);
    }
  }
  return s;
}

std::string fresh_keyword_id(const Instance& inst, std::size_t& counter) {
  for (;; ++counter) {
    std::string name = "aux" + std::to_string(counter);
    if (!inst.keyword_index(name)) {
      ++counter;
      return name;
    }
  }
}

}  // namespace

Instance binarize_laminar(const Instance& inst) {
  StructureReport rep = analyze_structure(inst);
  if (!rep.is_laminar) throw std::invalid_argument("instance is not laminar");

  Instance out;
  for (std::size_t k = 0; k < inst.n_keywords(); ++k)
    out.add_keyword(inst.keyword_id(k));
  for (std::size_t q = 0; q < inst.n_queries(); ++q) {
    const Query& query = inst.query(q);
    out.add_query(query.id, query.weight, query.slots);
  }
  for (std::size_t k = 0; k < inst.n_keywords(); ++k)
    for (std::size_t q : inst.keyword_queries(k)) out.add_edge(k, q);
  if (inst.budget()) out.set_budget(*inst.budget());

  const LaminarTree tree = build_laminar_tree(inst, rep);
  std::size_t counter = 0;
  for (std::size_t node = 0; node < tree.rep.size(); ++node) {
    const auto& ch = tree.children[node];
    if (ch.size() <= 2) continue;
    // Left comb: fold all but the last child into a chain of dummies, each
    // covering the union of everything folded so far.
    std::vector<std::size_t> covered = inst.keyword_queries(tree.rep[ch[0]]);
    for (std::size_t t = 1; t + 1 < ch.size(); ++t) {
      const auto& add = inst.keyword_queries(tree.rep[ch[t]]);
      std::vector<std::size_t> merged;
      std::set_union(covered.begin(), covered.end(), add.begin(), add.end(),
                     std::back_inserter(merged));
      covered = std::move(merged);
      const std::size_t kd = out.add_keyword(fresh_keyword_id(out, counter));
      for (std::size_t q : covered) out.add_edge(kd, q);
    }
  }
  return out;
}

DpSolution solve_laminar_dp(const Instance& inst, Money budget, const GridSpec& grid) {
  validate_grid(grid);
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  if (!analyze_structure(inst).is_laminar)
    throw std::invalid_argument("instance is not laminar");

  const Instance bin = binarize_laminar(inst);
  const StructureReport rep = analyze_structure(bin);
  const LaminarTree tree = build_laminar_tree(bin, rep);
  const std::size_t L = grid.bid_levels.size();
  const std::size_t U = static_cast<std::size_t>(budget / grid.budget_unit);
  const std::size_t W = U + 1;
  const std::size_t N = tree.rep.size();
  BidVector bids(bin.n_keywords(), 0);

  if (N > 0) {
    if (static_cast<double>(N) * L * W > 1e7)
      throw std::length_error("grid overflow: too many DP cells");

    struct Node {
      std::vector<double> own_traffic;  // per level
      std::vector<Money> cu;            // per level, in budget units
      std::vector<double> F, M;         // L x W
      std::vector<std::uint32_t> Marg;
      std::vector<std::uint32_t> split;  // two-children budget split
    };
    std::vector<Node> nodes(N);

    // Post-order: children before parents.
    std::vector<std::size_t> post;
    post.reserve(N);
    {
      std::vector<std::pair<std::size_t, std::size_t>> stack;
      for (std::size_t r : tree.roots) stack.emplace_back(r, 0);
      while (!stack.empty()) {
        auto& [v, ci] = stack.back();
        if (ci < tree.children[v].size()) {
          stack.emplace_back(tree.children[v][ci++], 0);
        } else {
          post.push_back(v);
          stack.pop_back();
        }
      }
    }

    for (std::size_t v : post) {
      Node& nd = nodes[v];
      if (tree.children[v].size() > 2)
        throw std::logic_error("binarization left a wide node");
      const auto& qs = bin.keyword_queries(tree.rep[v]);
      std::vector<std::size_t> child_union;
      for (std::size_t c : tree.children[v]) {
        const auto& cq = bin.keyword_queries(tree.rep[c]);
        std::vector<std::size_t> merged;
        std::set_union(child_union.begin(), child_union.end(), cq.begin(),
                       cq.end(), std::back_inserter(merged));
        child_union = std::move(merged);
      }
      std::vector<std::size_t> own;
      std::set_difference(qs.begin(), qs.end(), child_union.begin(),
                          child_union.end(), std::back_inserter(own));

      nd.own_traffic.assign(L, 0.0);
      nd.cu.assign(L, 0);
      for (std::size_t l = 0; l < L; ++l) {
        Money c = 0;
        double t = 0.0;
        for (std::size_t q : own) {
          const Query& query = bin.query(q);
          const LandscapePoint& p = query.landscape.outcome_at(grid.bid_levels[l]);
          c += p.cost;
          t += query.weight * p.clicks;
        }
        nd.cu[l] = ceil_units(c, grid.budget_unit);
        nd.own_traffic[l] = t;
      }

      nd.F.assign(L * W, kNegInf);
      const auto& ch = tree.children[v];
      if (ch.size() == 2) nd.split.assign(L * W, 0);
      for (std::size_t l = 0; l < L; ++l) {
        // Children bid at least this node's level; their tables are already
        // suffix-maxed, so index them at l directly.
        std::vector<double> pool(W, 0.0);
        if (ch.size() == 1) {
          const auto& M = nodes[ch[0]].M;
          for (std::size_t u = 0; u < W; ++u) pool[u] = M[l * W + u];
        } else if (ch.size() == 2) {
          const auto& M1 = nodes[ch[0]].M;
          const auto& M2 = nodes[ch[1]].M;
          for (std::size_t u = 0; u < W; ++u) {
            double best = kNegInf;
            std::uint32_t arg = 0;
            for (std::size_t s = 0; s <= u; ++s) {
              const double cand = M1[l * W + s] + M2[l * W + (u - s)];
              if (cand > best) {
                best = cand;
                arg = static_cast<std::uint32_t>(s);
              }
            }
            pool[u] = best;
            nd.split[l * W + u] = arg;
          }
        }
        for (std::size_t u = 0; u < W; ++u) {
          if (nd.cu[l] > static_cast<Money>(u)) continue;
          const double rest = pool[u - nd.cu[l]];
          if (rest == kNegInf) continue;
          nd.F[l * W + u] = nd.own_traffic[l] + rest;
        }
      }

      nd.M.assign(L * W, kNegInf);
      nd.Marg.assign(L * W, 0);
      for (std::size_t l = L; l-- > 0;) {
        for (std::size_t u = 0; u < W; ++u) {
          if (l + 1 < L && nd.M[(l + 1) * W + u] > nd.F[l * W + u]) {
            nd.M[l * W + u] = nd.M[(l + 1) * W + u];
            nd.Marg[l * W + u] = nd.Marg[(l + 1) * W + u];
          } else {
            nd.M[l * W + u] = nd.F[l * W + u];
            nd.Marg[l * W + u] = static_cast<std::uint32_t>(l);
          }
        }
      }
    }

    // Fold the forest roots over budget shares.
    std::vector<double> acc(W, 0.0);
    std::vector<std::vector<std::uint32_t>> top_arg(tree.roots.size());
    for (std::size_t j = 0; j < tree.roots.size(); ++j) {
      const auto& M = nodes[tree.roots[j]].M;
      top_arg[j].assign(W, 0);
      std::vector<double> next(W, kNegInf);
      for (std::size_t u = 0; u < W; ++u) {
        for (std::size_t s = 0; s <= u; ++s) {
          const double cand = acc[u - s] + M[s];  // level 0 row
          if (cand > next[u]) {
            next[u] = cand;
            top_arg[j][u] = static_cast<std::uint32_t>(s);
          }
        }
      }
      acc.swap(next);
    }

    // Traceback.
    std::function<void(std::size_t, std::size_t, std::size_t)> assign =
        [&](std::size_t v, std::size_t lmin, std::size_t u) {
          const Node& nd = nodes[v];
          const std::size_t l = nd.Marg[lmin * W + u];
          for (std::size_t k : tree.members[v]) bids[k] = grid.bid_levels[l];
          const std::size_t avail = u - static_cast<std::size_t>(nd.cu[l]);
          const auto& ch = tree.children[v];
          if (ch.size() == 1) {
            assign(ch[0], l, avail);
          } else if (ch.size() == 2) {
            const std::size_t s = nd.split[l * W + avail];
            assign(ch[0], l, s);
            assign(ch[1], l, avail - s);
          }
        };
    std::size_t u = U;
    for (std::size_t j = tree.roots.size(); j-- > 0;) {
      const std::size_t s = top_arg[j][u];
      assign(tree.roots[j], 0, s);
      u -= s;
    }
  }

  DpSolution out;
  out.bids.assign(bids.begin(), bids.begin() + inst.n_keywords());
  const EvalResult ev = evaluate(inst, out.bids);
  out.spend = ev.spend;
  out.traffic = ev.traffic;
  if (out.spend > budget) throw std::logic_error("DP overspent its budget");
  return out;
}

std::vector<SweepEntry> budget_sweep(const Instance& inst, Money budget,
                                     const GridSpec& grid) {
  validate_grid(grid);
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  const StructureReport rep = analyze_structure(inst);
  if (!rep.is_nested && !rep.is_laminar)
    throw std::invalid_argument("no structured solver for this graph");

  std::vector<SweepEntry> out;
  for (Money b = 0; b <= budget; b += grid.budget_unit) {
    DpSolution s = rep.is_nested ? solve_nested_dp(inst, b, grid)
                                 : solve_laminar_dp(inst, b, grid);
    out.push_back({b, s.spend, s.traffic, std::move(s.bids)});
  }
  return out;
}

RandomizedSolution randomize_over_budgets(const std::vector<SweepEntry>& sweep,
                                          Money budget) {
  if (sweep.empty()) throw std::invalid_argument("empty sweep");
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    if (sweep[i].budget <= sweep[i - 1].budget)
      throw std::invalid_argument("sweep budgets must increase");
    if (sweep[i].traffic < sweep[i - 1].traffic)
      throw std::invalid_argument("non-monotone sweep");
  }
  if (budget < sweep.front().budget)
    throw std::invalid_argument("budget below the sweep range");

  std::vector<SweepPoint> pts;
  pts.reserve(sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i)
    pts.push_back({sweep[i].budget, sweep[i].traffic, i});
  const std::vector<SweepPoint> corners = upper_corners(std::move(pts));

  RandomizedSolution out;
  out.traffic = corners_value_at(corners, budget);

  std::size_t lo = 0;
  while (lo + 1 < corners.size() && corners[lo + 1].cost <= budget) ++lo;
  double f = 0.0;
  std::size_t hi = lo;
  if (budget > corners[lo].cost && lo + 1 < corners.size()) {
    hi = lo + 1;
    f = static_cast<double>(budget - corners[lo].cost) /
        static_cast<double>(corners[hi].cost - corners[lo].cost);
  }
  const SweepEntry& a = sweep[corners[lo].tag];
  const SweepEntry& b = sweep[corners[hi].tag];
  if (f <= 0.0) {
    out.strategy.atoms = {{a.bids, 1.0}};
    out.spend = static_cast<double>(a.spend);
    out.traffic = std::max(out.traffic, a.traffic);
  } else {
    out.strategy.atoms = {{a.bids, 1.0 - f}, {b.bids, f}};
    out.spend = (1.0 - f) * static_cast<double>(a.spend) +
                f * static_cast<double>(b.spend);
  }

  // A sweep entry exactly at the budget is achievable outright; never report
  // below it (interpolation can round just under a collinear point).
  for (const SweepEntry& e : sweep) {
    if (e.budget == budget) {
      out.traffic = std::max(out.traffic, e.traffic);
      break;
    }
    if (e.budget > budget) break;
  }
  return out;
}

}  // namespace bidscape
