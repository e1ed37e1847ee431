#include "bidscape/uniform.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bidscape {

std::vector<Money> interesting_bids(const Instance& inst) {
  std::vector<Money> bids;
  std::size_t total = 0;
  for (std::size_t q = 0; q < inst.n_queries(); ++q)
    total += inst.query(q).landscape.size();
  bids.reserve(total);
  for (std::size_t q = 0; q < inst.n_queries(); ++q) {
    for (Money b : interesting_bids(inst.query(q).landscape)) bids.push_back(b);
  }
  std::sort(bids.begin(), bids.end());
  bids.erase(std::unique(bids.begin(), bids.end()), bids.end());
  return bids;
}

namespace {

struct Delta {
  Money bid;
  std::uint32_t q;
  std::uint32_t i;
};

}  // namespace

Landscape aggregate_landscape(const Instance& inst) {
  // Queries no keyword matches never see a uniform bid; they are not part of
  // the aggregate outcome.
  std::vector<std::size_t> covered;
  covered.reserve(inst.n_queries());
  for (std::size_t q = 0; q < inst.n_queries(); ++q)
    if (!inst.query_keywords(q).empty()) covered.push_back(q);
  return aggregate_landscape(inst, covered);
}

Landscape aggregate_landscape(const Instance& inst,
                              const std::vector<std::size_t>& queries) {
  std::vector<Money> marks;
  for (std::size_t q : queries) {
    for (Money b : interesting_bids(inst.query(q).landscape)) marks.push_back(b);
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  std::vector<Delta> deltas;
  std::size_t total = 0;
  for (std::size_t q : queries) total += inst.query(q).landscape.size() - 1;
  deltas.reserve(total);
  double base_clicks = 0.0;
  for (std::size_t q : queries) {
    const auto& pts = inst.query(q).landscape.points();
    base_clicks += inst.query(q).weight * pts[0].clicks;
    for (std::size_t i = 1; i < pts.size(); ++i)
      deltas.push_back({pts[i].bid, static_cast<std::uint32_t>(q),
                        static_cast<std::uint32_t>(i)});
  }
  // Tie-break on (query, point) keeps the floating click sum deterministic.
  std::sort(deltas.begin(), deltas.end(), [](const Delta& a, const Delta& b) {
    if (a.bid != b.bid) return a.bid < b.bid;
    if (a.q != b.q) return a.q < b.q;
    return a.i < b.i;
  });

  std::vector<LandscapePoint> agg;
  agg.reserve(marks.size() + 1);
  agg.push_back({0, 0, base_clicks});
  Money cost = 0;
  double clicks = base_clicks;
  std::size_t di = 0;
  for (Money b : marks) {
    while (di < deltas.size() && deltas[di].bid <= b) {
      const Delta& d = deltas[di++];
      const auto& pts = inst.query(d.q).landscape.points();
      cost += pts[d.i].cost - pts[d.i - 1].cost;
      clicks += inst.query(d.q).weight * (pts[d.i].clicks - pts[d.i - 1].clicks);
    }
    if (b == 0) continue;
    const LandscapePoint& prev = agg.back();
    if (cost == prev.cost && clicks == prev.clicks) continue;
    agg.push_back({b, cost, clicks});
  }
  return Landscape(std::move(agg));
}

UniformStrategy best_uniform(const Instance& inst, Money budget) {
  LandscapeMix mix = optimal_landscape_mix(aggregate_landscape(inst), budget);
  UniformStrategy out;
  out.kind = UniformStrategy::Kind::two_bid;
  out.atoms = mix.dist.atoms;
  out.traffic = mix.clicks;
  out.spend = mix.spend;
  return out;
}

UniformStrategy best_single_bid(const Instance& inst, Money budget) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  Landscape agg = aggregate_landscape(inst);
  const auto& pts = agg.points();

  UniformStrategy out;
  out.kind = UniformStrategy::Kind::single_bid;
  // Best affordable point; ties on clicks keep the cheaper bid.
  const LandscapePoint* pure = &pts.front();
  for (const LandscapePoint& p : pts) {
    if (p.cost > budget) break;
    if (p.clicks > pure->clicks) pure = &p;
  }
  out.atoms = {{pure->bid, 1.0}};
  out.traffic = pure->clicks;
  out.spend = static_cast<double>(pure->cost);

  auto over = std::find_if(pts.begin(), pts.end(),
                           [&](const LandscapePoint& p) { return p.cost > budget; });
  if (over != pts.end()) {
    double w = static_cast<double>(budget) / static_cast<double>(over->cost);
    if (w * over->clicks > out.traffic) {
      out.atoms = {{over->bid, w}, {0, 1.0 - w}};
      out.traffic = w * over->clicks;
      out.spend = static_cast<double>(budget);
    }
  }
  return out;
}

MixedStrategy uniform_mixture(const Instance& inst, const UniformStrategy& s) {
  MixedStrategy out;
  for (const auto& [bid, w] : s.atoms) out.atoms.emplace_back(uniform_bids(inst, bid), w);
  return out;
}

}  // namespace bidscape
