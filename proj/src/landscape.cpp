#include "bidscape/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bidscape {

SlotTable::SlotTable(std::vector<Slot> slots) : slots_(std::move(slots)) {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    const Slot& s = slots_[i];
    if (s.bid < 0) throw std::invalid_argument("slot bid must be non-negative");
    if (!(s.ctr >= 0.0 && s.ctr <= 1.0))
      throw std::invalid_argument("slot ctr must lie in [0, 1]");
    if (i > 0 && (s.bid > slots_[i - 1].bid || s.ctr > slots_[i - 1].ctr))
      throw std::invalid_argument("slots must be sorted by position");
  }
}

std::optional<std::size_t> SlotTable::position_for_bid(Money b) const {
  // Bids are non-increasing, so the winnable positions form a suffix; take
  // the first index whose occupant bid is <= b.
  std::size_t lo = 0, hi = slots_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (slots_[mid].bid <= b)
      hi = mid;
    else
      lo = mid + 1;
  }
  if (lo == slots_.size()) return std::nullopt;
  return lo;
}

Outcome SlotTable::cost_clicks_at(Money b) const {
  auto pos = position_for_bid(b);
  if (!pos) return {};
  const Slot& s = slots_[*pos];
  Money cost = std::llround(s.ctr * static_cast<double>(s.bid));
  return {cost, s.ctr};
}

Landscape::Landscape(std::vector<LandscapePoint> points) : points_(std::move(points)) {
  if (points_.empty() || points_.front().bid != 0 || points_.front().cost != 0 ||
      points_.front().clicks < 0.0)
    throw std::invalid_argument("landscape must start at a zero-cost origin");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].bid <= points_[i - 1].bid)
      throw std::invalid_argument("landscape bids must be strictly increasing");
    if (points_[i].cost < points_[i - 1].cost || points_[i].clicks < points_[i - 1].clicks)
      throw std::invalid_argument("landscape outcomes must be non-decreasing");
  }
}

const LandscapePoint& Landscape::outcome_at(Money b) const {
  // Largest point bid <= b; the origin catches everything below the table.
  std::size_t lo = 0, hi = points_.size();
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (points_[mid].bid <= b)
      lo = mid;
    else
      hi = mid;
  }
  return points_[lo];
}

Landscape landscape_from_slots(const SlotTable& table) {
  std::vector<LandscapePoint> pts;
  pts.reserve(table.size() + 1);
  pts.push_back({0, 0, 0.0});
  const auto& slots = table.slots();
  // Walk positions from worst to best: bids ascend. A slot sharing its bid
  // with a better position can never be won, so only the last slot of an
  // equal-bid run survives; identical outcomes keep their cheapest bid.
  for (std::size_t idx = slots.size(); idx-- > 0;) {
    const Slot& s = slots[idx];
    if (idx > 0 && slots[idx - 1].bid == s.bid) continue;
    if (s.bid == 0) {
      // A zero-bid position is won by any bid; its clicks belong to the
      // origin (the cost is zero by construction).
      pts[0].clicks = s.ctr;
      continue;
    }
    Money cost = std::llround(s.ctr * static_cast<double>(s.bid));
    const LandscapePoint& prev = pts.back();
    if (cost == prev.cost && s.ctr == prev.clicks) continue;
    pts.push_back({s.bid, cost, s.ctr});
  }
  return Landscape(std::move(pts));
}

std::vector<Money> interesting_bids(const Landscape& ls) {
  std::vector<Money> bids;
  for (const LandscapePoint& p : ls.points()) {
    if (p.clicks <= 0.0) continue;
    bids.push_back(std::llround(static_cast<double>(p.cost) / p.clicks));
  }
  std::sort(bids.begin(), bids.end());
  bids.erase(std::unique(bids.begin(), bids.end()), bids.end());
  return bids;
}

namespace {

double cross(const HullPoint& a, const HullPoint& b, const HullPoint& c) {
  return static_cast<double>(b.cost - a.cost) * (c.clicks - a.clicks) -
         (b.clicks - a.clicks) * static_cast<double>(c.cost - a.cost);
}

}  // namespace

std::vector<HullPoint> convex_hull(const Landscape& ls) {
  std::vector<HullPoint> hull;
  for (const LandscapePoint& p : ls.points()) {
    HullPoint h{p.bid, p.cost, p.clicks};
    // Keep only strict right turns: slopes must strictly decrease, which
    // discards dominated and collinear interior points.
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), h) >= 0.0)
      hull.pop_back();
    // A new point directly above the last (same cost, more clicks) replaces it.
    while (!hull.empty() && hull.back().cost == h.cost && hull.back().clicks <= h.clicks)
      hull.pop_back();
    if (!hull.empty() && h.clicks <= hull.back().clicks) continue;
    hull.push_back(h);
  }
  if (hull.empty() || hull.front().cost != 0) {
    hull.insert(hull.begin(), HullPoint{0, 0, 0.0});
  }
  return hull;
}

LandscapeMix optimal_landscape_mix(const Landscape& ls, Money budget) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  std::vector<HullPoint> hull = convex_hull(ls);
  LandscapeMix out;
  const HullPoint& top = hull.back();
  if (top.cost <= budget) {
    out.dist.atoms = {{top.bid, 1.0}};
    out.clicks = top.clicks;
    out.spend = static_cast<double>(top.cost);
    return out;
  }
  std::size_t i = 0;
  while (i + 1 < hull.size() && hull[i + 1].cost <= budget) ++i;
  const HullPoint& lo = hull[i];
  const HullPoint& hi = hull[i + 1];
  double w2 = static_cast<double>(budget - lo.cost) / static_cast<double>(hi.cost - lo.cost);
  if (w2 <= 0.0) {
    out.dist.atoms = {{lo.bid, 1.0}};
    out.clicks = lo.clicks;
    out.spend = static_cast<double>(lo.cost);
    return out;
  }
  out.dist.atoms = {{lo.bid, 1.0 - w2}, {hi.bid, w2}};
  // Same interpolation form as corners_value_at so every hull consumer
  // reports bitwise-equal traffic for equal real values.
  out.clicks = lo.clicks + w2 * (hi.clicks - lo.clicks);
  out.spend = static_cast<double>(budget);
  return out;
}

std::pair<double, double> evaluate_distribution(const Landscape& ls,
                                                const BidDistribution& dist) {
  double cost = 0.0, clicks = 0.0;
  for (const auto& [bid, w] : dist.atoms) {
    const LandscapePoint& p = ls.outcome_at(bid);
    cost += w * static_cast<double>(p.cost);
    clicks += w * p.clicks;
  }
  return {cost, clicks};
}

}  // namespace bidscape
