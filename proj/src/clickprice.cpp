#include "bidscape/clickprice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bidscape {

namespace {

struct Segment {
  double price;    // cost per weighted click
  std::size_t q;
  std::size_t hi;  // hull vertex index this segment ends at
  Money dcost;
  double dtraffic;
};

}  // namespace

OmegaSolution omega_bound(const Instance& inst, Money budget) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");

  std::vector<std::vector<HullPoint>> hulls(inst.n_queries());
  std::vector<Segment> segs;
  for (std::size_t q = 0; q < inst.n_queries(); ++q) {
    // The per-query adversary ranges over the reachable market: a query no
    // keyword matches is not part of the instance it competes on.
    if (inst.query_keywords(q).empty()) {
      hulls[q] = {{0, 0, 0.0}};
      continue;
    }
    hulls[q] = convex_hull(inst.query(q).landscape);
    double w = inst.query(q).weight;
    for (std::size_t i = 1; i < hulls[q].size(); ++i) {
      Money dc = hulls[q][i].cost - hulls[q][i - 1].cost;
      double dt = w * (hulls[q][i].clicks - hulls[q][i - 1].clicks);
      if (dt <= 0.0) continue;
      segs.push_back({static_cast<double>(dc) / dt, q, i, dc, dt});
    }
  }
  // Within one query prices strictly increase, so this order never takes a
  // later segment before an earlier one of the same hull.
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    if (a.price != b.price) return a.price < b.price;
    if (a.q != b.q) return a.q < b.q;
    return a.hi < b.hi;
  });

  OmegaSolution out;
  std::vector<std::size_t> reach(inst.n_queries(), 0);
  Money remaining = budget;
  for (const Segment& s : segs) {
    if (s.dcost <= remaining) {
      remaining -= s.dcost;
      reach[s.q] = s.hi;
      out.clicks += s.dtraffic;
    } else {
      if (remaining == 0) break;
      OmegaSolution::Piece piece;
      piece.query = s.q;
      piece.bid_lo = hulls[s.q][s.hi - 1].bid;
      piece.bid_hi = hulls[s.q][s.hi].bid;
      piece.fraction = static_cast<double>(remaining) / static_cast<double>(s.dcost);
      piece.cost = remaining;
      piece.traffic = piece.fraction * s.dtraffic;
      piece.price = s.price;
      out.piece = piece;
      out.clicks += piece.traffic;
      remaining = 0;
      break;
    }
  }
  out.spend = budget - remaining;
  if (!out.piece) {
    // Everything affordable was taken; spend is the sum of taken pieces.
    Money taken = 0;
    for (std::size_t q = 0; q < inst.n_queries(); ++q)
      taken += hulls[q][reach[q]].cost;
    out.spend = taken;
  }
  for (std::size_t q = 0; q < inst.n_queries(); ++q) {
    if (reach[q] == 0) continue;
    const HullPoint& v = hulls[q][reach[q]];
    out.allocations.push_back(
        {q, v.bid, v.cost, inst.query(q).weight * v.clicks});
  }
  return out;
}

ClickPriceCurve::ClickPriceCurve(std::vector<CurveStep> steps)
    : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].width <= 0.0) throw std::invalid_argument("step width must be positive");
    if (i > 0 && steps_[i].height < steps_[i - 1].height)
      throw std::invalid_argument("step heights must be non-decreasing");
    total_clicks_ += steps_[i].width;
    total_cost_ += steps_[i].cost;
  }
}

double ClickPriceCurve::height_at(double r) const {
  if (r <= 0.0 || steps_.empty()) return 0.0;
  double cum = 0.0;
  double tol = 1e-9 * std::max(1.0, total_clicks_);
  for (const CurveStep& s : steps_) {
    cum += s.width;
    if (cum >= r - tol) return s.height;
  }
  return steps_.back().height;
}

ClickPriceCurve build_curve(const OmegaSolution& omega) {
  std::vector<CurveStep> steps;
  steps.reserve(omega.allocations.size() + 1);
  for (const auto& a : omega.allocations) {
    if (a.traffic <= 0.0) continue;
    steps.push_back({a.traffic, static_cast<double>(a.cost) / a.traffic, a.cost});
  }
  if (omega.piece && omega.piece->traffic > 0.0) {
    steps.push_back({omega.piece->traffic, omega.piece->price, omega.piece->cost});
  }
  std::sort(steps.begin(), steps.end(), [](const CurveStep& a, const CurveStep& b) {
    return a.height < b.height;
  });
  std::vector<CurveStep> merged;
  for (const CurveStep& s : steps) {
    if (!merged.empty() && merged.back().height == s.height) {
      merged.back().width += s.width;
      merged.back().cost += s.cost;
    } else {
      merged.push_back(s);
    }
  }
  return ClickPriceCurve(std::move(merged));
}

UniformStrategy half_strategy(const Instance& inst, Money budget) {
  OmegaSolution omega = omega_bound(inst, budget);
  UniformStrategy out;
  out.kind = UniformStrategy::Kind::single_bid;
  if (omega.clicks <= 0.0) {
    out.atoms = {{0, 1.0}};
    return out;
  }
  ClickPriceCurve curve = build_curve(omega);
  double r = omega.clicks / 2.0;
  Money bid = std::llround(curve.height_at(r));
  EvalResult won = evaluate(inst, uniform_bids(inst, bid));
  if (won.traffic < r)
    throw std::runtime_error("curve guarantee violated by landscape rounding");
  double p = r / won.traffic;
  out.atoms = {{bid, p}, {0, 1.0 - p}};
  out.traffic = r;
  out.spend = p * static_cast<double>(won.spend);
  return out;
}

MixedStrategy one_minus_inv_e_strategy(const Instance& inst, Money budget,
                                       int atoms) {
  if (atoms < 2) throw std::invalid_argument("atoms must be at least 2");
  OmegaSolution omega = omega_bound(inst, budget);
  MixedStrategy out;
  if (omega.clicks <= 0.0) {
    out.atoms.emplace_back(uniform_bids(inst, 0), 1.0);
    return out;
  }
  ClickPriceCurve curve = build_curve(omega);
  double zero_mass = 0.0;
  for (int k = 0; k < atoms; ++k) {
    double r = omega.clicks * std::exp(-1.0 + static_cast<double>(k) / atoms);
    Money bid = std::llround(curve.height_at(r));
    EvalResult won = evaluate(inst, uniform_bids(inst, bid));
    if (won.traffic < r)
      throw std::runtime_error("curve guarantee violated by landscape rounding");
    double p = r / won.traffic;
    out.atoms.emplace_back(uniform_bids(inst, bid), p / atoms);
    zero_mass += (1.0 - p) / atoms;
  }
  out.atoms.emplace_back(uniform_bids(inst, 0), zero_mass);
  return out;
}

double worst_case_curve(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("r must lie in [0, 1]");
  constexpr double e = std::numbers::e;
  if (r < 1.0 / e) return 0.0;
  return (e - 1.0 / r) / (e - 2.0);
}

}  // namespace bidscape
