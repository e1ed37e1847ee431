#include "bidscape/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "bidscape/money.hpp"

namespace bidscape {

namespace {

std::string knm(std::size_t i) { return "k" + std::to_string(i); }
std::string qnm(std::size_t i) { return "q" + std::to_string(i); }

}  // namespace

TightInstance build_tight_instance(const CurveSpec& spec) {
  if (!spec.f) throw std::invalid_argument("curve function is required");
  if (!(spec.clicks > 0.0 && spec.clicks <= 1.0))
    throw std::invalid_argument("curve clicks must lie in (0, 1]");
  if (!(spec.slack > 0.0)) throw std::invalid_argument("slack must be positive");

  const double C = spec.clicks;
  const double fC = spec.f(C);
  if (fC < 0.0 || spec.f(0.0) < 0.0)
    throw std::invalid_argument("curve must be nonnegative");
  const double eps = spec.slack / (C + fC);

  // March the grid: advance until either the clicks axis or the price axis
  // moves by eps, whichever comes first.
  std::vector<double> raw;
  double r = 0.0;
  double fr = spec.f(0.0);
  const std::size_t cap =
      static_cast<std::size_t>(10.0 * (C + fC - spec.f(0.0)) / eps) + 100;
  while (r < C - 1e-12) {
    double next = std::min(r + eps, C);
    double fn = spec.f(next);
    if (fn < fr - 1e-12) throw std::invalid_argument("curve must be non-decreasing");
    if (fn > fr + eps) {
      double lo = r, hi = next;
      for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        (spec.f(mid) > fr + eps ? hi : lo) = mid;
      }
      next = hi;
      fn = spec.f(next);
    }
    raw.push_back(next);
    r = next;
    fr = fn;
    if (raw.size() > cap) throw std::runtime_error("curve grid failed to converge");
  }
  if (raw.empty() || raw.back() < C) raw.push_back(C);

  // Grid points whose price rounds to the same micro value are
  // indistinguishable to any bid; keep only the rightmost of each run.
  TightInstance out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Money p = std::llround(spec.f(raw[i]) * static_cast<double>(kMicro));
    if (!out.price.empty() && out.price.back() == p) {
      out.grid.back() = raw[i];
    } else {
      out.grid.push_back(raw[i]);
      out.price.push_back(p);
    }
  }

  const std::size_t m = out.grid.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double delta = out.grid[i] - (i == 0 ? 0.0 : out.grid[i - 1]);
    std::vector<Slot> slots;
    slots.reserve(m - i);
    for (std::size_t j = m; j-- > i;) slots.push_back({out.price[j], delta});
    out.inst.add_keyword(knm(i));
    out.inst.add_query(qnm(i), 1.0, SlotTable(std::move(slots)));
    out.inst.add_edge(i, i);
    out.budget += std::llround(delta * static_cast<double>(out.price[i]));
  }
  out.inst.set_budget(out.budget);
  out.clicks = out.grid.back();
  return out;
}

SingleBidTight tight_single_bid_instance(double alpha, Money eps) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1]");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Money high = std::llround(static_cast<double>(kMicro) / alpha);
  if (eps >= high) throw std::invalid_argument("eps must undercut the top bid");

  SingleBidTight out;
  out.inst.add_keyword("u");
  out.inst.add_keyword("v");
  out.inst.add_query("x", 1.0, SlotTable({{high, alpha}, {eps, alpha}}));
  out.inst.add_query("y", 1.0, SlotTable({{high, alpha}}));
  out.inst.add_edge(0, 0);
  out.inst.add_edge(1, 1);
  out.budget = kMicro + std::llround(alpha * static_cast<double>(eps));
  out.inst.set_budget(out.budget);
  out.optimal = 2.0 * alpha;
  return out;
}

VcInstance from_vertex_cover(const VcGraph& h, std::size_t k_star, Money eps) {
  if (h.n == 0) throw std::invalid_argument("graph must have vertices");
  if (k_star < 1 || k_star > h.n) throw std::invalid_argument("bad cover size");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  for (auto [u, v] : h.edges)
    if (u >= h.n || v >= h.n || u == v)
      throw std::invalid_argument("malformed edge");
  const std::size_t ne = h.edges.size();
  if (ne > 0 && eps > kMicro / static_cast<Money>(ne * ne))
    throw std::invalid_argument("eps too coarse for this graph");

  VcInstance out;
  out.eps = eps;
  for (std::size_t v = 0; v < h.n; ++v) out.inst.add_keyword("v" + std::to_string(v));
  for (std::size_t e = 0; e < ne; ++e) {
    const std::size_t q =
        out.inst.add_query("e" + std::to_string(e), 1.0, SlotTable({{kMicro, 1.0}}));
    out.inst.add_edge(h.edges[e].first, q);
    out.inst.add_edge(h.edges[e].second, q);
  }
  for (std::size_t v = 0; v < h.n; ++v) {
    const std::size_t q = out.inst.add_query("s" + std::to_string(v), 1.0,
                                             SlotTable({{kMicro, 1.0}, {eps, 1.0}}));
    out.inst.add_edge(v, q);
  }
  out.budget = static_cast<Money>(h.n - k_star) * eps +
               static_cast<Money>(ne + k_star) * kMicro;
  out.inst.set_budget(out.budget);
  out.threshold = static_cast<double>(ne + h.n);
  return out;
}

CoverageInstance from_max_coverage(const std::vector<std::vector<std::size_t>>& sets,
                                   std::size_t n_elements, std::size_t k_star) {
  if (sets.empty()) throw std::invalid_argument("set system must be nonempty");
  if (n_elements == 0) throw std::invalid_argument("universe must be nonempty");
  if (k_star < 1 || k_star > sets.size())
    throw std::invalid_argument("bad selection size");

  CoverageInstance out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    out.inst.add_keyword("S" + std::to_string(i));
  for (std::size_t j = 0; j < n_elements; ++j) {
    const std::size_t q =
        out.inst.add_query("e" + std::to_string(j), 1.0, SlotTable({{kMicro, 1.0}}));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& s = sets[i];
      if (std::find(s.begin(), s.end(), j) != s.end()) out.inst.add_edge(i, q);
    }
  }
  // Budget sinks: n^2 unit-ctr copies stand in for a single ctr-n^2 position.
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (const std::size_t e : sets[i])
      if (e >= n_elements) throw std::invalid_argument("element out of range");
    for (std::size_t c = 0; c < n_elements * n_elements; ++c) {
      const std::size_t q = out.inst.add_query(
          "sink" + std::to_string(i) + "_" + std::to_string(c), 0.0,
          SlotTable({{kMicro, 1.0}}));
      out.inst.add_edge(i, q);
    }
  }
  out.budget = static_cast<Money>(k_star * n_elements * n_elements + n_elements) * kMicro;
  out.inst.set_budget(out.budget);
  return out;
}

Instance random_instance(std::uint64_t seed, std::size_t n_keywords,
                         std::size_t n_queries, std::size_t max_slots,
                         Shape shape) {
  if (n_keywords == 0 || n_queries == 0 || max_slots == 0)
    throw std::invalid_argument("sizes must be positive");

  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
  };

  Instance inst;
  for (std::size_t k = 0; k < n_keywords; ++k) inst.add_keyword(knm(k));
  Money top_total = 0;
  for (std::size_t q = 0; q < n_queries; ++q) {
    const std::size_t ns = 1 + draw(max_slots);
    std::vector<Money> mult;
    while (mult.size() < ns) {
      const Money m = 1 + static_cast<Money>(draw(96));
      if (std::find(mult.begin(), mult.end(), m) == mult.end()) mult.push_back(m);
    }
    std::sort(mult.rbegin(), mult.rend());
    std::vector<double> ctrs(ns);
    for (auto& c : ctrs) c = static_cast<double>(1 + draw(64)) / 64.0;
    std::sort(ctrs.rbegin(), ctrs.rend());
    std::vector<Slot> slots(ns);
    for (std::size_t i = 0; i < ns; ++i) slots[i] = {mult[i] * 64, ctrs[i]};
    inst.add_query(qnm(q), 1.0, SlotTable(std::move(slots)));
    top_total += inst.query(q).landscape.points().back().cost;
  }

  switch (shape) {
    case Shape::matching:
      for (std::size_t i = 0; i < std::min(n_keywords, n_queries); ++i)
        inst.add_edge(i, i);
      break;
    case Shape::nested: {
      std::vector<std::size_t> cut(n_keywords);
      for (auto& t : cut) t = 1 + draw(n_queries);
      std::sort(cut.begin(), cut.end());
      for (std::size_t k = 0; k < n_keywords; ++k)
        for (std::size_t q = 0; q < cut[k]; ++q) inst.add_edge(k, q);
      break;
    }
    case Shape::laminar: {
      std::vector<std::pair<std::size_t, std::size_t>> work{{0, n_queries}};
      for (std::size_t k = 0; k < n_keywords && k < work.size(); ++k) {
        const auto [a, b] = work[k];
        for (std::size_t q = a; q < b; ++q) inst.add_edge(k, q);
        if (b - a >= 3 && draw(2) == 0) {
          const std::size_t c1 = a + 1 + draw(b - a - 2);
          const std::size_t c2 = c1 + 1 + draw(b - c1 - 1);
          work.emplace_back(a, c1);
          work.emplace_back(c1, c2);
          work.emplace_back(c2, b);
        } else if (b - a >= 2) {
          const std::size_t cut = a + 1 + draw(b - a - 1);
          work.emplace_back(a, cut);
          work.emplace_back(cut, b);
        }
      }
      break;
    }
    case Shape::general:
      for (std::size_t q = 0; q < n_queries; ++q) {
        const std::size_t deg = 1 + draw(std::min<std::size_t>(3, n_keywords));
        std::vector<std::size_t> ks;
        while (ks.size() < deg) {
          const std::size_t k = draw(n_keywords);
          if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
        }
        for (std::size_t k : ks) inst.add_edge(k, q);
      }
      break;
  }

  inst.set_budget(top_total / 2);
  return inst;
}

}  // namespace bidscape
