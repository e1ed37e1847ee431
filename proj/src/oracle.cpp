#include "bidscape/oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bidscape {

namespace {

std::uint64_t combination_count(std::size_t levels, std::size_t n, double cap) {
  if (levels == 0) throw std::invalid_argument("empty bid grid");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<double>(total) * static_cast<double>(levels) > cap)
      throw std::length_error("search space exceeds the oracle guard");
    total *= levels;
  }
  return total;
}

void decode(std::uint64_t rank, const std::vector<Money>& levels, BidVector& bids) {
  const std::uint64_t base = levels.size();
  for (std::size_t k = bids.size(); k-- > 0;) {
    bids[k] = levels[static_cast<std::size_t>(rank % base)];
    rank /= base;
  }
}

struct Best {
  double traffic = -1.0;
  std::uint64_t rank = 0;
  Money spend = 0;

  bool improves(const Best& other) const {
    return traffic > other.traffic ||
           (traffic == other.traffic && rank < other.rank);
  }
};

}  // namespace

OracleResult brute_force_deterministic_serial(const Instance& inst, Money budget,
                                              const GridSpec& grid) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  const std::uint64_t total =
      combination_count(grid.bid_levels.size(), inst.n_keywords(), 1e7);

  Best best;
  BidVector bids(inst.n_keywords(), 0);
  for (std::uint64_t r = 0; r < total; ++r) {
    decode(r, grid.bid_levels, bids);
    const EvalResult ev = evaluate(inst, bids);
    if (ev.spend > budget) continue;
    const Best cand{ev.traffic, r, ev.spend};
    if (cand.improves(best)) best = cand;
  }

  OracleResult out;
  out.bids.assign(inst.n_keywords(), 0);
  decode(best.rank, grid.bid_levels, out.bids);
  out.spend = best.spend;
  out.traffic = best.traffic;
  return out;
}

OracleResult brute_force_deterministic(const Instance& inst, Money budget,
                                       const GridSpec& grid) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  const std::uint64_t total =
      combination_count(grid.bid_levels.size(), inst.n_keywords(), 1e7);

  Best best;
#pragma omp parallel
  {
    Best local;
    BidVector bids(inst.n_keywords(), 0);
#pragma omp for schedule(static)
    for (long long r = 0; r < static_cast<long long>(total); ++r) {
      decode(static_cast<std::uint64_t>(r), grid.bid_levels, bids);
      const EvalResult ev = evaluate(inst, bids);
      if (ev.spend > budget) continue;
      const Best cand{ev.traffic, static_cast<std::uint64_t>(r), ev.spend};
      if (cand.improves(local)) local = cand;
    }
#pragma omp critical
    if (local.improves(best)) best = local;
  }

  OracleResult out;
  out.bids.assign(inst.n_keywords(), 0);
  decode(best.rank, grid.bid_levels, out.bids);
  out.spend = best.spend;
  out.traffic = best.traffic;
  return out;
}

RandomizedSolution brute_force_randomized(const Instance& inst, Money budget,
                                          const GridSpec& grid) {
  if (budget < 0) throw std::invalid_argument("budget must be non-negative");
  const std::uint64_t total =
      combination_count(grid.bid_levels.size(), inst.n_keywords(), 1e6);

  std::vector<SweepPoint> pts(total);
#pragma omp parallel
  {
    BidVector bids(inst.n_keywords(), 0);
#pragma omp for schedule(static)
    for (long long r = 0; r < static_cast<long long>(total); ++r) {
      decode(static_cast<std::uint64_t>(r), grid.bid_levels, bids);
      const EvalResult ev = evaluate(inst, bids);
      pts[static_cast<std::size_t>(r)] = {ev.spend, ev.traffic,
                                          static_cast<std::size_t>(r)};
    }
  }

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
  BidVector a(inst.n_keywords(), 0), b(inst.n_keywords(), 0);
  decode(corners[lo].tag, grid.bid_levels, a);
  decode(corners[hi].tag, grid.bid_levels, b);
  if (f <= 0.0) {
    out.spend = static_cast<double>(corners[lo].cost);
    out.strategy.atoms = {{std::move(a), 1.0}};
  } else {
    out.spend = (1.0 - f) * static_cast<double>(corners[lo].cost) +
                f * static_cast<double>(corners[hi].cost);
    out.strategy.atoms = {{std::move(a), 1.0 - f}, {std::move(b), f}};
  }
  return out;
}

}  // namespace bidscape
