#include <chrono>
#include <cstdio>
#include <random>

#include "bidscape/graph.hpp"
#include "bidscape/instances.hpp"
#include "bidscape/oracle.hpp"
#include "bidscape/parallel.hpp"

using namespace bidscape;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   x%.2f   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              agree ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  apply_thread_cap();
  std::printf("workers: %d\n", worker_count());

  {
    const Instance inst = random_instance(11, 40, 60000, 6, Shape::general);
    std::mt19937_64 rng(7);
    BidVector bids(inst.n_keywords());
    for (auto& b : bids) b = static_cast<Money>(64 * (1 + rng() % 96));

    EvalResult a{}, b{};
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 50; ++i) a = evaluate_serial(inst, bids);
    const double serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 50; ++i) b = evaluate(inst, bids);
    const double parallel = ms_since(t0);
    report("evaluate", serial, parallel,
           a.spend == b.spend && a.traffic == b.traffic);
  }

  {
    const Instance inst = random_instance(12, 6, 8, 4, Shape::general);
    GridSpec grid;
    for (Money m = 0; m <= 9; ++m) grid.bid_levels.push_back(m * 640);
    const Money budget = *inst.budget();

    auto t0 = std::chrono::steady_clock::now();
    const OracleResult a = brute_force_deterministic_serial(inst, budget, grid);
    const double serial = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    const OracleResult b = brute_force_deterministic(inst, budget, grid);
    const double parallel = ms_since(t0);
    report("oracle enumeration", serial, parallel,
           a.bids == b.bids && a.spend == b.spend && a.traffic == b.traffic);
  }
  return 0;
}
