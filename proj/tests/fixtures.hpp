#pragma once

// Hand-written instances shared across the test files.

#include <vector>

#include "bidscape/graph.hpp"
#include "bidscape/landscape.hpp"
#include "bidscape/money.hpp"

namespace bidscape::fixtures {

// Four competing positions: (2.60, .50), (2.00, .45), (1.60, .25), (0.50, .20).
inline SlotTable four_positions() {
  return SlotTable({{2600000, 0.50}, {2000000, 0.45}, {1600000, 0.25}, {500000, 0.20}});
}

inline Instance four_position_instance() {
  Instance inst;
  inst.add_keyword("k");
  inst.add_query("q", 1.0, four_positions());
  inst.add_edge(0, 0);
  return inst;
}

// Fourteen single-click queries in four price groups, one keyword each:
// 5 at $0.10, 4 at $0.25, 2 at $0.50, 3 at $0.666666. The last group sits
// one micro-unit under two thirds so all fourteen together cost $4.499998,
// affordable at a $4.50 budget.
inline Instance catalog_instance() {
  static const std::vector<std::pair<Money, int>> groups = {
      {100000, 5}, {250000, 4}, {500000, 2}, {666666, 3}};
  Instance inst;
  std::size_t n = 0;
  for (const auto& [price, count] : groups) {
    for (int c = 0; c < count; ++c) {
      inst.add_keyword("k" + std::to_string(n));
      inst.add_query("q" + std::to_string(n), 1.0, SlotTable({{price, 1.0}}));
      inst.add_edge(n, n);
      ++n;
    }
  }
  return inst;
}

}  // namespace bidscape::fixtures
