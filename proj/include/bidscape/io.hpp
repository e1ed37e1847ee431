#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bidscape/clickprice.hpp"
#include "bidscape/graph.hpp"
#include "bidscape/landscape.hpp"

namespace bidscape {

// Instance JSON: {"keywords": [...], "queries": [{"id", "weight", "slots":
// [{"bid", "ctr"}]}], "edges": [[k, q]], "budget": micro}. Bids and budget
// are integer micro-units; serialization round-trips bit-exactly.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// CSV exports, one header row each.
void write_curve_csv(std::ostream& os, const ClickPriceCurve& curve);
void write_hull_csv(std::ostream& os, const std::vector<HullPoint>& hull);
void write_lp_curve_csv(std::ostream& os, const std::vector<double>& r,
                        const std::vector<double>& h);
void write_lp_mixture_csv(std::ostream& os,
                          const std::vector<std::pair<double, double>>& atoms);

}  // namespace bidscape
