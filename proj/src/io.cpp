#include "bidscape/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bidscape {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["keywords"] = ordered_json::array();
  for (std::size_t k = 0; k < inst.n_keywords(); ++k)
    j["keywords"].push_back(inst.keyword_id(k));
  j["queries"] = ordered_json::array();
  for (std::size_t q = 0; q < inst.n_queries(); ++q) {
    const Query& query = inst.query(q);
    ordered_json jq;
    jq["id"] = query.id;
    jq["weight"] = query.weight;
    jq["slots"] = ordered_json::array();
    for (const Slot& s : query.slots.slots())
      jq["slots"].push_back({{"bid", s.bid}, {"ctr", s.ctr}});
    j["queries"].push_back(std::move(jq));
  }
  j["edges"] = ordered_json::array();
  for (std::size_t k = 0; k < inst.n_keywords(); ++k)
    for (std::size_t q : inst.keyword_queries(k))
      j["edges"].push_back({k, q});
  if (inst.budget()) j["budget"] = *inst.budget();
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    Instance inst;
    for (const auto& k : j.at("keywords")) inst.add_keyword(k.get<std::string>());
    for (const auto& jq : j.at("queries")) {
      std::vector<Slot> slots;
      for (const auto& js : jq.at("slots"))
        slots.push_back({js.at("bid").get<Money>(), js.at("ctr").get<double>()});
      inst.add_query(jq.at("id").get<std::string>(),
                     jq.at("weight").get<double>(), SlotTable(std::move(slots)));
    }
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        inst.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    if (j.contains("budget")) inst.set_budget(j.at("budget").get<Money>());
    return inst;
  } catch (const nlohmann::json::exception& e) {
    // Semantic violations (duplicate ids, bad edges) surface unchanged as
    // invalid_argument; only malformed or mis-shaped JSON is rebranded.
    throw std::runtime_error(std::string("bad instance JSON: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

// Doubles in plot files must survive a read-back round trip.
void full_precision(std::ostream& os) {
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
}

}  // namespace

void write_curve_csv(std::ostream& os, const ClickPriceCurve& curve) {
  full_precision(os);
  os << "cumulative_clicks,height_micro,step_cost_micro\n";
  double r = 0.0;
  for (const CurveStep& s : curve.steps()) {
    r += s.width;
    os << r << ',' << s.height << ',' << s.cost << '\n';
  }
}

void write_hull_csv(std::ostream& os, const std::vector<HullPoint>& hull) {
  full_precision(os);
  os << "bid_micro,cost_micro,clicks\n";
  for (const HullPoint& p : hull)
    os << p.bid << ',' << p.cost << ',' << p.clicks << '\n';
}

void write_lp_curve_csv(std::ostream& os, const std::vector<double>& r,
                        const std::vector<double>& h) {
  if (r.size() != h.size()) throw std::invalid_argument("curve column mismatch");
  full_precision(os);
  os << "r,h\n";
  for (std::size_t i = 0; i < r.size(); ++i) os << r[i] << ',' << h[i] << '\n';
}

void write_lp_mixture_csv(std::ostream& os,
                          const std::vector<std::pair<double, double>>& atoms) {
  full_precision(os);
  os << "r,probability\n";
  for (const auto& [r, p] : atoms) os << r << ',' << p << '\n';
}

}  // namespace bidscape
