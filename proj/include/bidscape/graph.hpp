#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bidscape/landscape.hpp"
#include "bidscape/money.hpp"

namespace bidscape {

struct Query {
  std::string id;
  double weight = 1.0;
  SlotTable slots;
  Landscape landscape;
};

// Keyword-query instance: a bipartite graph between bidable keywords and the
// queries they match, a slot table per query, and an optional budget. Query
// weights scale traffic only; money totals are unweighted.
class Instance {
 public:
  std::size_t add_keyword(std::string id);
  std::size_t add_query(std::string id, double weight, SlotTable slots);
  void add_edge(std::size_t keyword, std::size_t query);

  std::size_t n_keywords() const { return keyword_ids_.size(); }
  std::size_t n_queries() const { return queries_.size(); }

  const std::string& keyword_id(std::size_t k) const { return keyword_ids_[k]; }
  const Query& query(std::size_t q) const { return queries_[q]; }

  std::optional<std::size_t> keyword_index(const std::string& id) const;
  std::optional<std::size_t> query_index(const std::string& id) const;

  // Adjacency, sorted ascending.
  const std::vector<std::size_t>& keyword_queries(std::size_t k) const {
    return keyword_adj_[k];
  }
  const std::vector<std::size_t>& query_keywords(std::size_t q) const {
    return query_adj_[q];
  }

  void set_budget(Money b) { budget_ = b; }
  const std::optional<Money>& budget() const { return budget_; }

 private:
  std::vector<std::string> keyword_ids_;
  std::vector<Query> queries_;
  std::vector<std::vector<std::size_t>> keyword_adj_;
  std::vector<std::vector<std::size_t>> query_adj_;
  std::unordered_map<std::string, std::size_t> keyword_by_id_;
  std::unordered_map<std::string, std::size_t> query_by_id_;
  std::optional<Money> budget_;
};

// One bid per keyword, indexed like Instance keywords.
using BidVector = std::vector<Money>;

// A query sees the maximum bid over its adjacent keywords.
Money effective_bid(const Instance& inst, const BidVector& bids, std::size_t q);

BidVector uniform_bids(const Instance& inst, Money bid);

struct EvalResult {
  Money spend = 0;
  double traffic = 0.0;
};

// Deterministic outcome of one bid vector. The OpenMP variant fills per-query
// outcomes in parallel and reduces in index order, so both versions agree
// bit for bit.
EvalResult evaluate(const Instance& inst, const BidVector& bids);
EvalResult evaluate_serial(const Instance& inst, const BidVector& bids);

struct MixedStrategy {
  std::vector<std::pair<BidVector, double>> atoms;
};

struct MixedEval {
  double spend = 0.0;  // expected, micro-units
  double traffic = 0.0;
};

MixedEval evaluate_mixed(const Instance& inst, const MixedStrategy& strategy);

// Graph-shape facts used to route instances to the structured solvers.
struct StructureReport {
  bool is_matching = false;
  bool is_star_union = false;
  bool is_nested = false;
  bool is_laminar = false;
  std::vector<std::string> uncovered_queries;
  std::vector<std::string> empty_keywords;
  // Keyword indices ordered by neighborhood inclusion, innermost first
  // (meaningful when is_nested).
  std::vector<std::size_t> nested_order;
  // Forest certificate (meaningful when is_laminar): for each keyword the
  // keyword whose query set minimally contains it, or -1 at a root. Equal
  // neighborhoods chain to their lowest-index representative.
  std::vector<std::ptrdiff_t> laminar_parent;
};

StructureReport analyze_structure(const Instance& inst);

}  // namespace bidscape
