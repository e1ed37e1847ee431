#include "bidscape/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bidscape {

std::size_t Instance::add_keyword(std::string id) {
  if (keyword_by_id_.count(id)) throw std::invalid_argument("duplicate keyword id: " + id);
  std::size_t idx = keyword_ids_.size();
  keyword_by_id_.emplace(id, idx);
  keyword_ids_.push_back(std::move(id));
  keyword_adj_.emplace_back();
  return idx;
}

std::size_t Instance::add_query(std::string id, double weight, SlotTable slots) {
  if (query_by_id_.count(id)) throw std::invalid_argument("duplicate query id: " + id);
  if (!(weight >= 0.0)) throw std::invalid_argument("query weight must be non-negative");
  std::size_t idx = queries_.size();
  query_by_id_.emplace(id, idx);
  Landscape ls = landscape_from_slots(slots);
  queries_.push_back({std::move(id), weight, std::move(slots), std::move(ls)});
  query_adj_.emplace_back();
  return idx;
}

void Instance::add_edge(std::size_t keyword, std::size_t query) {
  if (keyword >= n_keywords() || query >= n_queries())
    throw std::invalid_argument("edge endpoint out of range");
  auto& kq = keyword_adj_[keyword];
  auto it = std::lower_bound(kq.begin(), kq.end(), query);
  if (it != kq.end() && *it == query) throw std::invalid_argument("duplicate edge");
  kq.insert(it, query);
  auto& qk = query_adj_[query];
  qk.insert(std::lower_bound(qk.begin(), qk.end(), keyword), keyword);
}

std::optional<std::size_t> Instance::keyword_index(const std::string& id) const {
  auto it = keyword_by_id_.find(id);
  if (it == keyword_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::query_index(const std::string& id) const {
  auto it = query_by_id_.find(id);
  if (it == query_by_id_.end()) return std::nullopt;
  return it->second;
}

Money effective_bid(const Instance& inst, const BidVector& bids, std::size_t q) {
  Money best = 0;
  for (std::size_t k : inst.query_keywords(q)) best = std::max(best, bids[k]);
  return best;
}

BidVector uniform_bids(const Instance& inst, Money bid) {
  return BidVector(inst.n_keywords(), bid);
}

namespace {

EvalResult reduce_outcomes(const Instance& inst, const std::vector<LandscapePoint>& per) {
  EvalResult r;
  for (std::size_t q = 0; q < per.size(); ++q) {
    r.spend += per[q].cost;
    r.traffic += inst.query(q).weight * per[q].clicks;
  }
  return r;
}

}  // namespace

EvalResult evaluate(const Instance& inst, const BidVector& bids) {
  if (bids.size() != inst.n_keywords())
    throw std::invalid_argument("bid vector size mismatch");
  const std::size_t nq = inst.n_queries();
  std::vector<LandscapePoint> per(nq);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(nq); ++q) {
    per[q] = inst.query(q).landscape.outcome_at(effective_bid(inst, bids, q));
  }
  return reduce_outcomes(inst, per);
}

EvalResult evaluate_serial(const Instance& inst, const BidVector& bids) {
  if (bids.size() != inst.n_keywords())
    throw std::invalid_argument("bid vector size mismatch");
  const std::size_t nq = inst.n_queries();
  std::vector<LandscapePoint> per(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    per[q] = inst.query(q).landscape.outcome_at(effective_bid(inst, bids, q));
  }
  return reduce_outcomes(inst, per);
}

MixedEval evaluate_mixed(const Instance& inst, const MixedStrategy& strategy) {
  double total_w = 0.0;
  MixedEval out;
  for (const auto& [bids, w] : strategy.atoms) {
    if (w < 0.0) throw std::invalid_argument("negative atom weight");
    total_w += w;
    EvalResult r = evaluate(inst, bids);
    out.spend += w * static_cast<double>(r.spend);
    out.traffic += w * r.traffic;
  }
  if (std::abs(total_w - 1.0) > 1e-9)
    throw std::invalid_argument("strategy weights must sum to one");
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

}  // namespace

StructureReport analyze_structure(const Instance& inst) {
  StructureReport rep;
  const std::size_t nk = inst.n_keywords();
  const std::size_t nq = inst.n_queries();

  for (std::size_t q = 0; q < nq; ++q)
    if (inst.query_keywords(q).empty()) rep.uncovered_queries.push_back(inst.query(q).id);
  for (std::size_t k = 0; k < nk; ++k)
    if (inst.keyword_queries(k).empty()) rep.empty_keywords.push_back(inst.keyword_id(k));

  rep.is_matching = true;
  for (std::size_t k = 0; k < nk && rep.is_matching; ++k)
    if (inst.keyword_queries(k).size() > 1) rep.is_matching = false;
  for (std::size_t q = 0; q < nq && rep.is_matching; ++q)
    if (inst.query_keywords(q).size() > 1) rep.is_matching = false;

  // Union of stars: every connected component is a tree with at most one
  // node of degree above one. Queries are offset behind keywords.
  UnionFind uf(nk + nq);
  std::size_t n_edges = 0;
  for (std::size_t k = 0; k < nk; ++k) {
    n_edges += inst.keyword_queries(k).size();
    for (std::size_t q : inst.keyword_queries(k)) uf.unite(k, nk + q);
  }
  std::vector<std::size_t> comp_nodes(nk + nq, 0), comp_edges(nk + nq, 0),
      comp_hubs(nk + nq, 0);
  for (std::size_t v = 0; v < nk + nq; ++v) ++comp_nodes[uf.find(v)];
  for (std::size_t k = 0; k < nk; ++k) {
    comp_edges[uf.find(k)] += inst.keyword_queries(k).size();
    if (inst.keyword_queries(k).size() > 1) ++comp_hubs[uf.find(k)];
  }
  for (std::size_t q = 0; q < nq; ++q)
    if (inst.query_keywords(q).size() > 1) ++comp_hubs[uf.find(nk + q)];
  rep.is_star_union = true;
  for (std::size_t v = 0; v < nk + nq; ++v) {
    if (uf.find(v) != v) continue;
    if (comp_edges[v] + 1 != comp_nodes[v] || comp_hubs[v] > 1) {
      rep.is_star_union = false;
      break;
    }
  }

  // Nested: non-empty neighborhoods form a single inclusion chain.
  std::vector<std::size_t> nonempty;
  for (std::size_t k = 0; k < nk; ++k)
    if (!inst.keyword_queries(k).empty()) nonempty.push_back(k);
  std::vector<std::size_t> order = nonempty;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto sa = inst.keyword_queries(a).size(), sb = inst.keyword_queries(b).size();
    return sa != sb ? sa < sb : a < b;
  });
  rep.is_nested = true;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!subset_of(inst.keyword_queries(order[i]), inst.keyword_queries(order[i + 1]))) {
      rep.is_nested = false;
      break;
    }
  }
  if (rep.is_nested) rep.nested_order = order;

  rep.is_laminar = true;
  for (std::size_t i = 0; i < nonempty.size() && rep.is_laminar; ++i) {
    for (std::size_t j = i + 1; j < nonempty.size(); ++j) {
      const auto& a = inst.keyword_queries(nonempty[i]);
      const auto& b = inst.keyword_queries(nonempty[j]);
      if (!disjoint(a, b) && !subset_of(a, b) && !subset_of(b, a)) {
        rep.is_laminar = false;
        break;
      }
    }
  }
  if (rep.is_laminar) {
    rep.laminar_parent.assign(nk, -1);
    for (std::size_t k = 0; k < nk; ++k) {
      const auto& set_k = inst.keyword_queries(k);
      if (set_k.empty()) continue;
      std::ptrdiff_t equal_rep = -1, min_super = -1;
      for (std::size_t j = 0; j < nk; ++j) {
        if (j == k || inst.keyword_queries(j).empty()) continue;
        const auto& set_j = inst.keyword_queries(j);
        if (!subset_of(set_k, set_j)) continue;
        if (set_j.size() == set_k.size()) {
          // Equal neighborhoods collapse onto the lowest index.
          if (j < k && equal_rep < 0) equal_rep = j;
        } else if (min_super < 0 ||
                   set_j.size() < inst.keyword_queries(min_super).size()) {
          min_super = j;
        }
      }
      rep.laminar_parent[k] = equal_rep >= 0 ? equal_rep : min_super;
    }
  }
  return rep;
}

}  // namespace bidscape
