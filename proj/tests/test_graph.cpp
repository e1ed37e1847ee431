#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "bidscape/graph.hpp"
#include "bidscape/instances.hpp"
#include "fixtures.hpp"

using namespace bidscape;

namespace {

Instance two_keyword_chain() {
  // k0 -> {q0}, k1 -> {q0, q1}: nested neighborhoods.
  Instance inst;
  inst.add_keyword("k0");
  inst.add_keyword("k1");
  inst.add_query("q0", 1.0, SlotTable({{1000000, 0.5}}));
  inst.add_query("q1", 1.0, SlotTable({{500000, 0.25}}));
  inst.add_edge(0, 0);
  inst.add_edge(1, 0);
  inst.add_edge(1, 1);
  return inst;
}

}  // namespace

TEST_CASE("instance construction and adjacency") {
  Instance inst = two_keyword_chain();
  CHECK(inst.n_keywords() == 2);
  CHECK(inst.n_queries() == 2);
  CHECK(inst.keyword_id(0) == "k0");
  CHECK(inst.keyword_index("k1") == 1);
  CHECK(inst.query_index("q1") == 1);
  CHECK_FALSE(inst.keyword_index("missing").has_value());
  CHECK(inst.keyword_queries(0) == std::vector<std::size_t>{0});
  CHECK(inst.keyword_queries(1) == std::vector<std::size_t>{0, 1});
  CHECK(inst.query_keywords(0) == std::vector<std::size_t>{0, 1});
  CHECK(inst.query_keywords(1) == std::vector<std::size_t>{1});
  CHECK_FALSE(inst.budget().has_value());
  inst.set_budget(750000);
  CHECK(inst.budget() == 750000);
}

TEST_CASE("instance validation") {
  Instance inst;
  inst.add_keyword("k");
  inst.add_query("q", 1.0, SlotTable({{100, 0.5}}));
  inst.add_edge(0, 0);
  CHECK_THROWS_AS(inst.add_keyword("k"), std::invalid_argument);
  CHECK_THROWS_AS(inst.add_query("q", 1.0, SlotTable()), std::invalid_argument);
  CHECK_THROWS_AS(inst.add_query("q2", -1.0, SlotTable()), std::invalid_argument);
  CHECK_THROWS_AS(inst.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(inst.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(inst.add_edge(0, 1), std::invalid_argument);
}

TEST_CASE("effective bid is the max over adjacent keywords") {
  Instance inst = two_keyword_chain();
  CHECK(effective_bid(inst, {300000, 200000}, 0) == 300000);
  CHECK(effective_bid(inst, {300000, 400000}, 0) == 400000);
  CHECK(effective_bid(inst, {300000, 200000}, 1) == 200000);
  CHECK(uniform_bids(inst, 77) == BidVector{77, 77});
}

TEST_CASE("evaluate walks every query at its effective bid") {
  Instance inst = two_keyword_chain();
  // q0 costs 500000 at bids >= 1000000; q1 costs 125000 at bids >= 500000.
  EvalResult ev = evaluate(inst, {1000000, 500000});
  CHECK(ev.spend == 625000);
  CHECK(ev.traffic == 0.75);
  ev = evaluate(inst, {0, 500000});
  CHECK(ev.spend == 125000);
  CHECK(ev.traffic == 0.25);
  ev = evaluate(inst, {1000000, 0});
  CHECK(ev.spend == 500000);
  CHECK(ev.traffic == 0.5);
  ev = evaluate(inst, {0, 0});
  CHECK(ev.spend == 0);
  CHECK(ev.traffic == 0.0);
  CHECK_THROWS_AS(evaluate(inst, {0}), std::invalid_argument);
}

TEST_CASE("query weights scale traffic but not money") {
  Instance inst;
  inst.add_keyword("k");
  inst.add_query("q", 0.0, SlotTable({{1000000, 1.0}}));
  inst.add_edge(0, 0);
  EvalResult ev = evaluate(inst, {1000000});
  CHECK(ev.spend == 1000000);
  CHECK(ev.traffic == 0.0);

  Instance heavy;
  heavy.add_keyword("k");
  heavy.add_query("q", 3.0, SlotTable({{1000000, 1.0}}));
  heavy.add_edge(0, 0);
  ev = evaluate(heavy, {1000000});
  CHECK(ev.spend == 1000000);
  CHECK(ev.traffic == 3.0);
}

TEST_CASE("parallel and serial evaluation agree bit for bit") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 20; ++it) {
    Instance inst = random_instance(rng(), 1 + rng() % 6, 1 + rng() % 8, 4,
                                    Shape::general);
    for (int rep = 0; rep < 5; ++rep) {
      BidVector bids(inst.n_keywords());
      for (auto& b : bids) b = 64 * static_cast<Money>(rng() % 100);
      EvalResult a = evaluate(inst, bids);
      EvalResult b = evaluate_serial(inst, bids);
      CHECK(a.spend == b.spend);
      CHECK(a.traffic == b.traffic);
    }
  }
}

TEST_CASE("raising bids never loses traffic or refunds spend") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    Instance inst = random_instance(rng(), 1 + rng() % 4, 1 + rng() % 6, 4,
                                    Shape::general);
    BidVector lo(inst.n_keywords()), hi(inst.n_keywords());
    for (std::size_t k = 0; k < lo.size(); ++k) {
      lo[k] = 64 * static_cast<Money>(rng() % 64);
      hi[k] = lo[k] + 64 * static_cast<Money>(rng() % 64);
    }
    EvalResult a = evaluate(inst, lo);
    EvalResult b = evaluate(inst, hi);
    CHECK(b.traffic >= a.traffic);
    CHECK(b.spend >= a.spend);
  }
}

TEST_CASE("mixed strategies") {
  Instance inst = two_keyword_chain();
  MixedStrategy mix;
  mix.atoms.emplace_back(BidVector{1000000, 500000}, 0.25);
  mix.atoms.emplace_back(BidVector{0, 0}, 0.75);
  MixedEval ev = evaluate_mixed(inst, mix);
  CHECK(ev.spend == doctest::Approx(156250.0));
  CHECK(ev.traffic == doctest::Approx(0.1875));

  MixedStrategy bad;
  bad.atoms.emplace_back(BidVector{0, 0}, 0.5);
  CHECK_THROWS_AS(evaluate_mixed(inst, bad), std::invalid_argument);
  bad.atoms.emplace_back(BidVector{0, 0}, -0.5);
  CHECK_THROWS_AS(evaluate_mixed(inst, bad), std::invalid_argument);
}

TEST_CASE("structure analysis") {
  SUBCASE("matching") {
    StructureReport rep = analyze_structure(fixtures::catalog_instance());
    CHECK(rep.is_matching);
    CHECK(rep.is_star_union);
    CHECK(rep.is_laminar);
    CHECK_FALSE(rep.is_nested);
    CHECK(rep.uncovered_queries.empty());
    CHECK(rep.empty_keywords.empty());
    for (std::ptrdiff_t p : rep.laminar_parent) CHECK(p == -1);
  }

  SUBCASE("keyword-centered star") {
    Instance inst;
    inst.add_keyword("k");
    inst.add_query("q0", 1.0, SlotTable({{100, 0.5}}));
    inst.add_query("q1", 1.0, SlotTable({{100, 0.5}}));
    inst.add_edge(0, 0);
    inst.add_edge(0, 1);
    StructureReport rep = analyze_structure(inst);
    CHECK_FALSE(rep.is_matching);
    CHECK(rep.is_star_union);
    CHECK(rep.is_nested);
    CHECK(rep.is_laminar);
  }

  SUBCASE("query-centered star, equal neighborhoods chain to the lowest index") {
    Instance inst;
    inst.add_keyword("k0");
    inst.add_keyword("k1");
    inst.add_query("q", 1.0, SlotTable({{100, 0.5}}));
    inst.add_edge(0, 0);
    inst.add_edge(1, 0);
    StructureReport rep = analyze_structure(inst);
    CHECK(rep.is_star_union);
    CHECK(rep.is_nested);
    CHECK(rep.is_laminar);
    REQUIRE(rep.laminar_parent.size() == 2);
    CHECK(rep.laminar_parent[0] == -1);
    CHECK(rep.laminar_parent[1] == 0);
  }

  SUBCASE("nested chain") {
    Instance inst;
    inst.add_keyword("k0");
    inst.add_keyword("k1");
    inst.add_keyword("k2");
    for (int q = 0; q < 3; ++q)
      inst.add_query("q" + std::to_string(q), 1.0, SlotTable({{100, 0.5}}));
    inst.add_edge(0, 0);
    inst.add_edge(1, 0);
    inst.add_edge(1, 1);
    inst.add_edge(2, 0);
    inst.add_edge(2, 1);
    inst.add_edge(2, 2);
    StructureReport rep = analyze_structure(inst);
    CHECK(rep.is_nested);
    CHECK(rep.is_laminar);
    CHECK_FALSE(rep.is_matching);
    CHECK(rep.nested_order == std::vector<std::size_t>{0, 1, 2});
    CHECK(rep.laminar_parent == std::vector<std::ptrdiff_t>{1, 2, -1});
  }

  SUBCASE("laminar forest that is not nested") {
    Instance inst;
    inst.add_keyword("k0");
    inst.add_keyword("k1");
    inst.add_keyword("k2");
    inst.add_query("q0", 1.0, SlotTable({{100, 0.5}}));
    inst.add_query("q1", 1.0, SlotTable({{100, 0.5}}));
    inst.add_edge(0, 0);
    inst.add_edge(1, 1);
    inst.add_edge(2, 0);
    inst.add_edge(2, 1);
    StructureReport rep = analyze_structure(inst);
    CHECK(rep.is_laminar);
    CHECK_FALSE(rep.is_nested);
    CHECK(rep.laminar_parent == std::vector<std::ptrdiff_t>{2, 2, -1});
  }

  SUBCASE("crossing neighborhoods are not laminar") {
    Instance inst;
    inst.add_keyword("k0");
    inst.add_keyword("k1");
    for (int q = 0; q < 3; ++q)
      inst.add_query("q" + std::to_string(q), 1.0, SlotTable({{100, 0.5}}));
    inst.add_edge(0, 0);
    inst.add_edge(0, 1);
    inst.add_edge(1, 1);
    inst.add_edge(1, 2);
    StructureReport rep = analyze_structure(inst);
    CHECK_FALSE(rep.is_laminar);
    CHECK_FALSE(rep.is_nested);
    CHECK_FALSE(rep.is_matching);
    CHECK_FALSE(rep.is_star_union);
  }

  SUBCASE("uncovered queries and empty keywords are reported by id") {
    Instance inst;
    inst.add_keyword("used");
    inst.add_keyword("idle");
    inst.add_query("covered", 1.0, SlotTable({{100, 0.5}}));
    inst.add_query("orphan", 1.0, SlotTable({{100, 0.5}}));
    inst.add_edge(0, 0);
    StructureReport rep = analyze_structure(inst);
    CHECK(rep.uncovered_queries == std::vector<std::string>{"orphan"});
    CHECK(rep.empty_keywords == std::vector<std::string>{"idle"});
  }
}

TEST_CASE("random shaped instances satisfy their structure flags") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 10; ++it) {
    std::uint64_t seed = rng();
    CHECK(analyze_structure(random_instance(seed, 3, 3, 3, Shape::matching)).is_matching);
    CHECK(analyze_structure(random_instance(seed, 3, 4, 3, Shape::nested)).is_nested);
    CHECK(analyze_structure(random_instance(seed, 4, 5, 3, Shape::laminar)).is_laminar);
  }
}
