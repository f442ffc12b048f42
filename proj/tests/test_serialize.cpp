#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stein/error.hpp"
#include "stein/serialize.hpp"
#include "stein/symmetric_group.hpp"

using namespace stein;

namespace {

void round_trips(const Json& j) {
  std::string once = dump(j);
  CHECK(dump(Json::parse(once)) == once);
}

}  // namespace

TEST_CASE("json output round-trips byte for byte") {
  round_trips(to_json(character_ratio_spectrum(6, Partition({2, 1, 1, 1, 1}))));
  round_trips(to_json(hypercube_pipeline(17, BoundVariant::hypbound1)));
  round_trips(to_json(hamming_pipeline(9, 4, BoundVariant::rinrot)));
  round_trips(to_json(scaling_sweep(BoundVariant::limgroup, 2, 6, 8)));
  round_trips(to_json(group_walk(5, Partition({3, 1, 1}), 3)));
  auto k = group_chain(4, Partition({3, 1}));
  round_trips(to_json(audit(k, kerov_statistic(4, Partition({2, 1, 1})).w), k));
  round_trips(to_json(run_suite("chains", VerifyOptions{"hamming", std::nullopt, 3, 3, std::nullopt})));
}

TEST_CASE("exact fields are p/q strings") {
  auto j = to_json(w_distribution(kerov_statistic(3, Partition({2, 1}))));
  CHECK(j["atoms"][0]["value"] == "-1/1*sqrt(3)");
  CHECK(j["atoms"][0]["probability"] == "1/6");
  CHECK(j["atoms"][1]["value"] == "0/1");
  auto b = to_json(hypercube_pipeline(4, BoundVariant::hypbound1));
  CHECK(b["bound"]["stats"]["a"] == "1/2");
  CHECK(b["bound"]["terms"][0]["radicand"] == "0/1");
}

TEST_CASE("csv layout") {
  auto rows = scaling_sweep(BoundVariant::hypbound2, 0, 4, 5);
  std::string csv = to_csv(rows);
  CHECK(csv.rfind("n,term1,term2,total,total_n_quarter,term1_n_half,kolmogorov,dominated\n", 0) == 0);
  CHECK(csv.find("\n4,") != std::string::npos);
  std::string walk = to_csv(group_walk(3, Partition({2, 1}), 2));
  CHECK(walk == "label,p\n(3),2/3\n\"(2,1)\",0/1\n\"(1,1,1)\",1/3\n");
}

TEST_CASE("relation files") {
  Json rows = Json::parse(R"({"relations": [[[1,0],[0,1]], [[0,1],[1,0]]]})");
  auto rel = parse_relations(rows);
  REQUIRE(rel.size() == 2);
  CHECK(rel[1](0, 1) == 1);
  Json flat = Json::parse(R"({"relations": [[1,0,0,1], [0,1,1,0]]})");
  CHECK(parse_relations(flat)[1](1, 0) == 1);
  CHECK_THROWS_AS(parse_relations(Json::parse(R"({"rel": []})")), ValidationError);
  CHECK_THROWS_AS(parse_relations(Json::parse(R"({"relations": [[1,0,0]]})")), ValidationError);
  CHECK_THROWS_AS(parse_relations(Json::parse(R"({"relations": [[2,0,0,1]]})")), ValidationError);
  CHECK_THROWS_AS(parse_relations(Json::parse(R"({"relations": [[1,0,0,1],[1]]})")), ValidationError);
}
