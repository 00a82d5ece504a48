#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "grptopo/cache.hpp"
#include "grptopo/report.hpp"
#include "grptopo/verify.hpp"

using namespace grptopo;

TEST_CASE("cache keys and storage") {
  std::string k1 = cache_key("groupA", "comp1");
  CHECK(k1 == cache_key("groupA", "comp1"));  // stable
  CHECK(k1 != cache_key("groupA", "comp2"));
  CHECK(k1 != cache_key("groupB", "comp1"));

  CacheConfig cfg;
  cfg.dir = "grptopo_test_cache";
  std::filesystem::remove_all(cfg.dir);
  CHECK_FALSE(cache_get(cfg, k1).has_value());
  cache_put(cfg, k1, "payload");
  auto back = cache_get(cfg, k1);
  REQUIRE(back.has_value());
  CHECK(*back == "payload");

  CacheConfig off;
  off.dir = cfg.dir;
  off.enabled = false;
  CHECK_FALSE(cache_get(off, k1).has_value());
  std::filesystem::remove_all(cfg.dir);
}

TEST_CASE("reports are deterministic across cache states") {
  ReportRequest req;
  req.group_spec = "sym:3";
  req.homology_coset = true;
  req.homology_subgroup = true;
  req.predict_coset = true;
  req.predict_subgroup = true;
  req.zeta = true;
  req.bounds = true;
  req.verify = true;
  req.cache.dir = "grptopo_test_cache2";
  std::filesystem::remove_all(req.cache.dir);

  std::string cold = compute_report_json(req);
  std::string warm = compute_report_json(req);
  CHECK(cold == warm);
  CHECK(cold.find("\"schema\": 1") != std::string::npos);
  CHECK(cold.find("\"identity_holds\": true") != std::string::npos);
  CHECK(cold.find("\"coset_prediction_matches\": true") != std::string::npos);

  ReportRequest nocache = req;
  nocache.cache.enabled = false;
  CHECK(compute_report_json(nocache) == cold);
  std::filesystem::remove_all(req.cache.dir);
}

TEST_CASE("betti csv export") {
  ReportRequest req;
  req.group_spec = "sym:3";
  req.cache.enabled = false;
  std::string csv = compute_betti_csv(req);
  CHECK(csv.find("poset,dimension,rank") == 0);
  CHECK(csv.find("coset,1,8") != std::string::npos);
  CHECK(csv.find("subgroup,0,3") != std::string::npos);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS(run_suite("bogus"));
  auto checks = run_suite("covers");
  CHECK(!checks.empty());
  CHECK(all_pass(checks));
}
