#include <doctest.h>

#include "kwmod/json_io.hpp"

using namespace kwmod;
using nlohmann::json;

namespace {

PartitionPair pair(std::vector<int> r, std::vector<int> q) {
  return {validate_partition(r), validate_partition(q)};
}

} // namespace

TEST_SUITE("reporting") {

TEST_CASE("supermatrix serializes boxes as b<k> and <k>") {
  AlgebraContext ctx(4, 3, 5, AlgebraKind::gl);
  SuperMatrix e = nilpotent_e(ctx, pair({3, 1}, {2, 1}));
  json doc = to_json(e);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 3);
  json want = json::array({{{"row", "b1"}, {"col", "b2"}, {"val", 1}},
                           {{"row", "b2"}, {"col", "b3"}, {"val", 1}},
                           {{"row", "1"}, {"col", "2"}, {"val", 1}}});
  CHECK(doc == want);
}

TEST_CASE("verification report JSON shape") {
  AlgebraContext ctx(4, 3, 5, AlgebraKind::gl);
  VerificationReport rep = verify_nilpotent_instance(ctx, pair({3, 1}, {2, 1}));
  json doc = to_json(rep);
  CHECK(doc["schema"] == 1);
  CHECK(doc["instance"]["m"] == 4);
  CHECK(doc["instance"]["n"] == 3);
  CHECK(doc["instance"]["p"] == 5);
  CHECK(doc["instance"]["kind"] == "gl");
  CHECK(doc["instance"]["r"] == json::array({3, 1}));
  CHECK(doc["instance"]["q"] == json::array({2, 1}));
  CHECK(doc["checks"]["dynkin_1_injective"] == "pass");
  CHECK(doc["checks"]["induced_dim_equals_kw_bound"] == "pass");
  CHECK(doc["kw_bound"]["p_exp"] == 7);
  CHECK(doc["kw_bound"]["two_exp"] == 7);
}

TEST_CASE("skipped sl instances are recorded") {
  SweepInstance inst{4, 1, 3, AlgebraKind::sl, pair({1, 1, 1, 1}, {1})};
  VerificationReport rep = verify_sweep_instance(inst);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].first == "instance_constructible");
  CHECK(rep.checks[0].second.status == CheckStatus::skipped);
  json doc = to_json(rep);
  CHECK(doc["checks"]["instance_constructible"] == "skipped: p | m-n");
}

TEST_CASE("sweep config validation") {
  SweepConfig bad;
  bad.max_size = 0;
  bool typed = false;
  try {
    run_sweep(bad);
  } catch (const error& e) {
    typed = e.code() == errc::invalid_bound;
  }
  CHECK(typed);

  SweepConfig badp;
  badp.primes = {4};
  CHECK_THROWS_AS(run_sweep(badp), error);
}

TEST_CASE("small sweep passes and serializes") {
  SweepConfig cfg;
  cfg.max_size = 2;
  cfg.primes = {3, 5};
  cfg.levi_random = 1;
  cfg.seed = 11;
  SweepResult result = run_sweep(cfg);
  CHECK(result.failures() == 0);
  CHECK(result.instances() > 0);
  CHECK(!result.levi_reports.empty());

  json doc = to_json(result);
  CHECK(doc["schema"] == 1);
  CHECK(doc["config"]["max_size"] == 2);
  CHECK(doc["summary"]["failures"] == 0);
  CHECK(doc["reports"].is_array());
  CHECK(doc["levi_reports"].is_array());
  CHECK(doc["summary"]["instances"] == result.instances());
}

TEST_CASE("sweep is deterministic and thread count does not matter") {
  SweepConfig cfg;
  cfg.max_size = 2;
  cfg.primes = {3};
  cfg.levi_random = 2;
  cfg.seed = 5;
  SweepResult a = run_sweep(cfg);
  SweepResult b = run_sweep(cfg);
  cfg.threads = 4;
  SweepResult c = run_sweep(cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a).dump() == to_json(c).dump());
}

TEST_CASE("levi report carries the notes") {
  AlgebraContext ctx(1, 1, 3, AlgebraKind::gl);
  SemisimplePart s{{0}, {1}};
  VerificationReport rep = check_levi_identities(ctx, s, {});
  json doc = to_json(rep);
  CHECK(doc.contains("notes"));
  CHECK(doc["notes"].contains("morita"));
}

} // TEST_SUITE
