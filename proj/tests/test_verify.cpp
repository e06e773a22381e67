#include <doctest.h>

#include <json.hpp>
#include <set>

#include "twistlab/verify.hpp"

using namespace twistlab;

TEST_CASE("registry has unique named entries") {
  const auto& reg = check_registry();
  CHECK(reg.size() >= 15);
  std::set<std::string> names;
  for (const auto& e : reg) {
    CHECK(names.insert(e.name).second);
    CHECK_FALSE(e.anchor.empty());
    CHECK(static_cast<bool>(e.run));
  }
  CHECK(names.count("not-isom") == 1);
}

TEST_CASE("unknown selector throws") {
  VerifyOptions o;
  o.selector = "no-such-check";
  CHECK_THROWS_AS(run_checks(o), std::invalid_argument);
}

TEST_CASE("single check and deterministic JSON") {
  VerifyOptions o;
  o.selector = "cocycle";
  const auto a = run_checks(o);
  REQUIRE(a.size() == 1);
  CHECK(a[0].status == CheckStatus::pass);
  CHECK(overall(a));
  const auto ja = checks_to_json(a);
  CHECK(ja == checks_to_json(run_checks(o)));
  const auto j = nlohmann::json::parse(ja);
  CHECK(j["overall"] == true);
  CHECK(j["checks"][0]["name"] == "cocycle");
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][0]["assertions"].size() >= 1);
}

TEST_CASE("caps skip checks and skipped checks do not count") {
  VerifyOptions o;
  o.selector = "restricted-iso-rank2";
  const auto r = run_checks(o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == CheckStatus::skipped);
  CHECK(overall(r));
  o.selector = "restricted-dims";
  o.cap_dim = 8;
  CHECK(run_checks(o)[0].status == CheckStatus::skipped);
}

TEST_CASE("the known red assertion") {
  VerifyOptions o;
  o.selector = "not-isom";
  const auto r = run_checks(o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == CheckStatus::fail);
  CHECK_FALSE(overall(r));
  int failing = 0;
  for (const auto& a : r[0].results) failing += !a.ok;
  CHECK(failing == 1);
}
