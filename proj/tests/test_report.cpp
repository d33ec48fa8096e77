#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "sweff/errors.hpp"
#include "sweff/report.hpp"

using namespace sweff;
using namespace sweff::testing;

TEST_CASE("check reports match the worked examples") {
  const auto P1 = p1();
  const auto r1 = run_check(P1, lot(P1, "a:1/2 b:1/2"));
  CHECK(r1.efficiency.ex_post);
  CHECK(r1.efficiency.sd_efficient);
  CHECK(r1.efficiency.interesting);
  CHECK_FALSE(r1.efficiency.sw_efficient);
  CHECK(r1.efficiency.sw_dominating_support == AlternativeSet{0});

  const auto P3 = p3();
  const auto r3 = run_check(P3, lot(P3, "a:1/2 b:1/2"));
  CHECK(r3.efficiency.sw_efficient);
  CHECK_FALSE(r3.efficiency.degenerate);

  const auto P2 = p2();
  const auto r2 = run_check(P2, lot(P2, "a:1/2 b:1/2"));
  CHECK_FALSE(r2.efficiency.ex_post);
  CHECK_FALSE(r2.efficiency.sd_efficient);
  CHECK(r2.efficiency.sd_witness);
  CHECK_FALSE(r2.efficiency.sw_efficient);
}

TEST_CASE("reports round-trip through JSON and re-audit clean") {
  const char* cases[][2] = {
      {"1: a > b\n2: b > a\n", "a:1/2 b:1/2"},
      {"1: a > b\n2: a > b\n", "a:1/3 b:2/3"},
      {"1: a ~ b > c\n2: a ~ b > c\n", "a:1/2 b:1/2"},
      {"1: a > b > c\n2: c > b > a\n3: b > a ~ c\n", "a:1/6 b:1/2 c:1/3"},
  };
  for (const auto& [profile_text, lottery_text] : cases) {
    const auto profile = parse_profile(profile_text);
    const auto report = run_check(profile, parse_lottery(lottery_text, profile),
                                  {kDefaultEnumerationCap, ConsistencyMode::Strict});
    const auto json = to_json(report);
    const auto back = report_from_json(json);
    CHECK(back.profile == report.profile);
    CHECK(back.lottery == report.lottery);
    CHECK(back.consistency == ConsistencyMode::Strict);
    CHECK(back.efficiency.sw_efficient == report.efficiency.sw_efficient);
    CHECK(back.efficiency.sd_witness == report.efficiency.sd_witness);
    CHECK(back.efficiency.sw_strict_witness == report.efficiency.sw_strict_witness);
    CHECK(back.efficiency.separating_utilities == report.efficiency.separating_utilities);
    CHECK(audit_report(back.efficiency, back.lottery, back.profile, back.consistency).empty());
    CHECK(to_json(back) == json);
  }
}

TEST_CASE("schema fields") {
  const auto P1 = p1();
  const auto doc = nlohmann::json::parse(to_json(run_check(P1, lot(P1, "a:1/2 b:1/2"))));
  CHECK(doc["schema"] == std::string(kReportSchema));
  CHECK(doc["instance"]["lottery"]["a"] == "1/2");
  CHECK(doc["conventions"]["consistency"] == "weak");
  CHECK(doc["efficiency"]["sw_efficient"] == false);
  CHECK(doc["efficiency"]["sw_efficient_by_enumeration"] == false);
  CHECK(doc["witnesses"]["sw_dominating_support"] == nlohmann::json::array({"a"}));
}

TEST_CASE("tampered reports are caught") {
  const auto P1 = p1();
  auto doc = nlohmann::json::parse(to_json(run_check(P1, lot(P1, "a:1/2 b:1/2"))));
  auto flipped = doc;
  flipped["efficiency"]["sd_efficient"] = false;
  const auto back = report_from_json(flipped.dump());
  CHECK_FALSE(audit_report(back.efficiency, back.lottery, back.profile).empty());

  auto bad_schema = doc;
  bad_schema["schema"] = "other/9";
  CHECK_THROWS_AS(report_from_json(bad_schema.dump()), ValidationError);
  CHECK_THROWS_AS(report_from_json("{"), ValidationError);
  auto bad_number = doc;
  bad_number["instance"]["lottery"]["a"] = "x/2";
  CHECK_THROWS_AS(report_from_json(bad_number.dump()), ValidationError);
}

TEST_CASE("enumeration is skipped above the cap") {
  const auto P1 = p1();
  const auto report = run_check(P1, lot(P1, "a:1"), {1, ConsistencyMode::Weak});
  CHECK_FALSE(report.efficiency.sw_efficient_by_enumeration);
  CHECK(report.efficiency.sw_efficient);
  CHECK(to_text(report).find("SW") != std::string::npos);
}
