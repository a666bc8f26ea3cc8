#include <doctest.h>

#include <set>
#include <sstream>

#include "phasekit/verify.hpp"

using namespace phasekit;

TEST_CASE("suite structure and known-exact rows at a small size") {
  RunConfig rc;
  rc.truncation = TruncationConfig(64, 4);
  rc.quad = 256;
  std::vector<CheckResult> results = run_verify_suite(rc);
  CHECK(results.size() >= 40);

  std::set<std::string> ids;
  for (const auto& r : results) {
    CHECK(ids.insert(r.check_id).second);  // unique ids
    CHECK(!r.identity.empty());
  }

  auto find = [&](const std::string& id) -> const CheckResult& {
    for (const auto& r : results)
      if (r.check_id == id) return r;
    static CheckResult missing;
    FAIL("missing check ", id);
    return missing;
  };

  // size-independent exact identities hold even on the coarse grid
  for (const char* id : {"trig_identity", "moment_fractions", "uniform_limit_identity",
                         "pb_divergence", "sg_commutator_defect", "quarter_cos2phi",
                         "full_period", "coupling_ratio"}) {
    const CheckResult& r = find(id);
    CHECK_MESSAGE(r.pass, "expected pass: ", id);
    CHECK(r.measured == 0.0);
  }
  CHECK(find("eigen_relation").pass);
  CHECK(find("resolution_identity").pass);
}

TEST_CASE("tolerance overrides take effect") {
  RunConfig rc;
  rc.truncation = TruncationConfig(64, 4);
  rc.quad = 256;
  rc.tolerance_overrides["trig_identity"] = 42.0;
  std::vector<CheckResult> results = run_verify_suite(rc);
  for (const auto& r : results)
    if (r.check_id == "trig_identity") CHECK(r.tolerance == 42.0);
}

TEST_CASE("report writers") {
  std::vector<CheckResult> rows = {
      {"alpha", "a = b, exactly", 0.0, 0.0, true},
      {"beta", "c <= d", 0.25, 0.1, false},
  };
  std::ostringstream csv;
  write_checks_csv(csv, rows);
  CHECK(csv.str() ==
        "check_id,identity,measured,tolerance,pass\n"
        "alpha,a = b; exactly,0,0,true\n"
        "beta,c <= d,0.25,0.10000000000000001,false\n");

  std::ostringstream json;
  write_checks_json(json, rows);
  CHECK(json.str().find("\"check_id\": \"alpha\"") != std::string::npos);
  CHECK(json.str().find("\"pass\": false") != std::string::npos);
  CHECK(all_pass(rows) == false);
  rows.pop_back();
  CHECK(all_pass(rows) == true);
}

TEST_CASE("float formatting is 17 significant digits") {
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(format_g17(1.0) == "1");
  CHECK(format_g17(-0.25) == "-0.25");
}
