#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trda/audit.hpp"
#include "trda/bench.hpp"

using namespace trda;

namespace {

CampaignSpec tiny_spec() {
  CampaignSpec spec;
  spec.variants = {Variant::LMQN, Variant::ILMQN_A};
  spec.epsilons = {1e-3};
  spec.problems = {"tridia", "rosenbr"};
  spec.replicates = 2;
  spec.seed_base = 42;
  spec.workers = 2;
  return spec;
}

RunRecord make_run(const std::string& problem, Variant v, double eps, int rep,
                   bool success, int its, double costf, double costg) {
  RunRecord r;
  r.problem = problem;
  r.variant = v;
  r.epsilon = eps;
  r.replicate = rep;
  r.status = success ? Status::Converged : Status::IterLimit;
  r.success = success;
  r.iterations = its;
  r.costf = costf;
  r.costg = costg;
  return r;
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("md") == OutFormat::Markdown);
  CHECK(parse_format("Markdown") == OutFormat::Markdown);
  CHECK(parse_format("CSV") == OutFormat::Csv);
  CHECK(parse_format("json") == OutFormat::Json);
  CHECK_FALSE(parse_format("yaml").has_value());
}

TEST_CASE("spec validation") {
  CampaignSpec spec = tiny_spec();
  CHECK_NOTHROW(spec.validate());
  spec.epsilons = {2.0};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec();
  spec.replicates = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec();
  spec.problems = {"tridia", "unobtainium"};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = tiny_spec();
  spec.problems.clear();
  CHECK(spec.resolved_problems().size() == 42);
}

TEST_CASE("seed derivation is stable and sensitive to every field") {
  std::uint64_t s = derive_seed(42, "tridia", Variant::LMQN, 1e-3, 0);
  CHECK(s == derive_seed(42, "tridia", Variant::LMQN, 1e-3, 0));
  std::set<std::uint64_t> seen{s};
  CHECK(seen.insert(derive_seed(43, "tridia", Variant::LMQN, 1e-3, 0)).second);
  CHECK(seen.insert(derive_seed(42, "rosenbr", Variant::LMQN, 1e-3, 0)).second);
  CHECK(seen.insert(derive_seed(42, "tridia", Variant::ILMQN_A, 1e-3, 0)).second);
  CHECK(seen.insert(derive_seed(42, "tridia", Variant::LMQN, 1e-5, 0)).second);
  CHECK(seen.insert(derive_seed(42, "tridia", Variant::LMQN, 1e-3, 1)).second);
}

TEST_CASE("campaign produces one record per cell") {
  CampaignSpec spec = tiny_spec();
  spec.variants = {Variant::LMQN};
  spec.replicates = 3;
  std::vector<RunRecord> recs = run_campaign(spec);
  CHECK(recs.size() == 6);  // 1 variant x 1 eps x 2 problems x 3 replicates
  std::set<std::pair<std::string, int>> cells;
  for (const RunRecord& r : recs) {
    cells.insert({r.problem, r.replicate});
    CHECK(r.epsilon == 1e-3);
    CHECK(r.variant == Variant::LMQN);
    CHECK(r.costf > 0.0);
    CHECK(r.seed == derive_seed(42, r.problem, r.variant, r.epsilon, r.replicate));
  }
  CHECK(cells.size() == 6);
}

TEST_CASE("campaigns with one seed base are reproducible byte for byte") {
  CampaignSpec spec = tiny_spec();
  auto rows1 = aggregate(run_campaign(spec));
  auto rows2 = aggregate(run_campaign(spec));
  CHECK(rows1 == rows2);
  CHECK(emit(rows1, OutFormat::Csv) == emit(rows2, OutFormat::Csv));
  CHECK(emit(rows1, OutFormat::Json) == emit(rows2, OutFormat::Json));

  // worker count must not change results, only scheduling
  spec.workers = 1;
  auto rows3 = aggregate(run_campaign(spec));
  CHECK(emit(rows1, OutFormat::Csv) == emit(rows3, OutFormat::Csv));
}

TEST_CASE("aggregate means and majority rule") {
  std::vector<RunRecord> recs;
  // all replicates solve it: counted, means over the successes
  for (int rep = 0; rep < 4; ++rep)
    recs.push_back(make_run("a", Variant::LMQN, 1e-3, rep, true, 10, 11.0, 11.0));
  // half solve it: still counted
  recs.push_back(make_run("b", Variant::LMQN, 1e-3, 0, true, 20, 21.0, 21.0));
  recs.push_back(make_run("b", Variant::LMQN, 1e-3, 1, false, 1000, 99.0, 99.0));
  // one of four solves it: dropped
  recs.push_back(make_run("c", Variant::LMQN, 1e-3, 0, true, 5, 6.0, 6.0));
  for (int rep = 1; rep < 4; ++rep)
    recs.push_back(make_run("c", Variant::LMQN, 1e-3, rep, false, 1000, 9.0, 9.0));

  auto rows = aggregate(recs);
  REQUIRE(rows.size() == 1);
  const AggregateRow& r = rows[0];
  CHECK(r.variant == Variant::LMQN);
  CHECK(r.nsucc == 2);
  CHECK(r.mean_its == doctest::Approx(15.0));    // (10 + 20) / 2
  CHECK(r.mean_costf == doctest::Approx(16.0));  // (11 + 21) / 2
  CHECK_FALSE(r.rel_its.has_value());            // baseline row carries no ratios
  CHECK_FALSE(r.rel_costf.has_value());
  CHECK_FALSE(r.rel_costg.has_value());
}

TEST_CASE("relative columns use the jointly solved intersection") {
  std::vector<RunRecord> recs;
  // baseline solves a (costf 10) but not b
  recs.push_back(make_run("a", Variant::LMQN, 1e-3, 0, true, 10, 10.0, 10.0));
  recs.push_back(make_run("b", Variant::LMQN, 1e-3, 0, false, 1000, 50.0, 50.0));
  // variant solves both; b must not leak into the ratios
  recs.push_back(make_run("a", Variant::ILMQN_A, 1e-3, 0, true, 20, 5.0, 2.5));
  recs.push_back(make_run("b", Variant::ILMQN_A, 1e-3, 0, true, 30, 100.0, 100.0));

  auto rows = aggregate(recs);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].variant == Variant::LMQN);
  const AggregateRow& v = rows[1];
  CHECK(v.variant == Variant::ILMQN_A);
  CHECK(v.nsucc == 2);
  // plain means cover both problems, ratios only the shared one
  CHECK(v.mean_costf == doctest::Approx(52.5));
  REQUIRE(v.rel_its.has_value());
  CHECK(*v.rel_its == doctest::Approx(2.0));
  CHECK(*v.rel_costf == doctest::Approx(0.5));
  CHECK(*v.rel_costg == doctest::Approx(0.25));
}

TEST_CASE("a variant compared against itself sits at ratio one") {
  CampaignSpec spec = tiny_spec();
  spec.variants = {Variant::LMQN};
  std::vector<RunRecord> recs = run_campaign(spec);
  // clone the baseline records under a different variant label
  std::vector<RunRecord> both = recs;
  for (RunRecord r : recs) {
    r.variant = Variant::ILMQN_B;
    both.push_back(r);
  }
  auto rows = aggregate(both);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[1].rel_its.has_value());
  CHECK(*rows[1].rel_its == doctest::Approx(1.0));
  CHECK(*rows[1].rel_costf == doctest::Approx(1.0));
  CHECK(*rows[1].rel_costg == doctest::Approx(1.0));
}

TEST_CASE("rows order by target then variant") {
  std::vector<RunRecord> recs;
  for (double eps : {1e-5, 1e-3})
    for (Variant v : {Variant::ILMQN_A, Variant::LMQN})
      recs.push_back(make_run("a", v, eps, 0, true, 10, 10.0, 10.0));
  auto rows = aggregate(recs);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].epsilon == 1e-3);
  CHECK(rows[0].variant == Variant::LMQN);
  CHECK(rows[1].epsilon == 1e-3);
  CHECK(rows[1].variant == Variant::ILMQN_A);
  CHECK(rows[2].epsilon == 1e-5);
}

TEST_CASE("csv output round-trips") {
  CampaignSpec spec = tiny_spec();
  auto rows = aggregate(run_campaign(spec));
  std::string csv = emit(rows, OutFormat::Csv);
  auto parsed = parse_csv(csv);
  CHECK(parsed == rows);
  CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("eps,variant\n1e-3,LMQN,1,2\n"), std::invalid_argument);
}

TEST_CASE("markdown table shape") {
  std::vector<RunRecord> recs;
  recs.push_back(make_run("a", Variant::LMQN, 1e-3, 0, true, 10, 11.0, 12.0));
  recs.push_back(make_run("a", Variant::ILMQN_A, 1e-3, 0, true, 12, 6.0, 3.0));
  std::string md = emit(aggregate(recs), OutFormat::Markdown);

  std::istringstream in(md);
  std::string header, rule, base_row, var_row;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, rule));
  REQUIRE(std::getline(in, base_row));
  REQUIRE(std::getline(in, var_row));
  for (const char* col : {"eps", "variant", "nsucc", "its.", "costf", "costg",
                          "rel. its.", "rel. costf", "rel. costg"})
    CHECK(header.find(col) != std::string::npos);
  CHECK(base_row.find("LMQN") != std::string::npos);
  // baseline rel cells are blank: nothing but spaces between the last pipes
  auto tail = base_row.substr(base_row.find("12.00"));
  CHECK(tail.find("|  |  |  |") != std::string::npos);
  CHECK(var_row.find("iLMQN-a") != std::string::npos);
  CHECK(var_row.find("0.25") != std::string::npos);  // rel_costg 3/12
}

TEST_CASE("json output carries rows and figure panels") {
  CampaignSpec spec = tiny_spec();
  auto rows = aggregate(run_campaign(spec));
  std::string text = emit(rows, OutFormat::Json);
  auto j = nlohmann::json::parse(text);

  REQUIRE(j.contains("rows"));
  CHECK(j["rows"].size() == rows.size());
  CHECK(j["rows"][0]["variant"] == "LMQN");
  CHECK(j["rows"][0]["rel_costf"].is_null());

  REQUIRE(j.contains("figures"));
  for (const char* panel : {"success_ratio", "rel_its", "rel_costf", "rel_costg"}) {
    CAPTURE(panel);
    REQUIRE(j["figures"].contains(panel));
    CHECK_FALSE(j["figures"][panel].contains("LMQN"));
    REQUIRE(j["figures"][panel].contains("iLMQN-a"));
    CHECK(j["figures"][panel]["iLMQN-a"].size() == spec.epsilons.size());
    CHECK(j["figures"][panel]["iLMQN-a"][0].contains("eps"));
    CHECK(j["figures"][panel]["iLMQN-a"][0].contains("value"));
  }
}

TEST_CASE("empty inputs are usage errors") {
  CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
  CHECK_THROWS_AS(emit({}, OutFormat::Csv), std::invalid_argument);
}

TEST_CASE("traces replay cleanly through the audit") {
  CampaignSpec spec = tiny_spec();
  std::ostringstream sink;
  TraceWriter writer(sink);
  std::vector<RunRecord> recs = run_campaign(spec, &writer);
  REQUIRE(recs.size() == 8);

  std::istringstream in(sink.str());
  AuditReport rep = audit_theory(in, spec.base);
  CHECK(rep.runs == 8);
  CHECK(rep.mono_violations == 0);
  CHECK(rep.partition_violations == 0);
  CHECK(rep.chain_violations == 0);
  CHECK_FALSE(rep.failed());
  // both problems are small, so iterates are embedded and the constants are
  // measurable on every run
  CHECK(rep.floor_runs == 8);
  CHECK(rep.floor_held == 8);
  CHECK(rep.budget_runs == 8);
  CHECK(rep.budget_succ_held == 8);
  CHECK(rep.budget_total_held == 8);
  CHECK(rep.max_kappa_h > 0.0);
  CHECK(rep.max_kappa_grad > 0.0);
  CHECK(rep.to_text().find("audit clean") != std::string::npos);

  std::istringstream empty("");
  CHECK_THROWS_AS(audit_theory(empty, spec.base), std::invalid_argument);
  std::istringstream garbage("not json\n");
  CHECK_THROWS_AS(audit_theory(garbage, spec.base), std::invalid_argument);
}

TEST_CASE("trace lines are grouped json with the run key") {
  CampaignSpec spec = tiny_spec();
  spec.variants = {Variant::ILMQN_A};
  spec.problems = {"rosenbr"};
  spec.replicates = 1;
  std::ostringstream sink;
  TraceWriter writer(sink);
  run_campaign(spec, &writer);

  std::istringstream in(sink.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["problem"] == "rosenbr");
    CHECK(j["variant"] == "iLMQN-a");
    CHECK(j["k"] == lines);
    CHECK(j.contains("delta"));
    CHECK(j.contains("rho"));
    CHECK(j.contains("f_tiers"));
    CHECK(j["x"].size() == 2);  // small problem, iterate embedded
    ++lines;
  }
  CHECK(lines > 0);
}
