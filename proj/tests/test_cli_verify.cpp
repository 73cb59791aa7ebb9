#include <filesystem>
#include <fstream>

#include "cofreyd/suite.hpp"
#include "doctest.h"

using namespace cofreyd;

namespace {

std::string write_temp(const std::string& name, const Json& doc) {
  const auto dir = std::filesystem::temp_directory_path() / "cofreyd_unit";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  std::ofstream(path) << doc.dump(2);
  return path;
}

std::string schema_error_path(const Json& doc) {
  try {
    coalgebra_from_json(doc, "/coalgebra");
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "";
}

const Json* find_check(const Json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("reports sort checks and count statuses") {
  Report r;
  r.command = "unit";
  r.add("b", true);
  r.add("a", false, Json{{"x", 1}});
  r.add_finding("c");
  CHECK(r.failed());
  const Json j = r.to_json();
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["checks"][0]["name"] == "a");
  CHECK(j["checks"][0]["status"] == "fail");
  CHECK(j["checks"][1]["status"] == "pass");
  CHECK(j["checks"][2]["status"] == "finding");
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["finding"] == 1);
  Report ok;
  ok.add_finding("only");
  CHECK(!ok.failed());
}

TEST_CASE("JSON round trips") {
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    Matrix m = Matrix::from_ints(f, {{1, 0, -2}, {0, 3, 0}});
    if (!f.is_prime_field()) m.set(1, 1, Scalar(-5, 7));
    CHECK(matrix_from_json(f, to_json(m)) == m);

    const Coalgebra h = h_coalgebra(2, f);
    const Json hj = to_json(h);
    CHECK(hj["schema"] == kCoalgebraSchema);
    CHECK(coalgebra_from_json(hj) == h);

    const auto c = std::make_shared<const Coalgebra>(h);
    for (const Side side : {Side::Left, Side::Right}) {
      const auto reg = regular_comodule(c, side);
      const auto back = comodule_from_json(to_json(*reg), c);
      CHECK(back->side() == side);
      CHECK(back->actions() == reg->actions());
    }

    const auto fam = loewy_family(std::make_shared<const Coalgebra>(incidence_chain(1, f)), Side::Right);
    const auto hom = hom_space(fam[0], fam[1]);
    REQUIRE(hom.dim() == 1);
    const FreydObject o = make_freyd_object(fam[0], fam[1], hom.basis[0], Flavor::A);
    const FreydObject ob = freyd_object_from_json(to_json(o), fam[0]->parent());
    CHECK(ob.flavor == Flavor::A);
    CHECK(ob.u == o.u);
    CHECK(ob.m->actions() == o.m->actions());
    CHECK(ob.n->actions() == o.n->actions());
  }
}

TEST_CASE("schema errors carry a JSON pointer") {
  const Json good = to_json(incidence_chain(1));
  Json missing = good;
  missing.erase("epsilon");
  CHECK(schema_error_path(missing) == "/coalgebra/epsilon");
  Json bad_field = good;
  bad_field["field"] = "R";
  CHECK(schema_error_path(bad_field) == "/coalgebra/field");
  Json bad_term = good;
  bad_term["delta"][1] = Json::array({0, 1});
  CHECK(schema_error_path(bad_term) == "/coalgebra/delta/1");
  Json out_of_range = good;
  out_of_range["delta"][0] = Json::array({0, 9, 0, "1"});
  CHECK(schema_error_path(out_of_range) == "/coalgebra/delta/0");
  Json short_labels = good;
  short_labels["labels"].erase(0);
  CHECK(schema_error_path(short_labels) == "/coalgebra/labels");
  CHECK(schema_error_path(good).empty());
}

TEST_CASE("check_file validates coalgebra and comodules") {
  const auto c = std::make_shared<const Coalgebra>(incidence_chain(2));
  const auto reg = regular_comodule(c, Side::Right);
  Json doc{{"coalgebra", to_json(*c)}, {"comodules", Json::array({to_json(*reg)})}};
  RunConfig cfg;
  cfg.command = "check";
  cfg.inputs = {write_temp("good.json", doc)};
  Report r = check_file(cfg);
  CHECK(!r.failed());
  Json j = r.to_json();
  CHECK(find_check(j, cfg.inputs[0] + ":coalgebra") != nullptr);
  CHECK(find_check(j, cfg.inputs[0] + ":comodule000") != nullptr);

  Json broken = doc;
  broken["coalgebra"]["epsilon"][0] = "0";
  cfg.inputs = {write_temp("broken.json", broken)};
  r = check_file(cfg);
  CHECK(r.failed());
  j = r.to_json();
  const Json* cc = find_check(j, cfg.inputs[0] + ":coalgebra");
  REQUIRE(cc != nullptr);
  CHECK((*cc)["status"] == "fail");
  CHECK(!(*cc)["data"]["defect_locations"].empty());

  Json empty = doc;
  empty["comodules"] = Json::array();
  cfg.inputs = {write_temp("empty.json", empty)};
  r = check_file(cfg);
  CHECK(!r.failed());
  CHECK(r.checks.size() == 1);
}

TEST_CASE("order specifications") {
  CHECK(parse_orders("3") == std::vector<std::size_t>{3});
  CHECK(parse_orders("1..4") == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(parse_orders("2,5,7") == std::vector<std::size_t>{2, 5, 7});
  CHECK_THROWS_AS(parse_orders("4..1"), ParseError);
  CHECK_THROWS_AS(parse_orders("x"), ParseError);
}

TEST_CASE("suite entry points") {
  RunConfig cfg;
  cfg.command = "example";
  cfg.orders = {1};
  CHECK_THROWS_AS(run_example_suite("nope", cfg), Error);
  for (const auto& name : example_names()) {
    const Report r = run_example_suite(name, cfg);
    CHECK_MESSAGE(!r.failed(), name);
  }
  cfg.field = Field::prime(5);
  CHECK_THROWS_AS(probe_command("H", cfg), CharacteristicTooSmall);
  cfg.field = Field::rationals();
  CHECK_THROWS_AS(oracle_command(cfg), Error);
}

TEST_CASE("H_1 records the filtration discrepancy as a finding") {
  RunConfig cfg;
  cfg.command = "example";
  cfg.orders = {1};
  const Json j = run_example_suite("H", cfg).to_json();
  const Json* f = find_check(j, "d01.coradical_filtration.term1_vs_stated");
  REQUIRE(f != nullptr);
  CHECK((*f)["status"] == "finding");
  CHECK((*f)["data"]["computed_dim"] == 4);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  RunConfig cfg;
  cfg.command = "example";
  cfg.orders = {1, 2};
  cfg.seed = 99;
  CHECK(run_example_suite("incidence-chain", cfg).to_json() == run_example_suite("incidence-chain", cfg).to_json());
  cfg.command = "probe";
  cfg.field = Field::prime(101);
  cfg.orders = {1, 2};
  CHECK(probe_command("H", cfg).to_json() == probe_command("H", cfg).to_json());
}
