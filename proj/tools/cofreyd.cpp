#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cofreyd/suite.hpp"

using namespace cofreyd;

namespace {

int emit(const Json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalgebras, comodules and Freyd categories with exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out, field_spec, orders_spec = "1";
  std::uint64_t seed = 1;
  app.add_option("--out", out, "Write the report to this file");
  app.add_option("--seed", seed, "Seed for sampled checks");

  auto* check = app.add_subcommand("check", "Validate a coalgebra file and its comodules");
  std::vector<std::string> check_files;
  check->add_option("files", check_files)->required()->check(CLI::ExistingFile);

  auto* example = app.add_subcommand("example", "Run the battery for a named example");
  std::string example_name;
  example->add_option("name", example_name)->required();
  example->add_option("--orders", orders_spec, "a..b, a,b,c or n");
  example->add_option("--field", field_spec, "Q or Fp:<p>");

  auto* freyd = app.add_subcommand("freyd", "Freyd category computations on a file");
  std::string freyd_sub, freyd_file;
  freyd->add_option("sub", freyd_sub)->required()->check(
      CLI::IsMember({"zero-morphism", "zero-object", "complete", "m2-equiv"}));
  freyd->add_option("file", freyd_file)->required()->check(CLI::ExistingFile);

  auto* probe = app.add_subcommand("probe", "Injective growth on both sides and the simple-module oracle");
  std::string probe_example = "H";
  probe->add_option("--example", probe_example);
  probe->add_option("--orders", orders_spec);
  probe->add_option("--field", field_spec);

  auto* oracle = app.add_subcommand("oracle", "Brute-force simple modules of a functor ring");
  std::string family_file;
  std::uint64_t prime = 101;
  oracle->add_option("--family", family_file)->check(CLI::ExistingFile);
  oracle->add_option("--p", prime);

  auto* build = app.add_subcommand("build", "Emit a named example coalgebra as JSON");
  std::string build_name;
  std::size_t build_order = 1;
  build->add_option("name", build_name)->required();
  build->add_option("--order", build_order);
  build->add_option("--field", field_spec);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.orders = parse_orders(orders_spec);
    Report rep;
    if (*check) {
      cfg.command = "check";
      cfg.inputs = check_files;
      rep = check_file(cfg);
    } else if (*example) {
      cfg.command = "example";
      cfg.field = Field::parse(field_spec.empty() ? "Q" : field_spec);
      rep = run_example_suite(example_name, cfg);
    } else if (*freyd) {
      cfg.command = "freyd";
      cfg.inputs = {freyd_file};
      rep = freyd_command(freyd_sub, cfg);
    } else if (*probe) {
      cfg.command = "probe";
      cfg.field = Field::parse(field_spec.empty() ? "F101" : field_spec);
      rep = probe_command(probe_example, cfg);
    } else if (*oracle) {
      cfg.command = "oracle";
      cfg.orders.clear();
      cfg.field = Field::prime(prime);
      if (!family_file.empty()) cfg.inputs = {family_file};
      rep = oracle_command(cfg);
    } else if (*build) {
      const Field f = Field::parse(field_spec.empty() ? "Q" : field_spec);
      CoalgebraPtr c;
      if (build_name == "matrix2-of-incidence")
        c = std::make_shared<const Coalgebra>(matrix2_coalgebra(incidence_chain(build_order, f)));
      else
        c = build_named_example(build_name, build_order, f);
      return emit(Json{{"coalgebra", to_json(*c)}, {"comodules", Json::array()}}, out);
    }
    if (const int rc = emit(rep.to_json(), out)) return rc;
    return rep.failed() ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
}
