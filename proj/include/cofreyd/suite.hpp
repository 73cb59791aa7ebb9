#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cofreyd/serialize.hpp"

namespace cofreyd {

struct RunConfig {
  std::string command;
  Field field = Field::rationals();
  std::vector<std::string> inputs;
  std::vector<std::size_t> orders;
  std::uint64_t seed = 1;
};

/// "a..b", "a,b,c" or "n".
std::vector<std::size_t> parse_orders(const std::string& spec);
Json config_json(const RunConfig& cfg);

/// Example names accepted by run_example_suite.
const std::vector<std::string>& example_names();

/// File with {"coalgebra": {...}, "comodules": [...]}; every object is validated.
Report check_file(const RunConfig& cfg);
/// Full battery for one named example across the configured orders.
Report run_example_suite(const std::string& name, const RunConfig& cfg);
/// Symmetry probe plus the oracle comparison on the C_[0,1] family.
Report probe_command(const std::string& builder, const RunConfig& cfg);
/// Oracle on a family file {"coalgebra", "family": [...]} or on the C_[0,1] family.
Report oracle_command(const RunConfig& cfg);
/// zero-morphism, zero-object, complete, m2-equiv on a file with "coalgebra" and
/// "object" or "map" {"source", "target", "f", "g"}.
Report freyd_command(const std::string& sub, const RunConfig& cfg);

/// Random Freyd objects over a pool built from the family and pairwise sums.
std::vector<ComodulePtr> freyd_pool(const std::vector<ComodulePtr>& family);

}  // namespace cofreyd
