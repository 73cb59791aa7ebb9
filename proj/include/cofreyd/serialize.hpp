#pragma once

#include <string>
#include <vector>

#include "cofreyd/functor_ring.hpp"
#include "json.hpp"

namespace cofreyd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "cofreyd.report/1";
inline constexpr const char* kCoalgebraSchema = "cofreyd.coalgebra/1";
inline constexpr const char* kComoduleSchema = "cofreyd.comodule/1";
inline constexpr const char* kFreydSchema = "cofreyd.freyd-object/1";

/// Document that does not match the expected shape; `path` points into it (JSON pointer).
class SchemaError : public ParseError {
 public:
  SchemaError(std::string path, const std::string& what) : ParseError(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

Json scalar_to_json(const Field& f, const Scalar& s);
Scalar scalar_from_json(const Field& f, const Json& j, const std::string& path);

/// {"rows", "cols", "entries": [[i, j, "s"], ...]} with nonzero entries only.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, const std::string& path = "");

/// {"field", "dim", "labels", "delta": [[k, i, j, "c"], ...], "epsilon": ["e", ...]}.
Json to_json(const Coalgebra& c);
Coalgebra coalgebra_from_json(const Json& j, const std::string& path = "");

/// {"name", "side", "dim", "coaction": [[s, t, k, "r"], ...]}.
Json to_json(const Comodule& m);
ComodulePtr comodule_from_json(const Json& j, const CoalgebraPtr& parent, const std::string& path = "");

/// {"flavor", "M", "u", "N"}.
Json to_json(const FreydObject& o);
FreydObject freyd_object_from_json(const Json& j, const CoalgebraPtr& parent, const std::string& path = "");

Json to_json(const ProbeReport& p);
Json to_json(const FpModule& x);

enum class Status { Pass, Fail, Finding };
const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  Json data = Json::object();
};

/// Report with checks sorted by name on output.
struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<Check> checks;

  void add(std::string name, bool ok, Json data = Json::object());
  void add_finding(std::string name, Json data = Json::object());
  bool failed() const;
  Json to_json() const;
};

Json read_json_file(const std::string& path);

}  // namespace cofreyd
