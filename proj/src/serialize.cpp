#include "cofreyd/serialize.hpp"

#include <algorithm>
#include <fstream>

namespace cofreyd {

namespace {

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing");
  return *it;
}

std::size_t index_value(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& array_value(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

}  // namespace

Json scalar_to_json(const Field& f, const Scalar& s) { return f.format(s); }

Scalar scalar_from_json(const Field& f, const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return f.reduce(Scalar(j.get<long>()));
    return f.parse_scalar(string_value(j, path));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!Field::is_zero(m(r, c))) entries.push_back(Json::array({r, c, m.field().format(m(r, c))}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Field& f, const Json& j, const std::string& path) {
  const std::size_t rows = index_value(member(j, "rows", path), path + "/rows");
  const std::size_t cols = index_value(member(j, "cols", path), path + "/cols");
  Matrix m(f, rows, cols);
  const std::string ep = path + "/entries";
  const Json& entries = array_value(member(j, "entries", path), ep);
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const Json& t = entries[e];
    if (!t.is_array() || t.size() != 3) throw SchemaError(at(ep, e), "expected [row, col, value]");
    const std::size_t r = index_value(t[0], at(at(ep, e), 0));
    const std::size_t c = index_value(t[1], at(at(ep, e), 1));
    if (r >= rows || c >= cols) throw SchemaError(at(ep, e), "entry outside the matrix");
    m.mut(r, c) = f.add(m(r, c), scalar_from_json(f, t[2], at(at(ep, e), 2)));
  }
  return m;
}

Json to_json(const Coalgebra& c) {
  Json delta = Json::array();
  const auto& tab = c.delta();
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (const auto& t : tab[k]) delta.push_back(Json::array({k, t.i, t.j, c.field().format(t.coef)}));
  Json eps = Json::array();
  for (const auto& e : c.epsilon()) eps.push_back(c.field().format(e));
  return Json{{"schema", kCoalgebraSchema}, {"field", c.field().name()}, {"dim", c.dim()},
              {"labels", c.labels()}, {"delta", delta}, {"epsilon", eps}};
}

Coalgebra coalgebra_from_json(const Json& j, const std::string& path) {
  Field f = Field::rationals();
  try {
    f = Field::parse(string_value(member(j, "field", path), path + "/field"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path + "/field", e.what());
  }
  const std::size_t dim = index_value(member(j, "dim", path), path + "/dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = array_value(j["labels"], path + "/labels");
    for (std::size_t i = 0; i < l.size(); ++i) labels.push_back(string_value(l[i], at(path + "/labels", i)));
    if (labels.size() != dim) throw SchemaError(path + "/labels", "length differs from dim");
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }
  Coalgebra c(f, labels);
  const std::string dp = path + "/delta";
  const Json& delta = array_value(member(j, "delta", path), dp);
  for (std::size_t e = 0; e < delta.size(); ++e) {
    const Json& t = delta[e];
    if (!t.is_array() || t.size() != 4) throw SchemaError(at(dp, e), "expected [k, i, j, coef]");
    const std::size_t k = index_value(t[0], at(at(dp, e), 0));
    const std::size_t a = index_value(t[1], at(at(dp, e), 1));
    const std::size_t b = index_value(t[2], at(at(dp, e), 2));
    if (k >= dim || a >= dim || b >= dim) throw SchemaError(at(dp, e), "index outside the basis");
    c.add_delta(k, a, b, scalar_from_json(f, t[3], at(at(dp, e), 3)));
  }
  const std::string epp = path + "/epsilon";
  const Json& eps = array_value(member(j, "epsilon", path), epp);
  if (eps.size() != dim) throw SchemaError(epp, "length differs from dim");
  for (std::size_t k = 0; k < dim; ++k) c.set_epsilon(k, scalar_from_json(f, eps[k], at(epp, k)));
  return c;
}

Json to_json(const Comodule& m) {
  Json co = Json::array();
  for (const auto& e : m.entries()) co.push_back(Json::array({e.s, e.t, e.k, m.field().format(e.value)}));
  return Json{{"schema", kComoduleSchema}, {"name", m.name()}, {"side", side_name(m.side())}, {"dim", m.dim()},
              {"coaction", co}};
}

ComodulePtr comodule_from_json(const Json& j, const CoalgebraPtr& parent, const std::string& path) {
  const std::string name = j.contains("name") ? string_value(j["name"], path + "/name") : std::string("M");
  Side side = Side::Right;
  try {
    side = side_from_name(string_value(member(j, "side", path), path + "/side"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path + "/side", e.what());
  }
  const std::size_t dim = index_value(member(j, "dim", path), path + "/dim");
  const std::string cp = path + "/coaction";
  const Json& co = array_value(member(j, "coaction", path), cp);
  std::vector<Comodule::Entry> entries;
  for (std::size_t e = 0; e < co.size(); ++e) {
    const Json& t = co[e];
    if (!t.is_array() || t.size() != 4) throw SchemaError(at(cp, e), "expected [s, t, k, coef]");
    const std::size_t s = index_value(t[0], at(at(cp, e), 0));
    const std::size_t tt = index_value(t[1], at(at(cp, e), 1));
    const std::size_t k = index_value(t[2], at(at(cp, e), 2));
    if (s >= dim || tt >= dim || k >= parent->dim()) throw SchemaError(at(cp, e), "index outside range");
    entries.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(tt), static_cast<std::uint32_t>(k),
                       scalar_from_json(parent->field(), t[3], at(at(cp, e), 3))});
  }
  return make_comodule(Comodule::from_entries(parent, side, dim, entries, name));
}

Json to_json(const FreydObject& o) {
  return Json{{"schema", kFreydSchema}, {"flavor", flavor_name(o.flavor)}, {"M", to_json(*o.m)}, {"u", to_json(o.u)},
              {"N", to_json(*o.n)}};
}

FreydObject freyd_object_from_json(const Json& j, const CoalgebraPtr& parent, const std::string& path) {
  Flavor flavor = Flavor::B;
  if (j.contains("flavor")) {
    const std::string f = string_value(j["flavor"], path + "/flavor");
    if (f == "A")
      flavor = Flavor::A;
    else if (f != "B")
      throw SchemaError(path + "/flavor", "expected \"A\" or \"B\"");
  }
  auto m = comodule_from_json(member(j, "M", path), parent, path + "/M");
  auto n = comodule_from_json(member(j, "N", path), parent, path + "/N");
  Matrix u = matrix_from_json(parent->field(), member(j, "u", path), path + "/u");
  if (u.rows() != n->dim() || u.cols() != m->dim()) throw SchemaError(path + "/u", "shape differs from dim N x dim M");
  return make_freyd_object(std::move(m), std::move(n), std::move(u), flavor);
}

namespace {

Json side_json(const SideProbe& s) {
  Json flags = Json::array();
  for (bool b : s.summand_simple) flags.push_back(b);
  return Json{{"summand_dims", s.summand_dims}, {"summand_simple", flags}, {"min_dim", s.min_dim},
              {"witness_count", s.witness_count}, {"complete", s.complete}};
}

}  // namespace

Json to_json(const ProbeReport& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows)
    rows.push_back(Json{{"order", r.order}, {"coalgebra_dim", r.coalgebra_dim}, {"right", side_json(r.right)},
                        {"left", side_json(r.left)}});
  return Json{{"builder", p.builder},
              {"field", p.field},
              {"rows", rows},
              {"verdicts",
               Json{{"left_min_unbounded", p.left_min_unbounded},
                    {"right_min_constant", p.right_min_constant},
                    {"both_sides_witnessed", p.both_sides_witnessed}}}};
}

Json to_json(const FpModule& x) { return Json{{"dim", x.dim}, {"support", x.support}}; }

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Finding:
      return "finding";
  }
  return "fail";
}

void Report::add(std::string name, bool ok, Json data) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(data)});
}

void Report::add_finding(std::string name, Json data) {
  checks.push_back({std::move(name), Status::Finding, std::move(data)});
}

bool Report::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

Json Report::to_json() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
  Json arr = Json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const Check* c : sorted) {
    arr.push_back(Json{{"name", c->name}, {"status", status_name(c->status)}, {"data", c->data}});
    ++counts[static_cast<int>(c->status)];
  }
  return Json{{"schema", kReportSchema},
              {"command", command},
              {"config", config},
              {"summary", Json{{"pass", counts[0]}, {"fail", counts[1]}, {"finding", counts[2]}}},
              {"checks", arr}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace cofreyd
