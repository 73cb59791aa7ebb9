#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cofreyd/suite.hpp"

using namespace cofreyd;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

CoalgebraPtr share(Coalgebra c) { return std::make_shared<const Coalgebra>(std::move(c)); }

bool checks_pass(const Report& rep, const std::vector<std::string>& suffixes, std::ostringstream& detail) {
  bool ok = true;
  std::size_t seen = 0;
  for (const auto& c : rep.checks)
    for (const auto& s : suffixes)
      if (c.name.size() >= s.size() && c.name.compare(c.name.size() - s.size(), s.size(), s) == 0) {
        ++seen;
        if (c.status == Status::Fail) {
          ok = false;
          detail << " [failed: " << c.name << "]";
        }
      }
  return ok && seen > 0;
}

// 1. Every construction for d <= 12 passes validation with zero defects.
void c01(Outcome& o, std::uint64_t) {
  std::size_t validated = 0;
  for (std::size_t d = 0; d <= 12; ++d) {
    const Coalgebra inc = incidence_chain(d), dp = divided_power_truncated(d), h = h_coalgebra(d);
    for (const Coalgebra* c : {&inc, &dp, &h}) {
      const auto v = validate_coalgebra(*c);
      o.require(v.ok && v.defect_locations.empty(), "validate d=" + std::to_string(d));
      const auto vm = validate_coalgebra(matrix2_coalgebra(*c));
      o.require(vm.ok && vm.defect_locations.empty(), "validate matrix2 d=" + std::to_string(d));
      validated += 2;
    }
  }
  o.detail << " coalgebras validated=" << validated << " (incidence, divided power, H, and matrix2 of each, d=0..12)";
}

// 2. Incidence-chain truncations are serial, with the expected summands and socle shifts.
void c02(Outcome& o, std::uint64_t seed) {
  RunConfig cfg;
  cfg.orders = parse_orders("0..8");
  cfg.seed = seed;
  const Report rep = run_example_suite("incidence-chain", cfg);
  const bool ok = checks_pass(rep,
                              {"right.decomposition", "left.decomposition", "right.socles", "right.uniserial",
                               "left.uniserial", "right.quotient_shift_iso", "serial"},
                              o.detail);
  o.require(ok, "incidence battery");
  o.detail << " d=0..8: right summands F{(n,p): p>=n}, uniserial both sides, soc E_r(n)=F{(n,n)}, E_r(n)/soc ~ E_r(n+1)";
}

// 3. The triangular example: decomposition dims, Ft, filtration and growth.
void c03(Outcome& o, std::uint64_t) {
  std::vector<std::size_t> orders;
  bool dims_ok = true, ft_ok = true;
  std::vector<std::size_t> term1;
  for (std::size_t d = 1; d <= 8; ++d) {
    orders.push_back(d);
    const auto h = share(h_coalgebra(d));
    const auto r = decompose_injectives(h, Side::Right), l = decompose_injectives(h, Side::Left);
    std::vector<std::size_t> rd, ld;
    for (const auto& m : r.summands) rd.push_back(m->dim());
    for (const auto& m : l.summands) ld.push_back(m->dim());
    std::sort(rd.begin(), rd.end());
    std::sort(ld.begin(), ld.end());
    dims_ok = dims_ok && rd == std::vector<std::size_t>{1, 2 * d + 2} && ld == std::vector<std::size_t>{d + 1, d + 2};
    std::vector<Vector> gens{Vector(h->dim())};
    gens[0][h->index_of("t")] = 1;
    const auto ft = subcomodule(regular_comodule(h, Side::Right), Subspace::span(h->field(), h->dim(), gens)).comodule;
    ft_ok = ft_ok && is_simple(ft) && is_injective(ft).injective;
    term1.push_back(coradical_filtration(*h)[1].dim());
  }
  const ProbeReport p = symmetry_probe("H", orders, Field::rationals());
  o.require(dims_ok, "decomposition dims");
  o.require(ft_ok, "Ft simple injective");
  o.require(p.left_min_unbounded, "left min = d+1 increasing");
  o.require(p.right_min_constant, "right min = 1");
  bool term1_ok = true;
  for (const auto t : term1) term1_ok = term1_ok && t == 5;
  o.require(term1_ok, "filtration term 1 dim 5");
  o.detail << " d=1..8: dims " << (dims_ok ? "ok" : "bad") << ", Ft " << (ft_ok ? "ok" : "bad") << ", left min";
  for (const auto& row : p.rows) o.detail << " " << row.left.min_dim;
  o.detail << ", right min";
  for (const auto& row : p.rows) o.detail << " " << row.right.min_dim;
  o.detail << ", filtration term 1 dims";
  for (const auto t : term1) o.detail << " " << t;
  o.detail << " (stated 5)";
}

// 4. R ~ L^op for the full indecomposable families.
void c04(Outcome& o, std::uint64_t) {
  for (const Field& f : {Field::rationals(), Field::prime(101)})
    for (std::size_t d : {1, 2})
      for (const Side side : {Side::Right, Side::Left}) {
        const auto c = share(incidence_chain(d, f));
        const auto fam = loewy_family(c, side);
        const auto r = opposite_duality_check(fam);
        o.require(r.iso, "C_[0," + std::to_string(d) + "] " + f.name() + " " + side_name(side));
        o.detail << " " << f.name() << "/d=" << d << "/" << side_name(side) << ":" << r.dim_r << "=" << r.dim_l;
      }
}

// 5. Zero morphisms of B are exactly the null-homotopic completed chain maps.
void c05(Outcome& o, std::uint64_t seed) {
  const auto c = share(incidence_chain(2));
  const auto pool = freyd_pool(loewy_family(c, Side::Right));
  std::mt19937_64 rng(seed);
  const int samples = 240;
  int agree = 0, zeros = 0;
  for (int t = 0; t < samples; ++t) {
    const auto a = random_freyd_object(rng, pool), b = random_freyd_object(rng, pool);
    const auto m = random_freyd_map(rng, a, b);
    const bool z = is_zero_morphism(m).zero;
    agree += z == null_homotopy(complete_map(m)).null_homotopic;
    zeros += z;
  }
  o.require(agree == samples, "agreement");
  o.detail << " samples=" << samples << " agree=" << agree << " zero=" << zeros << " nonzero=" << samples - zeros;
}

// 6. Module homs between fp modules against B-homs in the other direction.
void c06(Outcome& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 6);
  for (std::size_t d : {1, 2}) {
    const auto c = share(incidence_chain(d));
    const auto fam = loewy_family(c, Side::Right);
    const FunctorRing ring = build_functor_ring(fam);
    const auto pool = freyd_pool(fam);
    const int samples = 100;
    int equal = 0;
    std::size_t nonzero = 0;
    for (int t = 0; t < samples; ++t) {
      const auto a = random_freyd_object(rng, pool), b = random_freyd_object(rng, pool);
      const auto r = hom_fp_duality_check(a, b, ring);
      equal += r.equal;
      nonzero += r.dim_freyd_hom > 0;
    }
    o.require(equal == samples, "C_[0," + std::to_string(d) + "]");
    o.detail << " C_[0," << d << "]: " << equal << "/" << samples << " equal (" << nonzero << " nonzero)";
  }
}

// 7. Witnesses M -> M/soc give simple, pairwise non-isomorphic modules.
void c07(Outcome& o, std::uint64_t) {
  const Field f = Field::prime(101);
  std::vector<std::pair<std::string, CoalgebraPtr>> cases{{"C_[0,1]", share(incidence_chain(1, f))},
                                                          {"C_[0,2]", share(incidence_chain(2, f))}};
  for (std::size_t d = 1; d <= 4; ++d) cases.emplace_back("H_" + std::to_string(d), share(h_coalgebra(d, f)));
  for (const auto& [name, c] : cases) {
    const FunctorRing ring = build_functor_ring(loewy_family(c, Side::Right));
    const auto w = simple_witnesses(c, Side::Right, ring);
    bool ok = !w.empty();
    for (std::size_t i = 0; i < w.size(); ++i) {
      ok = ok && w[i].simple;
      for (std::size_t j = i + 1; j < w.size(); ++j) ok = ok && !find_module_isomorphism(w[i].module, w[j].module);
    }
    o.require(ok, name);
    o.detail << " " << name << ":" << w.size() << " witnesses (ring dim " << ring.dim() << ")";
  }
}

// 8. The oracle finds three simples against two witnesses; the extra one comes from S_0 -> E_r(0).
void c08(Outcome& o, std::uint64_t seed) {
  RunConfig cfg;
  cfg.field = Field::prime(101);
  cfg.seed = seed;
  const Report rep = oracle_command(cfg);
  const Check* finding = nullptr;
  const Check* complete = nullptr;
  for (const auto& c : rep.checks) {
    if (c.name == "oracle.vs_witnesses") finding = &c;
    if (c.name == "oracle.complete") complete = &c;
  }
  o.require(finding && finding->status == Status::Finding, "finding emitted");
  o.require(complete && complete->status == Status::Pass, "oracle complete");
  if (!finding || !complete) return;
  const Json& cd = complete->data;
  o.require(cd["ring_dim"] == 5 && cd["radical_dim"] == 2 && cd["simple_dims"] == Json::array({1, 1, 1}),
            "ring dim 5, J dim 2, three 1-dim simples");
  const Json& fd = finding->data;
  o.require(fd["oracle_simples"] == 3 && fd["witnesses"] == 2 && fd["extra"].size() == 1, "3 vs 2");
  if (fd["extra"].size() == 1) {
    const Json& pres = fd["extra"][0]["presentation"];
    o.require(pres["monomorphism"] == true && pres["split"] == false && pres["M_injective"] == false &&
                  pres["module_simple"] == true,
              "extra simple from a non-split monomorphism");
    o.detail << " extra simple presented by " << pres["M"].get<std::string>() << " -> " << pres["N"].get<std::string>();
  }
  o.detail << " J=" << cd["radical_dim"] << " simples=" << fd["oracle_simples"] << " witnesses=" << fd["witnesses"];
}

// 9. M^2 equivalence round trip and the dual table.
void c09(Outcome& o, std::uint64_t seed) {
  const auto c = share(incidence_chain(1));
  const auto m2 = share(matrix2_coalgebra(*c));
  const auto fam = loewy_family(c, Side::Right);
  std::mt19937_64 rng(seed + 9);
  const int samples = 120;
  int valid = 0, iso = 0;
  for (int t = 0; t < samples; ++t) {
    const auto obj = random_freyd_object(rng, fam);
    const auto eq = matrix_comodule_equivalence(obj, m2);
    valid += validate_comodule(*eq.comodule).ok;
    iso += find_mor_isomorphism(obj, matrix_comodule_inverse(eq.comodule, c).object).has_value();
  }
  const bool table = dual_algebra(*m2) == triangular_matrix_algebra(dual_algebra(*c));
  o.require(valid == samples, "forward valid");
  o.require(iso == samples, "round trip");
  o.require(table, "dual table");
  o.detail << " samples=" << samples << " valid=" << valid << " round-trip iso=" << iso
           << " dual table " << (table ? "equal" : "differs");
}

std::string suite_dump(std::uint64_t seed) {
  std::string out;
  RunConfig cfg;
  cfg.seed = seed;
  cfg.orders = {1, 2};
  for (const auto& name : example_names()) out += run_example_suite(name, cfg).to_json().dump();
  RunConfig pc = cfg;
  pc.field = Field::prime(101);
  pc.orders = {1, 2, 3};
  out += probe_command("H", pc).to_json().dump();
  out += oracle_command(pc).to_json().dump();
  return out;
}

// 10. Same seed, same bytes.
void c10(Outcome& o, std::uint64_t seed) {
  const std::string a = suite_dump(seed), b = suite_dump(seed);
  o.require(a == b, "byte-identical reruns");
  o.detail << " report bytes=" << a.size() << " identical=" << (a == b ? "yes" : "no");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::uint64_t seed = 20241015;
  app.add_option("--criterion", only, "Run a single criterion (1-10)");
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::pair<const char*, std::function<void(Outcome&, std::uint64_t)>>> all{
      {"construction exactness", c01},   {"incidence-chain serial battery", c02}, {"triangular example battery", c03},
      {"R ~ L^op table match", c04},      {"B-zero iff null-homotopic", c05},      {"fp hom duality", c06},
      {"simple witnesses", c07},          {"oracle finding", c08},                 {"M2 equivalence", c09},
      {"determinism", c10}};
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      all[i].second(o, seed);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("criterion %2zu %-32s %s  tolerance=exact(0)%s\n", i + 1, all[i].first, o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str());
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
