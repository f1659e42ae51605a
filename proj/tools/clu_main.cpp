// Command-line surface for the affine cluster-algebra library: quiver
// builders, frieze tables, periodic quantities, continuant friezes, symbolic
// identity checks, the annulus model, and the brute-force enumeration oracle.
// Identical inputs produce byte-identical output; exit code 0 means success
// (all checks passed), 1 means a check failed, 2 means a usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cluster/enumerate.hpp"
#include "cluster/surface.hpp"

namespace {

using namespace cluster;

struct FamilyOptions {
  std::string family = "a";
  int q = 2, p = 1, N = 4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "a (affine A) or d (affine D)")
        ->check(CLI::IsMember({"a", "d"}));
    cmd->add_option("--q", q, "bottom marked points (affine A)");
    cmd->add_option("--p", p, "top marked points (affine A)");
    cmd->add_option("--N", N, "rank parameter (affine D, N >= 4)");
  }
  bool is_a() const { return family == "a"; }
};

RenderFormat parse_format(const std::string& f) {
  if (f == "text") return RenderFormat::Text;
  if (f == "csv") return RenderFormat::Csv;
  return RenderFormat::Json;
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int finish(const CheckReport& report) {
  emit(report.to_json());
  return report.passed ? 0 : 1;
}

int finish(const std::vector<CheckReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  bool passed = true;
  for (const auto& r : reports) {
    list.push_back(r.to_json());
    passed = passed && r.passed;
  }
  emit({{"passed", passed}, {"reports", list}});
  return passed ? 0 : 1;
}

int default_workers() {
  if (const char* env = std::getenv("CLU_WORKERS")) {
    const int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

int run_build(const FamilyOptions& fam, const std::string& format) {
  QuiverParams params = fam.is_a() ? QuiverParams{Family::ATilde, fam.q, fam.p, 0, {}}
                               : QuiverParams{Family::DTilde, 0, 0, fam.N, {}};
  const Seed seed = build_quiver(params);
  if (format == "matrix") {
    std::ostringstream os;
    for (const auto& row : seed.matrix.b) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
      os << "\n";
    }
    std::cout << os.str();
  } else {
    emit(seed.matrix.to_json(vertex_labels(params)));
  }
  return 0;
}

int run_frieze(const FamilyOptions& fam, long n_min, long n_max, bool units,
               const std::string& format, bool sequence) {
  FriezeGrid grid;
  if (fam.is_a() && sequence) {
    ATypeSequence seq(fam.q, fam.p);
    grid = grid_from_a_sequence(seq, n_min, n_max, units);
  } else if (fam.is_a()) {
    FriezeTable table(build_a_matrix(fam.q, fam.p));
    grid = grid_from_frieze(table, vertex_labels({Family::ATilde, fam.q, fam.p, 0, {}}),
                            n_min, n_max, units);
  } else {
    FriezeTable table(build_d_matrix(fam.N));
    grid = grid_from_frieze(table, vertex_labels({Family::DTilde, 0, 0, fam.N, {}}),
                            n_min, n_max, units);
  }
  std::cout << render_grid(grid, parse_format(format));
  return 0;
}

int run_periodic(const FamilyOptions& fam, const std::string& kind, long n_min, long n_max,
                 bool units) {
  nlohmann::json values = nlohmann::json::array();
  auto add = [&](PeriodicFamily& f) {
    for (long n = n_min; n <= n_max; ++n) {
      const LaurentPoly& v = f.value(n);
      values.push_back({{"n", n}, {"value", units ? nlohmann::json(v.eval_units().str())
                                                  : nlohmann::json(v.to_json())}});
    }
    emit({{"kind", kind}, {"period", f.period()}, {"values", values}});
  };
  if (fam.is_a()) {
    AFamilies a(fam.q, fam.p);
    add(kind == "jtilde" ? a.jtilde : a.j);
  } else {
    DFamilies d(fam.N);
    add(d.jprime);
  }
  return 0;
}

int run_continuant(const FamilyOptions& fam, const std::string& kind, long j_min, long j_max,
                   bool units, const std::string& format) {
  if (fam.is_a()) {
    AFamilies a(fam.q, fam.p);
    const ContinuantFrieze cf = kind == "jtilde" ? ContinuantFrieze::over_jtilde(a, j_min, j_max)
                                                 : ContinuantFrieze::over_j(a, j_min, j_max);
    std::cout << render_grid(cf.to_grid(units), parse_format(format));
  } else {
    DFamilies d(fam.N);
    std::cout << render_grid(ContinuantFrieze::over_jprime(d, j_min, j_max).to_grid(units),
                             parse_format(format));
  }
  return 0;
}

int run_check(const FamilyOptions& fam, const std::string& what, long n_min, long n_max,
              bool units) {
  if (fam.is_a()) {
    AFamilies a(fam.q, fam.p);
    if (what == "period") {
      return finish({verify_period(a.j, n_min, n_max), verify_period(a.jtilde, n_min, n_max)});
    } else if (what == "structure") {
      std::vector<long> starts{0, 1, 2};
      return finish({structure_check(a.j, 6, starts), structure_check(a.jtilde, 6, starts)});
    } else if (what == "trace") {
      auto inv = trace_invariant(a);
      nlohmann::json j = inv.constancy.to_json();
      j["trace"] = units ? nlohmann::json(inv.value.eval_units().str())
                         : nlohmann::json(inv.value.to_json());
      emit(j);
      return inv.constancy.passed ? 0 : 1;
    } else if (what == "linear") {
      return finish(linear_relation_check(a, n_min, n_max));
    } else if (what == "periodic-linear") {
      return finish(periodic_linear_check(a, n_min, n_max));
    } else if (what == "psi") {
      return finish(psi_transport_check(a, n_min, n_max));
    } else if (what == "glue") {
      return finish(glue_check(a, n_min, n_max));
    } else if (what == "desnanot") {
      return finish({desnanot_check(ContinuantFrieze::over_j(a, n_min, n_max)),
                     desnanot_check(ContinuantFrieze::over_jtilde(a, n_min, n_max))});
    } else if (what == "continuant") {
      std::vector<long> starts{n_min, 0, n_max};
      CheckReport rec("continuant-vs-determinant");
      for (int m = 0; m <= 6; ++m)
        for (long n : starts) {
          rec.expect(continuant(a.j, a.j.step(), m, n) ==
                         continuant_determinant(a.j, a.j.step(), m, n),
                     {{"kind", "J"}, {"m", m}, {"n", n}});
          rec.expect(continuant(a.jtilde, a.jtilde.step(), m, n) ==
                         continuant_determinant(a.jtilde, a.jtilde.step(), m, n),
                     {{"kind", "Jtilde"}, {"m", m}, {"n", n}});
        }
      return finish({rec, continuant_entry_check(a.j, 6, starts),
                     continuant_entry_check(a.jtilde, 6, starts)});
    } else if (what == "frieze") {
      FriezeTable table(build_a_matrix(fam.q, fam.p));
      CheckReport rec("frieze-relation");
      for (int i = 0; i < table.matrix().n; ++i)
        for (long n = n_min; n < n_max; ++n)
          rec.expect(table.relation_holds(i, n), {{"vertex", i}, {"n", n}});
      // the frieze table is the scalar sequence under i - nN
      ATypeSequence seq(fam.q, fam.p);
      const int N = fam.q + fam.p;
      CheckReport ident("sequence-identification");
      for (int i = 0; i < N; ++i)
        for (long n = n_min; n <= n_max; ++n)
          ident.expect(table.value(i, n) == seq.value(i - n * N), {{"vertex", i}, {"n", n}});
      return finish({rec, ident});
    }
  } else {
    DFamilies d(fam.N);
    if (what == "period") {
      return finish(verify_period(d.jprime, n_min, n_max));
    } else if (what == "structure") {
      return finish(structure_check(d.jprime, 6, {0, 1, 2}));
    } else if (what == "trace") {
      auto inv = trace_invariant(d);
      nlohmann::json j = inv.constancy.to_json();
      j["trace"] = units ? nlohmann::json(inv.value.eval_units().str())
                         : nlohmann::json(inv.value.to_json());
      emit(j);
      return inv.constancy.passed ? 0 : 1;
    } else if (what == "linear") {
      return finish(linear_relation_check(d, n_min, n_max));
    } else if (what == "glue") {
      return finish(glue_check(d, n_min, n_max));
    } else if (what == "spine") {
      return finish(jprime_spine_identity_check(d, n_min, n_max));
    } else if (what == "desnanot") {
      return finish(desnanot_check(ContinuantFrieze::over_jprime(d, n_min, n_max)));
    } else if (what == "continuant") {
      CheckReport rec("continuant-vs-determinant");
      for (int m = 0; m <= 6; ++m)
        for (long n : {n_min, 0L, n_max})
          rec.expect(continuant(d.jprime, 1, m, n) == continuant_determinant(d.jprime, 1, m, n),
                     {{"m", m}, {"n", n}});
      return finish({rec, continuant_entry_check(d.jprime, 6, {n_min, 0, n_max})});
    } else if (what == "frieze") {
      CheckReport rec("frieze-relation");
      for (int i = 0; i <= fam.N; ++i)
        for (long n = n_min; n < n_max; ++n)
          rec.expect(d.frieze->relation_holds(i, n), {{"vertex", i + 1}, {"n", n}});
      return finish(rec);
    }
  }
  std::cerr << "unknown check: " << what << "\n";
  return 2;
}

int run_surface(const std::string& action, const FamilyOptions& fam, const std::string& flips,
                const std::string& arcs_file, long start, int span, long winding_min,
                long winding_max) {
  if (!fam.is_a() || action == "classify") {
    if (action == "classify") {
      if (span > 0) {
        DFamilies d(fam.N);
        const LaurentPoly v = d_enclosing_arc_value(d, start, span);
        emit({{"family", "puncture-enclosing"},
              {"start", start},
              {"span", span},
              {"value", v.to_json()},
              {"units", v.eval_units().str()}});
      } else {
        const DArcCounts c = count_d_arcs(fam.N, winding_min, winding_max);
        emit({{"N", fam.N},
              {"winding_min", winding_min},
              {"winding_max", winding_max},
              {"splitting", c.splitting},
              {"enclosing", c.enclosing},
              {"punctured", c.punctured},
              {"exceptional", c.exceptional}});
      }
      return 0;
    }
    std::cerr << "surface " << action << " supports only the annulus (family a)\n";
    return 2;
  }

  AnnulusTriangulation t = AnnulusTriangulation::initial(fam.q, fam.p);
  if (!arcs_file.empty()) {
    std::ifstream in(arcs_file);
    if (!in) {
      std::cerr << "cannot read " << arcs_file << "\n";
      return 2;
    }
    nlohmann::json j;
    in >> j;
    t = AnnulusTriangulation::from_json(j);
  }
  std::vector<int> sequence;
  if (!flips.empty()) {
    std::stringstream ss(flips);
    std::string item;
    while (std::getline(ss, item, ',')) sequence.push_back(std::stoi(item));
  }

  if (action == "flip" || action == "init" || action == "quiver") {
    AFamilies families(fam.q, fam.p);
    nlohmann::json steps = nlohmann::json::array();
    for (int k : sequence) {
      auto flip = t.flip(k);
      steps.push_back({{"slot", k},
                       {"removed", arc_variable(flip.removed, families).to_json()},
                       {"added", arc_variable(flip.added, families).to_json()}});
      t = std::move(flip.triangulation);
    }
    if (action == "quiver") {
      emit(t.quiver().to_json());
    } else {
      nlohmann::json out = t.to_json();
      if (!steps.empty()) out["flips"] = steps;
      emit(out);
    }
    return 0;
  }
  std::cerr << "unknown surface action: " << action << "\n";
  return 2;
}

int run_enumerate(const FamilyOptions& fam, int depth, bool compare, int workers, int window) {
  if (fam.is_a()) {
    const auto found = bfs_explore(initial_seed(build_a_matrix(fam.q, fam.p)), depth, workers);
    nlohmann::json j{{"depth", depth},
                     {"seeds", found.seeds_visited},
                     {"variables", static_cast<long>(found.variables.size())}};
    if (!compare) {
      emit(j);
      return 0;
    }
    AFamilies families(fam.q, fam.p);
    const auto report = cross_check(families, found, depth, window);
    j["compare"] = report.to_json();
    emit(j);
    return report.passed ? 0 : 1;
  }
  const auto found = bfs_explore(initial_seed(build_d_matrix(fam.N)), depth, workers);
  nlohmann::json j{{"depth", depth},
                   {"seeds", found.seeds_visited},
                   {"variables", static_cast<long>(found.variables.size())}};
  if (!compare) {
    emit(j);
    return 0;
  }
  DFamilies families(fam.N);
  const auto report = cross_check(families, found, depth, window);
  j["compare"] = report.to_json();
  emit(j);
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine cluster algebras: friezes, periodic quantities, arcs, enumeration"};
  app.require_subcommand(1);

  FamilyOptions fam;
  long n_min = -5, n_max = 10;
  bool units = false;
  std::string format = "text";

  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--n-min", n_min, "window start (default -5)");
    cmd->add_option("--n-max", n_max, "window end (default 10)");
    cmd->add_flag("--units", units, "evaluate at all initial variables = 1");
  };

  auto* build = app.add_subcommand("build", "construct an initial quiver");
  fam.attach(build);
  std::string build_format = "json";
  build->add_option("--format", build_format)->check(CLI::IsMember({"json", "matrix"}));

  auto* frieze = app.add_subcommand("frieze", "frieze-pattern variables X^i_n");
  fam.attach(frieze);
  add_window(frieze);
  frieze->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
  bool sequence = false;
  frieze->add_flag("--sequence", sequence, "affine A: the scalar sequence x_n instead of X^i_n");

  auto* periodic = app.add_subcommand("periodic", "periodic quantities J, Jtilde, Jprime");
  fam.attach(periodic);
  add_window(periodic);
  std::string kind = "j";
  periodic->add_option("--kind", kind)->check(CLI::IsMember({"j", "jtilde", "jprime"}));

  auto* continuant = app.add_subcommand("continuant", "continuant friezes over the periodic families");
  fam.attach(continuant);
  add_window(continuant);
  continuant->add_option("--kind", kind)->check(CLI::IsMember({"j", "jtilde", "jprime"}));
  continuant->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* check = app.add_subcommand("check", "symbolic identity checks; exit 1 on failure");
  std::string what;
  check->add_option("what", what,
                    "period | structure | trace | linear | periodic-linear | psi | glue | "
                    "desnanot | continuant | frieze | spine")
      ->required();
  fam.attach(check);
  add_window(check);

  auto* surface = app.add_subcommand("surface", "annulus triangulations and disk arc families");
  std::string action, flips, arcs_file;
  surface->add_option("action", action, "init | quiver | flip | classify")->required();
  fam.attach(surface);
  surface->add_option("--flips", flips, "comma-separated slots to flip in order");
  surface->add_option("--arcs-file", arcs_file, "triangulation JSON to start from");
  long cls_start = 0, winding_min = 0, winding_max = 0;
  int cls_span = 0;
  surface->add_option("--start", cls_start, "classify: boundary start vertex");
  surface->add_option("--span", cls_span, "classify: enclosing arc span");
  surface->add_option("--winding-min", winding_min);
  surface->add_option("--winding-max", winding_max);

  auto* enumerate = app.add_subcommand("enumerate", "breadth-first mutation closure");
  fam.attach(enumerate);
  int depth = 4;
  bool compare = false;
  int workers = default_workers();
  enumerate->add_option("--depth", depth, "mutation depth");
  int window = -1;
  enumerate->add_option("--window", window,
                        "frieze window half-width for --compare (default depth + 2)");
  enumerate->add_flag("--compare", compare, "cross-check against the predicted variable set");
  enumerate->add_option("--workers", workers, "parallel expansion workers (env CLU_WORKERS)");

  auto* render = app.add_subcommand("render", "staggered text layout of a frieze");
  fam.attach(render);
  add_window(render);
  render->add_option("--kind", kind)->check(CLI::IsMember({"j", "jtilde", "jprime"}));
  bool render_continuant = false;
  render->add_flag("--continuant", render_continuant, "render the continuant frieze instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return run_build(fam, build_format);
    if (frieze->parsed()) return run_frieze(fam, n_min, n_max, units, format, sequence);
    if (periodic->parsed()) {
      if (!fam.is_a()) kind = "jprime";
      return run_periodic(fam, kind, n_min, n_max, units);
    }
    if (continuant->parsed()) {
      if (!fam.is_a()) kind = "jprime";
      return run_continuant(fam, kind, n_min, n_max, units, format);
    }
    if (check->parsed()) return run_check(fam, what, n_min, n_max, units);
    if (surface->parsed())
      return run_surface(action, fam, flips, arcs_file, cls_start, cls_span, winding_min,
                         winding_max);
    if (enumerate->parsed()) return run_enumerate(fam, depth, compare, workers, window);
    if (render->parsed()) {
      if (render_continuant) {
        if (!fam.is_a()) kind = "jprime";
        return run_continuant(fam, kind, n_min, n_max, units, "text");
      }
      return run_frieze(fam, n_min, n_max, units, "text", false);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
