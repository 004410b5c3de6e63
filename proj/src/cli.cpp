#include "uslev/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>

#include "uslev/checks.hpp"
#include "uslev/efficiency.hpp"
#include "uslev/io.hpp"
#include "uslev/norms.hpp"
#include "uslev/order.hpp"
#include "uslev/phi.hpp"
#include "uslev/scalarize.hpp"

namespace uslev {

namespace {

using io::Json;

double tolerance_from_env() {
  const char* raw = std::getenv("USLEV_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw InputError(std::string("USLEV_TOL must be a positive number, got \"") + raw + "\"");
  return v;
}

/// "--point -1,-1" would otherwise be read as an unknown option "-1,-1".
std::vector<std::string> attach_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size()) {
      const std::string& next = args[i + 1];
      if (next.size() > 1 && next[0] == '-' &&
          (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
        out.push_back(a + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(a);
  }
  return out;
}

Vector vector_option(const std::string& text, std::size_t dim, const char* name) {
  Vector v = io::parse_vector(text);
  if (static_cast<std::size_t>(v.size()) != dim)
    throw InputError(std::string("--") + name + " has " + std::to_string(v.size()) +
                     " components, the set has dimension " + std::to_string(dim));
  return v;
}

void require_cloud(const PointCloud& f, std::size_t dim) {
  if (f.dim() != dim)
    throw InputError("points have dimension " + std::to_string(f.dim()) +
                     ", the set has dimension " + std::to_string(dim));
}

Json phi_json(const ExtScalar& v) { return {{"class", v.class_name()}, {"phi", io::to_json(v)}}; }

struct Options {
  std::string set, cone, dom, points, point, k, ref, orientation = "below", suite = "all",
                                                     dump_grid, inject;
  std::uint64_t seed = 42;
  std::size_t size = 200;
  bool oracle = false, weak = false, norm = false;
};

Json cmd_phi(const Options& o, double tol) {
  const SetExpr a = io::read_set_file(o.set);
  const PhiProblem p(a, vector_option(o.k, a.dim(), "k"), tol);
  auto eval = [&](const Vector& y) { return o.oracle ? phi_oracle(p, y) : phi_value(p, y); };
  if (!o.dump_grid.empty()) {
    const Vector g = io::parse_vector(o.dump_grid);
    if (a.dim() != 2 || g.size() != 5 || g(4) < 2 || g(4) != std::floor(g(4)))
      throw InputError("--dump-grid expects \"xmin,xmax,ymin,ymax,n\" with n >= 2 on a 2-d set");
    const auto n = static_cast<int>(g(4));
    Json xs = Json::array(), ys = Json::array(), rows = Json::array();
    for (int i = 0; i < n; ++i) {
      xs.push_back(g(0) + (g(1) - g(0)) * i / (n - 1));
      ys.push_back(g(2) + (g(3) - g(2)) * i / (n - 1));
    }
    for (int r = 0; r < n; ++r) {
      Json row = Json::array();
      for (int c = 0; c < n; ++c) {
        Vector y(2);
        y << xs[c].get<double>(), ys[r].get<double>();
        row.push_back(io::to_json(eval(y)));
      }
      rows.push_back(row);
    }
    return {{"x", xs}, {"y", ys}, {"values", rows}};
  }
  if (o.point.empty()) throw InputError("phi requires --point (or --dump-grid)");
  return phi_json(eval(vector_option(o.point, a.dim(), "point")));
}

Json cmd_norm(const Options& o) {
  const SetExpr c = io::read_set_file(o.cone);
  const OrderUnitSpec spec = OrderUnitSpec::make(c, vector_option(o.k, c.dim(), "k"));
  Json j{{"norm", order_unit_norm(spec, vector_option(o.point, c.dim(), "point"))}};
  if (!spec.warnings().empty()) j["warnings"] = spec.warnings();
  return j;
}

Json cmd_eff(const Options& o, double tol) {
  const SetExpr d = io::read_set_file(o.set);
  const PointCloud f = io::read_points_file(o.points);
  require_cloud(f, d.dim());
  return io::to_json(o.weak ? weff(f, d, tol) : eff(f, d, tol));
}

Json cmd_min(const Options& o) {
  const SetExpr d = io::read_set_file(o.set);
  const PointCloud f = io::read_points_file(o.points);
  require_cloud(f, d.dim());
  Json idx = Json::array();
  for (std::size_t i : min_points({d, false}, f)) idx.push_back(i);
  return {{"indices", idx}};
}

Json with_seed(Json j, std::uint64_t seed) {
  j["seed"] = seed;
  return j;
}

Json cmd_characterize(const Options& o) {
  const SetExpr d = io::read_set_file(o.set);
  const PointCloud f = io::read_points_file(o.points);
  require_cloud(f, d.dim());
  const Vector k = vector_option(o.k, d.dim(), "k");
  const AuditOptions audit{o.seed, 256};
  return with_seed(io::to_json(o.weak ? characterize_weff_report(f, d, k, audit)
                                      : characterize_eff_report(f, d, k, audit)),
                   o.seed);
}

Json cmd_scalarize(const Options& o) {
  const SetExpr h = io::read_set_file(o.set);
  const SetExpr d = io::read_set_file(o.dom);
  if (d.dim() != h.dim()) throw InputError("--dom and --set dimensions differ");
  const PointCloud f = io::read_points_file(o.points);
  require_cloud(f, h.dim());
  const ScalarReport r =
      reference_scalarize(f, h, vector_option(o.ref, h.dim(), "ref"),
                          vector_option(o.k, h.dim(), "k"), d, AuditOptions{o.seed, 256});
  return with_seed(io::to_json(r), o.seed);
}

Json cmd_bound(const Options& o) {
  const SetExpr d = io::read_set_file(o.set);
  const PointCloud f = io::read_points_file(o.points);
  require_cloud(f, d.dim());
  const Vector a = vector_option(o.ref, d.dim(), "ref");
  const AuditOptions audit{o.seed, 256};
  if (o.norm) return with_seed(io::to_json(norm_characterize(f, d, a, audit)), o.seed);
  const Orientation orient = o.orientation == "above" ? Orientation::Above : Orientation::Below;
  return with_seed(io::to_json(bound_scalarize(f, d, a, orient, audit)), o.seed);
}

Json cmd_separate(const Options& o) {
  const SetExpr a = io::read_set_file(o.set);
  const PointCloud pts = io::read_points_file(o.points);
  require_cloud(pts, a.dim());
  return with_seed(
      io::to_json(separate(a, vector_option(o.k, a.dim(), "k"), pts, AuditOptions{o.seed, 256})),
      o.seed);
}

Json cmd_check(const Options& o, int& exit_code) {
  CheckOptions opts;
  opts.seed = o.seed;
  opts.size = o.size;
  if (o.inject == "phi-sign") {
    opts.phi = [](const PhiProblem& p, const Vector& y) {
      const ExtScalar v = phi_eval(p, y);
      return v.is_real() ? ExtScalar::real(-v.value()) : v;
    };
  } else if (!o.inject.empty()) {
    throw InputError("unknown fault \"" + o.inject + "\"");
  }
  const CheckSummary s = run_checks(o.suite, opts);
  Json results = Json::array();
  for (const PropertyResult& r : s.results) {
    Json item{{"suite", r.suite}, {"property", r.property}, {"trials", r.trials},
              {"passed", r.passed}};
    if (!r.passed) item["witness"] = r.witness;
    results.push_back(item);
  }
  const auto failed = static_cast<std::size_t>(std::count_if(
      s.results.begin(), s.results.end(), [](const PropertyResult& r) { return !r.passed; }));
  exit_code = failed ? 1 : 0;
  return {{"seed", o.seed},     {"size", o.size},        {"suite", o.suite},
          {"passed", !failed},  {"failed", failed},      {"results", results},
          {"warnings", s.warnings}};
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"uslev: scalarizing functionals, efficient points and order-unit norms", "uslev"};
  app.require_subcommand(1, 1);
  Options o;

  auto* phi = app.add_subcommand("phi", "evaluate phi_{A,k} at a point");
  phi->add_option("--set", o.set, "set A (JSON)")->required()->check(CLI::ExistingFile);
  phi->add_option("--k", o.k, "direction k, e.g. \"1,1\"")->required();
  phi->add_option("--point", o.point, "point y");
  phi->add_flag("--oracle", o.oracle, "use the bisection oracle instead of the closed form");
  phi->add_option("--dump-grid", o.dump_grid, "\"xmin,xmax,ymin,ymax,n\": raw value grid (2-d)");

  auto* norm = app.add_subcommand("norm", "order-unit norm ||y||_{C,k}");
  norm->add_option("--cone", o.cone, "cone C (JSON)")->required()->check(CLI::ExistingFile);
  norm->add_option("--k", o.k, "order unit k in core C")->required();
  norm->add_option("--point", o.point, "point y")->required();

  auto* eff_cmd = app.add_subcommand("eff", "efficient points of a finite cloud");
  eff_cmd->add_option("--points", o.points, "points (CSV)")->required()->check(CLI::ExistingFile);
  eff_cmd->add_option("--set", o.set, "domination set D (JSON)")->required()->check(CLI::ExistingFile);
  eff_cmd->add_flag("--weak", o.weak, "weakly efficient points");

  auto* min_cmd = app.add_subcommand("min", "minimal points of the relation induced by D");
  min_cmd->add_option("--points", o.points, "points (CSV)")->required()->check(CLI::ExistingFile);
  min_cmd->add_option("--set", o.set, "domination set D (JSON)")->required()->check(CLI::ExistingFile);

  auto* ch = app.add_subcommand("characterize", "per-point characterization through phi_{y0-D,k}");
  ch->add_option("--points", o.points, "points (CSV)")->required()->check(CLI::ExistingFile);
  ch->add_option("--set", o.set, "domination set D (JSON)")->required()->check(CLI::ExistingFile);
  ch->add_option("--k", o.k, "direction k")->required();
  ch->add_flag("--weak", o.weak, "characterize weak efficiency");
  ch->add_option("--seed", o.seed, "seed for sampled audits");

  auto* sc = app.add_subcommand("scalarize", "minimize phi_{a-H,k} over the cloud");
  sc->add_option("--points", o.points, "points (CSV)")->required()->check(CLI::ExistingFile);
  sc->add_option("--set", o.set, "set H (JSON)")->required()->check(CLI::ExistingFile);
  sc->add_option("--ref", o.ref, "reference point a")->required();
  sc->add_option("--k", o.k, "direction k")->required();
  sc->add_option("--dom", o.dom, "domination set D (JSON)")->required()->check(CLI::ExistingFile);
  sc->add_option("--seed", o.seed, "seed for sampled audits");

  auto* bd = app.add_subcommand("bound", "scalarization anchored at a bound of the cloud");
  bd->add_option("--points", o.points, "points (CSV)")->required()->check(CLI::ExistingFile);
  bd->add_option("--set", o.set, "domination cone D (JSON)")->required()->check(CLI::ExistingFile);
  bd->add_option("--ref", o.ref, "bound a")->required();
  bd->add_option("--orientation", o.orientation, "below: F in a - core D; above: F in a + core D")
      ->check(CLI::IsMember({"below", "above"}));
  bd->add_flag("--norm", o.norm, "use the order-unit norm (requires F in a + core D)");
  bd->add_option("--seed", o.seed, "seed for sampled audits");

  auto* sp = app.add_subcommand("separate", "decide A ∩ D = ∅ for a finite D");
  sp->add_option("--set", o.set, "set A (JSON)")->required()->check(CLI::ExistingFile);
  sp->add_option("--k", o.k, "direction k")->required();
  sp->add_option("--points", o.points, "points of D (CSV)")->required()->check(CLI::ExistingFile);
  sp->add_option("--seed", o.seed, "seed for sampled audits");

  auto* ck = app.add_subcommand("check", "run the bundled property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ck->add_option("--suite", o.suite, "suite name or \"all\"")->check(CLI::IsMember(suites));
  ck->add_option("--seed", o.seed, "seed");
  ck->add_option("--size", o.size, "samples per property");
  ck->add_option("--inject-fault", o.inject, "run against a deliberately broken phi (phi-sign)")
      ->group("");

  try {
    std::vector<std::string> prepared = attach_negative_values(args);
    std::reverse(prepared.begin(), prepared.end());
    app.parse(prepared);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "uslev: " << e.what() << "\n";
    return 2;
  }

  try {
    const double tol = tolerance_from_env();
    int code = 0;
    Json result;
    if (phi->parsed()) result = cmd_phi(o, tol);
    else if (norm->parsed()) result = cmd_norm(o);
    else if (eff_cmd->parsed()) result = cmd_eff(o, tol);
    else if (min_cmd->parsed()) result = cmd_min(o);
    else if (ch->parsed()) result = cmd_characterize(o);
    else if (sc->parsed()) result = cmd_scalarize(o);
    else if (bd->parsed()) result = cmd_bound(o);
    else if (sp->parsed()) result = cmd_separate(o);
    else result = cmd_check(o, code);
    out << io::dump(result);
    return code;
  } catch (const InputError& e) {
    err << "uslev: input error: " << e.what() << "\n";
    return 2;
  } catch (const Refusal& e) {
    err << "uslev: refused: " << e.what() << "\n";
    return 1;
  } catch (const Unsupported& e) {
    err << "uslev: refused: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace uslev
