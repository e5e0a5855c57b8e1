#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>

#include "pagegeom/functionals.hpp"
#include "pagegeom/moduli.hpp"
#include "pagegeom/profiles.hpp"
#include "pagegeom/report.hpp"
#include "pagegeom/submanifolds.hpp"

namespace {

using namespace pagegeom;
using std::numbers::pi;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "-" or empty writes to stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw UsageError("--samples must be at least 2");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

int print_summary(const VerificationReport& r) {
  for (const auto& c : r.checks)
    if (c.status != Status::pass)
      fmt::print("{:<24} {:<48} deviation={:.3e} tol={:.1e}\n", to_string(c.status), c.id, c.deviation, c.tolerance);
  fmt::print("{}: {} checks, {} pass, {} fail, {} discrepancy-documented\n", r.suite, r.checks.size(),
             r.count(Status::pass), r.count(Status::fail), r.count(Status::discrepancy_documented));
  return r.ok() ? kExitPass : kExitFail;
}

int cmd_constants(const PageMetric& m) {
  const auto& ps = m.profiles();
  const auto eh = einstein_hilbert_page(ps);
  const auto b = reference_bounds();
  fmt::print("a                  {:.12f}\n", ps.a());
  fmt::print("C                  {:.12f}\n", ps.C());
  fmt::print("fiber_constant     {:.12f} ({})\n", m.fiber_constant(), to_string(m.normalization()));
  fmt::print("scalar_curvature   {:.12f}\n", page_scalar_curvature(ps));
  fmt::print("volume_closed      {:.12f}\n", page_volume(ps, VolumeMethod::closed));
  fmt::print("einstein_hilbert   {:.10f}\n", eh.from_volume);
  fmt::print("aubin_bound        {:.10f}\n", b.aubin);
  fmt::print("conjectured_yamabe {:.10f}\n", b.conjectured);
  return kExitPass;
}

int cmd_profile(const PageMetric& m, const std::string& fn, std::size_t samples, const std::string& out_path) {
  const auto& ps = m.profiles();
  Output out(out_path);
  if (fn == "V" || fn == "f") {
    const auto which = parse_profile(fn);
    CsvWriter csv(out.stream(), fn == "V" ? "fig1" : "fig2", {"r", fn});
    for (double r : linspace(0.0, pi, samples)) csv.row({r, ps.eval(which, r, 0)});
  } else if (fn == "quartic") {
    CsvWriter csv(out.stream(), "fig3", {"x", "p"});
    for (double x : linspace(0.0, 1.0, samples)) csv.row({x, page_quartic(x)});
  } else if (fn == "conformal-s3") {
    CsvWriter csv(out.stream(), "fig4", {"r", "coefficient"});
    for (double r : linspace(0.0, pi, samples)) {
      const double s = std::sin(r);
      csv.row({r, ps.C() * s * s / (ps.f(r) * ps.V(r))});
    }
  } else if (fn == "radius-s1") {
    CsvWriter csv(out.stream(), "s1-radius", {"r", "theta", "R_paper"});
    const auto grid = linspace(0.0, pi, samples);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
      for (std::size_t j = 1; j + 1 < grid.size(); ++j)
        csv.row({grid[i], grid[j], torus_invariants_S1(m, grid[i], grid[j]).R_paper});
  } else if (fn == "rad-s6") {
    CsvWriter csv(out.stream(), "fig8", {"r", "rad_printed", "rad_from_four_over_f"});
    for (double r : linspace(0.0, pi, samples)) csv.row({r, printed_s6_radius(ps, r), std::sqrt(ps.f(r) / 4.0)});
  } else {
    throw UsageError("unknown profile function '" + fn + "'");
  }
  return kExitPass;
}

int cmd_verify(const PageMetric& m, const std::string& suite, const SuiteOptions& opt, const std::string& out_path) {
  const auto rep = run_suite(suite, m, opt);
  if (!out_path.empty()) {
    Output out(out_path);
    out.stream() << to_json(rep, m).dump(2) << '\n';
  }
  return print_summary(rep);
}

int cmd_family(const PageMetric& m, const std::string& id, bool surfaces, const FixedDefaults& d,
               const SuiteOptions& opt, const std::string& out_path) {
  const auto fam = parse_family(id);
  const bool is_surface = fam <= FamilyId::S6;
  if (is_surface != surfaces)
    throw UsageError(fmt::format("'{}' is not a {} family", id, surfaces ? "surface" : "hypersurface"));
  const auto rep = family_report(m, family(fam, d), opt);
  auto doc = to_json(rep.checks, m);
  doc["family"] = rep.data;
  if (!out_path.empty()) {
    Output out(out_path);
    out.stream() << doc.dump(2) << '\n';
  }
  return print_summary(rep.checks);
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& g) {
  const auto x = g.find('x');
  try {
    if (x == std::string::npos) {
      const auto n = std::stoul(g);
      return {n, n};
    }
    return {std::stoul(g.substr(0, x)), std::stoul(g.substr(x + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("--grid expects NxM, got '" + g + "'");
  }
}

int cmd_moduli(const PageMetric& m, const std::string& fam_name, const std::string& grid, const std::string& out_path) {
  const auto fam = parse_family(fam_name);
  if (fam != FamilyId::S1 && fam != FamilyId::S3) throw UsageError("--family must be S1 or S3");
  const auto [nr, nt] = parse_grid(grid);
  if (nr < 2 || (fam == FamilyId::S1 && nt < 2)) throw UsageError("--grid dimensions must be at least 2");
  Output out(out_path);
  CsvWriter csv(out.stream(), fam == FamilyId::S1 ? "fig6" : "fig7",
                {"r0", "theta0", "R_paper", "cos_angle", "cos_angle_printed", "tau_re", "tau_im", "tau_reduced_re",
                 "tau_reduced_im", "conformal_coefficient", "sqrt_conformal", "period_ratio"});
  for (const auto& row : scan_family(m, fam, nr, nt))
    csv.row({row.r0, row.theta0, row.R_paper, row.cos_angle, row.cos_angle_printed, row.tau.real(), row.tau.imag(),
             row.tau_reduced.real(), row.tau_reduced.imag(), row.conformal_coefficient, row.sqrt_conformal,
             row.period_ratio});
  return kExitPass;
}

int cmd_volume(const PageMetric& m, const std::string& method) {
  const auto& ps = m.profiles();
  const bool closed = method == "closed" || method == "both";
  const bool quad = method == "quad" || method == "both";
  if (!closed && !quad) throw UsageError("--method must be closed, quad or both");
  if (closed) fmt::print("closed      {:.15g}\n", page_volume(ps, VolumeMethod::closed));
  if (quad) {
    const auto q = page_volume_quadrature(ps);
    fmt::print("quadrature  {:.15g} (error estimate {:.2e}, {} evaluations)\n", q.value, q.error_estimate,
               q.evaluations);
    fmt::print("metric      {:.15g} (integral of sqrt det g, {})\n", metric_volume(m).value,
               to_string(m.normalization()));
  }
  return kExitPass;
}

int cmd_otoba(double rmin, double rmax, std::size_t samples, const std::string& out_path) {
  if (!(rmin < rmax)) throw UsageError("--rmin must be below --rmax");
  Output out(out_path);
  CsvWriter csv(out.stream(), "otoba", {"R", "beta", "k2", "E"});
  for (double R : linspace(rmin, rmax, samples)) {
    const auto t = otoba_terms(R);
    csv.row({R, t.beta, t.k2, t.action});
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of the Page metric: curvature, submanifolds, moduli and functionals"};
  app.require_subcommand(1);
  std::string normalization = "einstein";
  app.add_option("--normalization", normalization, "Hopf-fiber normalization")
      ->check(CLI::IsMember({"einstein", "printed"}));

  app.add_subcommand("constants", "Print a, C, scalar curvature, volume and E");

  auto* profile = app.add_subcommand("profile", "Curve data for the profile figures");
  std::string fn;
  std::size_t samples = 201;
  std::string out_path = "-";
  profile->add_option("--fn", fn)->required()->check(
      CLI::IsMember({"V", "f", "quartic", "conformal-s3", "radius-s1", "rad-s6"}));
  profile->add_option("--samples", samples, "Points on [0, pi] (quartic: [0, 1])");
  profile->add_option("--out", out_path, "CSV path, - for stdout");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  SuiteOptions opt;
  std::optional<double> tol;
  std::string report_path;
  std::vector<std::string> suite_names{"all"};
  for (auto s : kSuites) suite_names.emplace_back(s);
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names));
  verify->add_option("--tol", tol, "Replace every non-comparator tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--samples", opt.samples, "Random points for the einstein suite");
  verify->add_option("--seed", opt.seed);
  verify->add_option("--out", report_path, "JSON report path");

  FixedDefaults fixed;
  std::string id;
  auto* surface = app.add_subcommand("surface", "Report for a surface family S1..S6");
  surface->add_option("--id", id)->required()->check(CLI::IsMember({"S1", "S2", "S3", "S4", "S5", "S6"}));
  surface->add_option("--r0", fixed.r0);
  surface->add_option("--theta0", fixed.theta0);
  surface->add_option("--phi0", fixed.phi0);
  surface->add_option("--psi0", fixed.psi0);
  surface->add_option("--report", report_path, "JSON report path");
  auto* hyper = app.add_subcommand("hypersurface", "Report for a hypersurface family N1..N4");
  hyper->add_option("--id", id)->required()->check(CLI::IsMember({"N1", "N2", "N3", "N4"}));
  hyper->add_option("--r0", fixed.r0);
  hyper->add_option("--theta0", fixed.theta0);
  hyper->add_option("--phi0", fixed.phi0);
  hyper->add_option("--psi0", fixed.psi0);
  hyper->add_option("--report", report_path, "JSON report path");

  auto* moduli = app.add_subcommand("moduli", "Teichmueller point cloud of a torus family");
  std::string fam = "S1";
  std::string grid = "100x100";
  moduli->add_option("--family", fam)->check(CLI::IsMember({"S1", "S3"}));
  moduli->add_option("--grid", grid, "NxM interior grid over (r0, theta0)");
  moduli->add_option("--out", out_path, "CSV path, - for stdout");

  auto* volume = app.add_subcommand("volume", "Volume of the Page metric");
  std::string method = "both";
  volume->add_option("--method", method)->check(CLI::IsMember({"closed", "quad", "both"}));

  auto* otoba = app.add_subcommand("otoba", "Einstein-Hilbert action of the Otoba family");
  double rmin = 1.0;
  double rmax = 100.0;
  std::size_t otoba_samples = 100;
  otoba->add_option("--rmin", rmin);
  otoba->add_option("--rmax", rmax);
  otoba->add_option("--samples", otoba_samples);
  otoba->add_option("--out", out_path, "CSV path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const PageMetric m(ProfileSet::page(), parse_normalization(normalization));
    opt.tol = tol;
    if (app.got_subcommand("constants")) return cmd_constants(m);
    if (profile->parsed()) return cmd_profile(m, fn, samples, out_path);
    if (verify->parsed()) return cmd_verify(m, suite, opt, report_path);
    if (surface->parsed()) return cmd_family(m, id, true, fixed, opt, report_path);
    if (hyper->parsed()) return cmd_family(m, id, false, fixed, opt, report_path);
    if (moduli->parsed()) return cmd_moduli(m, fam, grid, out_path);
    if (volume->parsed()) return cmd_volume(m, method);
    if (otoba->parsed()) return cmd_otoba(rmin, rmax, otoba_samples, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
