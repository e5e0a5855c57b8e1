#include "pagegeom/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "pagegeom/functionals.hpp"
#include "pagegeom/moduli.hpp"
#include "pagegeom/oracles.hpp"
#include "pagegeom/profiles.hpp"

namespace pagegeom {

using nlohmann::json;
using std::numbers::pi;

Check make_check(std::string id, std::string description, double computed, double deviation, double tolerance,
                 std::optional<double> paper_value) {
  Check c{std::move(id), std::move(description), paper_value, computed, deviation, tolerance};
  c.status = deviation <= tolerance ? Status::pass : Status::fail;
  return c;
}

Check make_property(std::string id, std::string description, bool holds, double computed) {
  return make_check(std::move(id), std::move(description), computed, holds ? 0.0 : 1.0, 0.0);
}

Check make_comparator(std::string id, std::string description, double printed, double computed, double tolerance) {
  Check c = make_check(std::move(id), std::move(description), computed, std::abs(printed - computed), tolerance, printed);
  if (c.status == Status::fail) c.status = Status::discrepancy_documented;
  c.comparator = true;
  return c;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

}  // namespace

json metadata_json(const PageMetric& m) {
  const auto& ps = m.profiles();
  return {{"a", ps.a()},
          {"C", ps.C()},
          {"fiber_constant", m.fiber_constant()},
          {"normalization", std::string(to_string(m.normalization()))},
          {"version", std::string(kVersion)},
          {"timestamp", utc_timestamp()}};
}

json to_json(const Check& c) {
  return {{"id", c.id},
          {"description", c.description},
          {"paper_value", c.paper_value ? number_or_null(*c.paper_value) : json(nullptr)},
          {"computed_value", number_or_null(c.computed_value)},
          {"deviation", number_or_null(c.deviation)},
          {"tolerance", c.tolerance},
          {"status", to_string(c.status)}};
}

json to_json(const VerificationReport& r, const PageMetric& m) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"schema", kReportSchema},
          {"suite", r.suite},
          {"metadata", metadata_json(m)},
          {"summary",
           {{"total", r.checks.size()},
            {"pass", r.count(Status::pass)},
            {"fail", r.count(Status::fail)},
            {"discrepancy_documented", r.count(Status::discrepancy_documented)}}},
          {"checks", checks}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::string_view source, const std::vector<std::string>& header)
    : out_(out), width_(header.size()) {
  out_ << "# source: " << source << '\n';
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != width_) throw std::invalid_argument("CsvWriter: row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

namespace {

// --tol applies to pipeline and oracle checks; checks against printed reference
// values keep the tolerance that matches the printed precision.
double tol_or(const SuiteOptions& opt, double fallback) { return opt.tol.value_or(fallback); }

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

std::vector<double> cell_centres(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return out;
}

/// Gaussian curvature over a cell-centred grid of a 2D family.
struct CurvatureStats {
  double mean = 0.0;
  double stddev = 0.0;
  double max_abs = 0.0;
  std::size_t samples = 0;
};

CurvatureStats curvature_stats(const PageMetric& m, const SubmanifoldSpec& s, std::size_t n) {
  const auto [u0, u1] = SubmanifoldSpec::coordinate_range(s.free[0]);
  const auto [v0, v1] = SubmanifoldSpec::coordinate_range(s.free[1]);
  std::vector<double> ks;
  for (double u : cell_centres(u0, u1, n))
    for (double v : cell_centres(v0, v1, n)) ks.push_back(induced_curvature(m, s, {u, v}).gaussian());
  CurvatureStats st;
  st.samples = ks.size();
  for (double k : ks) {
    st.mean += k;
    st.max_abs = std::max(st.max_abs, std::abs(k));
  }
  st.mean /= static_cast<double>(ks.size());
  double var = 0.0;
  for (double k : ks) var += (k - st.mean) * (k - st.mean);
  st.stddev = std::sqrt(var / static_cast<double>(ks.size()));
  return st;
}

/// Generic interior sample of the free coordinates.
std::vector<double> sample_free_point(const SubmanifoldSpec& s) {
  static constexpr double kByCoord[] = {1.1, 0.7, 2.3, 1.3};
  std::vector<double> q;
  for (std::size_t k : s.free) q.push_back(kByCoord[k]);
  return q;
}

void profiles_checks(VerificationReport& rep, const PageMetric& m, const SuiteOptions& opt) {
  const auto& ps = m.profiles();
  const double a = ps.a();
  rep.add(make_check("profiles.quartic_residual", "|p(a)| at the solved constant", page_quartic(a),
                     std::abs(page_quartic(a)), tol_or(opt, 1e-12)));
  rep.add(make_check("profiles.a", "Page constant a", a, std::abs(a - 0.28170), 5e-6, 0.28170));
  rep.add(make_check("profiles.C", "C = (2/(3+a^2))^2", ps.C(), std::abs(ps.C() - 0.42183), 5e-6, 0.42183));
  const struct {
    const char* id;
    Profile which;
    double r, printed, tol;
  } caps[] = {{"profiles.V_max", Profile::V, pi / 2, 0.342397, 1e-4},
              {"profiles.f_max", Profile::f, pi / 2, 1.152811, 1e-4},
              {"profiles.V_endpoint", Profile::V, 0.0, 0.324776, 5e-4},
              {"profiles.f_endpoint", Profile::f, 0.0, 1.061462, 5e-4}};
  for (const auto& c : caps) {
    const double v = ps.eval(c.which, c.r, 0);
    rep.add(make_check(c.id, fmt::format("{}({:.6f})", to_string(c.which), c.r), v, std::abs(v - c.printed),
                       c.tol, c.printed));
  }
}

VerificationReport einstein_suite(const PageMetric& m, const SuiteOptions& opt) {
  VerificationReport rep{"einstein", {}};
  profiles_checks(rep, m, opt);
  const double expected = page_scalar_curvature(m.profiles());
  std::mt19937_64 rng(opt.seed);
  CurvatureSymmetryResiduals worst;
  double worst_torsion = 0.0;
  for (std::size_t i = 0; i < opt.samples; ++i) {
    const auto p = random_chart_point(rng);
    const auto k = ambient_frame_curvature(m, p);
    const auto id = fmt::format("einstein.sample.{:03}", i);
    const auto where = fmt::format("(r, phi, psi, theta) = ({:.6f}, {:.6f}, {:.6f}, {:.6f})", p.r, p.phi, p.psi, p.theta);
    rep.add(make_check(id + ".scalar", "relative error of the scalar curvature vs 12(1+a^2) at " + where, k.scalar,
                       rel(k.scalar, expected), tol_or(opt, 1e-6)));
    double res = 0.0;
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t d = 0; d < 4; ++d)
        res = std::max(res, std::abs(k.ricci[b][d] - (b == d ? expected / 4.0 : 0.0)));
    rep.add(make_check(id + ".ricci", "max |Ric - 3(1+a^2) g| at " + where, res, res, tol_or(opt, 1e-6)));
    const auto sym = symmetry_residuals(k);
    worst.antisymmetry = std::max(worst.antisymmetry, sym.antisymmetry);
    worst.pair_skew = std::max(worst.pair_skew, sym.pair_skew);
    worst.bianchi = std::max(worst.bianchi, sym.bianchi);
    worst.ricci_symmetry = std::max(worst.ricci_symmetry, sym.ricci_symmetry);
    worst_torsion = std::max(worst_torsion, torsion_residual(k.connection));
  }
  rep.add(make_check("einstein.riemann.antisymmetry", "max |R^a_bmn + R^a_bnm|", worst.antisymmetry,
                     worst.antisymmetry, tol_or(opt, 1e-10)));
  rep.add(make_check("einstein.riemann.pair_skew", "max |R_abmn + R_bamn|", worst.pair_skew, worst.pair_skew,
                     tol_or(opt, 1e-10)));
  rep.add(make_check("einstein.riemann.bianchi", "max first Bianchi residual", worst.bianchi, worst.bianchi,
                     tol_or(opt, 1e-10)));
  rep.add(make_check("einstein.ricci.symmetry", "max |Ric_bd - Ric_db|", worst.ricci_symmetry, worst.ricci_symmetry,
                     tol_or(opt, 1e-10)));
  rep.add(make_check("einstein.torsion", "max torsion residual over samples", worst_torsion, worst_torsion,
                     tol_or(opt, 1e-10)));
  return rep;
}

VerificationReport connection_suite(const PageMetric& m, const SuiteOptions& opt) {
  VerificationReport rep{"connection", {}};
  std::mt19937_64 rng(opt.seed + 1);
  double worst_torsion = 0.0;
  double worst_skew = 0.0;
  for (std::size_t i = 0; i < opt.connection_samples; ++i) {
    const auto p = random_chart_point(rng, 5e-2);
    const auto fc = ambient_frame_connection(m, p);
    const auto oracle = connection_from_christoffels(m, p);
    double dev = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c) dev = std::max(dev, std::abs(fc.gamma[a][b][c] - oracle(a, b, c)));
    rep.add(make_check(fmt::format("connection.oracle.{:03}", i),
                       fmt::format("max |Gamma - Gamma_christoffel| at r={:.6f}, theta={:.6f}", p.r, p.theta), dev, dev,
                       tol_or(opt, 5e-5)));
    worst_torsion = std::max(worst_torsion, torsion_residual(fc));
    worst_skew = std::max(worst_skew, skew_residual(fc.gamma));
  }
  rep.add(make_check("connection.torsion", "max torsion residual", worst_torsion, worst_torsion, tol_or(opt, 1e-10)));
  rep.add(make_check("connection.skew", "max |Gamma^a_bc + Gamma^b_ac|", worst_skew, worst_skew, tol_or(opt, 1e-12)));

  const ChartPoint p{1.1, 0.7, 2.3, 1.3};
  for (const auto& e : paper_connection_table(m, p)) {
    double printed = 0.0;
    double computed = 0.0;
    for (std::size_t k = 0; k < e.printed_values.size(); ++k)
      if (std::abs(e.printed_values[k] - e.computed_values[k]) >= std::abs(printed - computed)) {
        printed = e.printed_values[k];
        computed = e.computed_values[k];
      }
    Check c{"connection.table." + e.label, e.printed + (e.note.empty() ? "" : " [" + e.note + "]"), printed, computed,
            e.deviation, 1e-10, e.status, true};
    rep.add(std::move(c));
  }
  return rep;
}

VerificationReport geodesic_suite(const PageMetric& m, const SuiteOptions& opt) {
  VerificationReport rep{"geodesic", {}};
  for (const auto& s : catalog()) {
    const auto res = is_totally_geodesic(m, s, s.dim() == 2 ? 16 : 8, tol_or(opt, 1e-8), 5);
    rep.add(make_check("geodesic." + s.name() + ".scan",
                       fmt::format("max |II| over the free grid and fixed-parameter scan ({} samples)", res.samples),
                       res.max_ii, res.max_ii, tol_or(opt, 1e-8)));
    const auto at = is_totally_geodesic_at(m, s, s.dim() == 2 ? 16 : 8, tol_or(opt, 1e-8));
    rep.add(make_check("geodesic." + s.name() + ".defaults", "max |II| at r0 = theta0 = pi/2, phi0 = psi0 = 0",
                       at.max_ii, at.max_ii, tol_or(opt, 1e-8)));
  }
  return rep;
}

void brioschi_check(VerificationReport& rep, const PageMetric& m, const SubmanifoldSpec& s, const SuiteOptions& opt) {
  const auto [u0, u1] = SubmanifoldSpec::coordinate_range(s.free[0]);
  const auto [v0, v1] = SubmanifoldSpec::coordinate_range(s.free[1]);
  double dev = 0.0;
  double at_worst = 0.0;
  for (double u : cell_centres(u0, u1, 6))
    for (double v : cell_centres(v0, v1, 6)) {
      const double k = induced_curvature(m, s, {u, v}).gaussian();
      const double d = std::abs(k - oracles::brioschi_curvature(m, s, {u, v}));
      if (d >= dev) {
        dev = d;
        at_worst = k;
      }
    }
  rep.add(make_check("curvature." + s.name() + ".brioschi", "max |K - K_brioschi| over a 6x6 grid", at_worst, dev,
                     tol_or(opt, 1e-5)));
}

void s6_constant_checks(VerificationReport& rep, const PageMetric& m, const SubmanifoldSpec& s,
                        const SuiteOptions& opt, const std::string& prefix) {
  const double r0 = *s.fixed_value(kR);
  const auto st = curvature_stats(m, s, 12);
  rep.add(make_check(prefix + ".stddev", fmt::format("stddev of K over the sphere at r0 = {:.6f}", r0), st.mean,
                     st.stddev, tol_or(opt, 1e-10)));
  const double printed = 4.0 / m.profiles().f(r0);
  rep.add(make_check(prefix + ".four_over_f", fmt::format("K = 4/f(r0) at r0 = {:.6f}", r0), st.mean,
                     std::abs(st.mean - printed), tol_or(opt, 1e-10), printed));
}

VerificationReport curvature_suite(const PageMetric& m, const SuiteOptions& opt) {
  VerificationReport rep{"curvature", {}};
  for (FamilyId id : {FamilyId::S1, FamilyId::S3}) {
    double worst = 0.0;
    for (double r0 : cell_centres(0.0, pi, 5))
      for (double th0 : cell_centres(0.0, pi, 5)) {
        FixedDefaults d;
        d.r0 = r0;
        d.theta0 = th0;
        worst = std::max(worst, curvature_stats(m, family(id, d), 6).max_abs);
      }
    rep.add(make_check(fmt::format("curvature.{}.flat", to_string(id)), "max |K| over a fixed-parameter scan", worst,
                       worst, tol_or(opt, 1e-9)));
  }
  s6_constant_checks(rep, m, family(FamilyId::S6), opt, "curvature.S6");
  for (FamilyId id : {FamilyId::S2, FamilyId::S4, FamilyId::S5}) brioschi_check(rep, m, family(id), opt);

  std::mt19937_64 rng(opt.seed + 2);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto p = random_chart_point(rng, 5e-2);
    const auto k = ambient_frame_curvature(m, p);
    const auto oracle = riemann_from_christoffels(m, p);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t c = 0; c < 4; ++c)
          for (std::size_t d = 0; d < 4; ++d) worst = std::max(worst, std::abs(k.riemann[a][b][c][d] - oracle[a][b][c][d]));
  }
  rep.add(make_check("curvature.riemann_oracle", "max |R - R_christoffel| over 20 points", worst, worst,
                     tol_or(opt, 1e-5)));

  for (const auto& s : catalog()) {
    for (const auto& fc : paper_curvature_formula(m, s, sample_free_point(s))) {
      Check c{"curvature." + s.name() + ".printed." + fc.component, fc.printed, fc.printed_value, fc.computed_value,
              fc.deviation, 1e-8, fc.status, true};
      rep.add(std::move(c));
    }
  }
  return rep;
}

VerificationReport gaussbonnet_suite(const PageMetric& m, const SuiteOptions&) {
  VerificationReport rep{"gaussbonnet", {}};
  const auto s5 = gauss_bonnet(m, family(FamilyId::S5));
  rep.add(make_check("gaussbonnet.S5", "integral of K dA over S5 by adaptive quadrature", s5.integral,
                     std::abs(s5.integral - 4.0 * pi), 1e-6, 4.0 * pi));
  FixedDefaults d;
  d.r0 = 0.0;
  const auto s6 = gauss_bonnet(m, family(FamilyId::S6, d));
  rep.add(make_check("gaussbonnet.S6", "K * area for S6 at r0 = 0 (" + s6.method + ")", s6.integral,
                     std::abs(s6.integral - 4.0 * pi), 1e-10, 4.0 * pi));
  const auto interior = family(FamilyId::S6);
  rep.add(make_property("gaussbonnet.S6.interior_closed", "S6 at r0 = pi/2 closes into a sphere",
                        is_closed_surface(m, interior)));
  return rep;
}

VerificationReport functionals_suite(const PageMetric& m, const SuiteOptions& opt) {
  VerificationReport rep{"functionals", {}};
  const auto& ps = m.profiles();
  const double closed = page_volume(ps, VolumeMethod::closed);
  const auto quad = page_volume_quadrature(ps);
  rep.add(make_check("functionals.volume.closed_vs_quadrature", "relative gap between closed-form and integrated volume",
                     quad.value, rel(quad.value, closed), tol_or(opt, 1e-6)));
  const auto eh = einstein_hilbert_page(ps);
  rep.add(make_check("functionals.E.identity", "R_scal sqrt(Vol) vs displayed closed form", eh.closed_form,
                     rel(eh.from_volume, eh.closed_form), tol_or(opt, 1e-10)));
  rep.add(make_check("functionals.E.value", "E(g_Page)", eh.from_volume, std::abs(eh.from_volume - 23.694254),
                     1e-5, 23.694254));
  const auto b = reference_bounds();
  rep.add(make_check("functionals.bounds.aubin", "24 pi sqrt(2/3)", b.aubin, std::abs(b.aubin - 61.562393),
                     1e-5, 61.562393));
  rep.add(make_check("functionals.bounds.conjectured", "12 sqrt(2) pi", b.conjectured,
                     std::abs(b.conjectured - 53.314598), 1e-5, 53.314598));
  rep.add(make_property("functionals.ordering", "E_page < conjectured < aubin",
                        eh.from_volume < b.conjectured && b.conjectured < b.aubin, eh.from_volume));

  const double e8 = otoba_action(8.0);
  const double e8_exact = 8.0 * std::pow(2.0, 0.25) * std::pow(pi, 1.5);
  rep.add(make_check("functionals.otoba.R8", "E(8) = 8 2^(1/4) pi^(3/2)", e8, rel(e8, e8_exact), tol_or(opt, 1e-10)));
  // Log-spaced in |R| over [1e-6, 1e4] on both sides of 0, plus R = 0.
  std::vector<double> scan{0.0};
  for (int i = 0; i <= 1000; ++i) {
    const double r = std::pow(10.0, -6.0 + 10.0 * i / 1000.0);
    scan.push_back(r);
    scan.push_back(-r);
  }
  bool k2_ok = true;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double R : scan) {
    const auto t = otoba_terms(R);
    k2_ok = k2_ok && t.k2 > 0.0 && t.k2 < 1.0;
    if (t.action > 0.0) lo = std::min(lo, t.action);
    hi = std::max(hi, t.action);
  }
  rep.add(make_property("functionals.otoba.k2_range", "k^2 in (0, 1) for R in [-1e4, 1e4]", k2_ok));
  rep.add(make_check("functionals.otoba.small", "min positive E on the scan below 1e-2", lo, std::max(0.0, lo - 1e-2),
                     0.0));
  rep.add(make_check("functionals.otoba.large", "max E on the scan above 1e3", hi, std::max(0.0, 1e3 - hi), 0.0));
  bool increasing = true;
  for (int R = 1; R < 100; ++R) increasing = increasing && otoba_action(R + 1) > otoba_action(R);
  rep.add(make_property("functionals.otoba.monotone", "E strictly increasing on R = 1..100", increasing));
  return rep;
}

VerificationReport moduli_suite(const PageMetric& m, const SuiteOptions& opt) {
  VerificationReport rep{"moduli", {}};
  std::mt19937_64 rng(opt.seed + 3);
  std::uniform_real_distribution<double> re(-5.0, 5.0);
  std::uniform_real_distribution<double> im(0.05, 3.0);
  std::uniform_int_distribution<int> entry(-6, 6);
  double idem = 0.0;
  double invariance = 0.0;
  int transforms = 0;
  while (transforms < 20) {
    const std::complex<double> z(re(rng), im(rng));
    const int a = entry(rng), b = entry(rng), c = entry(rng);
    if (a == 0) continue;
    if ((1 + b * c) % a != 0) continue;
    const int d = (1 + b * c) / a;  // a d - b c = 1
    const auto w = (static_cast<double>(a) * z + static_cast<double>(b)) / (static_cast<double>(c) * z + static_cast<double>(d));
    const auto r1 = reduce_to_fundamental_domain(z).tau;
    const auto r2 = reduce_to_fundamental_domain(w).tau;
    invariance = std::max(invariance, std::abs(r1 - r2));
    idem = std::max(idem, std::abs(reduce_to_fundamental_domain(r1).tau - r1));
    ++transforms;
  }
  rep.add(make_check("moduli.idempotent", "max |reduce(reduce(z)) - reduce(z)|", idem, idem, 0.0));
  rep.add(make_check("moduli.psl2z_invariant", "max |reduce(z) - reduce(g z)| over 20 unimodular g", invariance,
                     invariance, tol_or(opt, 1e-10)));

  const auto s1 = scan_family(m, FamilyId::S1, 100, 100);
  bool neg = false, pos = false, in_range = true;
  double transcription = 0.0;
  for (const auto& row : s1) {
    neg = neg || row.cos_angle_printed < 0.0;
    pos = pos || row.cos_angle_printed > 0.0;
    in_range = in_range && std::abs(row.cos_angle_printed) <= 1.0;
    transcription = std::max(transcription, std::abs(row.cos_angle_printed - row.cos_angle));
  }
  rep.add(make_property("moduli.S1.cos_range", "printed cos(Theta) in [-1, 1] over a 100x100 scan", in_range));
  rep.add(make_property("moduli.S1.cos_signs", "printed cos(Theta) attains both signs", neg && pos));
  rep.add(make_check("moduli.S1.cos_transcription", "printed cos(Theta) vs induced-metric cosine", transcription,
                     transcription, tol_or(opt, 1e-12)));

  // Printed R formula on a 200x200 grid including the axes' midpoints.
  double rmin = std::numeric_limits<double>::infinity();
  double at_r = 0.0, at_th = 0.0;
  for (int i = 1; i <= 200; ++i)
    for (int j = 1; j <= 200; ++j) {
      const double r0 = pi * i / 201.0 + (i == 100 ? pi / 402.0 : 0.0);
      const double th0 = pi * j / 201.0 + (j == 100 ? pi / 402.0 : 0.0);
      const double R = torus_invariants_S1(m, r0, th0).R_paper;
      if (R < rmin) {
        rmin = R;
        at_r = r0;
        at_th = th0;
      }
    }
  auto rc = make_comparator("moduli.S1.radius_min",
                            fmt::format("min of the printed radius function over a 200x200 grid, at ({:.6f}, {:.6f})",
                                        at_r, at_th),
                            0.408520, rmin, 1e-6);
  rep.add(rc);

  const auto s3 = torus_invariants_S3(m, pi / 2);
  rep.add(make_check("moduli.S3.conformal_max", "C sin^2 r / (f V) at r = pi/2", s3.conformal_coefficient,
                     std::abs(s3.conformal_coefficient - 1.068802), 2e-4, 1.068802));
  const auto s3_scan = scan_family(m, FamilyId::S3, 50, 1);
  double max_re = 0.0;
  for (const auto& row : s3_scan) max_re = std::max(max_re, std::abs(row.tau.real()));
  rep.add(make_check("moduli.S3.imaginary", "max |Re tau| over an S3 scan", max_re, max_re, tol_or(opt, 1e-12)));
  const auto half = reduce_to_fundamental_domain({0.0, 0.5}).tau;
  rep.add(make_check("moduli.S_move", "reduce(0.5 i) = 2 i", half.imag(), std::abs(half - std::complex<double>(0, 2)),
                     tol_or(opt, 1e-12)));
  return rep;
}

}  // namespace

VerificationReport run_suite(std::string_view suite, const PageMetric& m, const SuiteOptions& opt) {
  if (suite == "einstein") return einstein_suite(m, opt);
  if (suite == "connection") return connection_suite(m, opt);
  if (suite == "geodesic") return geodesic_suite(m, opt);
  if (suite == "curvature") return curvature_suite(m, opt);
  if (suite == "gaussbonnet") return gaussbonnet_suite(m, opt);
  if (suite == "functionals") return functionals_suite(m, opt);
  if (suite == "moduli") return moduli_suite(m, opt);
  if (suite == "all") {
    VerificationReport all{"all", {}};
    for (auto name : kSuites) all.append(run_suite(name, m, opt));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

FamilyReport family_report(const PageMetric& m, const SubmanifoldSpec& s, const SuiteOptions& opt) {
  FamilyReport out;
  out.checks.suite = s.name();
  const auto q = sample_free_point(s);
  json fixed = json::object();
  static constexpr const char* kNames[] = {"r", "phi", "psi", "theta"};
  for (const auto& [k, v] : s.fixed) fixed[kNames[k]] = v;
  json free = json::array();
  for (std::size_t k : s.free) free.push_back(kNames[k]);

  const auto ii = second_fundamental_form(m, s, q);
  const auto kc = induced_curvature(m, s, q);
  json sample = {{"free", q},
                 {"tangent_span_residual", tangent_span_residual(m, s, q)},
                 {"adapted", ii.adapted},
                 {"second_fundamental_form_max", ii.max_abs()},
                 {"scalar_curvature", kc.scalar},
                 {"frame_labels", kc.labels},
                 {"riemann", kc.riemann}};
  if (s.dim() == 2) sample["gaussian_curvature"] = kc.gaussian();

  out.data = {{"family", s.name()},
              {"dimension", s.dim()},
              {"topology", s.topology},
              {"fixed", fixed},
              {"free", free},
              {"tangent_frame", s.tangent_frame},
              {"adapted_family", family_is_adapted(m, s)},
              {"sample", sample}};

  const double tol = tol_or(opt, 1e-8);
  const auto tg = is_totally_geodesic_at(m, s, s.dim() == 2 ? 16 : 8, tol);
  out.checks.add(make_check(s.name() + ".totally_geodesic", fmt::format("max |II| over {} samples", tg.samples),
                            tg.max_ii, tg.max_ii, tol));
  out.data["totally_geodesic"] = {{"max_ii", tg.max_ii}, {"samples", tg.samples}, {"worst_point", tg.worst_point}};

  if (s.dim() == 2) {
    const auto st = curvature_stats(m, s, 12);
    out.data["curvature_stats"] = {{"mean", st.mean}, {"stddev", st.stddev}, {"max_abs", st.max_abs}, {"samples", st.samples}};
    if (s.id == FamilyId::S1 || s.id == FamilyId::S3)
      out.checks.add(make_check(s.name() + ".flat", "max |K| over a 12x12 grid", st.max_abs, st.max_abs, tol_or(opt, 1e-9)));
    if (s.id == FamilyId::S6) {
      s6_constant_checks(out.checks, m, s, opt, s.name());
      const double r0 = *s.fixed_value(kR);
      out.data["radius"] = {{"printed", printed_s6_radius(m.profiles(), r0)},
                            {"pipeline", st.mean > 0.0 ? 1.0 / std::sqrt(st.mean) : std::nan("")}};
    }
    if (s.id == FamilyId::S2 || s.id == FamilyId::S4 || s.id == FamilyId::S5) {
      VerificationReport tmp;
      brioschi_check(tmp, m, s, opt);
      for (auto& c : tmp.checks) {
        c.id = s.name() + ".brioschi";
        out.checks.add(c);
      }
    }
    const bool closed = is_closed_surface(m, s);
    out.data["closed"] = closed;
    if (closed) {
      const auto gb = gauss_bonnet(m, s);
      out.data["gauss_bonnet"] = {{"integral", gb.integral},  {"error_estimate", gb.error_estimate},
                                  {"area", gb.area},          {"mean_curvature", gb.mean_curvature_k},
                                  {"stddev", gb.curvature_stddev}, {"method", gb.method}};
      out.checks.add(make_check(s.name() + ".gauss_bonnet", "integral of K dA vs 4 pi", gb.integral,
                                std::abs(gb.integral - 4.0 * pi), 1e-6, 4.0 * pi));
    }
  }
  for (const auto& fc : paper_curvature_formula(m, s, q)) {
    Check c{s.name() + ".printed." + fc.component, fc.printed, fc.printed_value, fc.computed_value, fc.deviation,
            1e-8, fc.status, true};
    out.checks.add(std::move(c));
  }
  return out;
}

}  // namespace pagegeom
