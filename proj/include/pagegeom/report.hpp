#pragma once

#include <cstdint>
#include <optional>
#include <numbers>
#include <random>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pagegeom/connection.hpp"
#include "pagegeom/geometry.hpp"
#include "pagegeom/submanifolds.hpp"

namespace pagegeom {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct Check {
  std::string id;
  std::string description;
  std::optional<double> paper_value;
  double computed_value = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  Status status = Status::pass;
  /// Comparison against a printed formula; never counts as a failure.
  bool comparator = false;
};

/// status = pass iff deviation <= tolerance (NaN deviations fail).
Check make_check(std::string id, std::string description, double computed, double deviation, double tolerance,
                 std::optional<double> paper_value = std::nullopt);
/// A boolean property: deviation 0 when it holds, 1 otherwise.
Check make_property(std::string id, std::string description, bool holds, double computed = 0.0);
/// Printed-formula comparison: pass when within tolerance, else discrepancy-documented.
Check make_comparator(std::string id, std::string description, double printed, double computed, double tolerance);

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other);
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
};

nlohmann::json metadata_json(const PageMetric& m);
nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const VerificationReport& r, const PageMetric& m);

struct SuiteOptions {
  /// Replaces the tolerance of pipeline and oracle checks. Checks against a
  /// printed reference value and comparators keep their own.
  std::optional<double> tol;
  std::size_t samples = 500;  ///< random points for the einstein suite
  std::size_t connection_samples = 100;
  std::uint64_t seed = 20240601;
};

inline constexpr std::string_view kSuites[] = {"einstein", "connection", "geodesic",   "curvature",
                                               "gaussbonnet", "functionals", "moduli"};

/// One of kSuites or "all". Throws std::invalid_argument on unknown names.
VerificationReport run_suite(std::string_view suite, const PageMetric& m, const SuiteOptions& opt = {});

/// Uniform random point at least `margin` away from the degenerate loci.
template <class Rng>
ChartPoint random_chart_point(Rng& rng, double margin = 1e-2) {
  constexpr double pi = std::numbers::pi;
  std::uniform_real_distribution<double> in_r(margin, pi - margin);
  std::uniform_real_distribution<double> in_phi(0.0, 2.0 * pi);
  std::uniform_real_distribution<double> in_psi(0.0, 4.0 * pi);
  ChartPoint p;
  p.r = in_r(rng);
  p.phi = in_phi(rng);
  p.psi = in_psi(rng);
  p.theta = in_r(rng);
  return p;
}

/// Pipeline data and checks for a single family at its fixed values.
struct FamilyReport {
  nlohmann::json data;
  VerificationReport checks;
};
FamilyReport family_report(const PageMetric& m, const SubmanifoldSpec& s, const SuiteOptions& opt = {});

/// CSV with a "# source: <id>" comment line and a header row. Numbers use
/// shortest round-trip formatting independent of the locale.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::string_view source, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  std::size_t width_;
};

std::string format_double(double x);

}  // namespace pagegeom
