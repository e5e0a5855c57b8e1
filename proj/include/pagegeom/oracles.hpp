#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "pagegeom/geometry.hpp"
#include "pagegeom/submanifolds.hpp"

namespace pagegeom::oracles {

using Metric2D = std::function<Eigen::Matrix2d(double, double)>;

/// Gaussian curvature from the Brioschi formula with central differences of
/// the metric coefficients E, F, G.
double brioschi_curvature(const Metric2D& g, double u, double v, double h = 1e-4);

/// Brioschi curvature of the induced metric of a 2D family at q.
double brioschi_curvature(const PageMetric& m, const SubmanifoldSpec& s, const std::vector<double>& q,
                          double h = 1e-4);

}  // namespace pagegeom::oracles
