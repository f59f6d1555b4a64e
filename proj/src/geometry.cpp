#include "uavsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace uavsim {

PointSet sample_hppp(double density, const Window& window, std::mt19937_64& rng) {
  if (density < 0.0) throw std::invalid_argument("sample_hppp: negative density");
  if (window.half_width <= 0.0)
    throw std::invalid_argument("sample_hppp: window half_width must be > 0");
  std::poisson_distribution<int> count_dist(density * window.area());
  std::uniform_real_distribution<double> pos(-window.half_width, window.half_width);
  const int n = density > 0.0 ? count_dist(rng) : 0;
  PointSet pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = pos(rng);
    const double y = pos(rng);
    pts.push_back({x, y});
  }
  return pts;
}

ClusterSet sample_matern(double lambda_cl, double lambda_m, double r,
                         const Window& window, std::mt19937_64& rng) {
  if (lambda_cl < 0.0 || lambda_m < 0.0)
    throw std::invalid_argument("sample_matern: negative density");
  if (r <= 0.0) throw std::invalid_argument("sample_matern: radius must be > 0");
  ClusterSet cs;
  cs.radius = r;
  cs.mean_per_cluster = lambda_m;
  cs.parents = sample_hppp(lambda_cl, window, rng);
  cs.daughters.resize(cs.parents.size());
  std::poisson_distribution<int> count_dist(lambda_m);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < cs.parents.size(); ++i) {
    const int n = lambda_m > 0.0 ? count_dist(rng) : 0;
    cs.daughters[i].reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      // area-uniform on the disk: radial CDF rho^2/R^2
      const double rho = r * std::sqrt(unit(rng));
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      cs.daughters[i].push_back({cs.parents[i].x + rho * std::cos(phi),
                                 cs.parents[i].y + rho * std::sin(phi)});
    }
  }
  return cs;
}

PointSet hex_lattice(double density, const Window& window) {
  if (density <= 0.0) throw std::invalid_argument("hex_lattice: density must be > 0");
  // site area of a hex lattice with pitch d is sqrt(3)/2 * d^2
  const double pitch = std::sqrt(2.0 / (std::sqrt(3.0) * density));
  const double row_h = pitch * std::sqrt(3.0) / 2.0;
  PointSet pts;
  const int rows = static_cast<int>(std::ceil(window.half_width / row_h)) + 1;
  const int cols = static_cast<int>(std::ceil(window.half_width / pitch)) + 1;
  for (int i = -rows; i <= rows; ++i) {
    const double y = i * row_h;
    const double offset = (i % 2 == 0) ? 0.0 : pitch / 2.0;
    for (int j = -cols; j <= cols; ++j) {
      const Point2 p{j * pitch + offset, y};
      if (window.contains(p)) pts.push_back(p);
    }
  }
  return pts;
}

std::pair<std::size_t, double> nearest(const Point2& p, const PointSet& set) {
  if (set.empty()) throw std::invalid_argument("nearest: empty point set");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const double d = dist2d(p, set[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return {best, best_d};
}

Point2 centroid(const PointSet& points) {
  if (points.empty()) throw std::invalid_argument("centroid: empty point list");
  double sx = 0.0, sy = 0.0;
  for (const auto& p : points) {
    sx += p.x;
    sy += p.y;
  }
  const double n = static_cast<double>(points.size());
  return {sx / n, sy / n};
}

DronePlan plan_stops(const ClusterSet& clusters, double altitude) {
  DronePlan plan;
  plan.altitude = altitude;
  plan.stops.reserve(clusters.parents.size());
  plan.cluster_index.reserve(clusters.parents.size());
  for (std::size_t i = 0; i < clusters.parents.size(); ++i) {
    plan.stops.push_back(clusters.daughters[i].empty() ? clusters.parents[i]
                                                       : centroid(clusters.daughters[i]));
    plan.cluster_index.push_back(i);
  }
  return plan;
}

std::string realization_csv(const PointSet& bs, const PointSet& ue,
                            const ClusterSet& clusters, const DronePlan& drones) {
  std::ostringstream out;
  out << "kind,cluster,x,y,z\n";
  for (const auto& p : bs) out << "bs,-1," << p.x << ',' << p.y << ",0\n";
  for (const auto& p : ue) out << "ue,-1," << p.x << ',' << p.y << ",0\n";
  for (std::size_t c = 0; c < clusters.daughters.size(); ++c)
    for (const auto& p : clusters.daughters[c])
      out << "iot," << c << ',' << p.x << ',' << p.y << ",0\n";
  for (std::size_t i = 0; i < drones.stops.size(); ++i)
    out << "drone," << drones.cluster_index[i] << ',' << drones.stops[i].x << ','
        << drones.stops[i].y << ',' << drones.altitude << '\n';
  return out.str();
}

}  // namespace uavsim
