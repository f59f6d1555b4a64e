#pragma once

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <string>
#include <vector>

namespace uavsim {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double dist2d(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Square observation window centered at the origin.
struct Window {
  double half_width = 0.0;     // meters
  double core_fraction = 0.5;  // area fraction of the statistics sub-window

  double area() const { return 4.0 * half_width * half_width; }
  bool contains(const Point2& p) const {
    return p.x >= -half_width && p.x <= half_width && p.y >= -half_width &&
           p.y <= half_width;
  }
  /// True if p lies in the central sub-window holding `fraction` of the
  /// area. Statistics are collected there to suppress edge effects.
  bool in_core(const Point2& p, double fraction) const {
    const double h = half_width * std::sqrt(fraction);
    return p.x >= -h && p.x <= h && p.y >= -h && p.y <= h;
  }
  bool in_core(const Point2& p) const { return in_core(p, core_fraction); }
};

using PointSet = std::vector<Point2>;

/// Matern cluster realization: parents plus per-parent daughter points.
struct ClusterSet {
  PointSet parents;
  std::vector<PointSet> daughters;  // daughters[i] belong to parents[i]
  double radius = 0.0;              // disk radius R, meters
  double mean_per_cluster = 0.0;    // lambda_M

  std::size_t total_daughters() const {
    std::size_t n = 0;
    for (const auto& d : daughters) n += d.size();
    return n;
  }
};

/// Aggregator stop points, one per cluster, at the cluster centroid.
struct DronePlan {
  PointSet stops;                         // 2D projection of stop points
  double altitude = 0.0;                  // meters
  std::vector<std::size_t> cluster_index; // stop i serves cluster_index[i]
};

/// Homogeneous PPP in the window: Poisson count, i.i.d. uniform positions.
PointSet sample_hppp(double density, const Window& window, std::mt19937_64& rng);

/// Matern cluster process: HPPP parents, Poisson(lambda_m) daughters
/// area-uniform on a disk of radius r around each parent.
ClusterSet sample_matern(double lambda_cl, double lambda_m, double r,
                         const Window& window, std::mt19937_64& rng);

/// Deterministic hexagonal BS lattice with the given site density.
PointSet hex_lattice(double density, const Window& window);

/// Index and distance of the nearest set member; ties -> lowest index.
/// Throws std::invalid_argument on an empty set.
std::pair<std::size_t, double> nearest(const Point2& p, const PointSet& set);

/// Arithmetic mean of the points. Throws on empty input.
Point2 centroid(const PointSet& points);

/// Stop points for all clusters: centroid of each cluster's daughters, or
/// the parent point when the cluster is empty.
DronePlan plan_stops(const ClusterSet& clusters, double altitude);

/// One row per point: kind,cluster,x,y,z.
std::string realization_csv(const PointSet& bs, const PointSet& ue,
                            const ClusterSet& clusters, const DronePlan& drones);

}  // namespace uavsim
