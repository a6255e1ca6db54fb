#include "v2vbeam/polar/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "v2vbeam/angles.hpp"

namespace v2vbeam::polar {

std::pair<double, double> box_center(const BoundingBox& box) {
  return {0.5 * (box.x1 + box.x2), 0.5 * (box.y1 + box.y2)};
}

std::pair<double, double> image_polar(double x_center, double y_center) {
  const double dx = x_center - 0.5;
  const double dy = 1.0 - y_center;
  const double radius = std::hypot(dx, dy);
  if (radius == 0.0) return {0.0, 0.0};
  double angle = rad_to_deg(std::atan2(dy, dx));
  return {radius, angle};
}

double merged_angle_from_front_x(double x_center) {
  return wrap_deg(90.0 - 180.0 * x_center);
}

double merged_angle_from_back_x(double x_center) {
  return wrap_deg(90.0 + 180.0 * x_center);
}

double front_x_from_merged_angle(double angle_deg) {
  return (90.0 - wrap_deg_signed(angle_deg)) / 180.0;
}

double back_x_from_merged_angle(double angle_deg) {
  return (wrap_deg(angle_deg) - 90.0) / 180.0;
}

std::pair<double, double> polar_to_cartesian(const PolarPoint& p) {
  const double rad = deg_to_rad(p.angle_deg);
  return {p.radius * std::cos(rad), p.radius * std::sin(rad)};
}

PolarPoint cartesian_to_polar(double u, double v) {
  PolarPoint p;
  p.radius = std::hypot(u, v);
  p.angle_deg = p.radius == 0.0 ? 0.0 : wrap_deg(rad_to_deg(std::atan2(v, u)));
  return p;
}

double embedded_distance(const PolarPoint& a, const PolarPoint& b) {
  const auto [ua, va] = polar_to_cartesian(a);
  const auto [ub, vb] = polar_to_cartesian(b);
  return std::hypot(ua - ub, va - vb);
}

std::vector<double> DetectionSet::flattened() const {
  std::vector<double> flat;
  flat.reserve(2 * points.size());
  for (const auto& p : points) {
    flat.push_back(p.radius);
    flat.push_back(p.angle_deg);
  }
  return flat;
}

namespace {

struct Cluster {
  // Raw member observations; the representative is recomputed from these.
  std::vector<PolarPoint> members;
  std::vector<std::optional<int>> ids;
  PolarPoint rep;

  void recompute() {
    double sum_r = 0.0, sx = 0.0, sy = 0.0;
    for (const auto& m : members) {
      sum_r += m.radius;
      const double a = deg_to_rad(m.angle_deg);
      sx += std::cos(a);
      sy += std::sin(a);
    }
    rep.radius = sum_r / static_cast<double>(members.size());
    rep.angle_deg = (sx == 0.0 && sy == 0.0)
                        ? members.front().angle_deg
                        : wrap_deg(rad_to_deg(std::atan2(sy, sx)));
  }

  std::optional<int> merged_id() const {
    std::optional<int> id;
    for (const auto& candidate : ids) {
      if (!candidate) continue;
      if (id && *id != *candidate) return std::nullopt;  // conflicting truth ids
      id = candidate;
    }
    return id;
  }
};

bool within(const PolarPoint& a, const PolarPoint& b, const MergeTolerance& tol) {
  return circular_diff_deg(a.angle_deg, b.angle_deg) <= tol.angle_deg &&
         std::abs(a.radius - b.radius) <= tol.radius;
}

}  // namespace

DetectionSet merge_to_plane(const std::vector<BoundingBox>& front_boxes,
                            const std::vector<BoundingBox>& back_boxes,
                            const MergeTolerance& tol) {
  std::vector<Cluster> clusters;
  auto add_box = [&clusters](const BoundingBox& box) {
    const auto [xc, yc] = box_center(box);
    const auto [radius, local_angle] = image_polar(xc, yc);
    (void)local_angle;  // the merged angle comes from the seam maps below
    PolarPoint p;
    p.radius = radius;
    p.angle_deg = box.side == ImageSide::front ? merged_angle_from_front_x(xc)
                                               : merged_angle_from_back_x(xc);
    Cluster c;
    c.members = {p};
    c.ids = {box.truth_vehicle_id};
    c.rep = p;
    clusters.push_back(std::move(c));
  };
  for (const auto& b : front_boxes) add_box(b);
  for (const auto& b : back_boxes) add_box(b);

  // Coalesce until no two representatives sit within both tolerances.
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (std::size_t i = 0; i < clusters.size() && !merged_any; ++i) {
      for (std::size_t j = i + 1; j < clusters.size() && !merged_any; ++j) {
        if (!within(clusters[i].rep, clusters[j].rep, tol)) continue;
        auto& into = clusters[i];
        auto& from = clusters[j];
        into.members.insert(into.members.end(), from.members.begin(), from.members.end());
        into.ids.insert(into.ids.end(), from.ids.begin(), from.ids.end());
        into.recompute();
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
        merged_any = true;
      }
    }
  }

  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster& a, const Cluster& b) { return a.rep.angle_deg < b.rep.angle_deg; });

  DetectionSet out;
  out.points.reserve(clusters.size());
  out.source_ids.reserve(clusters.size());
  for (const auto& c : clusters) {
    out.points.push_back(c.rep);
    out.source_ids.push_back(c.merged_id());
  }
  return out;
}

}  // namespace v2vbeam::polar
