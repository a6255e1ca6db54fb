#include "v2vbeam/sim/kinematics.hpp"

#include <algorithm>
#include <cmath>

#include "v2vbeam/errors.hpp"
#include "v2vbeam/rng.hpp"

namespace v2vbeam::sim {

namespace {

bool is_longitudinal(ManeuverEvent::Kind k) {
  return k == ManeuverEvent::Kind::pass || k == ManeuverEvent::Kind::fall_back ||
         k == ManeuverEvent::Kind::stop;
}

double event_end(const ManeuverEvent& e) {
  if (e.kind == ManeuverEvent::Kind::stop) {
    return e.start_s + e.duration_s + e.hold_s + e.accel_s;
  }
  return e.start_s + e.duration_s;
}

// Logistic blend normalized to hit 0 at u=0 and 1 at u=1.
double lateral_blend(double u) {
  constexpr double k = 8.0;
  auto logistic = [](double z) { return 1.0 / (1.0 + std::exp(-z)); };
  const double lo = logistic(-k / 2.0);
  const double hi = logistic(k / 2.0);
  return (logistic(k * (u - 0.5)) - lo) / (hi - lo);
}

double lateral_blend_rate(double u) {
  constexpr double k = 8.0;
  auto logistic = [](double z) { return 1.0 / (1.0 + std::exp(-z)); };
  const double lo = logistic(-k / 2.0);
  const double hi = logistic(k / 2.0);
  const double s = logistic(k * (u - 0.5));
  return k * s * (1.0 - s) / (hi - lo);
}

struct VehiclePlan {
  VehicleState base;           // id, role, dims, lane
  double base_speed = 0.0;
  double start_x = 0.0;
  std::vector<const ManeuverEvent*> longitudinal;
  std::vector<const ManeuverEvent*> lane_changes;  // sorted by start
};

double speed_at(const VehiclePlan& plan, double t) {
  double v = plan.base_speed;
  double stop_factor = 1.0;
  for (const auto* e : plan.longitudinal) {
    switch (e->kind) {
      case ManeuverEvent::Kind::pass:
        if (t >= e->start_s && t < e->start_s + e->duration_s) v += e->delta_speed;
        break;
      case ManeuverEvent::Kind::fall_back:
        if (t >= e->start_s && t < e->start_s + e->duration_s) v -= e->delta_speed;
        break;
      case ManeuverEvent::Kind::stop: {
        const double t0 = e->start_s;
        const double t1 = t0 + e->duration_s;       // fully stopped
        const double t2 = t1 + e->hold_s;           // start accelerating
        const double t3 = t2 + e->accel_s;          // back to base
        if (t >= t0 && t < t1) {
          stop_factor = std::min(stop_factor, 1.0 - (t - t0) / e->duration_s);
        } else if (t >= t1 && t < t2) {
          stop_factor = 0.0;
        } else if (t >= t2 && t < t3) {
          stop_factor = std::min(stop_factor, (t - t2) / e->accel_s);
        }
        break;
      }
      case ManeuverEvent::Kind::lane_change:
        break;
    }
  }
  return std::max(0.0, v * stop_factor);
}

// Lateral position and rate from the lane-change script.
std::pair<double, double> lateral_at(const VehiclePlan& plan, double t, double lane_width) {
  double lane_from = plan.base.lane;
  for (const auto* e : plan.lane_changes) {
    const double t0 = e->start_s;
    const double t1 = t0 + e->duration_s;
    if (t < t0) break;
    if (t >= t1) {
      lane_from = e->target_lane;
      continue;
    }
    const double u = (t - t0) / e->duration_s;
    const double y0 = lane_from * lane_width;
    const double y1 = e->target_lane * lane_width;
    const double y = y0 + (y1 - y0) * lateral_blend(u);
    const double vy = (y1 - y0) * lateral_blend_rate(u) / e->duration_s;
    return {y, vy};
  }
  return {lane_from * lane_width, 0.0};
}

int lane_at(const VehiclePlan& plan, double t) {
  int lane = plan.base.lane;
  for (const auto* e : plan.lane_changes) {
    if (t >= e->start_s + e->duration_s) lane = e->target_lane;
  }
  return lane;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (duration_s <= 0.0) throw ConfigError(id + ": duration must be positive");
  if (sample_rate_hz <= 0.0) throw ConfigError(id + ": sample_rate must be positive");
  if (lane_width_m <= 0.0) throw ConfigError(id + ": lane_width must be positive");
  if (receiver.speed < 0.0 || transmitter.speed < 0.0) {
    throw ConfigError(id + ": vehicle speeds must be nonnegative");
  }
  if (clutter.count < 0) throw ConfigError(id + ": clutter count must be nonnegative");
  auto check_prob = [this](double p, const char* name) {
    if (p < 0.0 || p > 1.0) throw ConfigError(id + ": " + name + " must be in [0,1]");
  };
  check_prob(detector.miss_prob, "miss_prob");
  if (detector.box_jitter_std < 0.0) throw ConfigError(id + ": box_jitter_std must be >= 0");
  if (detector.false_positive_rate < 0.0) {
    throw ConfigError(id + ": false_positive_rate must be >= 0");
  }
  if (channel.nlos_paths < 0) throw ConfigError(id + ": nlos_paths must be >= 0");
  if (channel.noise_std < 0.0) throw ConfigError(id + ": noise_std must be >= 0");
  if (channel.symbol_power <= 0.0) throw ConfigError(id + ": symbol_power must be > 0");

  const int num_vehicles = 2 + clutter.count;
  for (const auto& e : maneuvers) {
    if (e.vehicle_id < 0 || e.vehicle_id >= num_vehicles) {
      throw ConfigError(id + ": maneuver references unknown vehicle " +
                        std::to_string(e.vehicle_id));
    }
    if (e.duration_s <= 0.0) throw ConfigError(id + ": maneuver duration must be positive");
    if (e.kind == ManeuverEvent::Kind::stop && (e.hold_s < 0.0 || e.accel_s <= 0.0)) {
      throw ConfigError(id + ": stop hold/accel durations invalid");
    }
  }
  // Overlapping maneuvers that steer the same degree of freedom of one
  // vehicle are rejected.
  for (std::size_t i = 0; i < maneuvers.size(); ++i) {
    for (std::size_t j = i + 1; j < maneuvers.size(); ++j) {
      const auto& a = maneuvers[i];
      const auto& b = maneuvers[j];
      if (a.vehicle_id != b.vehicle_id) continue;
      const bool both_long = is_longitudinal(a.kind) && is_longitudinal(b.kind);
      const bool both_lat = a.kind == ManeuverEvent::Kind::lane_change &&
                            b.kind == ManeuverEvent::Kind::lane_change;
      if (!both_long && !both_lat) continue;
      if (a.start_s < event_end(b) && b.start_s < event_end(a)) {
        throw ConfigError(id + ": conflicting simultaneous maneuvers for vehicle " +
                          std::to_string(a.vehicle_id));
      }
    }
  }
}

std::vector<std::vector<VehicleState>> simulate_kinematics(const ScenarioConfig& config) {
  config.validate();
  const int frames = config.frame_count();
  const double dt = 1.0 / config.sample_rate_hz;
  Rng rng(derive_seed(config.seed, 0x6b696e /* kin */));

  std::vector<VehiclePlan> plans;
  auto make_vehicle = [](int id, VehicleRole role, int lane) {
    VehicleState v;
    v.id = id;
    v.role = role;
    v.lane = lane;
    return v;
  };

  {
    VehiclePlan rx;
    rx.base = make_vehicle(0, VehicleRole::receiver, config.receiver.lane);
    rx.base_speed = config.receiver.speed;
    rx.start_x = config.receiver.offset_m;
    plans.push_back(rx);

    VehiclePlan tx;
    tx.base = make_vehicle(1, VehicleRole::transmitter, config.transmitter.lane);
    tx.base_speed = config.transmitter.speed;
    tx.start_x = config.transmitter.offset_m;
    plans.push_back(tx);
  }
  for (int c = 0; c < config.clutter.count; ++c) {
    VehiclePlan p;
    const int lane =
        static_cast<int>(rng.uniform_int(config.clutter.lane_min, config.clutter.lane_max));
    p.base = make_vehicle(2 + c, VehicleRole::clutter, lane);
    p.base.length *= rng.uniform(0.9, 1.1);
    p.base.width *= rng.uniform(0.9, 1.1);
    p.base.height *= rng.uniform(0.9, 1.1);
    p.base_speed = std::max(
        0.0, config.receiver.speed + rng.uniform(-config.clutter.speed_jitter,
                                                 config.clutter.speed_jitter));
    p.start_x = rng.uniform(config.clutter.offset_min, config.clutter.offset_max);
    plans.push_back(p);
  }

  for (const auto& e : config.maneuvers) {
    auto& plan = plans[static_cast<std::size_t>(e.vehicle_id)];
    if (is_longitudinal(e.kind)) {
      plan.longitudinal.push_back(&e);
    } else {
      plan.lane_changes.push_back(&e);
    }
  }
  for (auto& plan : plans) {
    std::sort(plan.lane_changes.begin(), plan.lane_changes.end(),
              [](const ManeuverEvent* a, const ManeuverEvent* b) {
                return a->start_s < b->start_s;
              });
  }

  std::vector<std::vector<VehicleState>> out(static_cast<std::size_t>(frames));
  std::vector<double> x(plans.size());
  for (std::size_t v = 0; v < plans.size(); ++v) x[v] = plans[v].start_x;

  for (int k = 0; k < frames; ++k) {
    const double t = k * dt;
    auto& frame = out[static_cast<std::size_t>(k)];
    frame.reserve(plans.size());
    for (std::size_t v = 0; v < plans.size(); ++v) {
      const auto& plan = plans[v];
      VehicleState s = plan.base;
      const auto [y, vy] = lateral_at(plan, t, config.lane_width_m);
      s.x = x[v];
      s.y = y;
      s.vx = speed_at(plan, t);
      s.vy = vy;
      s.lane = lane_at(plan, t);
      frame.push_back(s);
      x[v] += s.vx * dt;  // forward Euler to the next sample
    }
  }
  return out;
}

}  // namespace v2vbeam::sim
