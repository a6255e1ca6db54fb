#include "v2vbeam/sim/manifest.hpp"

#include <fstream>

#include "v2vbeam/errors.hpp"

namespace v2vbeam::sim {

namespace {

constexpr const char* kSchema = "v2vbeam.frames.v1";

const char* maneuver_kind_name(ManeuverEvent::Kind k) {
  switch (k) {
    case ManeuverEvent::Kind::lane_change: return "lane_change";
    case ManeuverEvent::Kind::pass: return "pass";
    case ManeuverEvent::Kind::fall_back: return "fall_back";
    case ManeuverEvent::Kind::stop: return "stop";
  }
  return "?";
}

ManeuverEvent::Kind maneuver_kind_from_name(const std::string& name) {
  if (name == "lane_change") return ManeuverEvent::Kind::lane_change;
  if (name == "pass") return ManeuverEvent::Kind::pass;
  if (name == "fall_back") return ManeuverEvent::Kind::fall_back;
  if (name == "stop") return ManeuverEvent::Kind::stop;
  throw ConfigError("unknown maneuver kind: " + name);
}

nlohmann::json box_to_json(const polar::BoundingBox& b) {
  nlohmann::json j;
  j["side"] = polar::image_side_name(b.side);
  j["x1"] = b.x1;
  j["y1"] = b.y1;
  j["x2"] = b.x2;
  j["y2"] = b.y2;
  if (b.truth_vehicle_id) j["vid"] = *b.truth_vehicle_id;
  return j;
}

polar::BoundingBox box_from_json(const nlohmann::json& j) {
  polar::BoundingBox b;
  b.side = j.at("side").get<std::string>() == "front" ? polar::ImageSide::front
                                                      : polar::ImageSide::back;
  b.x1 = j.at("x1").get<double>();
  b.y1 = j.at("y1").get<double>();
  b.x2 = j.at("x2").get<double>();
  b.y2 = j.at("y2").get<double>();
  if (j.contains("vid")) b.truth_vehicle_id = j.at("vid").get<int>();
  return b;
}

nlohmann::json frame_to_json(const Frame& f, const std::string& scenario_id) {
  nlohmann::json j;
  j["type"] = "frame";
  j["scn"] = scenario_id;
  j["t"] = f.timestamp;
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& b : f.boxes) boxes.push_back(box_to_json(b));
  j["boxes"] = std::move(boxes);
  if (f.power) j["power"] = *f.power;
  nlohmann::json paths = nlohmann::json::array();
  for (phy::Panel p : phy::all_panels()) {
    for (const auto& path : f.channel.paths(p)) {
      paths.push_back({{"panel", static_cast<int>(p)},
                       {"az", path.azimuth_rad},
                       {"el", path.elevation_rad},
                       {"re", path.gain.real()},
                       {"im", path.gain.imag()}});
    }
  }
  j["channel"] = {{"m", f.channel.num_antennas}, {"paths", std::move(paths)}};
  j["truth"] = {{"tx_id", f.truth.tx_vehicle_id},
                {"radius", f.truth.tx_point.radius},
                {"angle_deg", f.truth.tx_point.angle_deg},
                {"beam_flat", f.truth.beam.flat_index},
                {"rel_speed", f.truth.rel_speed_mps},
                {"range_m", f.truth.range_m},
                {"azimuth_deg", f.truth.azimuth_deg}};
  return j;
}

Frame frame_from_json(const nlohmann::json& j, int beams_per_panel) {
  Frame f;
  f.timestamp = j.at("t").get<double>();
  for (const auto& b : j.at("boxes")) f.boxes.push_back(box_from_json(b));
  if (j.contains("power")) f.power = j.at("power").get<std::vector<double>>();
  const auto& chan = j.at("channel");
  f.channel.num_antennas = chan.at("m").get<int>();
  for (const auto& pj : chan.at("paths")) {
    phy::PathComponent path;
    path.azimuth_rad = pj.at("az").get<double>();
    path.elevation_rad = pj.at("el").get<double>();
    path.gain = {pj.at("re").get<double>(), pj.at("im").get<double>()};
    f.channel.paths(static_cast<phy::Panel>(pj.at("panel").get<int>())).push_back(path);
  }
  const auto& t = j.at("truth");
  f.truth.tx_vehicle_id = t.at("tx_id").get<int>();
  f.truth.tx_point.radius = t.at("radius").get<double>();
  f.truth.tx_point.angle_deg = t.at("angle_deg").get<double>();
  f.truth.beam = phy::GlobalBeamIndex::from_flat(t.at("beam_flat").get<int>(), beams_per_panel);
  f.truth.rel_speed_mps = t.at("rel_speed").get<double>();
  f.truth.range_m = t.at("range_m").get<double>();
  f.truth.azimuth_deg = t.at("azimuth_deg").get<double>();
  return f;
}

}  // namespace

nlohmann::json scenario_to_json(const ScenarioConfig& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["seed"] = c.seed;
  j["duration_s"] = c.duration_s;
  j["sample_rate_hz"] = c.sample_rate_hz;
  j["lane_width_m"] = c.lane_width_m;
  j["receiver"] = {{"speed", c.receiver.speed},
                   {"lane", c.receiver.lane},
                   {"offset_m", c.receiver.offset_m}};
  j["transmitter"] = {{"speed", c.transmitter.speed},
                      {"lane", c.transmitter.lane},
                      {"offset_m", c.transmitter.offset_m}};
  j["clutter"] = {{"count", c.clutter.count},
                  {"lane_min", c.clutter.lane_min},
                  {"lane_max", c.clutter.lane_max},
                  {"offset_min", c.clutter.offset_min},
                  {"offset_max", c.clutter.offset_max},
                  {"speed_jitter", c.clutter.speed_jitter}};
  nlohmann::json maneuvers = nlohmann::json::array();
  for (const auto& e : c.maneuvers) {
    nlohmann::json m;
    m["type"] = maneuver_kind_name(e.kind);
    m["vehicle"] = e.vehicle_id;
    m["start_s"] = e.start_s;
    m["duration_s"] = e.duration_s;
    switch (e.kind) {
      case ManeuverEvent::Kind::pass:
      case ManeuverEvent::Kind::fall_back:
        m["delta_speed"] = e.delta_speed;
        break;
      case ManeuverEvent::Kind::lane_change:
        m["target_lane"] = e.target_lane;
        break;
      case ManeuverEvent::Kind::stop:
        m["hold_s"] = e.hold_s;
        m["accel_s"] = e.accel_s;
        break;
    }
    maneuvers.push_back(std::move(m));
  }
  j["maneuvers"] = std::move(maneuvers);
  j["detector"] = {{"miss_prob", c.detector.miss_prob},
                   {"box_jitter_std", c.detector.box_jitter_std},
                   {"false_positive_rate", c.detector.false_positive_rate}};
  j["channel"] = {{"symbol_power", c.channel.symbol_power},
                  {"noise_std", c.channel.noise_std},
                  {"nlos_paths", c.channel.nlos_paths},
                  {"nlos_gain_ratio", c.channel.nlos_gain_ratio},
                  {"reference_gain", c.channel.reference_gain}};
  j["camera"] = {{"horizon_y", c.camera.horizon_y},
                 {"range_scale", c.camera.range_scale},
                 {"box_height_scale", c.camera.box_height_scale},
                 {"max_range_m", c.camera.max_range_m},
                 {"min_range_m", c.camera.min_range_m},
                 {"min_box_size", c.camera.min_box_size}};
  return j;
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  try {
    ScenarioConfig c;
    c.id = j.value("id", c.id);
    c.seed = j.value("seed", c.seed);
    c.duration_s = j.value("duration_s", c.duration_s);
    c.sample_rate_hz = j.value("sample_rate_hz", c.sample_rate_hz);
    c.lane_width_m = j.value("lane_width_m", c.lane_width_m);
    auto vehicle = [](const nlohmann::json& v, VehicleSpec base) {
      base.speed = v.value("speed", base.speed);
      base.lane = v.value("lane", base.lane);
      base.offset_m = v.value("offset_m", base.offset_m);
      return base;
    };
    if (j.contains("receiver")) c.receiver = vehicle(j.at("receiver"), c.receiver);
    if (j.contains("transmitter")) c.transmitter = vehicle(j.at("transmitter"), c.transmitter);
    if (j.contains("clutter")) {
      const auto& cl = j.at("clutter");
      c.clutter.count = cl.value("count", c.clutter.count);
      c.clutter.lane_min = cl.value("lane_min", c.clutter.lane_min);
      c.clutter.lane_max = cl.value("lane_max", c.clutter.lane_max);
      c.clutter.offset_min = cl.value("offset_min", c.clutter.offset_min);
      c.clutter.offset_max = cl.value("offset_max", c.clutter.offset_max);
      c.clutter.speed_jitter = cl.value("speed_jitter", c.clutter.speed_jitter);
    }
    for (const auto& m : j.value("maneuvers", nlohmann::json::array())) {
      ManeuverEvent e;
      e.kind = maneuver_kind_from_name(m.at("type").get<std::string>());
      e.vehicle_id = m.value("vehicle", 1);
      e.start_s = m.at("start_s").get<double>();
      e.duration_s = m.value("duration_s", e.duration_s);
      e.delta_speed = m.value("delta_speed", e.delta_speed);
      e.target_lane = m.value("target_lane", e.target_lane);
      e.hold_s = m.value("hold_s", e.hold_s);
      e.accel_s = m.value("accel_s", e.accel_s);
      c.maneuvers.push_back(e);
    }
    if (j.contains("detector")) {
      const auto& d = j.at("detector");
      c.detector.miss_prob = d.value("miss_prob", 0.0);
      c.detector.box_jitter_std = d.value("box_jitter_std", 0.0);
      c.detector.false_positive_rate = d.value("false_positive_rate", 0.0);
    }
    if (j.contains("channel")) {
      const auto& ch = j.at("channel");
      c.channel.symbol_power = ch.value("symbol_power", c.channel.symbol_power);
      c.channel.noise_std = ch.value("noise_std", c.channel.noise_std);
      c.channel.nlos_paths = ch.value("nlos_paths", c.channel.nlos_paths);
      c.channel.nlos_gain_ratio = ch.value("nlos_gain_ratio", c.channel.nlos_gain_ratio);
      c.channel.reference_gain = ch.value("reference_gain", c.channel.reference_gain);
    }
    if (j.contains("camera")) {
      const auto& cam = j.at("camera");
      c.camera.horizon_y = cam.value("horizon_y", c.camera.horizon_y);
      c.camera.range_scale = cam.value("range_scale", c.camera.range_scale);
      c.camera.box_height_scale = cam.value("box_height_scale", c.camera.box_height_scale);
      c.camera.max_range_m = cam.value("max_range_m", c.camera.max_range_m);
      c.camera.min_range_m = cam.value("min_range_m", c.camera.min_range_m);
      c.camera.min_box_size = cam.value("min_box_size", c.camera.min_box_size);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scenario config: ") + e.what());
  }
}

void write_manifest(const std::string& path,
                    const std::vector<ScenarioRecording>& recordings) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open manifest for writing: " + path);
  for (const auto& rec : recordings) {
    nlohmann::json header;
    header["type"] = "scenario";
    header["schema"] = kSchema;
    header["config"] = scenario_to_json(rec.config);
    header["num_antennas"] = rec.num_antennas;
    header["beams_per_panel"] = rec.beams_per_panel;
    header["frames"] = rec.frames.size();
    header["dropped_frames"] = rec.dropped_frames;
    header["warnings"] = rec.warnings;
    out << header.dump() << "\n";
    for (const auto& f : rec.frames) {
      out << frame_to_json(f, rec.config.id).dump() << "\n";
    }
  }
  if (!out) throw DataError("manifest write failed: " + path);
}

std::vector<ScenarioRecording> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest: " + path);
  std::vector<ScenarioRecording> recordings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError(path + ":" + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    const std::string type = j.value("type", "");
    if (type == "scenario") {
      if (j.value("schema", "") != kSchema) {
        throw DataError(path + ":" + std::to_string(line_no) + ": unsupported schema");
      }
      ScenarioRecording rec;
      rec.config = scenario_from_json(j.at("config"));
      rec.num_antennas = j.at("num_antennas").get<int>();
      rec.beams_per_panel = j.at("beams_per_panel").get<int>();
      rec.dropped_frames = j.value("dropped_frames", 0);
      recordings.push_back(std::move(rec));
    } else if (type == "frame") {
      if (recordings.empty()) {
        throw DataError(path + ":" + std::to_string(line_no) +
                        ": frame record before any scenario header");
      }
      try {
        recordings.back().frames.push_back(
            frame_from_json(j, recordings.back().beams_per_panel));
      } catch (const nlohmann::json::exception& e) {
        throw DataError(path + ":" + std::to_string(line_no) + ": bad frame: " + e.what());
      }
    } else {
      throw DataError(path + ":" + std::to_string(line_no) + ": unknown record type");
    }
  }
  if (recordings.empty()) throw DataError(path + ": empty manifest");
  return recordings;
}

}  // namespace v2vbeam::sim
