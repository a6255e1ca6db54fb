#include "v2vbeam/phy/codebook.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "v2vbeam/angles.hpp"

namespace v2vbeam::phy {

CVec steering_vector(int num_antennas, double azimuth_rad, double elevation_rad) {
  if (num_antennas < 1) {
    throw std::invalid_argument("steering_vector: need at least one antenna");
  }
  CVec a(static_cast<std::size_t>(num_antennas));
  const double spatial = kPi * std::sin(azimuth_rad) * std::cos(elevation_rad);
  for (int k = 0; k < num_antennas; ++k) {
    a[static_cast<std::size_t>(k)] = std::polar(1.0, spatial * k);
  }
  return a;
}

Codebook Codebook::make_dft(int num_antennas, int beams_per_panel, double panel_fov_rad) {
  if (beams_per_panel < 1) {
    throw std::invalid_argument("codebook: beams_per_panel must be >= 1");
  }
  if (num_antennas < 1) {
    throw std::invalid_argument("codebook: num_antennas must be >= 1");
  }
  if (!(panel_fov_rad > 0.0) || panel_fov_rad > kPi) {
    throw std::invalid_argument("codebook: panel fov must be in (0, pi]");
  }

  Codebook cb;
  cb.num_antennas_ = num_antennas;
  cb.beams_per_panel_ = beams_per_panel;
  cb.panel_fov_rad_ = panel_fov_rad;

  const double sin_edge = std::sin(panel_fov_rad / 2.0);
  const double norm = 1.0 / std::sqrt(static_cast<double>(num_antennas));
  for (int m = 0; m < beams_per_panel; ++m) {
    const double frac = beams_per_panel == 1
                            ? 0.5
                            : static_cast<double>(m) / (beams_per_panel - 1);
    const double s = -sin_edge + 2.0 * sin_edge * frac;
    const double theta = std::asin(s);
    CVec f = steering_vector(num_antennas, theta, 0.0);
    for (auto& c : f) c *= norm;
    cb.beams_.push_back(std::move(f));
    cb.steering_angles_.push_back(theta);
  }
  return cb;
}

double Codebook::merged_angle_deg(int flat_index) const {
  const GlobalBeamIndex b = beam_from_flat(flat_index);
  return wrap_deg(panel_boresight_deg(b.panel) +
                  rad_to_deg(steering_angles_.at(b.local_index)));
}

double Codebook::angle_spacing_rad(int local_index) const {
  if (beams_per_panel_ < 2) return panel_fov_rad_;
  if (local_index + 1 < beams_per_panel_) {
    return steering_angles_[local_index + 1] - steering_angles_[local_index];
  }
  return steering_angles_[local_index] - steering_angles_[local_index - 1];
}

std::string Codebook::to_json() const {
  nlohmann::json j;
  j["format"] = "v2vbeam.codebook.v1";
  j["num_antennas"] = num_antennas_;
  j["beams_per_panel"] = beams_per_panel_;
  j["panel_fov_rad"] = panel_fov_rad_;
  j["panel_order"] = {"front", "right", "back", "left"};
  j["steering_angles_rad"] = steering_angles_;
  // Coefficients per local beam, interleaved re/im, element-major.
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& f : beams_) {
    std::vector<double> flat;
    flat.reserve(2 * f.size());
    for (const auto& c : f) {
      flat.push_back(c.real());
      flat.push_back(c.imag());
    }
    coeffs.push_back(std::move(flat));
  }
  j["beams_re_im"] = std::move(coeffs);
  return j.dump(2);
}

Codebook Codebook::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.value("format", "") != "v2vbeam.codebook.v1") {
    throw std::invalid_argument("codebook: unrecognized format tag");
  }
  Codebook cb;
  cb.num_antennas_ = j.at("num_antennas").get<int>();
  cb.beams_per_panel_ = j.at("beams_per_panel").get<int>();
  cb.panel_fov_rad_ = j.at("panel_fov_rad").get<double>();
  cb.steering_angles_ = j.at("steering_angles_rad").get<std::vector<double>>();
  for (const auto& flat : j.at("beams_re_im")) {
    const auto v = flat.get<std::vector<double>>();
    if (v.size() != 2 * static_cast<std::size_t>(cb.num_antennas_)) {
      throw std::invalid_argument("codebook: coefficient length mismatch");
    }
    CVec f(v.size() / 2);
    for (std::size_t k = 0; k < f.size(); ++k) {
      f[k] = {v[2 * k], v[2 * k + 1]};
    }
    cb.beams_.push_back(std::move(f));
  }
  if (cb.beams_.size() != cb.steering_angles_.size() ||
      cb.beams_.size() != static_cast<std::size_t>(cb.beams_per_panel_)) {
    throw std::invalid_argument("codebook: inconsistent beam count");
  }
  return cb;
}

}  // namespace v2vbeam::phy
