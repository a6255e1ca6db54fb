#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "v2vbeam/nn/dense.hpp"
#include "v2vbeam/nn/lstm.hpp"

namespace v2vbeam::nn {

/// Checkpoint JSON: layer sizes plus one flat parameter array in row-major
/// order. Dense layout: per layer W then b. LSTM layout: per layer w_input,
/// w_recurrent, bias; then the head with the dense layout. `seed` records
/// the training seed for provenance.
nlohmann::json dense_to_json(const DenseNet& net, std::uint64_t seed);
DenseNet dense_from_json(const nlohmann::json& j);

nlohmann::json lstm_to_json(const LstmNet& net, std::uint64_t seed);
LstmNet lstm_from_json(const nlohmann::json& j);

void save_json(const nlohmann::json& j, const std::string& path);
nlohmann::json load_json(const std::string& path);

}  // namespace v2vbeam::nn
