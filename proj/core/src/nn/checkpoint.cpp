#include "v2vbeam/nn/checkpoint.hpp"

#include <fstream>

#include "v2vbeam/errors.hpp"

namespace v2vbeam::nn {

namespace {

constexpr const char* kFormat = "v2vbeam.checkpoint.v1";

void append_matrix_row_major(std::vector<double>& out, const Mat& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  }
}

void append_vector(std::vector<double>& out, const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
}

class ParamReader {
 public:
  explicit ParamReader(const std::vector<double>& flat) : flat_(flat) {}

  Mat matrix(Eigen::Index rows, Eigen::Index cols) {
    Mat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = next();
    }
    return m;
  }

  Vec vector(Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = next();
    return v;
  }

  void expect_done() const {
    if (pos_ != flat_.size()) {
      throw DataError("checkpoint: trailing parameters (" +
                      std::to_string(flat_.size() - pos_) + " unused)");
    }
  }

 private:
  double next() {
    if (pos_ >= flat_.size()) throw DataError("checkpoint: parameter array too short");
    return flat_[pos_++];
  }

  const std::vector<double>& flat_;
  std::size_t pos_ = 0;
};

std::vector<double> dense_params(const DenseNet& net) {
  std::vector<double> flat;
  for (std::size_t i = 0; i < net.weights.size(); ++i) {
    append_matrix_row_major(flat, net.weights[i]);
    append_vector(flat, net.biases[i]);
  }
  return flat;
}

DenseNet dense_from_parts(const std::vector<int>& sizes, ParamReader& reader) {
  DenseNet net;
  net.layer_sizes = sizes;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    net.weights.push_back(reader.matrix(sizes[i + 1], sizes[i]));
    net.biases.push_back(reader.vector(sizes[i + 1]));
  }
  return net;
}

}  // namespace

nlohmann::json dense_to_json(const DenseNet& net, std::uint64_t seed) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["kind"] = "dense";
  j["seed"] = seed;
  j["layer_sizes"] = net.layer_sizes;
  j["parameters"] = dense_params(net);
  return j;
}

DenseNet dense_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != kFormat || j.value("kind", "") != "dense") {
    throw DataError("checkpoint: not a dense checkpoint");
  }
  const auto sizes = j.at("layer_sizes").get<std::vector<int>>();
  if (sizes.size() < 2) throw DataError("checkpoint: bad layer_sizes");
  const auto flat = j.at("parameters").get<std::vector<double>>();
  ParamReader reader(flat);
  DenseNet net = dense_from_parts(sizes, reader);
  reader.expect_done();
  return net;
}

nlohmann::json lstm_to_json(const LstmNet& net, std::uint64_t seed) {
  nlohmann::json j;
  j["format"] = kFormat;
  j["kind"] = "lstm";
  j["seed"] = seed;
  j["input_size"] = net.input_size;
  j["hidden_size"] = net.hidden_size;
  j["num_layers"] = net.num_layers;
  j["dropout"] = net.inter_layer_dropout;
  j["head_layer_sizes"] = net.head.layer_sizes;
  std::vector<double> flat;
  for (const auto& layer : net.layers) {
    append_matrix_row_major(flat, layer.w_input);
    append_matrix_row_major(flat, layer.w_recurrent);
    append_vector(flat, layer.bias);
  }
  for (const auto& p : dense_params(net.head)) flat.push_back(p);
  j["parameters"] = std::move(flat);
  return j;
}

LstmNet lstm_from_json(const nlohmann::json& j) {
  if (j.value("format", "") != kFormat || j.value("kind", "") != "lstm") {
    throw DataError("checkpoint: not an lstm checkpoint");
  }
  LstmNet net;
  net.input_size = j.at("input_size").get<int>();
  net.hidden_size = j.at("hidden_size").get<int>();
  net.num_layers = j.at("num_layers").get<int>();
  net.inter_layer_dropout = j.at("dropout").get<double>();
  const auto head_sizes = j.at("head_layer_sizes").get<std::vector<int>>();
  const auto flat = j.at("parameters").get<std::vector<double>>();
  ParamReader reader(flat);
  const int h = net.hidden_size;
  for (int l = 0; l < net.num_layers; ++l) {
    const int in = l == 0 ? net.input_size : h;
    LstmLayer layer;
    layer.w_input = reader.matrix(4 * h, in);
    layer.w_recurrent = reader.matrix(4 * h, h);
    layer.bias = reader.vector(4 * h);
    net.layers.push_back(std::move(layer));
  }
  net.head = dense_from_parts(head_sizes, reader);
  reader.expect_done();
  if (net.head.input_size() != h) throw DataError("checkpoint: head/hidden size mismatch");
  return net;
}

void save_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
  if (!out) throw DataError("write failed: " + path);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace v2vbeam::nn
