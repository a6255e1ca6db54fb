#include "v2vbeam/nn/train.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "v2vbeam/errors.hpp"
#include "v2vbeam/rng.hpp"

namespace v2vbeam::nn {

namespace {

using Arr = Eigen::ArrayXXd;

Mat sigmoid(const Mat& z) {
  return (1.0 / (1.0 + (-z.array()).exp())).matrix();
}

// ---- dense internals -------------------------------------------------------

struct DenseCache {
  std::vector<Mat> activations;  // activations[0] = input, then per layer
  std::vector<Mat> pre;          // pre-activation per layer
};

Mat dense_forward_cached(const DenseNet& net, const Mat& inputs, DenseCache& cache) {
  cache.activations.clear();
  cache.pre.clear();
  cache.activations.push_back(inputs);
  Mat a = inputs;
  for (std::size_t i = 0; i < net.weights.size(); ++i) {
    Mat z = (net.weights[i] * a).colwise() + net.biases[i];
    cache.pre.push_back(z);
    a = (i + 1 < net.weights.size()) ? Mat(z.cwiseMax(0.0)) : std::move(z);
    cache.activations.push_back(a);
  }
  return a;
}

DenseGradients zero_gradients(const DenseNet& net) {
  DenseGradients g;
  for (std::size_t i = 0; i < net.weights.size(); ++i) {
    g.weights.push_back(Mat::Zero(net.weights[i].rows(), net.weights[i].cols()));
    g.biases.push_back(Vec::Zero(net.biases[i].size()));
  }
  return g;
}

// d_output: gradient w.r.t. the (identity) output layer, one column per
// sample, already scaled by the batch mean. Accumulates parameter gradients
// and returns the gradient w.r.t. the batch inputs.
Mat dense_backward_with_input_grad(const DenseNet& net, const DenseCache& cache,
                                   const Mat& d_output, DenseGradients& grads) {
  Mat d_act = d_output;
  Mat d_input;
  for (std::size_t i = net.weights.size(); i-- > 0;) {
    Mat d_pre = (i + 1 == net.weights.size())
                    ? d_act
                    : Mat((d_act.array() * (cache.pre[i].array() > 0.0).cast<double>()));
    grads.weights[i] += d_pre * cache.activations[i].transpose();
    grads.biases[i] += d_pre.rowwise().sum();
    d_act = net.weights[i].transpose() * d_pre;
  }
  d_input = d_act;
  return d_input;
}

Mat assemble_inputs(const std::vector<Vec>& inputs, int expected_rows) {
  if (inputs.empty()) throw std::invalid_argument("batch: empty");
  Mat x(expected_rows, static_cast<Eigen::Index>(inputs.size()));
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    if (inputs[j].size() != expected_rows) {
      throw std::invalid_argument("batch: input length mismatch at sample " + std::to_string(j));
    }
    x.col(static_cast<Eigen::Index>(j)) = inputs[j];
  }
  return x;
}

// Softmax cross-entropy over batch columns: returns mean loss and writes the
// gradient w.r.t. logits (already divided by batch size).
double softmax_ce_grad(const Mat& logits, const std::vector<int>& labels, Mat& d_logits) {
  const auto b = logits.cols();
  if (static_cast<std::size_t>(b) != labels.size()) {
    throw std::invalid_argument("batch: label count mismatch");
  }
  d_logits.resize(logits.rows(), b);
  double loss = 0.0;
  for (Eigen::Index j = 0; j < b; ++j) {
    const int label = labels[static_cast<std::size_t>(j)];
    if (label < 0 || label >= logits.rows()) {
      throw std::invalid_argument("batch: label out of range at sample " + std::to_string(j));
    }
    const Vec col = logits.col(j);
    loss += loss_cross_entropy(col, label);
    Vec p = softmax(col);
    p(label) -= 1.0;
    d_logits.col(j) = p / static_cast<double>(b);
  }
  return loss / static_cast<double>(b);
}

// ---- lstm internals --------------------------------------------------------

struct LstmStepCache {
  Mat x;  // layer input after dropout, in x B
  Mat h_prev, c_prev;
  Mat gi, gf, gg, go;
  Mat tanh_c;
};

struct LstmCache {
  int steps = 0;
  Eigen::Index batch = 0;
  std::vector<std::vector<LstmStepCache>> layer_steps;  // [layer][t]
  std::vector<std::vector<Mat>> dropout;                // [layer boundary][t], scaled masks
  Mat last_hidden;                                      // top layer h at final step
  DenseCache head_cache;
  Mat logits;
};

void lstm_forward_cached(const LstmNet& net, const SequenceBatch& batch, bool training,
                         std::uint64_t dropout_seed, LstmCache& cache) {
  if (batch.sequences.empty()) throw std::invalid_argument("lstm batch: empty");
  const int steps = static_cast<int>(batch.sequences.front().size());
  if (steps == 0) throw std::invalid_argument("lstm batch: empty sequence");
  for (const auto& seq : batch.sequences) {
    if (static_cast<int>(seq.size()) != steps) {
      throw std::invalid_argument("lstm batch: sequences must share one length");
    }
  }
  const Eigen::Index b = static_cast<Eigen::Index>(batch.sequences.size());
  const int h = net.hidden_size;
  if (net.head.input_size() != h) {
    throw std::invalid_argument("lstm: head input size != hidden size");
  }

  const bool use_dropout = training && net.inter_layer_dropout > 0.0 && net.num_layers > 1;
  Rng rng(dropout_seed);
  const double keep = 1.0 - net.inter_layer_dropout;

  cache.steps = steps;
  cache.batch = b;
  cache.layer_steps.assign(static_cast<std::size_t>(net.num_layers), {});
  cache.dropout.assign(use_dropout ? static_cast<std::size_t>(net.num_layers - 1) : 0, {});

  std::vector<Mat> h_state(static_cast<std::size_t>(net.num_layers), Mat::Zero(h, b));
  std::vector<Mat> c_state(static_cast<std::size_t>(net.num_layers), Mat::Zero(h, b));

  for (int t = 0; t < steps; ++t) {
    Mat x(net.input_size, b);
    for (Eigen::Index j = 0; j < b; ++j) {
      const Vec& step = batch.sequences[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
      if (step.size() != net.input_size) {
        throw std::invalid_argument("lstm batch: step size mismatch");
      }
      x.col(j) = step;
    }
    for (int l = 0; l < net.num_layers; ++l) {
      if (l > 0 && use_dropout) {
        Mat mask(h, b);
        for (Eigen::Index col = 0; col < b; ++col) {
          for (Eigen::Index row = 0; row < h; ++row) {
            mask(row, col) = rng.uniform() < net.inter_layer_dropout ? 0.0 : 1.0 / keep;
          }
        }
        cache.dropout[static_cast<std::size_t>(l - 1)].push_back(mask);
        x = x.cwiseProduct(mask);
      }
      const LstmLayer& layer = net.layers[static_cast<std::size_t>(l)];
      LstmStepCache sc;
      sc.x = x;
      sc.h_prev = h_state[static_cast<std::size_t>(l)];
      sc.c_prev = c_state[static_cast<std::size_t>(l)];
      Mat z = layer.w_input * x + layer.w_recurrent * sc.h_prev;
      z.colwise() += layer.bias;
      sc.gi = sigmoid(z.topRows(h));
      sc.gf = sigmoid(z.middleRows(h, h));
      sc.gg = z.middleRows(2 * h, h).array().tanh().matrix();
      sc.go = sigmoid(z.middleRows(3 * h, h));
      Mat c = sc.gf.cwiseProduct(sc.c_prev) + sc.gi.cwiseProduct(sc.gg);
      sc.tanh_c = c.array().tanh().matrix();
      Mat h_new = sc.go.cwiseProduct(sc.tanh_c);
      h_state[static_cast<std::size_t>(l)] = h_new;
      c_state[static_cast<std::size_t>(l)] = std::move(c);
      x = h_new;
      cache.layer_steps[static_cast<std::size_t>(l)].push_back(std::move(sc));
    }
  }
  cache.last_hidden = h_state.back();
  cache.logits = dense_forward_cached(net.head, cache.last_hidden, cache.head_cache);
}

LstmGradients zero_gradients(const LstmNet& net) {
  LstmGradients g;
  for (const auto& layer : net.layers) {
    LstmLayer zl;
    zl.w_input = Mat::Zero(layer.w_input.rows(), layer.w_input.cols());
    zl.w_recurrent = Mat::Zero(layer.w_recurrent.rows(), layer.w_recurrent.cols());
    zl.bias = Vec::Zero(layer.bias.size());
    g.layers.push_back(std::move(zl));
  }
  g.head = zero_gradients(net.head);
  return g;
}

// Backpropagation through time. d_logits must already carry the batch-mean
// scaling.
void lstm_backward(const LstmNet& net, const LstmCache& cache, const Mat& d_logits,
                   LstmGradients& grads) {
  const int h = net.hidden_size;
  const Eigen::Index b = cache.batch;
  Mat d_last_hidden =
      dense_backward_with_input_grad(net.head, cache.head_cache, d_logits, grads.head);

  const bool use_dropout = !cache.dropout.empty();
  std::vector<Mat> dh_time(static_cast<std::size_t>(net.num_layers), Mat::Zero(h, b));
  std::vector<Mat> dc_time(static_cast<std::size_t>(net.num_layers), Mat::Zero(h, b));

  for (int t = cache.steps - 1; t >= 0; --t) {
    Mat d_from_above;  // gradient w.r.t. the input of the layer above at time t
    for (int l = net.num_layers - 1; l >= 0; --l) {
      const LstmStepCache& sc =
          cache.layer_steps[static_cast<std::size_t>(l)][static_cast<std::size_t>(t)];
      Mat dh = dh_time[static_cast<std::size_t>(l)];
      if (l == net.num_layers - 1) {
        if (t == cache.steps - 1) dh += d_last_hidden;
      } else {
        Mat dx_above = d_from_above;
        if (use_dropout) {
          dx_above = dx_above.cwiseProduct(cache.dropout[static_cast<std::size_t>(l)]
                                               [static_cast<std::size_t>(t)]);
        }
        dh += dx_above;
      }

      const Arr tanh_c = sc.tanh_c.array();
      Arr d_out = dh.array() * tanh_c;
      Arr dc = dh.array() * sc.go.array() * (1.0 - tanh_c.square()) +
               dc_time[static_cast<std::size_t>(l)].array();
      Arr di = dc * sc.gg.array();
      Arr df = dc * sc.c_prev.array();
      Arr dg = dc * sc.gi.array();

      Mat dz(4 * h, b);
      dz.topRows(h) = (di * sc.gi.array() * (1.0 - sc.gi.array())).matrix();
      dz.middleRows(h, h) = (df * sc.gf.array() * (1.0 - sc.gf.array())).matrix();
      dz.middleRows(2 * h, h) = (dg * (1.0 - sc.gg.array().square())).matrix();
      dz.middleRows(3 * h, h) = (d_out * sc.go.array() * (1.0 - sc.go.array())).matrix();

      LstmLayer& gl = grads.layers[static_cast<std::size_t>(l)];
      gl.w_input += dz * sc.x.transpose();
      gl.w_recurrent += dz * sc.h_prev.transpose();
      gl.bias += dz.rowwise().sum();

      const LstmLayer& layer = net.layers[static_cast<std::size_t>(l)];
      if (l > 0) d_from_above = layer.w_input.transpose() * dz;
      dh_time[static_cast<std::size_t>(l)] = layer.w_recurrent.transpose() * dz;
      dc_time[static_cast<std::size_t>(l)] = (dc * sc.gf.array()).matrix();
    }
  }
}

void check_finite(double loss, const std::vector<ConstParamView>& grads) {
  if (!std::isfinite(loss)) {
    throw TrainingDivergence("loss", "non-finite batch loss");
  }
  for (const auto& g : grads) {
    Eigen::Map<const Eigen::ArrayXd> a(g.data, g.size);
    if (!a.isFinite().all()) {
      throw TrainingDivergence(g.name, "non-finite gradient");
    }
  }
}

}  // namespace

// ---- views -----------------------------------------------------------------

std::vector<ParamView> param_views(DenseNet& net) {
  std::vector<ParamView> views;
  for (std::size_t i = 0; i < net.weights.size(); ++i) {
    views.push_back({"dense.w" + std::to_string(i), net.weights[i].data(),
                     net.weights[i].size()});
    views.push_back({"dense.b" + std::to_string(i), net.biases[i].data(),
                     net.biases[i].size()});
  }
  return views;
}

std::vector<ParamView> param_views(LstmNet& net) {
  std::vector<ParamView> views;
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    auto& layer = net.layers[l];
    const std::string p = "lstm.l" + std::to_string(l) + ".";
    views.push_back({p + "w_input", layer.w_input.data(), layer.w_input.size()});
    views.push_back({p + "w_recurrent", layer.w_recurrent.data(), layer.w_recurrent.size()});
    views.push_back({p + "bias", layer.bias.data(), layer.bias.size()});
  }
  for (std::size_t i = 0; i < net.head.weights.size(); ++i) {
    views.push_back({"head.w" + std::to_string(i), net.head.weights[i].data(),
                     net.head.weights[i].size()});
    views.push_back({"head.b" + std::to_string(i), net.head.biases[i].data(),
                     net.head.biases[i].size()});
  }
  return views;
}

std::vector<ConstParamView> grad_views(const DenseGradients& g) {
  std::vector<ConstParamView> views;
  for (std::size_t i = 0; i < g.weights.size(); ++i) {
    views.push_back({"dense.w" + std::to_string(i), g.weights[i].data(), g.weights[i].size()});
    views.push_back({"dense.b" + std::to_string(i), g.biases[i].data(), g.biases[i].size()});
  }
  return views;
}

std::vector<ConstParamView> grad_views(const LstmGradients& g, const LstmNet&) {
  std::vector<ConstParamView> views;
  for (std::size_t l = 0; l < g.layers.size(); ++l) {
    const auto& layer = g.layers[l];
    const std::string p = "lstm.l" + std::to_string(l) + ".";
    views.push_back({p + "w_input", layer.w_input.data(), layer.w_input.size()});
    views.push_back({p + "w_recurrent", layer.w_recurrent.data(), layer.w_recurrent.size()});
    views.push_back({p + "bias", layer.bias.data(), layer.bias.size()});
  }
  for (std::size_t i = 0; i < g.head.weights.size(); ++i) {
    views.push_back({"head.w" + std::to_string(i), g.head.weights[i].data(),
                     g.head.weights[i].size()});
    views.push_back({"head.b" + std::to_string(i), g.head.biases[i].data(),
                     g.head.biases[i].size()});
  }
  return views;
}

// ---- losses ----------------------------------------------------------------

Mat forward_logits_batch(const LstmNet& net, const SequenceBatch& batch, bool training,
                         std::uint64_t dropout_seed) {
  LstmCache cache;
  lstm_forward_cached(net, batch, training, dropout_seed, cache);
  return cache.logits;
}

double batch_loss(const DenseNet& net, const RegressionBatch& batch) {
  if (batch.inputs.size() != batch.targets.size()) {
    throw std::invalid_argument("batch: input/target count mismatch");
  }
  const Mat x = assemble_inputs(batch.inputs, net.input_size());
  const Mat y = net.forward_batch(x);
  double loss = 0.0;
  for (Eigen::Index j = 0; j < y.cols(); ++j) {
    loss += loss_mse(y.col(j), batch.targets[static_cast<std::size_t>(j)]);
  }
  return loss / static_cast<double>(y.cols());
}

double batch_loss(const DenseNet& net, const ClassificationBatch& batch) {
  const Mat x = assemble_inputs(batch.inputs, net.input_size());
  const Mat logits = net.forward_batch(x);
  Mat unused;
  return softmax_ce_grad(logits, batch.labels, unused);
}

double batch_loss(const LstmNet& net, const SequenceBatch& batch, bool training,
                  std::uint64_t dropout_seed) {
  const Mat logits = forward_logits_batch(net, batch, training, dropout_seed);
  Mat unused;
  return softmax_ce_grad(logits, batch.labels, unused);
}

// ---- gradients -------------------------------------------------------------

std::pair<double, DenseGradients> compute_gradients(const DenseNet& net,
                                                    const RegressionBatch& batch) {
  if (batch.inputs.size() != batch.targets.size()) {
    throw std::invalid_argument("batch: input/target count mismatch");
  }
  const Mat x = assemble_inputs(batch.inputs, net.input_size());
  DenseCache cache;
  const Mat y = dense_forward_cached(net, x, cache);
  const auto b = y.cols();
  const auto n_out = y.rows();
  Mat d_out(n_out, b);
  double loss = 0.0;
  for (Eigen::Index j = 0; j < b; ++j) {
    const Vec& target = batch.targets[static_cast<std::size_t>(j)];
    loss += loss_mse(y.col(j), target);
    d_out.col(j) =
        2.0 * (y.col(j) - target) / static_cast<double>(n_out) / static_cast<double>(b);
  }
  DenseGradients grads = zero_gradients(net);
  dense_backward_with_input_grad(net, cache, d_out, grads);
  return {loss / static_cast<double>(b), std::move(grads)};
}

std::pair<double, DenseGradients> compute_gradients(const DenseNet& net,
                                                    const ClassificationBatch& batch) {
  const Mat x = assemble_inputs(batch.inputs, net.input_size());
  DenseCache cache;
  const Mat logits = dense_forward_cached(net, x, cache);
  Mat d_logits;
  const double loss = softmax_ce_grad(logits, batch.labels, d_logits);
  DenseGradients grads = zero_gradients(net);
  dense_backward_with_input_grad(net, cache, d_logits, grads);
  return {loss, std::move(grads)};
}

std::pair<double, LstmGradients> compute_gradients(const LstmNet& net,
                                                   const SequenceBatch& batch,
                                                   std::uint64_t dropout_seed) {
  LstmCache cache;
  lstm_forward_cached(net, batch, /*training=*/true, dropout_seed, cache);
  Mat d_logits;
  const double loss = softmax_ce_grad(cache.logits, batch.labels, d_logits);
  LstmGradients grads = zero_gradients(net);
  lstm_backward(net, cache, d_logits, grads);
  return {loss, std::move(grads)};
}

// ---- steps -----------------------------------------------------------------

double backward_and_step(DenseNet& net, const RegressionBatch& batch, AdamOptimizer& opt) {
  auto [loss, grads] = compute_gradients(net, batch);
  const auto gv = grad_views(grads);
  check_finite(loss, gv);
  opt.step(param_views(net), gv);
  return loss;
}

double backward_and_step(DenseNet& net, const ClassificationBatch& batch, AdamOptimizer& opt) {
  auto [loss, grads] = compute_gradients(net, batch);
  const auto gv = grad_views(grads);
  check_finite(loss, gv);
  opt.step(param_views(net), gv);
  return loss;
}

double backward_and_step(LstmNet& net, const SequenceBatch& batch, AdamOptimizer& opt,
                         std::uint64_t dropout_seed) {
  auto [loss, grads] = compute_gradients(net, batch, dropout_seed);
  const auto gv = grad_views(grads, net);
  check_finite(loss, gv);
  opt.step(param_views(net), gv);
  return loss;
}

// ---- fit loops -------------------------------------------------------------

namespace {

std::vector<std::vector<std::size_t>> epoch_batches(std::size_t n, int batch_size,
                                                    std::uint64_t epoch_seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(epoch_seed);
  rng.shuffle(order);
  std::vector<std::vector<std::size_t>> batches;
  for (std::size_t start = 0; start < n; start += static_cast<std::size_t>(batch_size)) {
    const std::size_t end = std::min(n, start + static_cast<std::size_t>(batch_size));
    batches.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return batches;
}

}  // namespace

std::vector<double> fit(DenseNet& net, const RegressionBatch& dataset, const FitConfig& cfg) {
  if (dataset.inputs.empty()) throw std::invalid_argument("fit: empty dataset");
  if (cfg.epochs < 1 || cfg.batch_size < 1) {
    throw std::invalid_argument("fit: epochs and batch_size must be positive");
  }
  AdamOptimizer opt(cfg.optimizer);
  std::vector<double> epoch_losses;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    double weighted = 0.0;
    const auto batches = epoch_batches(dataset.inputs.size(), cfg.batch_size,
                                       derive_seed(cfg.seed, static_cast<std::uint64_t>(epoch)));
    for (const auto& idx : batches) {
      RegressionBatch mb;
      mb.inputs.reserve(idx.size());
      mb.targets.reserve(idx.size());
      for (std::size_t i : idx) {
        mb.inputs.push_back(dataset.inputs[i]);
        mb.targets.push_back(dataset.targets[i]);
      }
      weighted += backward_and_step(net, mb, opt) * static_cast<double>(idx.size());
    }
    epoch_losses.push_back(weighted / static_cast<double>(dataset.inputs.size()));
  }
  return epoch_losses;
}

std::vector<double> fit(LstmNet& net, const SequenceBatch& dataset, const FitConfig& cfg) {
  if (dataset.sequences.empty()) throw std::invalid_argument("fit: empty dataset");
  if (dataset.sequences.size() != dataset.labels.size()) {
    throw std::invalid_argument("fit: sequence/label count mismatch");
  }
  if (cfg.epochs < 1 || cfg.batch_size < 1) {
    throw std::invalid_argument("fit: epochs and batch_size must be positive");
  }
  AdamOptimizer opt(cfg.optimizer);
  std::vector<double> epoch_losses;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    double weighted = 0.0;
    const auto batches = epoch_batches(dataset.sequences.size(), cfg.batch_size,
                                       derive_seed(cfg.seed, static_cast<std::uint64_t>(epoch)));
    for (std::size_t bi = 0; bi < batches.size(); ++bi) {
      SequenceBatch mb;
      mb.sequences.reserve(batches[bi].size());
      mb.labels.reserve(batches[bi].size());
      for (std::size_t i : batches[bi]) {
        mb.sequences.push_back(dataset.sequences[i]);
        mb.labels.push_back(dataset.labels[i]);
      }
      const std::uint64_t dropout_seed = derive_seed(
          cfg.seed, (static_cast<std::uint64_t>(epoch + 1) << 32) | static_cast<std::uint64_t>(bi));
      weighted += backward_and_step(net, mb, opt, dropout_seed) *
                  static_cast<double>(batches[bi].size());
    }
    epoch_losses.push_back(weighted / static_cast<double>(dataset.sequences.size()));
  }
  return epoch_losses;
}

}  // namespace v2vbeam::nn
