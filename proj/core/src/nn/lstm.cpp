#include "v2vbeam/nn/lstm.hpp"

#include <cmath>
#include <stdexcept>

#include "v2vbeam/nn/train.hpp"
#include "v2vbeam/rng.hpp"

namespace v2vbeam::nn {

LstmNet LstmNet::init(int input_size, int hidden_size, int num_layers,
                      int num_classes, double dropout, std::uint64_t seed) {
  if (input_size < 1 || hidden_size < 1 || num_layers < 1 || num_classes < 1) {
    throw std::invalid_argument("lstm: sizes must be positive");
  }
  if (dropout < 0.0 || dropout >= 1.0) {
    throw std::invalid_argument("lstm: dropout must be in [0, 1)");
  }
  LstmNet net;
  net.input_size = input_size;
  net.hidden_size = hidden_size;
  net.num_layers = num_layers;
  net.inter_layer_dropout = dropout;

  Rng rng(seed);
  const int h = hidden_size;
  for (int layer = 0; layer < num_layers; ++layer) {
    const int in = layer == 0 ? input_size : hidden_size;
    LstmLayer l;
    const double bound_in = std::sqrt(6.0 / (in + h));
    l.w_input = Mat(4 * h, in);
    for (int r = 0; r < 4 * h; ++r) {
      for (int c = 0; c < in; ++c) l.w_input(r, c) = rng.uniform(-bound_in, bound_in);
    }
    const double bound_rec = std::sqrt(6.0 / (h + h));
    l.w_recurrent = Mat(4 * h, h);
    for (int r = 0; r < 4 * h; ++r) {
      for (int c = 0; c < h; ++c) l.w_recurrent(r, c) = rng.uniform(-bound_rec, bound_rec);
    }
    l.bias = Vec::Zero(4 * h);
    l.bias.segment(h, h).setConstant(1.0);  // forget gate bias
    net.layers.push_back(std::move(l));
  }
  net.head = DenseNet::init({hidden_size, num_classes},
                            derive_seed(seed, 0x6865616full /* "head" */));
  return net;
}

Vec LstmNet::forward(const std::vector<Vec>& sequence, bool training,
                     std::uint64_t rng_seed) const {
  if (sequence.empty()) {
    throw std::invalid_argument("lstm forward: empty sequence");
  }
  SequenceBatch batch;
  batch.sequences = {sequence};
  batch.labels = {0};
  // Reuse the batched path (batch of one) so training and inference share
  // one implementation of the recursions.
  return forward_logits_batch(*this, batch, training, rng_seed).col(0);
}

}  // namespace v2vbeam::nn
