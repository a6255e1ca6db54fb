#pragma once

#include <cstdint>
#include <vector>

#include "v2vbeam/nn/dense.hpp"

namespace v2vbeam::nn {

/// Packed gate parameters of one LSTM layer. Rows hold the four gate blocks
/// in the order input, forget, cell candidate, output, each hidden_size tall.
struct LstmLayer {
  Mat w_input;      // 4H x layer_input
  Mat w_recurrent;  // 4H x H
  Vec bias;         // 4H
};

/// Stacked LSTM classifier: num_layers cells, dropout on the hidden outputs
/// between layers (training only), and a dense head mapping the final hidden
/// state of the top layer to class logits.
struct LstmNet {
  int input_size = 0;
  int hidden_size = 0;
  int num_layers = 0;
  double inter_layer_dropout = 0.0;
  std::vector<LstmLayer> layers;
  DenseNet head;

  static LstmNet init(int input_size, int hidden_size, int num_layers,
                      int num_classes, double dropout, std::uint64_t seed);

  int num_classes() const { return head.output_size(); }

  /// Runs the standard LSTM recursions through all layers and returns the
  /// head logits from the last time step. Dropout is applied between layers
  /// iff training; rng_seed drives the masks. Throws std::invalid_argument
  /// on an empty sequence or a step-size mismatch.
  Vec forward(const std::vector<Vec>& sequence, bool training = false,
              std::uint64_t rng_seed = 0) const;
};

}  // namespace v2vbeam::nn
