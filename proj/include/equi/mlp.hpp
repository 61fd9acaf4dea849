#ifndef EQUI_MLP_HPP
#define EQUI_MLP_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace equi {

struct MlpLayer {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<double> weights;  // row-major, out_dim x in_dim
  std::vector<double> bias;     // out_dim

  double w(int r, int c) const { return weights[static_cast<std::size_t>(r) * in_dim + c]; }
  double& w(int r, int c) { return weights[static_cast<std::size_t>(r) * in_dim + c]; }
};

/// Plain multilayer perceptron; ReLU after every layer except the last.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<MlpLayer> layers);

  int in_dim() const { return layers_.empty() ? 0 : layers_.front().in_dim; }
  int out_dim() const { return layers_.empty() ? 0 : layers_.back().out_dim; }
  const std::vector<MlpLayer>& layers() const { return layers_; }
  std::vector<MlpLayer>& layers() { return layers_; }

  std::vector<double> forward(std::span<const double> x) const;
  std::size_t param_count() const;

 private:
  std::vector<MlpLayer> layers_;
};

/// Deterministic init: entries uniform in [-1, 1] scaled by 1/sqrt(fan-in).
Mlp mlp_random(const std::vector<int>& dims, std::uint64_t seed);

/// Gradient buffers matching a net's layer shapes.
struct MlpGrad {
  std::vector<std::vector<double>> d_weights;
  std::vector<std::vector<double>> d_bias;

  explicit MlpGrad(const Mlp& net);
  void zero();
};

/// Forward pass that keeps pre-activations for backprop.
struct MlpTrace {
  std::vector<std::vector<double>> inputs;  // inputs[l] = input to layer l
  std::vector<std::vector<double>> pre;     // pre[l] = pre-activation of layer l
};

std::vector<double> forward_trace(const Mlp& net, std::span<const double> x, MlpTrace& trace);

/// Accumulates dLoss/dparams given dLoss/doutput for the traced pass.
void backward_accumulate(const Mlp& net, const MlpTrace& trace, std::span<const double> d_out,
                         MlpGrad& grad);

void apply_gradient(Mlp& net, const MlpGrad& grad, double rate);

}  // namespace equi

#endif
