#include "equi/mlp.hpp"

#include <cmath>

#include "equi/errors.hpp"
#include "equi/rng.hpp"

namespace equi {

Mlp::Mlp(std::vector<MlpLayer> layers) : layers_(std::move(layers)) {
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const MlpLayer& layer = layers_[l];
    if (layer.weights.size() != static_cast<std::size_t>(layer.in_dim) * layer.out_dim ||
        layer.bias.size() != static_cast<std::size_t>(layer.out_dim))
      throw ShapeMismatch("layer parameter sizes do not match declared dims");
    if (l > 0 && layers_[l - 1].out_dim != layer.in_dim)
      throw ShapeMismatch("consecutive layer dims do not chain");
  }
}

std::vector<double> Mlp::forward(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != in_dim()) throw ShapeMismatch("mlp input size mismatch");
  std::vector<double> cur(x.begin(), x.end());
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const MlpLayer& layer = layers_[l];
    std::vector<double> next(layer.out_dim);
    for (int r = 0; r < layer.out_dim; ++r) {
      double acc = layer.bias[r];
      for (int c = 0; c < layer.in_dim; ++c) acc += layer.w(r, c) * cur[c];
      next[r] = acc;
    }
    if (l + 1 < layers_.size())
      for (double& v : next) v = v > 0.0 ? v : 0.0;
    cur = std::move(next);
  }
  return cur;
}

std::size_t Mlp::param_count() const {
  std::size_t n = 0;
  for (const MlpLayer& layer : layers_) n += layer.weights.size() + layer.bias.size();
  return n;
}

Mlp mlp_random(const std::vector<int>& dims, std::uint64_t seed) {
  if (dims.size() < 2) throw ShapeMismatch("need at least input and output dims");
  Rng rng(seed);
  std::vector<MlpLayer> layers;
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    MlpLayer layer;
    layer.in_dim = dims[l];
    layer.out_dim = dims[l + 1];
    const double scale = 1.0 / std::sqrt(static_cast<double>(layer.in_dim));
    layer.weights.resize(static_cast<std::size_t>(layer.in_dim) * layer.out_dim);
    layer.bias.resize(layer.out_dim);
    for (double& w : layer.weights) w = rng.uniform(-1.0, 1.0) * scale;
    for (double& b : layer.bias) b = rng.uniform(-1.0, 1.0) * scale;
    layers.push_back(std::move(layer));
  }
  return Mlp(std::move(layers));
}

MlpGrad::MlpGrad(const Mlp& net) {
  for (const MlpLayer& layer : net.layers()) {
    d_weights.emplace_back(layer.weights.size(), 0.0);
    d_bias.emplace_back(layer.bias.size(), 0.0);
  }
}

void MlpGrad::zero() {
  for (auto& v : d_weights) std::fill(v.begin(), v.end(), 0.0);
  for (auto& v : d_bias) std::fill(v.begin(), v.end(), 0.0);
}

std::vector<double> forward_trace(const Mlp& net, std::span<const double> x, MlpTrace& trace) {
  trace.inputs.assign(net.layers().size(), {});
  trace.pre.assign(net.layers().size(), {});
  std::vector<double> cur(x.begin(), x.end());
  for (std::size_t l = 0; l < net.layers().size(); ++l) {
    const MlpLayer& layer = net.layers()[l];
    trace.inputs[l] = cur;
    std::vector<double> next(layer.out_dim);
    for (int r = 0; r < layer.out_dim; ++r) {
      double acc = layer.bias[r];
      for (int c = 0; c < layer.in_dim; ++c) acc += layer.w(r, c) * cur[c];
      next[r] = acc;
    }
    trace.pre[l] = next;
    if (l + 1 < net.layers().size())
      for (double& v : next) v = v > 0.0 ? v : 0.0;
    cur = std::move(next);
  }
  return cur;
}

void backward_accumulate(const Mlp& net, const MlpTrace& trace, std::span<const double> d_out,
                         MlpGrad& grad) {
  std::vector<double> delta(d_out.begin(), d_out.end());
  for (int l = static_cast<int>(net.layers().size()) - 1; l >= 0; --l) {
    const MlpLayer& layer = net.layers()[l];
    if (l + 1 < static_cast<int>(net.layers().size()))
      for (int r = 0; r < layer.out_dim; ++r)
        if (trace.pre[l][r] <= 0.0) delta[r] = 0.0;
    for (int r = 0; r < layer.out_dim; ++r) {
      grad.d_bias[l][r] += delta[r];
      const double dr = delta[r];
      for (int c = 0; c < layer.in_dim; ++c)
        grad.d_weights[l][static_cast<std::size_t>(r) * layer.in_dim + c] +=
            dr * trace.inputs[l][c];
    }
    if (l == 0) break;
    std::vector<double> prev(layer.in_dim, 0.0);
    for (int c = 0; c < layer.in_dim; ++c) {
      double acc = 0.0;
      for (int r = 0; r < layer.out_dim; ++r) acc += layer.w(r, c) * delta[r];
      prev[c] = acc;
    }
    delta = std::move(prev);
  }
}

void apply_gradient(Mlp& net, const MlpGrad& grad, double rate) {
  for (std::size_t l = 0; l < net.layers().size(); ++l) {
    MlpLayer& layer = net.layers()[l];
    for (std::size_t i = 0; i < layer.weights.size(); ++i)
      layer.weights[i] -= rate * grad.d_weights[l][i];
    for (std::size_t i = 0; i < layer.bias.size(); ++i)
      layer.bias[i] -= rate * grad.d_bias[l][i];
  }
}

}  // namespace equi
