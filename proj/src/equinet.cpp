#include "equi/equinet.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "equi/errors.hpp"

namespace equi {

namespace {

std::vector<double> flatten(const Field& f) { return f.flat(); }

void check_input_shape(const InvariantNet& net, const Field& f) {
  if (f.point_count() != net.in_points || f.value_dim() != net.in_dim)
    throw ShapeMismatch("field shape does not match invariant net");
}

std::vector<Field> spot_check_samples(int points, int dim) {
  SampleBox box;
  box.point_count = points;
  box.value_dim = dim;
  box.seed = 0xE9;
  return sample_fields(box, 8);
}

}  // namespace

std::vector<double> InvariantNet::evaluate(const Field& f) const {
  check_input_shape(*this, f);
  if (mode == InvarianceMode::average) {
    std::vector<double> acc(out_dim, 0.0);
    for (int h : subgroup.member_indices) {
      const std::vector<double> y = base.forward(flatten(act_field(action, h, f)));
      for (int k = 0; k < out_dim; ++k) acc[k] += y[k];
    }
    const double inv = 1.0 / static_cast<double>(subgroup.member_indices.size());
    for (double& v : acc) v *= inv;
    return acc;
  }
  if (f.value_dim() != 1) throw UnsupportedValueDim("sortg mode needs scalar channels");
  return base.forward(sort_layer->apply(f.flat()));
}

std::size_t InvariantNet::param_count() const {
  std::size_t n = base.param_count();
  if (mode == InvarianceMode::sortg) n += sort_layer->relu_net.param_count();
  return n;
}

ComponentMap InvariantNet::as_component(int representative) const {
  return ComponentMap{[net = *this](const Field& f) { return net.evaluate(f); },
                      action,
                      in_dim,
                      out_dim,
                      representative,
                      subgroup,
                      mode == InvarianceMode::average ? "avg-net" : "sortg-net"};
}

InvariantNet invariant_by_averaging(Mlp base, const GAction& action, const Subgroup& sub) {
  if (!sub.parent.same_group(action.group()))
    throw GroupMismatch("subgroup belongs to a different group than the action");
  if (base.in_dim() % action.points() != 0)
    throw ShapeMismatch("base input dim must be points * value_dim");
  const int points = action.points();
  const int in_dim = base.in_dim() / points;
  const int out_dim = base.out_dim();
  return InvariantNet{std::move(base), action,  sub,    InvarianceMode::average,
                      std::nullopt,    points,  in_dim, out_dim};
}

InvariantNet invariant_by_sortg(Mlp base, const GAction& action, const Subgroup& sub) {
  if (!sub.parent.same_group(action.group()))
    throw GroupMismatch("subgroup belongs to a different group than the action");
  if (base.in_dim() != action.points())
    throw UnsupportedValueDim("sortg mode needs base input dim = points (value_dim 1)");
  const int points = action.points();
  const int out_dim = base.out_dim();
  SortGLayer layer = sortg_layer(subgroup_orbit_blocks(action, sub));
  return InvariantNet{std::move(base), action, sub, InvarianceMode::sortg,
                      std::move(layer), points, 1,  out_dim};
}

Field EquivariantNet::evaluate(const Field& f) const {
  Field out(orbits.action.points(), components.front().out_dim);
  for (int y = 0; y < orbits.action.points(); ++y) {
    const InvariantNet& comp = components[orbits.orbit_of[y]];
    const std::vector<double> row =
        comp.evaluate(act_field(comp.action, orbits.transversal[y], f));
    for (int k = 0; k < comp.out_dim; ++k) out.at(y, k) = row[k];
  }
  return out;
}

MapBox EquivariantNet::as_mapbox() const {
  MapBox box;
  box.in_points = components.front().in_points;
  box.in_dim = components.front().in_dim;
  box.out_points = orbits.action.points();
  box.out_dim = components.front().out_dim;
  box.label = "equivariant-net";
  box.evaluate = [net = *this](const Field& f) { return net.evaluate(f); };
  return box;
}

std::size_t EquivariantNet::param_count() const {
  std::size_t n = 0;
  for (const InvariantNet& comp : components) n += comp.param_count();
  return n;
}

EquivariantNet build_equivariant(std::vector<InvariantNet> components,
                                 const OrbitDecomposition& orbits) {
  if (components.size() != orbits.representatives.size())
    throw ComponentMismatch("need one component per orbit representative");
  for (std::size_t i = 0; i < components.size(); ++i) {
    const InvariantNet& comp = components[i];
    if (!comp.action.group().same_group(orbits.action.group()))
      throw ComponentMismatch("component group differs from the decomposition's group");
    if (comp.out_dim != components[0].out_dim ||
        comp.in_points != components[0].in_points || comp.in_dim != components[0].in_dim)
      throw ComponentMismatch("components disagree on shapes");
    const Subgroup stab = stabilizer(orbits.action, orbits.representatives[i]);
    if (stab.member_indices != comp.subgroup.member_indices)
      throw ComponentMismatch("component subgroup is not the representative's stabilizer");
  }
  EquivariantNet net{std::move(components), orbits, 0.0};
  const auto samples =
      spot_check_samples(net.components.front().in_points, net.components.front().in_dim);
  for (std::size_t i = 0; i < net.components.size(); ++i) {
    const double v = check_invariance(
        net.components[i].as_component(orbits.representatives[i]), samples);
    net.build_check_violation = std::max(net.build_check_violation, v);
  }
  if (net.build_check_violation > 1e-9)
    std::cerr << "build_equivariant: component invariance violation "
              << net.build_check_violation << " exceeds 1e-9\n";
  return net;
}

TransferReport transfer_bound_check(const MapBox& target, const EquivariantNet& net,
                                    const std::vector<Field>& samples) {
  TransferReport report;
  report.net_params = net.param_count();
  for (const InvariantNet& comp : net.components)
    report.component_params.push_back(comp.param_count());

  const GAction& action = net.components.front().action;
  for (const Field& f : samples) {
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      const Field moved = act_field(action, static_cast<int>(g), f);
      const Field target_out = target.evaluate(moved);
      const Field net_out = net.evaluate(moved);
      report.sup_error =
          std::max(report.sup_error, sup_norm(field_difference(net_out, target_out)));
      for (std::size_t i = 0; i < net.components.size(); ++i) {
        const int rep = net.orbits.representatives[i];
        const std::vector<double> comp_out = net.components[i].evaluate(moved);
        for (int k = 0; k < net.components[i].out_dim; ++k)
          report.max_component_error = std::max(
              report.max_component_error, std::fabs(comp_out[k] - target_out.at(rep, k)));
      }
    }
  }
  report.bound_holds = report.sup_error <= report.max_component_error + 1e-12;
  return report;
}

namespace {

struct Snapshot {
  std::vector<std::vector<double>> weights, biases;

  static Snapshot take(const Mlp& net) {
    Snapshot s;
    for (const MlpLayer& layer : net.layers()) {
      s.weights.push_back(layer.weights);
      s.biases.push_back(layer.bias);
    }
    return s;
  }
  void restore(Mlp& net) const {
    for (std::size_t l = 0; l < net.layers().size(); ++l) {
      net.layers()[l].weights = weights[l];
      net.layers()[l].bias = biases[l];
    }
  }
};

}  // namespace

FitResult fit(Mlp& net, const std::function<std::vector<double>(const Field&)>& target,
              const std::vector<Field>& samples, int steps, double rate) {
  FitResult result;
  const double norm = 1.0 / static_cast<double>(samples.size());
  MlpGrad grad(net);
  Snapshot best = Snapshot::take(net);
  double best_loss = std::numeric_limits<double>::infinity();

  for (int step = 0; step <= steps; ++step) {
    grad.zero();
    double loss = 0.0;
    for (const Field& f : samples) {
      MlpTrace trace;
      const std::vector<double> out = forward_trace(net, f.flat(), trace);
      const std::vector<double> want = target(f);
      std::vector<double> delta(out.size());
      for (std::size_t k = 0; k < out.size(); ++k) {
        const double e = out[k] - want[k];
        loss += e * e * norm;
        delta[k] = 2.0 * e * norm;
      }
      backward_accumulate(net, trace, delta, grad);
    }
    result.loss_trace.push_back(loss);
    if (loss < best_loss) {
      best_loss = loss;
      best = Snapshot::take(net);
    }
    if (step < steps) apply_gradient(net, grad, rate);
  }
  best.restore(net);
  result.best_loss = best_loss;
  return result;
}

FitResult fit(EquivariantNet& net, const MapBox& target, const std::vector<Field>& samples,
              int steps, double rate) {
  FitResult result;
  const double norm = 1.0 / static_cast<double>(samples.size());
  std::vector<MlpGrad> grads;
  for (const InvariantNet& comp : net.components) grads.emplace_back(comp.base);

  auto take_all = [&] {
    std::vector<Snapshot> snaps;
    for (const InvariantNet& comp : net.components) snaps.push_back(Snapshot::take(comp.base));
    return snaps;
  };
  std::vector<Snapshot> best = take_all();
  double best_loss = std::numeric_limits<double>::infinity();

  for (int step = 0; step <= steps; ++step) {
    for (MlpGrad& g : grads) g.zero();
    double loss = 0.0;
    for (const Field& f : samples) {
      const Field want = target.evaluate(f);
      for (int y = 0; y < net.orbits.action.points(); ++y) {
        const int ci = net.orbits.orbit_of[y];
        InvariantNet& comp = net.components[ci];
        const Field fy = act_field(comp.action, net.orbits.transversal[y], f);
        const std::vector<double> out = comp.evaluate(fy);
        std::vector<double> delta(out.size());
        for (std::size_t k = 0; k < out.size(); ++k) {
          const double e = out[k] - want.at(y, static_cast<int>(k));
          loss += e * e * norm;
          delta[k] = 2.0 * e * norm;
        }
        if (comp.mode == InvarianceMode::average) {
          std::vector<double> scaled(delta);
          const double inv = 1.0 / static_cast<double>(comp.subgroup.member_indices.size());
          for (double& v : scaled) v *= inv;
          for (int h : comp.subgroup.member_indices) {
            MlpTrace trace;
            forward_trace(comp.base, act_field(comp.action, h, fy).flat(), trace);
            backward_accumulate(comp.base, trace, scaled, grads[ci]);
          }
        } else {
          MlpTrace trace;
          forward_trace(comp.base, comp.sort_layer->apply(fy.flat()), trace);
          backward_accumulate(comp.base, trace, delta, grads[ci]);
        }
      }
    }
    result.loss_trace.push_back(loss);
    if (loss < best_loss) {
      best_loss = loss;
      best = take_all();
    }
    if (step < steps)
      for (std::size_t ci = 0; ci < net.components.size(); ++ci)
        apply_gradient(net.components[ci].base, grads[ci], rate);
  }
  for (std::size_t ci = 0; ci < net.components.size(); ++ci)
    best[ci].restore(net.components[ci].base);
  result.best_loss = best_loss;
  return result;
}

}  // namespace equi
