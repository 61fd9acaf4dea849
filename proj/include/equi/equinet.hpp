#ifndef EQUI_EQUINET_HPP
#define EQUI_EQUINET_HPP

#include <optional>
#include <vector>

#include "equi/decomp.hpp"
#include "equi/mlp.hpp"
#include "equi/sortnet.hpp"

namespace equi {

enum class InvarianceMode { average, sortg };

/// A subgroup-invariant network component: either group averaging of a base
/// MLP over the subgroup, or the base MLP composed with a blockwise sorting
/// layer over the subgroup's orbit blocks (scalar channels only).
struct InvariantNet {
  Mlp base;
  GAction action;  // input action
  Subgroup subgroup;
  InvarianceMode mode = InvarianceMode::average;
  std::optional<SortGLayer> sort_layer;
  int in_points = 0;
  int in_dim = 0;
  int out_dim = 0;

  std::vector<double> evaluate(const Field& f) const;
  std::size_t param_count() const;
  ComponentMap as_component(int representative) const;
};

/// f -> (1/|H|) sum_{tau in H} base(tau.f); summation in member order.
InvariantNet invariant_by_averaging(Mlp base, const GAction& action, const Subgroup& sub);

/// f -> base(Sort_G(f)) with blocks the subgroup's orbit blocks; requires
/// scalar channels (value_dim 1), else UnsupportedValueDim.
InvariantNet invariant_by_sortg(Mlp base, const GAction& action, const Subgroup& sub);

/// Psi-aggregation of one invariant component per orbit representative.
struct EquivariantNet {
  std::vector<InvariantNet> components;
  OrbitDecomposition orbits;
  double build_check_violation = 0.0;  // invariance spot check at build time

  Field evaluate(const Field& f) const;
  MapBox as_mapbox() const;
  std::size_t param_count() const;
};

EquivariantNet build_equivariant(std::vector<InvariantNet> components,
                                 const OrbitDecomposition& orbits);

/// Theorem-2 style empirical accounting: sup error of the aggregated net vs an
/// equivariant target over samples and all group translates, against the worst
/// per-component error on the same translate set.
struct TransferReport {
  double sup_error = 0.0;
  double max_component_error = 0.0;
  bool bound_holds = false;
  std::size_t net_params = 0;
  std::vector<std::size_t> component_params;
};

TransferReport transfer_bound_check(const MapBox& target, const EquivariantNet& net,
                                    const std::vector<Field>& samples);

/// Full-batch gradient descent on squared error.  The returned trace holds the
/// loss at every iterate (steps+1 entries); the net is left at the best-seen
/// iterate.
struct FitResult {
  std::vector<double> loss_trace;
  double best_loss = 0.0;
};

FitResult fit(Mlp& net, const std::function<std::vector<double>(const Field&)>& target,
              const std::vector<Field>& samples, int steps, double rate);

FitResult fit(EquivariantNet& net, const MapBox& target, const std::vector<Field>& samples,
              int steps, double rate);

}  // namespace equi

#endif
