#ifndef EQUI_DECOMP_HPP
#define EQUI_DECOMP_HPP

#include <functional>
#include <string>
#include <vector>

#include "equi/field.hpp"

namespace equi {

/// A black-box map between function spaces V^X -> W^Y.  Evaluation must be
/// pure and deterministic; shapes describe the expected field geometry.
struct MapBox {
  std::function<Field(const Field&)> evaluate;
  int in_points = 0;
  int in_dim = 0;
  int out_points = 0;
  int out_dim = 0;
  std::string label;
};

/// One W-valued component F(.)(y_i) of an equivariant map: a black-box map
/// from input fields to a vector of length out_dim, tagged with its orbit
/// representative and the stabilizer it should be invariant under.  The input
/// action is carried along so invariance checks and Psi can act on fields.
struct ComponentMap {
  std::function<std::vector<double>(const Field&)> evaluate;
  GAction in_action;
  int in_dim = 0;
  int out_dim = 0;
  int representative = 0;
  Subgroup stabilizer;
  std::string label;
};

/// Phi: split a map into per-representative components, component i reading
/// off row y_i of the output.
std::vector<ComponentMap> phi(const MapBox& F, const OrbitDecomposition& orbits);

/// Psi: rebuild a full map from components, F(f)(y) = comp_i(sigma_y . f)
/// with sigma_y the stored transversal element.  Never checks invariance;
/// see check_psi_well_defined.
MapBox psi(const std::vector<ComponentMap>& components, const OrbitDecomposition& orbits);

/// max over samples f and sigma in the component's stabilizer of
/// |comp(sigma.f) - comp(f)|_inf; 0 means invariant on the sample.
double check_invariance(const ComponentMap& component, const std::vector<Field>& samples);

/// max over samples and all sigma in G of sup|F(sigma.f) - sigma.F(f)|.
double check_equivariance(const MapBox& F, const GAction& action_in, const GAction& action_out,
                          const std::vector<Field>& samples);

/// Spread of comp(tau.f) over every tau with tau.y = y_i; 0 certifies that
/// Psi's value at y does not depend on the transversal choice.
double check_psi_well_defined(const ComponentMap& component, const OrbitDecomposition& orbits,
                              int y, const std::vector<Field>& samples);

/// Pointwise combination f -> F(f) + lambda * F'(f) (same shapes).
MapBox mapbox_axpy(const MapBox& F, double lambda, const MapBox& Fprime);

}  // namespace equi

#endif
