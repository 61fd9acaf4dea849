#include "equi/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "equi/errors.hpp"

namespace equi {

std::vector<ComponentMap> phi(const MapBox& F, const OrbitDecomposition& orbits) {
  if (F.out_points != orbits.action.points())
    throw ShapeMismatch("map output points do not match the orbit decomposition");
  std::vector<ComponentMap> components;
  components.reserve(orbits.representatives.size());
  for (std::size_t i = 0; i < orbits.representatives.size(); ++i) {
    const int rep = orbits.representatives[i];
    ComponentMap comp{
        [eval = F.evaluate, rep, d = F.out_dim](const Field& f) {
          Field out = eval(f);
          std::vector<double> row(d);
          for (int k = 0; k < d; ++k) row[k] = out.at(rep, k);
          return row;
        },
        orbits.action, F.in_dim, F.out_dim, rep, stabilizer(orbits.action, rep),
        F.label + "[y=" + std::to_string(rep) + "]"};
    components.push_back(std::move(comp));
  }
  return components;
}

MapBox psi(const std::vector<ComponentMap>& components, const OrbitDecomposition& orbits) {
  if (components.size() != orbits.representatives.size())
    throw ComponentMismatch("need exactly one component per orbit representative");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!components[i].in_action.group().same_group(orbits.action.group()))
      throw ComponentMismatch("component group differs from the orbit decomposition's group");
    if (components[i].in_action.points() != components[0].in_action.points() ||
        components[i].in_dim != components[0].in_dim ||
        components[i].out_dim != components[0].out_dim)
      throw ComponentMismatch("components disagree on field shapes");
  }
  const GAction in_action = components.front().in_action;
  const int out_dim = components.front().out_dim;
  MapBox F;
  F.in_points = in_action.points();
  F.in_dim = components.front().in_dim;
  F.out_points = orbits.action.points();
  F.out_dim = out_dim;
  F.label = "psi";
  F.evaluate = [components, orbits, in_action, out_dim](const Field& f) {
    Field out(orbits.action.points(), out_dim);
    for (int y = 0; y < orbits.action.points(); ++y) {
      const ComponentMap& comp = components[orbits.orbit_of[y]];
      std::vector<double> row = comp.evaluate(act_field(in_action, orbits.transversal[y], f));
      for (int k = 0; k < out_dim; ++k) out.at(y, k) = row[k];
    }
    return out;
  };
  return F;
}

double check_invariance(const ComponentMap& component, const std::vector<Field>& samples) {
  double worst = 0.0;
  for (const Field& f : samples) {
    const std::vector<double> base = component.evaluate(f);
    for (int h : component.stabilizer.member_indices) {
      const std::vector<double> moved =
          component.evaluate(act_field(component.in_action, h, f));
      for (std::size_t k = 0; k < base.size(); ++k)
        worst = std::max(worst, std::fabs(moved[k] - base[k]));
    }
  }
  return worst;
}

double check_equivariance(const MapBox& F, const GAction& action_in, const GAction& action_out,
                          const std::vector<Field>& samples) {
  if (!action_in.group().same_group(action_out.group()))
    throw GroupMismatch("equivariance check needs a shared group");
  double worst = 0.0;
  for (const Field& f : samples) {
    const Field base = F.evaluate(f);
    for (std::size_t g = 0; g < action_in.group().order(); ++g) {
      const Field lhs = F.evaluate(act_field(action_in, static_cast<int>(g), f));
      const Field rhs = act_field(action_out, static_cast<int>(g), base);
      worst = std::max(worst, sup_norm(field_difference(lhs, rhs)));
    }
  }
  return worst;
}

double check_psi_well_defined(const ComponentMap& component, const OrbitDecomposition& orbits,
                              int y, const std::vector<Field>& samples) {
  if (y < 0 || y >= orbits.action.points())
    throw PointOutOfRange("point out of range");
  const int rep = component.representative;
  if (orbits.representatives[orbits.orbit_of[y]] != rep)
    throw PointNotInOrbit("point is not in the component's orbit");
  std::vector<int> candidates;  // all tau with tau.y = y_i
  for (std::size_t g = 0; g < orbits.action.group().order(); ++g)
    if (orbits.action.apply(static_cast<int>(g), y) == rep)
      candidates.push_back(static_cast<int>(g));
  double worst = 0.0;
  for (const Field& f : samples) {
    std::vector<double> lo, hi;
    for (int tau : candidates) {
      const std::vector<double> v = component.evaluate(act_field(component.in_action, tau, f));
      if (lo.empty()) {
        lo = v;
        hi = v;
      } else {
        for (std::size_t k = 0; k < v.size(); ++k) {
          lo[k] = std::min(lo[k], v[k]);
          hi[k] = std::max(hi[k], v[k]);
        }
      }
    }
    for (std::size_t k = 0; k < lo.size(); ++k) worst = std::max(worst, hi[k] - lo[k]);
  }
  return worst;
}

MapBox mapbox_axpy(const MapBox& F, double lambda, const MapBox& Fprime) {
  if (F.in_points != Fprime.in_points || F.in_dim != Fprime.in_dim ||
      F.out_points != Fprime.out_points || F.out_dim != Fprime.out_dim)
    throw ShapeMismatch("combined maps must share shapes");
  MapBox out = F;
  out.label = F.label + "+" + std::to_string(lambda) + "*" + Fprime.label;
  out.evaluate = [a = F.evaluate, b = Fprime.evaluate, lambda](const Field& f) {
    Field fa = a(f);
    const Field fb = b(f);
    for (std::size_t i = 0; i < fa.flat().size(); ++i)
      fa.flat()[i] = fa.flat()[i] + lambda * fb.flat()[i];
    return fa;
  };
  return out;
}

}  // namespace equi
