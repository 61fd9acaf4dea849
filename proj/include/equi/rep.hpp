#ifndef EQUI_REP_HPP
#define EQUI_REP_HPP

#include <vector>

#include "equi/action.hpp"
#include "equi/ratmat.hpp"

namespace equi {

/// A matrix representation with exact rational entries, one matrix per group
/// element in the group's element order.
struct Representation {
  FiniteGroup group;
  int dim = 0;
  std::vector<RatMatrix> matrices;

  const RatMatrix& matrix(int g) const { return matrices[g]; }

  /// rho(gh) = rho(g) rho(h) for every pair up to `pair_cap`; pairs beyond the
  /// cap are sampled deterministically.
  bool check_homomorphism(std::size_t pair_cap = 10000) const;
};

/// 0/1 permutation matrices, P(g) e_x = e_{g.x}.
Representation perm_rep(const GAction& action);

/// The k-dimensional trivial representation (identity matrices).
Representation trivial_rep(const FiniteGroup& group, int k);

/// Same matrices reindexed by the subgroup's elements; the result's group is
/// the subgroup realized as its own FiniteGroup.
Representation restrict_rep(const Representation& rep, const Subgroup& sub);

/// rho tensor I_k.
Representation tensor_identity(const Representation& rep, int k);

/// Fill a representation from matrices assigned to a generating set,
/// multiplying along the closure; validates the homomorphism law.
Representation rep_from_generators(const FiniteGroup& group,
                                   const std::vector<std::pair<int, RatMatrix>>& gen_matrices);

/// Induced representation on the coset blocks: dimension (G:H) * dim(rep_h),
/// block (j', j) = rep_h(tau^{-1}) where sigma_j sigma^{-1} = tau sigma_{j'}.
Representation induce(const Representation& rep_h, const FiniteGroup& group,
                      const std::vector<int>& transversal);

/// The coset-bookkeeping action on aggregated hidden layers: block j of
/// sigma's matrix reads block phi_sigma(j) through rep_H(sigma_j sigma
/// sigma_{phi_sigma(j)}^{-1}), where rep_H is the restriction of the
/// permutation action tensored with I_inner.
Representation star_action_rep(const GAction& action, const Subgroup& sub,
                               const std::vector<int>& transversal, int inner_dim);

/// Verifies that the block-identity map intertwines the star action with the
/// induced representation, exactly, for every group element.
bool xi_check(const Representation& star, const Representation& induced);

struct IntertwinerBasis {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<RatMatrix> basis;  // target_dim x source_dim each
  int dimension = 0;
};

/// Exact basis of {W : rho_target(g) W = W rho_source(g) for all g}, solved
/// over a generating set by rational elimination.
IntertwinerBasis intertwiner_basis(const Representation& source, const Representation& target);

/// Checks the commutation identity for every group element (not only the
/// generators the solver used).
bool verify_intertwiners(const IntertwinerBasis& basis, const Representation& source,
                         const Representation& target);

/// Exact basis of the fixed space {v : rho(g) v = v}; computed as
/// Hom(trivial, rho).
struct FixedSpace {
  std::vector<std::vector<Rat>> basis;
  int dimension = 0;
};

FixedSpace invariant_vectors(const Representation& rep);

/// Hook length formula: n! / prod(hooks).
long long irrep_dimension(const std::vector<int>& partition);

/// Parameter-count audit for the aggregated architecture over S_n with
/// H = Stab(0): first-layer intertwiner dimension, bias fixed-space dimension,
/// hidden-layer endomorphism dimension, and the n^2 dimension identity from
/// the hook-length dimensions.
struct AppendixCReport {
  int n = 0;
  int dim_v = 1;
  int dim_v1 = 1;
  long long first_layer_dim = 0;
  long long first_layer_expected = 0;
  bool first_layer_matches = false;
  long long bias_dim = 0;
  long long bias_expected = 0;
  bool bias_matches = false;
  long long hidden_dim = 0;
  long long hidden_bound = 0;
  bool hidden_within_bound = false;
  bool eq22_identity = false;

  bool all_pass() const {
    return first_layer_matches && bias_matches && hidden_within_bound && eq22_identity;
  }
};

AppendixCReport appendix_c_audit(int n, int dim_v, int dim_v1);

}  // namespace equi

#endif
