#ifndef EQUI_ACTION_HPP
#define EQUI_ACTION_HPP

#include <memory>
#include <utility>
#include <vector>

#include "equi/perm.hpp"

namespace equi {

/// A left action of a FiniteGroup on the point set {0, ..., m-1}, stored as
/// the full |G| x m table.  Immutable and cheap to copy.
class GAction {
 public:
  GAction(FiniteGroup group, int points, std::vector<std::vector<int>> table);

  /// Permutation action on {0..degree-1}.
  static GAction natural(FiniteGroup group);
  /// 90-degree rotations (C_4) on the cells of a side x side grid; the group is
  /// the order-4 rotation group realized on the cells.
  static GAction grid_rotation(int side);
  /// g.(i,j) = (g(i), g(j)) on degree^2 pairs, pair (i,j) at point i*degree+j.
  static GAction diagonal_pairs(FiniteGroup group);

  const FiniteGroup& group() const { return data_->group; }
  int points() const { return data_->points; }
  int apply(int element_idx, int point) const { return data_->table[element_idx][point]; }
  const std::vector<std::vector<int>>& table() const { return data_->table; }

  /// Exhaustive check of (gh).x = g.(h.x); used by validation suites.
  bool satisfies_action_law() const;

  bool same_action(const GAction& other) const;

 private:
  struct Data {
    FiniteGroup group;
    int points;
    std::vector<std::vector<int>> table;
  };
  std::shared_ptr<const Data> data_;
};

struct Subgroup {
  FiniteGroup parent;
  std::vector<int> member_indices;

  std::size_t order() const { return member_indices.size(); }
  bool contains(int element_idx) const;
};

/// Validates closure/identity/inverses of `member_indices` within `parent`.
Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> member_indices);

/// All elements fixing `point`; throws PointOutOfRange.
Subgroup stabilizer(const GAction& action, int point);

/// Orbits of an action together with the bookkeeping Psi needs: one
/// representative per orbit (smallest point index) and, per point y, the first
/// group element sigma_y with sigma_y.y = representative.
struct OrbitDecomposition {
  GAction action;
  std::vector<int> representatives;          // ascending point indices
  std::vector<int> orbit_of;                 // point -> index into representatives
  std::vector<int> transversal;              // point -> group element index
  std::vector<std::vector<int>> orbits;      // per representative, ascending points

  int orbit_count() const { return static_cast<int>(representatives.size()); }
};

OrbitDecomposition orbit_decomposition(const GAction& action);

/// Right coset representatives: G = disjoint union of H*sigma_j, the first
/// representative being the identity.  Deterministic in element order.
std::vector<int> right_coset_transversal(const FiniteGroup& group, const Subgroup& sub);

/// Solves sigma_j * sigma = tau * sigma_{j'} for the unique coset index j' and
/// tau in the subgroup; returns (j', tau) with tau as a parent element index.
std::pair<int, int> coset_index_map(const FiniteGroup& group, const Subgroup& sub,
                                    const std::vector<int>& transversal, int sigma, int j);

/// Orbit blocks of a subgroup acting through `action`, each block ascending,
/// blocks ordered by smallest member.
std::vector<std::vector<int>> subgroup_orbit_blocks(const GAction& action, const Subgroup& sub);

}  // namespace equi

#endif
