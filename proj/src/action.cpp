#include "equi/action.hpp"

#include <algorithm>

#include "equi/errors.hpp"

namespace equi {

GAction::GAction(FiniteGroup group, int points, std::vector<std::vector<int>> table) {
  if (table.size() != group.order())
    throw ShapeMismatch("action table must have one row per group element");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != points)
      throw ShapeMismatch("action table row length must equal point count");
    std::vector<char> seen(points, 0);
    for (int v : row) {
      if (v < 0 || v >= points || seen[v])
        throw ShapeMismatch("action table row is not a permutation of the points");
      seen[v] = 1;
    }
  }
  const auto& id_row = table[group.identity_index()];
  for (int x = 0; x < points; ++x)
    if (id_row[x] != x) throw ShapeMismatch("identity row of action table must fix every point");
  auto data = std::make_shared<Data>(Data{std::move(group), points, std::move(table)});
  data_ = std::move(data);
}

GAction GAction::natural(FiniteGroup group) {
  const int m = group.degree();
  std::vector<std::vector<int>> table(group.order());
  for (std::size_t g = 0; g < group.order(); ++g)
    table[g] = group.element(static_cast<int>(g)).images();
  return GAction(std::move(group), m, std::move(table));
}

GAction GAction::grid_rotation(int side) {
  if (side < 1) throw ShapeMismatch("grid side must be positive");
  const int m = side * side;
  std::vector<int> rot(m);
  for (int r = 0; r < side; ++r)
    for (int c = 0; c < side; ++c)
      rot[r * side + c] = c * side + (side - 1 - r);
  FiniteGroup c4 = FiniteGroup::from_generators(m, {Permutation(std::move(rot))});
  return natural(std::move(c4));
}

GAction GAction::diagonal_pairs(FiniteGroup group) {
  const int n = group.degree();
  const int m = n * n;
  std::vector<std::vector<int>> table(group.order(), std::vector<int>(m));
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Permutation& p = group.element(static_cast<int>(g));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[g][i * n + j] = p(i) * n + p(j);
  }
  return GAction(std::move(group), m, std::move(table));
}

bool GAction::satisfies_action_law() const {
  const FiniteGroup& g = group();
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      int ab = g.product_index(static_cast<int>(a), static_cast<int>(b));
      for (int x = 0; x < points(); ++x)
        if (apply(ab, x) != apply(static_cast<int>(a), apply(static_cast<int>(b), x)))
          return false;
    }
  }
  return true;
}

bool GAction::same_action(const GAction& other) const {
  if (data_ == other.data_) return true;
  return points() == other.points() && group().same_group(other.group()) &&
         table() == other.table();
}

bool Subgroup::contains(int element_idx) const {
  return std::find(member_indices.begin(), member_indices.end(), element_idx) !=
         member_indices.end();
}

Subgroup make_subgroup(const FiniteGroup& parent, std::vector<int> member_indices) {
  std::vector<char> member(parent.order(), 0);
  for (int idx : member_indices) {
    if (idx < 0 || idx >= static_cast<int>(parent.order()))
      throw NotASubgroup("member index out of range");
    member[idx] = 1;
  }
  if (!member[parent.identity_index()]) throw NotASubgroup("subgroup lacks the identity");
  for (int a : member_indices) {
    if (!member[parent.inverse_index(a)]) throw NotASubgroup("subgroup not closed under inversion");
    for (int b : member_indices)
      if (!member[parent.product_index(a, b)])
        throw NotASubgroup("subgroup not closed under composition");
  }
  return Subgroup{parent, std::move(member_indices)};
}

Subgroup stabilizer(const GAction& action, int point) {
  if (point < 0 || point >= action.points())
    throw PointOutOfRange("stabilizer point out of range");
  std::vector<int> members;
  for (std::size_t g = 0; g < action.group().order(); ++g)
    if (action.apply(static_cast<int>(g), point) == point)
      members.push_back(static_cast<int>(g));
  return Subgroup{action.group(), std::move(members)};
}

OrbitDecomposition orbit_decomposition(const GAction& action) {
  const int m = action.points();
  const std::size_t n = action.group().order();
  OrbitDecomposition dec{action, {}, std::vector<int>(m, -1), std::vector<int>(m, -1), {}};
  for (int p = 0; p < m; ++p) {
    if (dec.orbit_of[p] >= 0) continue;
    const int rep_index = static_cast<int>(dec.representatives.size());
    dec.representatives.push_back(p);
    std::vector<char> in_orbit(m, 0);
    for (std::size_t g = 0; g < n; ++g) in_orbit[action.apply(static_cast<int>(g), p)] = 1;
    std::vector<int> orbit;
    for (int y = 0; y < m; ++y) {
      if (!in_orbit[y]) continue;
      orbit.push_back(y);
      dec.orbit_of[y] = rep_index;
      for (std::size_t g = 0; g < n; ++g) {
        if (action.apply(static_cast<int>(g), y) == p) {
          dec.transversal[y] = static_cast<int>(g);
          break;
        }
      }
    }
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

std::vector<int> right_coset_transversal(const FiniteGroup& group, const Subgroup& sub) {
  if (!sub.parent.same_group(group)) throw NotASubgroup("subgroup belongs to a different group");
  make_subgroup(group, sub.member_indices);  // re-validate closure
  std::vector<char> covered(group.order(), 0);
  std::vector<int> reps;
  auto mark_coset = [&](int rep) {
    reps.push_back(rep);
    for (int h : sub.member_indices) covered[group.product_index(h, rep)] = 1;
  };
  mark_coset(group.identity_index());
  for (std::size_t g = 0; g < group.order(); ++g)
    if (!covered[g]) mark_coset(static_cast<int>(g));
  return reps;
}

std::pair<int, int> coset_index_map(const FiniteGroup& group, const Subgroup& sub,
                                    const std::vector<int>& transversal, int sigma, int j) {
  if (j < 0 || j >= static_cast<int>(transversal.size()))
    throw InvalidTransversal("coset index out of range");
  const int rho = group.product_index(transversal[j], sigma);
  for (int jp = 0; jp < static_cast<int>(transversal.size()); ++jp) {
    // rho = tau * sigma_{jp}  <=>  tau = rho * sigma_{jp}^{-1} in H
    int tau = group.product_index(rho, group.inverse_index(transversal[jp]));
    if (sub.contains(tau)) return {jp, tau};
  }
  throw InvalidTransversal("transversal does not cover the group");
}

std::vector<std::vector<int>> subgroup_orbit_blocks(const GAction& action, const Subgroup& sub) {
  const int m = action.points();
  std::vector<int> block_of(m, -1);
  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < m; ++p) {
    if (block_of[p] >= 0) continue;
    std::vector<char> hit(m, 0);
    for (int h : sub.member_indices) hit[action.apply(h, p)] = 1;
    std::vector<int> block;
    for (int y = 0; y < m; ++y)
      if (hit[y]) {
        block.push_back(y);
        block_of[y] = static_cast<int>(blocks.size());
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace equi
