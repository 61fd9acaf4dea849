#include "equi/rep.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "equi/errors.hpp"
#include "equi/rng.hpp"

namespace equi {

bool Representation::check_homomorphism(std::size_t pair_cap) const {
  const std::size_t n = group.order();
  if (n * n <= pair_cap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!(matrices[group.product_index(int(a), int(b))] ==
              matrices[a] * matrices[b]))
          return false;
    return true;
  }
  Rng rng(0x5eed);
  for (std::size_t t = 0; t < pair_cap; ++t) {
    const int a = static_cast<int>(rng.below(n));
    const int b = static_cast<int>(rng.below(n));
    if (!(matrices[group.product_index(a, b)] == matrices[a] * matrices[b])) return false;
  }
  return true;
}

Representation perm_rep(const GAction& action) {
  Representation rep{action.group(), action.points(), {}};
  rep.matrices.reserve(action.group().order());
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    RatMatrix m(rep.dim, rep.dim);
    for (int x = 0; x < rep.dim; ++x) m.at(action.apply(int(g), x), x) = 1;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

Representation trivial_rep(const FiniteGroup& group, int k) {
  Representation rep{group, k, {}};
  rep.matrices.assign(group.order(), RatMatrix::identity(k));
  return rep;
}

Representation restrict_rep(const Representation& rep, const Subgroup& sub) {
  if (!sub.parent.same_group(rep.group))
    throw NotASubgroup("subgroup belongs to a different group");
  make_subgroup(sub.parent, sub.member_indices);
  std::vector<Permutation> elements;
  std::vector<RatMatrix> matrices;
  for (int idx : sub.member_indices) {
    elements.push_back(rep.group.element(idx));
    matrices.push_back(rep.matrices[idx]);
  }
  FiniteGroup h = FiniteGroup::from_elements(rep.group.degree(), std::move(elements));
  return Representation{std::move(h), rep.dim, std::move(matrices)};
}

Representation tensor_identity(const Representation& rep, int k) {
  if (k == 1) return rep;
  Representation out{rep.group, rep.dim * k, {}};
  const RatMatrix eye = RatMatrix::identity(k);
  for (const RatMatrix& m : rep.matrices) out.matrices.push_back(kronecker(m, eye));
  return out;
}

Representation rep_from_generators(const FiniteGroup& group,
                                   const std::vector<std::pair<int, RatMatrix>>& gen_matrices) {
  if (gen_matrices.empty() && group.order() > 1)
    throw GroupMismatch("no generator matrices for a nontrivial group");
  const int dim = gen_matrices.empty() ? 1 : gen_matrices.front().second.rows();
  std::vector<RatMatrix> matrices(group.order());
  std::vector<char> known(group.order(), 0);
  matrices[group.identity_index()] = RatMatrix::identity(dim);
  known[group.identity_index()] = 1;
  std::deque<int> frontier{group.identity_index()};
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    for (const auto& [gi, mg] : gen_matrices) {
      const int next = group.product_index(cur, gi);
      if (known[next]) continue;
      matrices[next] = matrices[cur] * mg;
      known[next] = 1;
      frontier.push_back(next);
    }
  }
  for (char k : known)
    if (!k) throw GroupMismatch("generator matrices do not reach every element");
  Representation rep{group, dim, std::move(matrices)};
  if (!rep.check_homomorphism())
    throw GroupMismatch("generator matrices do not define a representation");
  return rep;
}

namespace {

// Positions of the subgroup's elements inside the parent group, in the
// subgroup representation's element order; throws if rep_h's group is not a
// subset of `group`.
struct SubgroupEmbedding {
  Subgroup sub;
  std::vector<int> parent_of;    // rep_h element -> parent element index
  std::vector<int> position_of;  // parent element index -> rep_h element (-1)
};

SubgroupEmbedding embed_subgroup(const Representation& rep_h, const FiniteGroup& group) {
  SubgroupEmbedding emb{Subgroup{group, {}}, {}, std::vector<int>(group.order(), -1)};
  for (std::size_t i = 0; i < rep_h.group.order(); ++i) {
    const int parent = group.index_of(rep_h.group.element(int(i)));
    if (parent < 0) throw NotASubgroup("subgroup element missing from the parent group");
    emb.parent_of.push_back(parent);
    emb.position_of[parent] = static_cast<int>(i);
    emb.sub.member_indices.push_back(parent);
  }
  return emb;
}

void validate_transversal(const FiniteGroup& group, const Subgroup& sub,
                          const std::vector<int>& transversal) {
  if (transversal.size() * sub.order() != group.order())
    throw InvalidTransversal("coset count times subgroup order must equal the group order");
  std::vector<char> covered(group.order(), 0);
  for (int rep : transversal) {
    if (rep < 0 || rep >= static_cast<int>(group.order()))
      throw InvalidTransversal("transversal element out of range");
    for (int h : sub.member_indices) {
      const int g = group.product_index(h, rep);
      if (covered[g]) throw InvalidTransversal("cosets overlap");
      covered[g] = 1;
    }
  }
}

}  // namespace

Representation induce(const Representation& rep_h, const FiniteGroup& group,
                      const std::vector<int>& transversal) {
  const SubgroupEmbedding emb = embed_subgroup(rep_h, group);
  validate_transversal(group, emb.sub, transversal);
  const int ell = static_cast<int>(transversal.size());
  const int d = rep_h.dim;
  Representation out{group, ell * d, {}};
  out.matrices.reserve(group.order());
  for (std::size_t s = 0; s < group.order(); ++s) {
    const int sigma_inv = group.inverse_index(int(s));
    RatMatrix m(out.dim, out.dim);
    for (int j = 0; j < ell; ++j) {
      // sigma_j sigma^{-1} = tau sigma_{j'}: block (j', j) = rep_h(tau^{-1})
      const auto [jp, tau] = coset_index_map(group, emb.sub, transversal, sigma_inv, j);
      const RatMatrix& block = rep_h.matrices[emb.position_of[group.inverse_index(tau)]];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (block.at(r, c) != 0) m.at(jp * d + r, j * d + c) = block.at(r, c);
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

Representation star_action_rep(const GAction& action, const Subgroup& sub,
                               const std::vector<int>& transversal, int inner_dim) {
  const FiniteGroup& group = action.group();
  if (!sub.parent.same_group(group))
    throw NotASubgroup("subgroup belongs to a different group");
  make_subgroup(group, sub.member_indices);
  validate_transversal(group, sub, transversal);
  const int ell = static_cast<int>(transversal.size());
  const int n = action.points();
  const int d = n * inner_dim;

  // rep_H on one block: permutation action of the subgroup element, channels
  // untouched (P tensor I_inner)
  auto h_block = [&](int tau) {
    RatMatrix p(n, n);
    for (int x = 0; x < n; ++x) p.at(action.apply(tau, x), x) = 1;
    return inner_dim == 1 ? p : kronecker(p, RatMatrix::identity(inner_dim));
  };

  Representation out{group, ell * d, {}};
  out.matrices.reserve(group.order());
  for (std::size_t s = 0; s < group.order(); ++s) {
    RatMatrix m(out.dim, out.dim);
    for (int j = 0; j < ell; ++j) {
      // block j reads block phi_sigma(j) through tau = sigma_j sigma sigma_{j*}^{-1}
      const auto [jstar, tau] = coset_index_map(group, sub, transversal, int(s), j);
      const RatMatrix block = h_block(tau);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (block.at(r, c) != 0) m.at(j * d + r, jstar * d + c) = block.at(r, c);
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

bool xi_check(const Representation& star, const Representation& induced) {
  if (!star.group.same_group(induced.group) || star.dim != induced.dim) return false;
  // Xi maps (v_j)_j to sum_j sigma_j^{-1} (x) v_j, the identity in block
  // coordinates
  const RatMatrix xi = RatMatrix::identity(star.dim);
  for (std::size_t g = 0; g < star.group.order(); ++g)
    if (!(xi * star.matrices[g] == induced.matrices[g] * xi)) return false;
  return true;
}

IntertwinerBasis intertwiner_basis(const Representation& source, const Representation& target) {
  if (!source.group.same_group(target.group))
    throw GroupMismatch("intertwiners need a shared group");
  const int S = source.dim;
  const int T = target.dim;
  const std::vector<int> gens = source.group.small_generating_set();

  // unknowns x[r*S + c] = W(r, c); constraint rho_t(g) W - W rho_s(g) = 0
  std::vector<SparseRow> rows;
  rows.reserve(gens.size() * std::size_t(T) * S);
  for (int g : gens) {
    const RatMatrix& mt = target.matrices[g];
    const RatMatrix& ms = source.matrices[g];
    for (int a = 0; a < T; ++a) {
      for (int b = 0; b < S; ++b) {
        std::map<int, Rat> terms;
        for (int k = 0; k < T; ++k)
          if (mt.at(a, k) != 0) terms[k * S + b] += mt.at(a, k);
        for (int k = 0; k < S; ++k)
          if (ms.at(k, b) != 0) terms[a * S + k] -= ms.at(k, b);
        SparseRow row;
        for (auto& [col, coeff] : terms)
          if (coeff != 0) row.emplace_back(col, std::move(coeff));
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  const Nullspace ns = nullspace(rows, T * S);
  IntertwinerBasis out{S, T, {}, ns.dimension};
  for (const std::vector<Rat>& v : ns.basis) {
    RatMatrix w(T, S);
    for (int r = 0; r < T; ++r)
      for (int c = 0; c < S; ++c) w.at(r, c) = v[std::size_t(r) * S + c];
    out.basis.push_back(std::move(w));
  }
  return out;
}

bool verify_intertwiners(const IntertwinerBasis& basis, const Representation& source,
                         const Representation& target) {
  for (const RatMatrix& w : basis.basis)
    for (std::size_t g = 0; g < source.group.order(); ++g)
      if (!(target.matrices[g] * w == w * source.matrices[g])) return false;
  return true;
}

FixedSpace invariant_vectors(const Representation& rep) {
  const IntertwinerBasis hom = intertwiner_basis(trivial_rep(rep.group, 1), rep);
  FixedSpace out;
  out.dimension = hom.dimension;
  for (const RatMatrix& w : hom.basis) {
    std::vector<Rat> v(rep.dim);
    for (int r = 0; r < rep.dim; ++r) v[r] = w.at(r, 0);
    out.basis.push_back(std::move(v));
  }
  return out;
}

long long irrep_dimension(const std::vector<int>& partition) {
  if (partition.empty()) throw InvalidPartition("empty partition");
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] <= 0) throw InvalidPartition("parts must be positive");
    if (i > 0 && partition[i] > partition[i - 1])
      throw InvalidPartition("parts must be weakly decreasing");
  }
  const long n = std::accumulate(partition.begin(), partition.end(), 0L);
  mpz_class numerator = 1;
  for (long i = 2; i <= n; ++i) numerator *= i;
  mpz_class hooks = 1;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (int j = 0; j < partition[i]; ++j) {
      const int arm = partition[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < partition.size(); ++k)
        if (partition[k] > j) ++leg;
      hooks *= (arm + leg + 1);
    }
  }
  mpz_class dim = numerator / hooks;
  if (!dim.fits_slong_p()) throw InvalidPartition("dimension exceeds native integer range");
  return dim.get_si();
}

AppendixCReport appendix_c_audit(int n, int dim_v, int dim_v1) {
  if (n < 4 || n > 6) throw UnsupportedDegree("audit supports 4 <= n <= 6");
  if (dim_v < 1 || dim_v1 < 1) throw ConfigError("value dimensions must be positive");

  AppendixCReport report;
  report.n = n;
  report.dim_v = dim_v;
  report.dim_v1 = dim_v1;

  const GAction action = GAction::natural(FiniteGroup::symmetric(n));
  const Subgroup stab = stabilizer(action, 0);
  const std::vector<int> transversal = right_coset_transversal(action.group(), stab);
  const Representation natural = perm_rep(action);
  const Representation restricted = restrict_rep(natural, stab);
  const Representation induced = induce(restricted, action.group(), transversal);

  // channel dimensions factor out of the Hom spaces, so the base dimensions
  // are computed exactly and scaled
  const long long first_base = intertwiner_basis(natural, induced).dimension;
  report.first_layer_dim = first_base * dim_v * dim_v1;
  report.first_layer_expected = 5LL * dim_v * dim_v1;
  report.first_layer_matches = report.first_layer_dim == report.first_layer_expected;

  const Representation star = star_action_rep(action, stab, transversal, 1);
  const long long bias_base = invariant_vectors(star).dimension;
  report.bias_dim = bias_base * dim_v1;
  report.bias_expected = 2LL * dim_v1;
  report.bias_matches = report.bias_dim == report.bias_expected;

  const long long hidden_base = intertwiner_basis(induced, induced).dimension;
  report.hidden_dim = hidden_base * dim_v1 * dim_v1;
  report.hidden_bound = 21LL * dim_v1 * dim_v1;
  report.hidden_within_bound = report.hidden_dim <= report.hidden_bound;

  const long long d22 = irrep_dimension({n - 2, 2});
  const long long d211 = irrep_dimension({n - 2, 1, 1});
  report.eq22_identity =
      static_cast<long long>(n) * n == 2 + 3LL * (n - 1) + d22 + d211;
  return report;
}

}  // namespace equi
