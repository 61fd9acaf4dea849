#ifndef EQUI_SORTNET_HPP
#define EQUI_SORTNET_HPP

#include <span>
#include <vector>

#include "equi/mlp.hpp"
#include "equi/perm.hpp"

namespace equi {

/// Blockwise descending sort realized two ways: a reference sort and a ReLU
/// network built from odd-even transposition comparators,
///   max(a,b) = relu(a-b) + b,   min(a,b) = a - relu(a-b),
/// conjugated by the block-gathering reindexing sigma0.  Both compute the same
/// function; the network is exact on nonnegative inputs.
struct SortGLayer {
  std::vector<std::vector<int>> blocks;  // partition, each ascending
  Permutation sigma0;                    // position p -> original index
  Mlp relu_net;

  /// Exact blockwise descending sort (the oracle the network must match).
  std::vector<double> reference(std::span<const double> x) const;

  /// The ReLU network's output.
  std::vector<double> apply(std::span<const double> x) const;

  /// x_{i_l} >= x_{i_{l'}} for l < l' within every block.
  bool in_fundamental_domain(std::span<const double> x) const;
};

/// Builds the layer for the given orbit blocks; throws InvalidBlocks if they
/// do not partition {0..n-1}.
SortGLayer sortg_layer(std::vector<std::vector<int>> blocks);

}  // namespace equi

#endif
