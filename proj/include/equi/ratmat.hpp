#ifndef EQUI_RATMAT_HPP
#define EQUI_RATMAT_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace equi {

using Rat = mpq_class;

/// Dense matrix over the rationals; all representation arithmetic is exact, so
/// dimensions of solution spaces are exact integers with no rank tolerance.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// One linear equation sum_i coeff_i * x_{col_i} = 0.
using SparseRow = std::vector<std::pair<int, Rat>>;

/// Exact nullspace of a homogeneous system by fraction-free-in-spirit
/// Gauss-Jordan elimination (zero multipliers skipped, so near-sparse systems
/// stay cheap).  Returns a basis of the solution space.
struct Nullspace {
  std::vector<std::vector<Rat>> basis;
  int dimension = 0;
};

Nullspace nullspace(const std::vector<SparseRow>& rows, int num_cols);

}  // namespace equi

#endif
