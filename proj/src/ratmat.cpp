#include "equi/ratmat.hpp"

#include <map>

#include "equi/errors.hpp"

namespace equi {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw ShapeMismatch("matrix product dims do not chain");
  RatMatrix out(rows_, other.cols_);
  Rat tmp;
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const Rat& w = other.at(k, c);
        if (w == 0) continue;
        tmp = v * w;
        out.at(r, c) += tmp;
      }
    }
  }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return a_ == other.a_;
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const Rat& v = a.at(ar, ac);
      if (v == 0) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = v * b.at(br, bc);
    }
  return out;
}

Nullspace nullspace(const std::vector<SparseRow>& rows, int num_cols) {
  // incremental Gauss-Jordan: pivot rows kept fully reduced against each other
  std::vector<int> pivot_cols;
  std::vector<std::vector<Rat>> pivot_rows;

  std::vector<Rat> dense(num_cols);
  for (const SparseRow& sparse : rows) {
    for (Rat& v : dense) v = 0;
    for (const auto& [col, coeff] : sparse) dense[col] += coeff;

    for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
      Rat& factor = dense[pivot_cols[p]];
      if (factor == 0) continue;
      const Rat f = factor;
      const std::vector<Rat>& prow = pivot_rows[p];
      for (int c = 0; c < num_cols; ++c)
        if (prow[c] != 0) dense[c] -= f * prow[c];
    }
    int lead = -1;
    for (int c = 0; c < num_cols; ++c)
      if (dense[c] != 0) { lead = c; break; }
    if (lead < 0) continue;  // redundant equation

    const Rat inv = dense[lead];
    std::vector<Rat> row(num_cols);
    for (int c = 0; c < num_cols; ++c)
      if (dense[c] != 0) row[c] = dense[c] / inv;
    for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
      Rat& factor = pivot_rows[p][lead];
      if (factor == 0) continue;
      const Rat f = factor;
      for (int c = 0; c < num_cols; ++c)
        if (row[c] != 0) pivot_rows[p][c] -= f * row[c];
    }
    pivot_cols.push_back(lead);
    pivot_rows.push_back(std::move(row));
  }

  std::vector<char> is_pivot(num_cols, 0);
  std::map<int, int> pivot_of;  // col -> pivot row index
  for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
    is_pivot[pivot_cols[p]] = 1;
    pivot_of[pivot_cols[p]] = static_cast<int>(p);
  }

  Nullspace out;
  for (int f = 0; f < num_cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(num_cols);
    v[f] = 1;
    for (const auto& [pc, p] : pivot_of) v[pc] = -pivot_rows[p][f];
    out.basis.push_back(std::move(v));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

}  // namespace equi
