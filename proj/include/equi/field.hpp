#ifndef EQUI_FIELD_HPP
#define EQUI_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "equi/action.hpp"

namespace equi {

/// An element f of V^X as a dense m x d value table (row x = f(x)).
class Field {
 public:
  Field(int point_count, int value_dim)
      : point_count_(point_count), value_dim_(value_dim),
        values_(static_cast<std::size_t>(point_count) * value_dim, 0.0) {}

  int point_count() const { return point_count_; }
  int value_dim() const { return value_dim_; }

  double& at(int x, int k) { return values_[static_cast<std::size_t>(x) * value_dim_ + k]; }
  double at(int x, int k) const { return values_[static_cast<std::size_t>(x) * value_dim_ + k]; }

  std::span<const double> row(int x) const {
    return {values_.data() + static_cast<std::size_t>(x) * value_dim_,
            static_cast<std::size_t>(value_dim_)};
  }
  std::span<double> row(int x) {
    return {values_.data() + static_cast<std::size_t>(x) * value_dim_,
            static_cast<std::size_t>(value_dim_)};
  }

  const std::vector<double>& flat() const { return values_; }
  std::vector<double>& flat() { return values_; }

  bool operator==(const Field& other) const = default;

 private:
  int point_count_;
  int value_dim_;
  std::vector<double> values_;
};

/// (sigma.f)(x) = f(sigma^{-1}.x); pure reindexing, no arithmetic.
Field act_field(const GAction& action, int sigma, const Field& f);

/// max over x of the coordinate max-norm of f(x).
double sup_norm(const Field& f);

/// a - b entrywise; shapes must match.
Field field_difference(const Field& a, const Field& b);

/// Sampling box for the compact set the nets are evaluated on; the default
/// unit box is stable under every coordinate-permuting action.
struct SampleBox {
  double low = 0.0;
  double high = 1.0;
  int point_count = 1;
  int value_dim = 1;
  std::uint64_t seed = 0;
};

/// Deterministic i.i.d. uniform fields; same box+seed gives the same list.
std::vector<Field> sample_fields(const SampleBox& box, int count);

}  // namespace equi

#endif
