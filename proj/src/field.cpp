#include "equi/field.hpp"

#include <cmath>

#include "equi/errors.hpp"
#include "equi/rng.hpp"

namespace equi {

Field act_field(const GAction& action, int sigma, const Field& f) {
  if (f.point_count() != action.points())
    throw ShapeMismatch("field point count does not match action");
  Field out(f.point_count(), f.value_dim());
  for (int x = 0; x < f.point_count(); ++x) {
    // out(sigma.x) = f(x), i.e. out(y) = f(sigma^{-1}.y)
    const int y = action.apply(sigma, x);
    for (int k = 0; k < f.value_dim(); ++k) out.at(y, k) = f.at(x, k);
  }
  return out;
}

double sup_norm(const Field& f) {
  double m = 0.0;
  for (double v : f.flat()) m = std::max(m, std::fabs(v));
  return m;
}

Field field_difference(const Field& a, const Field& b) {
  if (a.point_count() != b.point_count() || a.value_dim() != b.value_dim())
    throw ShapeMismatch("field shapes differ");
  Field out(a.point_count(), a.value_dim());
  for (std::size_t i = 0; i < a.flat().size(); ++i)
    out.flat()[i] = a.flat()[i] - b.flat()[i];
  return out;
}

std::vector<Field> sample_fields(const SampleBox& box, int count) {
  if (count < 1) throw InvalidCount("sample count must be at least 1");
  if (box.low > box.high) throw InvalidCount("sample box has low > high");
  Rng rng(box.seed);
  std::vector<Field> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    Field f(box.point_count, box.value_dim);
    for (double& v : f.flat()) v = rng.uniform(box.low, box.high);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace equi
