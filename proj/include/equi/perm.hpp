#ifndef EQUI_PERM_HPP
#define EQUI_PERM_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace equi {

/// A permutation of {0, ..., n-1}, stored as its image table.
class Permutation {
 public:
  /// Validates that `images` is a bijection; throws InvalidPermutation.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }

  /// Cycle notation, e.g. "(0 1)(2 4 3)"; "()" for the identity.
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// Function composition: compose(p, q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// An explicitly enumerated permutation group.  Immutable; copies share the
/// element table, so passing groups by value is cheap.
class FiniteGroup {
 public:
  /// Closure of `generators` under products, enumerated breadth-first from the
  /// identity with generators applied in the given order (right
  /// multiplication).  The identity is always element 0.
  static FiniteGroup from_generators(int degree, const std::vector<Permutation>& generators,
                                     std::size_t element_cap = 1000000);

  /// Wraps an element list that is already closed (validated).  Element order
  /// is preserved as given; used for subgroups-as-groups and Cayley tables.
  static FiniteGroup from_elements(int degree, std::vector<Permutation> elements);

  static FiniteGroup trivial(int degree);
  static FiniteGroup symmetric(int n);
  /// Z_n acting by cyclic index shift.
  static FiniteGroup cyclic_shift(int n);

  int degree() const { return data_->degree; }
  std::size_t order() const { return data_->elements.size(); }
  const Permutation& element(int idx) const { return data_->elements[idx]; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  int identity_index() const { return data_->identity_index; }

  /// Index of element(a) * element(b) (composition of maps).
  int product_index(int a, int b) const;
  int inverse_index(int a) const;
  /// Index of an explicit permutation, or -1 if not a member.
  int index_of(const Permutation& p) const;

  /// Generator indices when the group was built from generators; otherwise a
  /// small generating set computed greedily.  Empty for the trivial group.
  std::vector<int> small_generating_set() const;

  bool same_group(const FiniteGroup& other) const;

 private:
  struct Data {
    int degree = 0;
    std::vector<Permutation> elements;
    std::unordered_map<std::string, int> index;  // key: packed image table
    int identity_index = 0;
    std::vector<int> generator_indices;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::string key_of(const std::vector<int>& images);

  std::shared_ptr<const Data> data_;
};

/// Left-translation embedding of an abstract multiplication table into the
/// symmetric group on its element set.  Validates the group axioms first.
FiniteGroup cayley_embed(const std::vector<std::vector<int>>& mult_table);

}  // namespace equi

#endif
