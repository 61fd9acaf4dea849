#include "equi/perm.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "equi/errors.hpp"

namespace equi {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidPermutation("image table is not a bijection on {0..n-1}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree)
    throw InvalidPermutation("transposition indices out of range");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::swap(im[a], im[b]);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(' << start;
    done[start] = 1;
    for (int cur = images_[start]; cur != start; cur = images_[cur]) {
      out << ' ' << cur;
      done[cur] = 1;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidPermutation("composing permutations of different degrees");
  std::vector<int> im(p.degree());
  for (int i = 0; i < p.degree(); ++i) im[i] = p(q(i));
  return Permutation(std::move(im));
}

std::string FiniteGroup::key_of(const std::vector<int>& images) {
  std::string key;
  key.reserve(images.size() * sizeof(int));
  for (int v : images)
    key.append(reinterpret_cast<const char*>(&v), sizeof(int));
  return key;
}

FiniteGroup FiniteGroup::from_generators(int degree, const std::vector<Permutation>& generators,
                                         std::size_t element_cap) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw InvalidPermutation("generator degree does not match group degree");

  Permutation id = Permutation::identity(degree);
  data->elements.push_back(id);
  data->index.emplace(key_of(id.images()), 0);
  data->identity_index = 0;

  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (const Permutation& g : generators) {
      Permutation next = compose(data->elements[cur], g);
      std::string key = key_of(next.images());
      if (data->index.count(key)) continue;
      if (data->elements.size() >= element_cap)
        throw GroupTooLarge("group closure exceeds element cap");
      int idx = static_cast<int>(data->elements.size());
      data->index.emplace(std::move(key), idx);
      data->elements.push_back(std::move(next));
      frontier.push_back(idx);
    }
  }

  for (const Permutation& g : generators) {
    int idx = data->index.at(key_of(g.images()));
    if (std::find(data->generator_indices.begin(), data->generator_indices.end(), idx) ==
        data->generator_indices.end())
      data->generator_indices.push_back(idx);
  }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_elements(int degree, std::vector<Permutation> elements) {
  auto data = std::make_shared<Data>();
  data->degree = degree;
  data->identity_index = -1;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].degree() != degree)
      throw InvalidPermutation("element degree does not match group degree");
    if (!data->index.emplace(key_of(elements[i].images()), static_cast<int>(i)).second)
      throw NotAGroup("duplicate element in explicit element list");
    if (elements[i].is_identity()) data->identity_index = static_cast<int>(i);
  }
  if (data->identity_index < 0) throw NotAGroup("element list lacks the identity");
  data->elements = std::move(elements);
  // closure under products implies closure under inverses for finite sets
  for (const Permutation& a : data->elements)
    for (const Permutation& b : data->elements)
      if (!data->index.count(key_of(compose(a, b).images())))
        throw NotAGroup("element list is not closed under composition");
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::trivial(int degree) {
  return from_generators(degree, {});
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n <= 1) return trivial(n);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::transposition(n, 0, 1));
  if (n > 2) {
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(Permutation(std::move(cycle)));
  }
  return from_generators(n, gens);
}

FiniteGroup FiniteGroup::cyclic_shift(int n) {
  if (n <= 1) return trivial(n);
  std::vector<int> shift(n);
  for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
  return from_generators(n, {Permutation(std::move(shift))});
}

int FiniteGroup::product_index(int a, int b) const {
  Permutation prod = compose(data_->elements[a], data_->elements[b]);
  return data_->index.at(key_of(prod.images()));
}

int FiniteGroup::inverse_index(int a) const {
  return data_->index.at(key_of(data_->elements[a].inverse().images()));
}

int FiniteGroup::index_of(const Permutation& p) const {
  auto it = data_->index.find(key_of(p.images()));
  return it == data_->index.end() ? -1 : it->second;
}

std::vector<int> FiniteGroup::small_generating_set() const {
  if (!data_->generator_indices.empty()) return data_->generator_indices;
  if (order() == 1) return {};
  // greedy: grow a closure until it covers the whole group
  std::vector<int> gens;
  std::vector<char> reached(order(), 0);
  reached[identity_index()] = 1;
  std::size_t reached_count = 1;
  while (reached_count < order()) {
    int fresh = -1;
    for (std::size_t i = 0; i < order(); ++i)
      if (!reached[i]) { fresh = static_cast<int>(i); break; }
    gens.push_back(fresh);
    std::deque<int> frontier;
    for (std::size_t i = 0; i < order(); ++i)
      if (reached[i]) frontier.push_back(static_cast<int>(i));
    reached[fresh] = 1;
    ++reached_count;
    frontier.push_back(fresh);
    while (!frontier.empty()) {
      int cur = frontier.front();
      frontier.pop_front();
      for (int g : gens) {
        int next = product_index(cur, g);
        if (!reached[next]) {
          reached[next] = 1;
          ++reached_count;
          frontier.push_back(next);
        }
      }
    }
  }
  return gens;
}

bool FiniteGroup::same_group(const FiniteGroup& other) const {
  if (data_ == other.data_) return true;
  if (degree() != other.degree() || order() != other.order()) return false;
  for (std::size_t i = 0; i < order(); ++i)
    if (!(data_->elements[i] == other.data_->elements[i])) return false;
  return true;
}

FiniteGroup cayley_embed(const std::vector<std::vector<int>>& mult_table) {
  const int k = static_cast<int>(mult_table.size());
  if (k == 0) throw NotAGroup("empty multiplication table");
  for (const auto& row : mult_table) {
    if (static_cast<int>(row.size()) != k) throw NotAGroup("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= k) throw NotAGroup("multiplication table entry out of range");
  }
  // identity
  int e = -1;
  for (int i = 0; i < k && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < k; ++j)
      if (mult_table[i][j] != j || mult_table[j][i] != j) { ok = false; break; }
    if (ok) e = i;
  }
  if (e < 0) throw NotAGroup("multiplication table has no identity");
  // inverses
  for (int i = 0; i < k; ++i) {
    bool has_inverse = false;
    for (int j = 0; j < k; ++j)
      if (mult_table[i][j] == e && mult_table[j][i] == e) { has_inverse = true; break; }
    if (!has_inverse) throw NotAGroup("multiplication table lacks an inverse");
  }
  // associativity
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mult_table[mult_table[a][b]][c] != mult_table[a][mult_table[b][c]])
          throw NotAGroup("multiplication table is not associative");

  // left translations t_a(i) = a*i; a -> t_a preserves products under map
  // composition since t_{ab}(i) = (ab)i = a(bi) = t_a(t_b(i)).
  std::vector<Permutation> elements;
  elements.reserve(k);
  for (int a = 0; a < k; ++a) elements.push_back(Permutation(mult_table[a]));
  return FiniteGroup::from_elements(k, std::move(elements));
}

}  // namespace equi
