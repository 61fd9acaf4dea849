#include "equi/sortnet.hpp"

#include <algorithm>
#include <functional>

#include "equi/errors.hpp"

namespace equi {

namespace {

// A wire value as a signed combination of columns of the previous layer.
// Raw inputs are a single +1 column; after a stage, a wire is the pair
// relu(w) - relu(-w).  Keeping the pair contiguous keeps every later dot
// product exact on nonnegative data: partial sums only ever hold finished
// wire values.
struct Wire {
  std::vector<std::pair<int, double>> terms;
};

void add_terms(std::vector<double>& row, const Wire& w, double scale) {
  for (auto [col, coeff] : w.terms) row[col] += scale * coeff;
}

}  // namespace

std::vector<double> SortGLayer::reference(std::span<const double> x) const {
  std::vector<double> out(x.begin(), x.end());
  std::vector<double> buf;
  for (const auto& block : blocks) {
    buf.clear();
    for (int idx : block) buf.push_back(x[idx]);
    std::sort(buf.begin(), buf.end(), std::greater<double>());
    for (std::size_t l = 0; l < block.size(); ++l) out[block[l]] = buf[l];
  }
  return out;
}

std::vector<double> SortGLayer::apply(std::span<const double> x) const {
  return relu_net.forward(x);
}

bool SortGLayer::in_fundamental_domain(std::span<const double> x) const {
  for (const auto& block : blocks)
    for (std::size_t l = 0; l + 1 < block.size(); ++l)
      if (x[block[l]] < x[block[l + 1]]) return false;
  return true;
}

SortGLayer sortg_layer(std::vector<std::vector<int>> blocks) {
  int n = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidBlocks("empty block");
    n += static_cast<int>(block.size());
  }
  std::vector<char> seen(n, 0);
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());
    for (int idx : block) {
      if (idx < 0 || idx >= n || seen[idx])
        throw InvalidBlocks("blocks must partition the index set");
      seen[idx] = 1;
    }
  }

  // gather order: positions 0..n-1 list the blocks back to back
  std::vector<int> concat;
  concat.reserve(n);
  std::vector<int> block_offset;
  for (const auto& block : blocks) {
    block_offset.push_back(static_cast<int>(concat.size()));
    concat.insert(concat.end(), block.begin(), block.end());
  }

  // odd-even transposition schedule; max block size passes sort every block
  std::size_t max_block = 0;
  for (const auto& block : blocks) max_block = std::max(max_block, block.size());
  std::vector<std::vector<std::pair<int, int>>> stages;
  for (std::size_t t = 0; t < max_block; ++t) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const int off = block_offset[b];
      const int size = static_cast<int>(blocks[b].size());
      for (int q = static_cast<int>(t % 2); q + 1 < size; q += 2)
        pairs.emplace_back(off + q, off + q + 1);
    }
    if (!pairs.empty()) stages.push_back(std::move(pairs));
  }

  std::vector<MlpLayer> layers;
  std::vector<Wire> wires(n);
  for (int p = 0; p < n; ++p) wires[p].terms = {{concat[p], 1.0}};
  int prev_width = n;

  for (const auto& pairs : stages) {
    std::vector<char> is_low(n, 0), is_high(n, 0);
    for (auto [p, q] : pairs) {
      is_low[p] = 1;
      is_high[q] = 1;
    }

    // sublayer A: difference units plus +- carries of every wire
    MlpLayer a;
    a.in_dim = prev_width;
    std::vector<int> diff_col(n, -1), plus_col(n, -1), minus_col(n, -1);
    std::vector<std::vector<double>> a_rows;
    auto push_row_a = [&](std::vector<double> row) {
      a_rows.push_back(std::move(row));
      return static_cast<int>(a_rows.size()) - 1;
    };
    for (int p = 0; p < n; ++p) {
      if (is_high[p]) continue;  // emitted with its partner
      if (is_low[p]) {
        const int q = p + 1;
        std::vector<double> diff(prev_width, 0.0);
        add_terms(diff, wires[p], 1.0);
        add_terms(diff, wires[q], -1.0);
        diff_col[p] = push_row_a(std::move(diff));
        for (int r : {p, q}) {
          std::vector<double> pos(prev_width, 0.0), neg(prev_width, 0.0);
          add_terms(pos, wires[r], 1.0);
          add_terms(neg, wires[r], -1.0);
          plus_col[r] = push_row_a(std::move(pos));
          minus_col[r] = push_row_a(std::move(neg));
        }
      } else {
        std::vector<double> pos(prev_width, 0.0), neg(prev_width, 0.0);
        add_terms(pos, wires[p], 1.0);
        add_terms(neg, wires[p], -1.0);
        plus_col[p] = push_row_a(std::move(pos));
        minus_col[p] = push_row_a(std::move(neg));
      }
    }
    a.out_dim = static_cast<int>(a_rows.size());
    a.bias.assign(a.out_dim, 0.0);
    for (const auto& row : a_rows) a.weights.insert(a.weights.end(), row.begin(), row.end());
    layers.push_back(std::move(a));
    const int a_width = static_cast<int>(a_rows.size());

    // sublayer B: materialize the new wires as relu pairs
    MlpLayer b;
    b.in_dim = a_width;
    std::vector<std::vector<double>> b_rows;
    std::vector<Wire> next(n);
    auto pair_rows = [&](const std::vector<double>& pre) {
      std::vector<double> neg(pre.size());
      for (std::size_t i = 0; i < pre.size(); ++i) neg[i] = -pre[i];
      const int cp = static_cast<int>(b_rows.size());
      b_rows.push_back(pre);
      b_rows.push_back(std::move(neg));
      return std::pair<int, int>{cp, cp + 1};
    };
    for (int p = 0; p < n; ++p) {
      if (is_high[p]) continue;
      if (is_low[p]) {
        const int q = p + 1;
        // max = relu(w_p - w_q) + w_q lands at the lower position
        std::vector<double> max_pre(a_width, 0.0);
        max_pre[diff_col[p]] = 1.0;
        max_pre[plus_col[q]] = 1.0;
        max_pre[minus_col[q]] = -1.0;
        // min = w_p - relu(w_p - w_q)
        std::vector<double> min_pre(a_width, 0.0);
        min_pre[diff_col[p]] = -1.0;
        min_pre[plus_col[p]] = 1.0;
        min_pre[minus_col[p]] = -1.0;
        auto [mp, mm] = pair_rows(max_pre);
        next[p].terms = {{mp, 1.0}, {mm, -1.0}};
        auto [np, nm] = pair_rows(min_pre);
        next[q].terms = {{np, 1.0}, {nm, -1.0}};
      } else {
        std::vector<double> pre(a_width, 0.0);
        pre[plus_col[p]] = 1.0;
        pre[minus_col[p]] = -1.0;
        auto [cp, cm] = pair_rows(pre);
        next[p].terms = {{cp, 1.0}, {cm, -1.0}};
      }
    }
    b.out_dim = static_cast<int>(b_rows.size());
    b.bias.assign(b.out_dim, 0.0);
    for (const auto& row : b_rows) b.weights.insert(b.weights.end(), row.begin(), row.end());
    prev_width = b.out_dim;
    layers.push_back(std::move(b));
    wires = std::move(next);
  }

  // scatter back to original indices
  MlpLayer out;
  out.in_dim = prev_width;
  out.out_dim = n;
  out.weights.assign(static_cast<std::size_t>(n) * prev_width, 0.0);
  out.bias.assign(n, 0.0);
  for (int p = 0; p < n; ++p)
    for (auto [col, coeff] : wires[p].terms)
      out.weights[static_cast<std::size_t>(concat[p]) * prev_width + col] = coeff;
  layers.push_back(std::move(out));

  return SortGLayer{std::move(blocks), Permutation(concat), Mlp(std::move(layers))};
}

}  // namespace equi
