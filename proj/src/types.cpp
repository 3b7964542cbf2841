#include "depclust/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace depclust {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SeriesMatrix::SeriesMatrix(Matrix values, std::vector<std::string> series_ids)
    : values_(std::move(values)), series_ids_(std::move(series_ids)) {
  require(values_.rows() >= 1 && values_.cols() >= 1,
          "SeriesMatrix: need at least one series and one observation");
  require(values_.allFinite(), "SeriesMatrix: values must be finite");
  require(series_ids_.empty() ||
              static_cast<Index>(series_ids_.size()) == values_.rows(),
          "SeriesMatrix: series_ids length must match the number of rows");
}

SymmetricUnitMatrix::SymmetricUnitMatrix(MatrixKind kind, Matrix values)
    : kind_(kind), values_(std::move(values)) {
  require(values_.rows() == values_.cols(), "SymmetricUnitMatrix: matrix must be square");
  require(values_.allFinite(), "SymmetricUnitMatrix: values must be finite");
  const double asym = (values_ - values_.transpose()).cwiseAbs().maxCoeff();
  require(asym <= 1e-9, "SymmetricUnitMatrix: asymmetry " + std::to_string(asym) +
                            " exceeds 1e-9");
  values_ = ((values_ + values_.transpose()) / 2.0).eval();

  const double lo = kind_ == MatrixKind::correlation ? -1.0 : 0.0;
  const double hi = 1.0;
  const double diag = kind_ == MatrixKind::correlation ? 1.0 : 0.0;
  constexpr double slack = 1e-12;  // rounding guard only, larger violations throw
  for (Index i = 0; i < values_.rows(); ++i) {
    require(std::abs(values_(i, i) - diag) <= slack,
            "SymmetricUnitMatrix: diagonal entry out of contract at index " +
                std::to_string(i));
    values_(i, i) = diag;
    for (Index j = 0; j < values_.cols(); ++j) {
      double& v = values_(i, j);
      require(v >= lo - slack && v <= hi + slack,
              "SymmetricUnitMatrix: entry (" + std::to_string(i) + "," +
                  std::to_string(j) + ") = " + std::to_string(v) + " out of range");
      v = std::clamp(v, lo, hi);
    }
  }
}

std::vector<int> canonical_labels(const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  std::unordered_map<int, int> remap;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = remap.try_emplace(labels[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  return out;
}

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  require(!labels_.empty(), "Partition: empty label vector");
  const int max_label = *std::max_element(labels_.begin(), labels_.end());
  const int min_label = *std::min_element(labels_.begin(), labels_.end());
  require(min_label >= 0, "Partition: labels must be non-negative");
  std::vector<char> seen(static_cast<std::size_t>(max_label) + 1, 0);
  for (int l : labels_) seen[static_cast<std::size_t>(l)] = 1;
  require(std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; }),
          "Partition: labels must use exactly the values 0..n_blocks-1");
  n_blocks_ = max_label + 1;
}

NestedPartition::NestedPartition(std::vector<Partition> levels)
    : levels_(std::move(levels)) {
  require(!levels_.empty(), "NestedPartition: need at least the trivial level");
  require(levels_.front().n_blocks() == 1,
          "NestedPartition: level 0 must be the one-block partition");
  const Index n = levels_.front().size();
  for (std::size_t k = 1; k < levels_.size(); ++k) {
    require(levels_[k].size() == n, "NestedPartition: level sizes differ");
    // refinement: all members of a level-k block share one level-(k-1) block
    std::unordered_map<int, int> block_parent;
    for (Index i = 0; i < n; ++i) {
      const int child = levels_[k].label(i);
      const int parent = levels_[k - 1].label(i);
      auto [it, inserted] = block_parent.try_emplace(child, parent);
      require(it->second == parent,
              "NestedPartition: level " + std::to_string(k) +
                  " does not refine level " + std::to_string(k - 1));
    }
  }
}

Dendrogram::Dendrogram(int n_leaves, std::vector<Merge> merges)
    : n_leaves_(n_leaves), merges_(std::move(merges)) {
  require(n_leaves_ >= 1, "Dendrogram: need at least one leaf");
  require(static_cast<int>(merges_.size()) == n_leaves_ - 1,
          "Dendrogram: expected n_leaves-1 merges");
  std::vector<char> merged(static_cast<std::size_t>(2 * n_leaves_ - 1), 0);
  std::vector<int> sizes(static_cast<std::size_t>(2 * n_leaves_ - 1), 1);
  for (std::size_t s = 0; s < merges_.size(); ++s) {
    const Merge& m = merges_[s];
    const int created = n_leaves_ + static_cast<int>(s);
    for (int id : {m.left, m.right}) {
      require(id >= 0 && id < created, "Dendrogram: merge " + std::to_string(s) +
                                           " references invalid id " + std::to_string(id));
      require(!merged[static_cast<std::size_t>(id)],
              "Dendrogram: id " + std::to_string(id) + " merged twice");
      merged[static_cast<std::size_t>(id)] = 1;
    }
    require(m.left != m.right, "Dendrogram: self-merge");
    require(std::isfinite(m.height) && m.height >= 0.0,
            "Dendrogram: heights must be finite and non-negative");
    sizes[static_cast<std::size_t>(created)] =
        sizes[static_cast<std::size_t>(m.left)] + sizes[static_cast<std::size_t>(m.right)];
    require(m.size == sizes[static_cast<std::size_t>(created)],
            "Dendrogram: merge " + std::to_string(s) + " has inconsistent size");
  }
}

bool partitions_equivalent(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("partitions_equivalent: partitions of different lengths");
  if (a.n_blocks() != b.n_blocks()) return false;
  std::unordered_map<int, int> fwd;
  std::unordered_map<int, int> bwd;
  for (Index i = 0; i < a.size(); ++i) {
    const int la = a.label(i);
    const int lb = b.label(i);
    auto [fit, fnew] = fwd.try_emplace(la, lb);
    if (fit->second != lb) return false;
    auto [bit, bnew] = bwd.try_emplace(lb, la);
    if (bit->second != la) return false;
  }
  return true;
}

Partition cut_dendrogram(const Dendrogram& d, int k) {
  const int n = d.n_leaves();
  if (k < 1 || k > n)
    throw std::invalid_argument("cut_dendrogram: k must be in [1, n_leaves]");
  // union-find over the first n-k merges
  std::vector<int> parent(static_cast<std::size_t>(2 * n - 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int s = 0; s < n - k; ++s) {
    const Merge& m = d.merges()[static_cast<std::size_t>(s)];
    parent[static_cast<std::size_t>(find(m.left))] = n + s;
    parent[static_cast<std::size_t>(find(m.right))] = n + s;
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = find(i);
  return Partition(canonical_labels(labels));
}

std::vector<int> leaf_order(const Dendrogram& d) {
  const int n = d.n_leaves();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  if (n == 1) return {0};
  std::vector<int> stack{2 * n - 2};
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (id < n) {
      order.push_back(id);
    } else {
      const Merge& m = d.merges()[static_cast<std::size_t>(id - n)];
      stack.push_back(m.right);  // left expanded first
      stack.push_back(m.left);
    }
  }
  return order;
}

}  // namespace depclust
