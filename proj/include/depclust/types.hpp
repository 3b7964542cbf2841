// Core value types: series panels, symmetric unit matrices, partitions,
// nested partitions, dendrograms, plus partition/dendrogram utilities.
#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace depclust {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// N x T panel of observations, rows are series, columns are time.
class SeriesMatrix {
 public:
  explicit SeriesMatrix(Matrix values, std::vector<std::string> series_ids = {});

  Index n_series() const { return values_.rows(); }
  Index n_obs() const { return values_.cols(); }
  const Matrix& values() const { return values_; }
  const std::vector<std::string>& series_ids() const { return series_ids_; }

 private:
  Matrix values_;
  std::vector<std::string> series_ids_;  // empty when unnamed
};

enum class MatrixKind { correlation, distance };

/// Symmetric N x N matrix with a unit-scale contract:
/// correlation kind has unit diagonal and entries in [-1, 1],
/// distance kind has zero diagonal and entries in [0, 1].
/// Small floating-point asymmetries (up to 1e-9) are averaged away at
/// construction; anything larger is rejected.
class SymmetricUnitMatrix {
 public:
  SymmetricUnitMatrix(MatrixKind kind, Matrix values);

  MatrixKind kind() const { return kind_; }
  Index size() const { return values_.rows(); }
  const Matrix& values() const { return values_; }
  double operator()(Index i, Index j) const { return values_(i, j); }

 private:
  MatrixKind kind_;
  Matrix values_;
};

/// Flat partition of {0..N-1}; labels are exactly 0..n_blocks-1.
class Partition {
 public:
  explicit Partition(std::vector<int> labels);

  Index size() const { return static_cast<Index>(labels_.size()); }
  int n_blocks() const { return n_blocks_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<int> labels_;
  int n_blocks_ = 0;
};

/// Relabels an arbitrary label vector to the canonical 0..k-1 form,
/// numbering blocks by first appearance.
std::vector<int> canonical_labels(const std::vector<int>& labels);

/// Hierarchy of partitions, coarsest first; level 0 is the one-block
/// partition and every level refines the one before it.
class NestedPartition {
 public:
  explicit NestedPartition(std::vector<Partition> levels);

  const std::vector<Partition>& levels() const { return levels_; }
  /// Number of non-trivial levels (h in a 0..h hierarchy).
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  Index size() const { return levels_.front().size(); }

 private:
  std::vector<Partition> levels_;
};

struct Merge {
  int left = 0;
  int right = 0;
  double height = 0.0;
  int size = 0;  // leaves in the merged cluster
};

/// Agglomeration record over N leaves: ids 0..N-1 are leaves, the merge at
/// step s creates cluster id N+s. Every id is merged exactly once.
class Dendrogram {
 public:
  Dendrogram(int n_leaves, std::vector<Merge> merges);

  int n_leaves() const { return n_leaves_; }
  const std::vector<Merge>& merges() const { return merges_; }

 private:
  int n_leaves_ = 0;
  std::vector<Merge> merges_;
};

/// True iff some bijection of labels maps a onto b.
bool partitions_equivalent(const Partition& a, const Partition& b);

/// Partition with exactly k blocks obtained by undoing the last k-1 merges.
Partition cut_dendrogram(const Dendrogram& d, int k);

/// Left-to-right leaf permutation of the merge tree; leaves of any cluster
/// at any cut are contiguous in the result.
std::vector<int> leaf_order(const Dendrogram& d);

}  // namespace depclust
