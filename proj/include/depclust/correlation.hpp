// Pearson, Spearman and Kendall correlation estimators and the
// correlation-matrix / clustering-distance builders.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "depclust/ranks.hpp"
#include "depclust/types.hpp"

namespace depclust {

enum class CorrelationKind { pearson, spearman, kendall };

std::string to_string(CorrelationKind kind);
CorrelationKind parse_correlation_kind(const std::string& name);

/// Centers a series and scales it to unit Euclidean norm.
/// Throws std::domain_error on zero empirical variance.
template <class Derived>
Eigen::VectorXd standardized(const Eigen::MatrixBase<Derived>& x) {
  Eigen::VectorXd v = x.template cast<double>();
  v.array() -= v.mean();
  const double norm = v.norm();
  if (norm == 0.0)
    throw std::domain_error("pearson: undefined for a zero-variance series");
  return v / norm;
}

/// Product-moment correlation of two series of equal length T >= 2.
template <class DX, class DY>
double pearson(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson: series must have equal length >= 2");
  return standardized(x).dot(standardized(y));
}

/// Spearman's rho from precomputed midrank vectors, 1 - 6*sum(d^2)/(T(T^2-1)).
double spearman_from_ranks(const Vector& rx, const Vector& ry);

template <class DX, class DY>
double spearman(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman: series must have equal length >= 2");
  return spearman_from_ranks(midranks(x), midranks(y));
}

namespace detail {
/// Concordant-minus-discordant pair count; exact integer arithmetic.
std::int64_t kendall_numerator(const Vector& x, const Vector& y);
}  // namespace detail

/// Kendall's tau-a: the mean pair sign, tied pairs contributing zero to the
/// numerator while the denominator stays C(T,2). Merge-sort based, O(T log T).
template <class DX, class DY>
double kendall(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DY>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("kendall: series must have equal length >= 2");
  const std::int64_t t = x.size();
  const std::int64_t pairs = t * (t - 1) / 2;
  const Vector xv = x.template cast<double>();
  const Vector yv = y.template cast<double>();
  return static_cast<double>(detail::kendall_numerator(xv, yv)) /
         static_cast<double>(pairs);
}

/// Pairwise correlation matrix; the diagonal is exactly 1. Per-pair errors
/// are reported with the offending series identified.
SymmetricUnitMatrix correlation_matrix(const SeriesMatrix& data, CorrelationKind kind);

/// d_ij = (1 - rho_ij) / 2, mapping a correlation matrix to [0,1] distances.
SymmetricUnitMatrix to_distance(const SymmetricUnitMatrix& correlation);

}  // namespace depclust
