// Rank statistics helpers shared by the correlation estimators and the
// copula transform. All O(T log T).
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace depclust {

/// Midranks 1..T (ties get the average of the positions they span).
template <class Derived>
Eigen::VectorXd midranks(const Eigen::MatrixBase<Derived>& x) {
  const Eigen::Index t = x.size();
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(t));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return x(a) < x(b); });
  Eigen::VectorXd ranks(t);
  Eigen::Index i = 0;
  while (i < t) {
    Eigen::Index j = i;
    while (j + 1 < t && x(idx[static_cast<std::size_t>(j + 1)]) ==
                            x(idx[static_cast<std::size_t>(i)]))
      ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;  // average of i+1..j+1
    for (Eigen::Index k = i; k <= j; ++k) ranks(idx[static_cast<std::size_t>(k)]) = r;
    i = j + 1;
  }
  return ranks;
}

namespace detail {

/// Strict inversions (pairs i<j with v[i] > v[j]) by merge sort.
inline std::int64_t count_inversions(std::vector<double>& v, std::vector<double>& buf,
                                     std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = count_inversions(v, buf, lo, mid) + count_inversions(v, buf, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (v[b] < v[a]) {
      inv += static_cast<std::int64_t>(mid - a);
      buf[out++] = v[b++];
    } else {
      buf[out++] = v[a++];
    }
  }
  while (a < mid) buf[out++] = v[a++];
  while (b < hi) buf[out++] = v[b++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
            buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace detail

}  // namespace depclust
