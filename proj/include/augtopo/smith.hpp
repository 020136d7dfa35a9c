#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "augtopo/bigint.hpp"

namespace augtopo {

/// Smith normal form U·M·V = D over the integers.
template <typename Scalar>
struct SmithForm {
  /// Nonzero diagonal entries d₁|d₂|…, all positive; their count is the rank.
  std::vector<Scalar> invariant_factors;
  DenseMatrix<Scalar> diagonal;
  /// Unimodular transforms; empty unless requested.
  DenseMatrix<Scalar> left, right;

  std::size_t rank() const { return invariant_factors.size(); }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
struct SmithWorkspace {
  DenseMatrix<Scalar> a, u, v;
  bool track;

  void swap_rows(Eigen::Index i, Eigen::Index k) {
    if (i == k) return;
    a.row(i).swap(a.row(k));
    if (track) u.row(i).swap(u.row(k));
  }
  void swap_cols(Eigen::Index j, Eigen::Index k) {
    if (j == k) return;
    a.col(j).swap(a.col(k));
    if (track) v.col(j).swap(v.col(k));
  }
  // row_i -= q * row_k
  void sub_row(Eigen::Index i, Eigen::Index k, const Scalar& q, Eigen::Index from) {
    for (Eigen::Index j = from; j < a.cols(); ++j)
      if (a(k, j) != 0) a(i, j) -= q * a(k, j);
    if (track)
      for (Eigen::Index j = 0; j < u.cols(); ++j)
        if (u(k, j) != 0) u(i, j) -= q * u(k, j);
  }
  // col_j -= q * col_k
  void sub_col(Eigen::Index j, Eigen::Index k, const Scalar& q, Eigen::Index from) {
    for (Eigen::Index i = from; i < a.rows(); ++i)
      if (a(i, k) != 0) a(i, j) -= q * a(i, k);
    if (track)
      for (Eigen::Index i = 0; i < v.rows(); ++i)
        if (v(i, k) != 0) v(i, j) -= q * v(i, k);
  }
  void negate_row(Eigen::Index i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = -a(i, j);
    if (track)
      for (Eigen::Index j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
  }
};

}  // namespace detail

/**
 * Smith normal form by pivoting on the smallest nonzero entry.
 *
 * Row and column operations skip zero entries of the pivot row/column, which
 * keeps sparse boundary matrices cheap. When track_transforms is set the
 * unimodular U and V with U·M·V = D are accumulated as well.
 */
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const DenseMatrix<Scalar>& m, bool track_transforms = false) {
  using Index = Eigen::Index;
  detail::SmithWorkspace<Scalar> w{m, {}, {}, track_transforms};
  if (track_transforms) {
    w.u = DenseMatrix<Scalar>::Identity(m.rows(), m.rows());
    w.v = DenseMatrix<Scalar>::Identity(m.cols(), m.cols());
  }
  auto& a = w.a;
  const Index rows = a.rows(), cols = a.cols();
  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| of the trailing block; a unit ends the scan.
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index j = t; j < cols && best != 1; ++j)
      for (Index i = t; i < rows; ++i) {
        if (a(i, j) == 0) continue;
        Scalar mag = detail::magnitude(a(i, j));
        if (pr < 0 || mag < best) {
          best = std::move(mag);
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
    if (pr < 0) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        w.sub_row(i, t, q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        w.sub_col(j, t, q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: move the smallest entry of row/column t to the pivot.
        Index bi = t, bj = t;
        Scalar small = detail::magnitude(a(t, t));
        for (Index i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && detail::magnitude(a(i, t)) < small) {
            small = detail::magnitude(a(i, t));
            bi = i;
            bj = t;
          }
        for (Index j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && detail::magnitude(a(t, j)) < small) {
            small = detail::magnitude(a(t, j));
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      // Row and column are cleared; the pivot must divide the trailing block.
      const Scalar p = detail::magnitude(a(t, t));
      Index bad = -1;
      if (p != 1)
        for (Index i = t + 1; i < rows && bad < 0; ++i)
          for (Index j = t + 1; j < cols; ++j)
            if (a(i, j) % p != 0) {
              bad = i;
              break;
            }
      if (bad < 0) break;
      // row_t += row_bad, then reduce again.
      w.sub_row(t, bad, Scalar(-1), t);
    }
    if (a(t, t) < 0) w.negate_row(t);
  }

  SmithForm<Scalar> out;
  for (Index i = 0; i < t; ++i) {
    if (a(i, i) == 0) break;
    out.invariant_factors.push_back(a(i, i));
  }
  out.diagonal = std::move(w.a);
  if (track_transforms) {
    out.left = std::move(w.u);
    out.right = std::move(w.v);
  }
  return out;
}

}  // namespace augtopo
