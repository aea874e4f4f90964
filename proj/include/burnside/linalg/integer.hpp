#pragma once

// Exact integer linear algebra over Eigen dense matrices: row Hermite form,
// lattice kernels, Smith invariant factors and integral solves. Everything is
// templated on the scalar so the same code runs on std::int64_t (small,
// overflow-free cases) and BigInt.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "burnside/scalar.hpp"

namespace burnside::linalg {

namespace detail {

inline std::int64_t abs_value(std::int64_t x) { return x < 0 ? -x : x; }
inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline std::int64_t gcd_value(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_value(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Floor division, exact for negative operands.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Derived, typename Scalar>
void row_axpy(Eigen::MatrixBase<Derived>& m, Eigen::Index dst, Eigen::Index src,
              const Scalar& factor) {
  if (factor == 0) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (m(src, c) != 0) m(dst, c) -= factor * m(src, c);
}

}  // namespace detail

template <typename Scalar>
struct HermiteForm {
  Matrix<Scalar> form;       ///< echelon form H = U * A
  Matrix<Scalar> transform;  ///< unimodular U (only filled when requested)
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivot_cols.size()); }
};

/// Row-style Hermite normal form: U * A = H with H in echelon form, positive
/// pivots, and entries above each pivot reduced into [0, pivot).
template <typename Scalar>
HermiteForm<Scalar> hermite(const Matrix<Scalar>& a, bool with_transform = false) {
  using detail::abs_value;
  HermiteForm<Scalar> out;
  Matrix<Scalar> h = a;
  Matrix<Scalar> u;
  if (with_transform) u = Matrix<Scalar>::Identity(a.rows(), a.rows());

  auto swap_rows = [&](Eigen::Index r1, Eigen::Index r2) {
    if (r1 == r2) return;
    h.row(r1).swap(h.row(r2));
    if (with_transform) u.row(r1).swap(u.row(r2));
  };
  auto axpy = [&](Eigen::Index dst, Eigen::Index src, const Scalar& f) {
    detail::row_axpy(h, dst, src, f);
    if (with_transform) detail::row_axpy(u, dst, src, f);
  };

  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index r = row; r < h.rows(); ++r)
        if (h(r, col) != 0 && (best < 0 || abs_value(h(r, col)) < abs_value(h(best, col))))
          best = r;
      if (best < 0) break;
      swap_rows(row, best);
      bool clean = true;
      for (Eigen::Index r = row + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        Scalar q = detail::floor_div<Scalar>(h(r, col), h(row, col));
        axpy(r, row, q);
        if (h(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      if (with_transform) u.row(row) = -u.row(row);
    }
    for (Eigen::Index r = 0; r < row; ++r) {
      if (h(r, col) == 0) continue;
      Scalar q = detail::floor_div<Scalar>(h(r, col), h(row, col));
      axpy(r, row, q);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.form = std::move(h);
  out.transform = std::move(u);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& a) {
  return hermite(a).rank();
}

/// Z-basis of the lattice {x in Z^n : A x = 0}, one basis vector per row,
/// returned in Hermite form (which keeps entries small).
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a) {
  const Eigen::Index n = a.cols();
  Matrix<Scalar> at = a.transpose();
  auto hf = hermite(at, /*with_transform=*/true);
  const Eigen::Index k = n - hf.rank();
  if (k == 0) return Matrix<Scalar>(0, n);
  Matrix<Scalar> kernel = hf.transform.bottomRows(k);
  return hermite(kernel).form;
}

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
template <typename Scalar>
std::vector<Scalar> smith_diagonal(const Matrix<Scalar>& a) {
  using detail::abs_value;
  Matrix<Scalar> m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Scalar> diag;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index r = t; r < rows; ++r)
      for (Eigen::Index c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr < 0 || abs_value(m(r, c)) < abs_value(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    m.row(t).swap(m.row(pr));
    m.col(t).swap(m.col(pc));
    while (true) {
      bool done = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        Scalar q = detail::floor_div<Scalar>(m(r, t), m(t, t));
        detail::row_axpy(m, r, t, q);
        if (m(r, t) != 0) done = false;
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        Scalar q = detail::floor_div<Scalar>(m(t, c), m(t, t));
        for (Eigen::Index r = t; r < rows; ++r)
          if (m(r, t) != 0) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) done = false;
      }
      if (!done) {
        // move the smallest leftover of row/column t onto the pivot
        Eigen::Index br = t, bc = t;
        for (Eigen::Index r = t + 1; r < rows; ++r)
          if (m(r, t) != 0 && abs_value(m(r, t)) < abs_value(m(br, bc))) { br = r; bc = t; }
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (m(t, c) != 0 && abs_value(m(t, c)) < abs_value(m(br, bc))) { br = t; bc = c; }
        m.row(t).swap(m.row(br));
        m.col(t).swap(m.col(bc));
        continue;
      }
      // divisibility: the pivot must divide the remaining block
      Eigen::Index bad = -1;
      for (Eigen::Index r = t + 1; r < rows && bad < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      for (Eigen::Index c = t; c < cols; ++c) m(t, c) += m(bad, c);
    }
    diag.push_back(abs_value(m(t, t)));
  }
  return diag;
}

/// Solve c^T * basis = target^T given the Hermite form (with transform) of
/// `basis`. Returns nullopt when no integral solution exists.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_with_hermite(const HermiteForm<Scalar>& hf,
                                                 const Vector<Scalar>& target) {
  // y^T H = target^T with H echelon: forward substitution over the pivots
  Vector<Scalar> residual = target;
  const Eigen::Index rows = hf.form.rows();
  Vector<Scalar> y = Vector<Scalar>::Zero(rows);
  for (Eigen::Index r = 0; r < hf.rank(); ++r) {
    const Eigen::Index c = hf.pivot_cols[static_cast<std::size_t>(r)];
    if (residual(c) % hf.form(r, c) != 0) return std::nullopt;
    y(r) = residual(c) / hf.form(r, c);
    if (y(r) != 0)
      for (Eigen::Index k = c; k < residual.size(); ++k) residual(k) -= y(r) * hf.form(r, k);
  }
  for (Eigen::Index k = 0; k < residual.size(); ++k)
    if (residual(k) != 0) return std::nullopt;
  Vector<Scalar> out = Vector<Scalar>::Zero(rows);
  for (Eigen::Index r = 0; r < rows; ++r)
    if (y(r) != 0)
      for (Eigen::Index c = 0; c < rows; ++c) out(c) += y(r) * hf.transform(r, c);
  return out;
}

/// Solve c^T * basis = target^T for an integer vector c.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_in_row_lattice(const Matrix<Scalar>& basis,
                                                   const Vector<Scalar>& target) {
  return solve_with_hermite(hermite(basis, /*with_transform=*/true), target);
}

template <typename Scalar>
Scalar gcd_of(const Vector<Scalar>& v) {
  Scalar g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = detail::gcd_value(g, detail::abs_value(v(i)));
  return g;
}

}  // namespace burnside::linalg
