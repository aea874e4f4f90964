#pragma once

// Dense linear algebra over the prime field F_p on row-major Eigen storage.
// Row operations are written as plain loops over contiguous rows so that the
// compiler vectorizes them; p = 2 takes an xor fast path.

#include <cstdint>
#include <optional>
#include <vector>

#include "burnside/error.hpp"
#include "burnside/scalar.hpp"

namespace burnside::fp {

/// Thrown by WorkMeter::charge once the limit is passed.
struct WorkLimitExceeded {};

/// Deterministic work accounting for long eliminations: every row operation
/// charges the number of entries it touches.
class WorkMeter {
public:
  explicit WorkMeter(double limit) : limit_(limit) {}
  void charge(double amount) {
    used_ += amount;
    if (used_ > limit_) throw WorkLimitExceeded{};
  }
  double used() const { return used_; }
  double limit() const { return limit_; }

private:
  double limit_;
  double used_ = 0;
};

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (p >= (1 << 15)) throw InvalidPrime(std::to_string(p) + " exceeds the supported range");
}

inline FpScalar mod(std::int64_t x, FpScalar p) {
  std::int64_t r = x % p;
  return static_cast<FpScalar>(r < 0 ? r + p : r);
}

inline FpScalar mod(const BigInt& x, FpScalar p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.convert_to<FpScalar>();
}

inline FpScalar inverse(FpScalar a, FpScalar p) {
  // Fermat; p is small
  std::int64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<FpScalar>(result);
}

template <typename Derived>
FpMatrix reduce(const Eigen::MatrixBase<Derived>& m, FpScalar p) {
  FpMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = mod(m(i, j), p);
  return out;
}

/// dst[0..n) += factor * src[0..n) (mod p)
inline void axpy(FpScalar* dst, const FpScalar* src, FpScalar factor, FpScalar p, Eigen::Index n) {
  if (factor == 0) return;
  if (p == 2) {
    for (Eigen::Index i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    FpScalar v = dst[i] + factor * src[i];
    dst[i] = v % p;
  }
}

inline void scale(FpScalar* row, FpScalar factor, FpScalar p, Eigen::Index n) {
  if (factor == 1) return;
  for (Eigen::Index i = 0; i < n; ++i) row[i] = row[i] * factor % p;
}

/// In-place reduced row echelon form; returns pivot columns. Rows beyond the
/// rank are zero afterwards.
inline std::vector<Eigen::Index> rref(FpMatrix& a, FpScalar p, WorkMeter* meter = nullptr) {
  std::vector<Eigen::Index> pivots;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (a(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) a.row(sel).swap(a.row(row));
    FpScalar* prow = a.row(row).data();
    scale(prow + col, inverse(prow[col], p), p, cols - col);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row) continue;
      FpScalar f = a(r, col);
      if (f == 0) continue;
      if (meter) meter->charge(static_cast<double>(cols - col));
      axpy(a.row(r).data() + col, prow + col, p - f, p, cols - col);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index rank(FpMatrix a, FpScalar p) {
  return static_cast<Eigen::Index>(rref(a, p).size());
}

/// Rows form a basis of {x : A x = 0}.
inline FpMatrix nullspace(FpMatrix a, FpScalar p, WorkMeter* meter = nullptr) {
  const auto pivots = rref(a, p, meter);
  const Eigen::Index n = a.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  FpMatrix out(n - static_cast<Eigen::Index>(pivots.size()), n);
  out.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    out(k, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) out(k, pivots[r]) = mod(-std::int64_t(a(r, f)), p);
    ++k;
  }
  return out;
}

/// Solve A x = b; nullopt when inconsistent.
inline std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b, FpScalar p) {
  FpMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto pivots = rref(aug, p);
  FpVector x = FpVector::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return x;
}

/// Incrementally maintained echelon basis of a subspace of F_p^n. Used to
/// extend a spanning set greedily in a deterministic order.
class EchelonBasis {
public:
  EchelonBasis(Eigen::Index dim, FpScalar p, WorkMeter* meter = nullptr)
      : dim_(dim), p_(p), meter_(meter) {}

  Eigen::Index dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }
  const std::vector<FpScalar>& row(Eigen::Index r) const { return rows_[static_cast<std::size_t>(r)]; }

  /// Reduce v against the basis; returns the reduced vector.
  std::vector<FpScalar> reduce(std::vector<FpScalar> v) const {
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      FpScalar f = v[pivots_[r]];
      if (f == 0) continue;
      if (meter_) meter_->charge(static_cast<double>(dim_));
      axpy(v.data(), rows_[r].data(), p_ - f, p_, dim_);
    }
    return v;
  }

  bool contains(const std::vector<FpScalar>& v) const {
    auto red = reduce(v);
    for (auto x : red)
      if (x != 0) return false;
    return true;
  }

  /// Inserts v if it is independent of the current basis; returns whether it
  /// was inserted.
  bool insert(std::vector<FpScalar> v) {
    v = reduce(std::move(v));
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < dim_; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    scale(v.data(), inverse(v[piv], p_), p_, dim_);
    // keep fully reduced so that reduce() is a single pass
    for (auto& row : rows_) {
      FpScalar f = row[piv];
      if (f == 0) continue;
      if (meter_) meter_->charge(static_cast<double>(dim_));
      axpy(row.data(), v.data(), p_ - f, p_, dim_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

private:
  Eigen::Index dim_;
  FpScalar p_;
  WorkMeter* meter_;
  std::vector<std::vector<FpScalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

}  // namespace burnside::fp
