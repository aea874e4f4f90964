#pragma once

#include <cstdint>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace burnside {

/// Arbitrary-precision integer used wherever coefficient growth is possible
/// (lattice kernels, Smith forms, separator products).
using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;
using BigMatrix = Matrix<BigInt>;
using BigVector = Vector<BigInt>;

/// Entries of F_p matrices are kept reduced in [0, p). p < 2^15 is assumed
/// so that products fit comfortably in 32 bits.
using FpScalar = std::int32_t;
using FpMatrix = Eigen::Matrix<FpScalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FpVector = Vector<FpScalar>;

template <typename To, typename From>
Matrix<To> cast_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

inline std::int64_t to_int64(const BigInt& x) { return x.convert_to<std::int64_t>(); }

}  // namespace burnside
