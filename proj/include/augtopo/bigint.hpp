#pragma once

#include <cstdint>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace augtopo {

/// Arbitrary-precision integer used for every exact integer computation.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar used for rank computations over Q.
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<BigInt>;

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(BigInt a, BigInt b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace augtopo
