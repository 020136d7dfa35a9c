#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "augtopo/bigint.hpp"
#include "augtopo/graded_module.hpp"
#include "augtopo/complex.hpp"
#include "oracle.hpp"

namespace testutil {

inline oracle::FaceSet faces(const augtopo::Complex& c) {
  oracle::FaceSet out;
  for (augtopo::Simplex s : c.faces()) out.insert(s.vertices());
  return out;
}

inline augtopo::Complex cx(std::vector<std::vector<int>> facets) { return augtopo::Complex::from_facets(facets); }

/// Entrywise equality; Eigen's operator== on cpp_int matrices does not compile under Catch2.
inline bool same(const augtopo::IntMatrix& a, const augtopo::IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero(const augtopo::IntMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

}  // namespace testutil

template <>
struct Catch::StringMaker<augtopo::GradedModule> {
  static std::string convert(const augtopo::GradedModule& m) { return augtopo::to_string(m); }
};

template <>
struct Catch::StringMaker<augtopo::ModulePiece> {
  static std::string convert(const augtopo::ModulePiece& m) { return augtopo::to_string(m); }
};
