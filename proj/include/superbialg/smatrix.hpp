/*
 * smatrix.hpp
 * -----------
 * Dense matrices of scalars with optional Z2 gradings on rows and columns.
 * Products keep scalar factors in order (entries may be a-numbers). The
 * supertranspose sign convention is (M^st)[u][v] = (-1)^{|u||v|} M[v][u]; it
 * was fixed by calibration against the r-matrix tables and is recorded in
 * docs/conventions.md.
 */
#pragma once

#include <functional>
#include <vector>

#include "superbialg/scalar.hpp"

namespace sbg {

class SMatrix {
public:
  SMatrix() = default;
  SMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static SMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  void set_gradings(std::vector<Parity> row_par, std::vector<Parity> col_par) {
    row_par_ = std::move(row_par);
    col_par_ = std::move(col_par);
  }
  const std::vector<Parity>& row_gradings() const { return row_par_; }
  const std::vector<Parity>& col_gradings() const { return col_par_; }
  bool has_gradings() const { return !row_par_.empty(); }

  bool is_zero() const;
  bool operator==(const SMatrix& o) const;
  bool operator!=(const SMatrix& o) const { return !(*this == o); }

  SMatrix operator+(const SMatrix& o) const;
  SMatrix operator-(const SMatrix& o) const;
  SMatrix operator*(const SMatrix& o) const;
  SMatrix operator-() const;
  SMatrix scaled(const Scalar& left_factor) const; // left multiplication entrywise

  // Entry (i,j) must be homogeneous of parity row(i)+col(j), or zero.
  bool graded_consistent() const;

  // DeWitt supertranspose; requires gradings.
  SMatrix supertranspose() const;

  // Exact inverse: invert the Grassmann-free body by adjugate over the
  // commuting subalgebra, then correct the nilpotent part by a terminating
  // Neumann series. Throws DivisionError when the body is singular.
  SMatrix inverse() const;

  SMatrix map(const std::function<Scalar(const Scalar&)>& fn) const;
  SMatrix substitute_params(const std::vector<std::pair<SymId, Rational>>& binding) const;
  SMatrix at_origin(const std::vector<SymId>& coords) const;

  std::string str() const;

private:
  Scalar det_body() const;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
  std::vector<Parity> row_par_, col_par_;
};

} // namespace sbg
