#pragma once

#include <cstddef>
#include <vector>

#include "z2c/rational.hpp"

namespace z2c {

/// Dense matrix over the rationals, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t nrows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& s) const;
  bool operator==(const RatMatrix& rhs) const;

  bool is_zero() const;
  Rational trace() const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of the right kernel {x : A x = 0}, one vector per free column,
  /// normalized so the free coordinate is 1.
  std::vector<RatVector> kernel() const;

  /// Solves A x = b; returns false when inconsistent. Free variables are set to 0.
  bool solve(const RatVector& b, RatVector& x) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of a list of vectors of equal length.
std::size_t rank_of(const std::vector<RatVector>& vectors);

/// Coordinates of `v` in the span of `basis`, if it lies in it.
bool coordinates_in(const std::vector<RatVector>& basis, const RatVector& v, RatVector& coords);

}  // namespace z2c
