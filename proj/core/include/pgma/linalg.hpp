#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pgma/scalar.hpp"

namespace pgma {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);
/// Tensor product of coordinate vectors: index i * b.size() + j.
Vec kron(const Vec& a, const Vec& b);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(Field f, std::size_t n);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(Field f, std::size_t rows, std::span<const Vec> cols);
  static Matrix from_rows(Field f, std::size_t cols, std::span<const Vec> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_column(std::size_t c, const Vec& v);

  Vec apply(const Vec& x) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form of a matrix together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical basis (nonzero rows of the reduced echelon form) of the span of
/// the input vectors. Throws ShapeError on unequal lengths and FieldMismatch
/// on mixed fields.
std::vector<Vec> row_space_basis(std::span<const Vec> vectors);

/// One solution of m x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& m, const Vec& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of { x : m x = 0 }.
std::vector<Vec> null_space(const Matrix& m);

/// A subspace of k^n held through its canonical echelon basis. Coordinates
/// with respect to that basis are read off the pivot positions.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, std::span<const Vec> vectors);
  static Subspace full(Field f, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& c) const;
  /// n x dim matrix whose columns are the basis vectors.
  Matrix basis_matrix() const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

std::string format_vec(const Vec& v);

}  // namespace pgma
