#pragma once

#include <cstddef>
#include <vector>

#include "pgma/algebra.hpp"

namespace pgma {

/// Blocks iMj (iMi = R_i), products theta_ijk: iMj (x) jMk -> iMk and units
/// eta_i in R_i. theta(i,j,k) is dim(i,k) x dim(i,j)*dim(j,k); stored for
/// every triple, including empty ones.
class MatrixDatum {
 public:
  MatrixDatum() = default;
  /// dims is n x n row-major. Thetas start at zero and units at zero.
  MatrixDatum(Field f, std::size_t n, std::vector<std::size_t> dims);

  const Field& field() const { return field_; }
  std::size_t order() const { return n_; }
  std::size_t dim(std::size_t i, std::size_t j) const { return dims_[i * n_ + j]; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  Matrix& theta(std::size_t i, std::size_t j, std::size_t k) { return theta_[(i * n_ + j) * n_ + k]; }
  const Matrix& theta(std::size_t i, std::size_t j, std::size_t k) const { return theta_[(i * n_ + j) * n_ + k]; }
  Vec& eta(std::size_t i) { return eta_[i]; }
  const Vec& eta(std::size_t i) const { return eta_[i]; }

  /// theta_ijk(m (x) m').
  Vec mult(std::size_t i, std::size_t j, std::size_t k, const Vec& m, const Vec& mp) const;
  /// R_i as a stand-alone algebra.
  Algebra diagonal(std::size_t i) const;

  friend bool operator==(const MatrixDatum&, const MatrixDatum&) = default;

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> theta_;
  std::vector<Vec> eta_;
};

/// GMD3 associativity and unit laws on all basis tuples, plus the
/// consequences: each R_i is an algebra and each theta_ijk is R_j-balanced.
Report check_datum(const MatrixDatum& d);

struct BlockPosition {
  std::size_t row;
  std::size_t col;
  std::size_t index;
};

/// The total algebra R of a datum. Basis = block bases concatenated in
/// row-major (i,j) order.
struct BlockedAlgebra {
  MatrixDatum datum;
  Algebra total;
  std::vector<BlockPosition> block_of_basis;
  std::vector<std::size_t> offsets;  // n x n

  std::size_t order() const { return datum.order(); }
  std::size_t offset(std::size_t i, std::size_t j) const { return offsets[i * datum.order() + j]; }
};

/// Requires check_datum; throws CheckFailed("datum", ...) otherwise.
BlockedAlgebra assemble(const MatrixDatum& d);

/// Throws ShapeError on out-of-range indices or wrong lengths.
Vec block_embed(const BlockedAlgebra& r, std::size_t i, std::size_t j, const Vec& m);
Vec block_project(const BlockedAlgebra& r, std::size_t i, std::size_t j, const Vec& x);
/// Matrix of block_embed(i,j,.) as a dim(R) x dim(iMj) map.
Matrix embedding_matrix(const BlockedAlgebra& r, std::size_t i, std::size_t j);

/// A datum cut out of an algebra by idempotents e_1..e_n: iMj = e_i A e_j
/// with canonical echelon bases (held in `blocks`, as subspaces of A).
struct IdempotentBlocks {
  MatrixDatum datum;
  std::vector<Subspace> blocks;  // n x n
  /// dim(A) x dim(R) map sending each block basis vector to its element of A.
  Matrix to_algebra;
};

/// Peirce decomposition for a complete family of orthogonal idempotents.
/// Throws DomainError on a non-idempotent, non-orthogonal or incomplete family.
IdempotentBlocks peirce(const Algebra& a, const std::vector<Vec>& idempotents);

/// Corner datum for arbitrary idempotents (e.g. (1, e) for the Morita ring
/// (A, Ae; eA, eAe)). Only idempotency is required.
IdempotentBlocks corner_datum(const Algebra& a, const std::vector<Vec>& idempotents);

/// One ideal I_j of R_j per diagonal block, in R_j coordinates.
struct IdealFamily {
  std::vector<Subspace> ideals;
};

/// Throws DomainError if some I_j is not a two-sided ideal of R_j.
void validate_ideal_family(const MatrixDatum& d, const IdealFamily& fam);

/// I_i . iMj and iMj . I_j as subspaces of iMj.
Subspace left_ideal_span(const MatrixDatum& d, std::size_t i, std::size_t j, const Subspace& ideal_i);
Subspace right_ideal_span(const MatrixDatum& d, std::size_t i, std::size_t j, const Subspace& ideal_j);

struct SymmetryTable {
  std::size_t n = 0;
  std::vector<bool> table;  // n x n
  bool all() const;
  bool at(std::size_t i, std::size_t j) const { return table[i * n + j]; }
};

SymmetryTable check_symmetric(const MatrixDatum& d, const IdealFamily& fam);

/// I = sum of blocks I_jk = I_j jMk + jMk I_k, as a subspace of R, with the
/// two-sided ideal property verified. Throws CheckFailed("symmetry", ...) with
/// the offending (i,j) if the family is not symmetric.
struct BlockIdeal {
  Subspace ideal;
  Report report;
};
BlockIdeal block_ideal(const BlockedAlgebra& r, const IdealFamily& fam);

}  // namespace pgma
