#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pgma/linalg.hpp"
#include "pgma/report.hpp"

namespace pgma {

/// A finite-dimensional unital algebra given by structure constants:
/// e_i e_j = sum_k c[i][j][k] e_k. Axioms are not assumed; see check_algebra.
class Algebra {
 public:
  Algebra() = default;
  /// mult holds dim^3 constants indexed (i * dim + j) * dim + k.
  Algebra(Field f, std::size_t dim, std::vector<Scalar> mult, Vec unit,
          std::vector<std::string> labels = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& structure_constants() const { return mult_; }
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return mult_[(i * dim_ + j) * dim_ + k];
  }

  Vec basis(std::size_t i) const { return unit_vec(field_, dim_, i); }
  Vec zero() const { return zero_vec(field_, dim_); }
  Vec basis_product(std::size_t i, std::size_t j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  /// Left multiplication operator x -> a x as a matrix.
  Matrix left_multiplication(const Vec& a) const;
  Matrix right_multiplication(const Vec& a) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

 private:
  struct Term {
    std::size_t index;
    Scalar coeff;
  };
  void index_products();

  Field field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> mult_;
  Vec unit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> sparse_;  // nonzero terms of e_i e_j
};

/// A linear map between coordinate spaces; matrix columns are the images
/// of the domain basis vectors.
struct LinearMap {
  Matrix matrix;

  std::size_t domain_dim() const { return matrix.cols(); }
  std::size_t codomain_dim() const { return matrix.rows(); }
  Vec apply(const Vec& x) const { return matrix.apply(x); }
  Vec image(std::size_t i) const { return matrix.column(i); }
};

/// Associativity and both unit laws over all basis triples.
Report check_algebra(const Algebra& a);

Algebra opposite(const Algebra& a);

/// End(k^n) in the matrix-unit basis E_pq (index p * n + q), with
/// (f g)(v) = f(g(v)). Throws DomainError for n = 0.
Algebra endomorphism_algebra(const Field& f, std::size_t n);

/// Multiplicativity on basis pairs and f(1_a) = 1_b.
Report check_algebra_morphism(const LinearMap& f, const Algebra& a, const Algebra& b);

/// Direct product a x b with basis (a-basis, b-basis).
Algebra direct_product(const Algebra& a, const Algebra& b);
/// The one-dimensional algebra k.
Algebra ground_algebra(const Field& f);
/// k^n with orthogonal idempotent basis.
Algebra diagonal_algebra(const Field& f, std::size_t n);

/// Matrix of a square matrix in End(k^n) coordinates and back.
Vec matrix_to_endomorphism(const Matrix& m);
Matrix endomorphism_to_matrix(const Field& f, std::size_t n, const Vec& v);

}  // namespace pgma
