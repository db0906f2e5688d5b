#include "pgma/algebra.hpp"

#include "pgma/error.hpp"

namespace pgma {

Algebra::Algebra(Field f, std::size_t dim, std::vector<Scalar> mult, Vec unit,
                 std::vector<std::string> labels)
    : field_(f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), labels_(std::move(labels)) {
  if (mult_.size() != dim_ * dim_ * dim_) throw ShapeError("structure constants do not match dim^3");
  if (unit_.size() != dim_) throw ShapeError("unit vector length does not match dim");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim_) throw ShapeError("label count does not match dim");
  for (const auto& s : mult_)
    if (!(s.field() == field_)) throw FieldMismatch("structure constant over a different field");
  for (const auto& s : unit_)
    if (!(s.field() == field_)) throw FieldMismatch("unit over a different field");
  index_products();
}

void Algebra::index_products() {
  sparse_.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!coeff(i, j, k).is_zero()) sparse_[i * dim_ + j].push_back({k, coeff(i, j, k)});
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec r = zero();
  for (const auto& t : sparse_[i * dim_ + j]) r[t.index] = t.coeff;
  return r;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw ShapeError("Algebra::multiply: length mismatch");
  Vec r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& t : sparse_[i * dim_ + j]) r[t.index].add_product(c, t.coeff);
    }
  }
  return r;
}

Matrix Algebra::left_multiplication(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(a, basis(j)));
  return m;
}

Matrix Algebra::right_multiplication(const Vec& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, multiply(basis(j), a));
  return m;
}

Report check_algebra(const Algebra& a) {
  Report r("algebra");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.multiply(ij, a.basis(k));
        Vec rhs = a.multiply(a.basis(i), a.basis_product(j, k));
        r.expect("associativity", lhs == rhs, {i, j, k});
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    r.expect("left-unit", a.multiply(a.unit(), a.basis(i)) == a.basis(i), {i});
    r.expect("right-unit", a.multiply(a.basis(i), a.unit()) == a.basis(i), {i});
  }
  r.check("associativity");
  r.check("left-unit");
  r.check("right-unit");
  return r;
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> m(n * n * n, a.field().zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m[(i * n + j) * n + k] = a.coeff(j, i, k);
  return Algebra(a.field(), n, std::move(m), a.unit(), a.labels());
}

Algebra endomorphism_algebra(const Field& f, std::size_t n) {
  if (n == 0) throw DomainError("endomorphism_algebra: n must be at least 1");
  const std::size_t d = n * n;
  std::vector<Scalar> m(d * d * d, f.zero());
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      labels.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1));
      for (std::size_t s = 0; s < n; ++s)  // E_pq E_qs = E_ps
        m[((p * n + q) * d + (q * n + s)) * d + (p * n + s)] = f.one();
    }
  Vec unit = zero_vec(f, d);
  for (std::size_t p = 0; p < n; ++p) unit[p * n + p] = f.one();
  return Algebra(f, d, std::move(m), std::move(unit), std::move(labels));
}

Report check_algebra_morphism(const LinearMap& f, const Algebra& a, const Algebra& b) {
  if (f.domain_dim() != a.dim() || f.codomain_dim() != b.dim())
    throw ShapeError("check_algebra_morphism: map shape does not match algebras");
  Report r("algebra-morphism");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < a.dim(); ++i) images.push_back(f.image(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      r.expect("multiplicative", f.apply(a.basis_product(i, j)) == b.multiply(images[i], images[j]),
               {i, j});
  r.check("multiplicative");
  r.expect("unital", f.apply(a.unit()) == b.unit(), {});
  return r;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim() + b.dim();
  const Field f = a.field();
  std::vector<Scalar> m(n * n * n, f.zero());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) m[(i * n + j) * n + k] = a.coeff(i, j, k);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        m[((o + i) * n + (o + j)) * n + (o + k)] = b.coeff(i, j, k);
  Vec unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l + "'");
  return Algebra(f, n, std::move(m), std::move(unit), std::move(labels));
}

Algebra ground_algebra(const Field& f) { return Algebra(f, 1, {f.one()}, {f.one()}, {"1"}); }

Algebra diagonal_algebra(const Field& f, std::size_t n) {
  std::vector<Scalar> m(n * n * n, f.zero());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    m[(i * n + i) * n + i] = f.one();
    labels.push_back("e" + std::to_string(i + 1));
  }
  return Algebra(f, n, std::move(m), Vec(n, f.one()), std::move(labels));
}

Vec matrix_to_endomorphism(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("matrix_to_endomorphism: square matrix required");
  return m.entries();  // row-major p * n + q matches E_pq
}

Matrix endomorphism_to_matrix(const Field& f, std::size_t n, const Vec& v) {
  if (v.size() != n * n) throw ShapeError("endomorphism_to_matrix: length mismatch");
  return Matrix(f, n, n, v);
}

}  // namespace pgma
