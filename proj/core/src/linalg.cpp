#include "pgma/linalg.hpp"

#include <sstream>

#include "pgma/error.hpp"

namespace pgma {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

static void require_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw ShapeError("vector lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
}

Vec add(const Vec& a, const Vec& b) {
  require_len(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_len(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& s : r) s *= c;
  return r;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  require_len(y, x);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i].add_product(c, x[i]);
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw ShapeError("matrix entry count does not match shape");
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, std::span<const Vec> cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::span<const Vec> rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw ShapeError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
  Vec y = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) y[r].add_product(at(r, c), x[c]);
  }
  return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Matrix m(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) m.at(i, j).add_product(a, o.at(k, j));
    }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

bool Matrix::is_identity() const { return *this == identity(field_, rows_); }

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r.at(sel, c), r.at(row, c));
    Scalar inv = r.at(row, col).inverse();
    for (std::size_t c = col; c < r.cols(); ++c) r.at(row, c) *= inv;
    for (std::size_t other = 0; other < r.rows(); ++other) {
      if (other == row || r.at(other, col).is_zero()) continue;
      Scalar f = -r.at(other, col);
      for (std::size_t c = col; c < r.cols(); ++c)
        if (!r.at(row, c).is_zero()) r.at(other, c).add_product(f, r.at(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> row_space_basis(std::span<const Vec> vectors) {
  if (vectors.empty()) return {};
  const Field f = vectors.front().empty() ? Field::rationals() : vectors.front().front().field();
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw ShapeError("row_space_basis: vectors of unequal length");
    for (const auto& s : v)
      if (!(s.field() == f)) throw FieldMismatch("row_space_basis: mixed fields");
  }
  Echelon e = rref(Matrix::from_rows(f, n, vectors));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

std::optional<Vec> solve_linear(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw ShapeError("solve_linear: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.reduced.at(r, n + c);
  return inv;
}

std::vector<Vec> null_space(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced.at(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(Field f, std::size_t ambient, std::span<const Vec> vectors) {
  Subspace s(f, ambient);
  for (const auto& v : vectors)
    if (v.size() != ambient) throw ShapeError("Subspace::span: vector length mismatch");
  if (vectors.empty() || ambient == 0) return s;
  Echelon e = rref(Matrix::from_rows(f, ambient, vectors));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<Vec> id;
  for (std::size_t i = 0; i < ambient; ++i) id.push_back(unit_vec(f, ambient, i));
  return span(f, ambient, id);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw ShapeError("Subspace::coordinates: length mismatch");
  Vec c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  if (from_coordinates(c) != v) return std::nullopt;
  return c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
  if (c.size() != basis_.size()) throw ShapeError("Subspace::from_coordinates: length mismatch");
  Vec v = zero_vec(field_, ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, c[i], basis_[i]);
  return v;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(field_, ambient_, basis_); }

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = U a = V b  <=>  [U | -V] (a, b) = 0
  const std::size_t du = dim(), dv = other.dim();
  Matrix m(field_, ambient_, du + dv);
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, i) = basis_[i][r];
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t r = 0; r < ambient_; ++r) m.at(r, du + j) = -other.basis_[j][r];
  std::vector<Vec> gens;
  for (const auto& sol : null_space(m)) {
    Vec a(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(du));
    gens.push_back(from_coordinates(a));
  }
  return span(field_, ambient_, gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace pgma
