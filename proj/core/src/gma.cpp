#include "pgma/gma.hpp"

#include <string>

#include "pgma/error.hpp"

namespace pgma {

MatrixDatum::MatrixDatum(Field f, std::size_t n, std::vector<std::size_t> dims)
    : field_(f), n_(n), dims_(std::move(dims)) {
  if (n_ == 0) throw ShapeError("datum: at least one block required");
  if (dims_.size() != n_ * n_) throw ShapeError("datum: dims must be n x n");
  theta_.reserve(n_ * n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) theta_.emplace_back(f, dim(i, k), dim(i, j) * dim(j, k));
  for (std::size_t i = 0; i < n_; ++i) eta_.push_back(zero_vec(f, dim(i, i)));
}

Vec MatrixDatum::mult(std::size_t i, std::size_t j, std::size_t k, const Vec& m, const Vec& mp) const {
  return theta(i, j, k).apply(kron(m, mp));
}

Algebra MatrixDatum::diagonal(std::size_t i) const {
  const std::size_t d = dim(i, i);
  const Matrix& t = theta(i, i, i);
  std::vector<Scalar> c(d * d * d, field_.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) c[(a * d + b) * d + k] = t.at(k, a * d + b);
  return Algebra(field_, d, std::move(c), eta(i));
}

namespace {

void validate_shapes(const MatrixDatum& d) {
  const std::size_t n = d.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (d.eta(i).size() != d.dim(i, i)) throw ShapeError("datum: unit length does not match R_i");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Matrix& t = d.theta(i, j, k);
        if (t.rows() != d.dim(i, k) || t.cols() != d.dim(i, j) * d.dim(j, k))
          throw ShapeError("datum: theta shape mismatch at (" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")");
      }
  }
}

Vec unit(const Field& f, std::size_t n, std::size_t i) { return unit_vec(f, n, i); }

}  // namespace

Report check_datum(const MatrixDatum& d) {
  validate_shapes(d);
  Report r("datum");
  const std::size_t n = d.order();
  const Field& f = d.field();
  r.check("GMD3-associativity");
  r.check("GMD3-left-unit");
  r.check("GMD3-right-unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t a = 0; a < d.dim(i, j); ++a)
            for (std::size_t b = 0; b < d.dim(j, k); ++b) {
              Vec ab = d.mult(i, j, k, unit(f, d.dim(i, j), a), unit(f, d.dim(j, k), b));
              for (std::size_t c = 0; c < d.dim(k, l); ++c) {
                Vec vc = unit(f, d.dim(k, l), c);
                Vec lhs = d.mult(i, k, l, ab, vc);
                Vec rhs = d.mult(i, j, l, unit(f, d.dim(i, j), a), d.mult(j, k, l, unit(f, d.dim(j, k), b), vc));
                r.expect("GMD3-associativity", lhs == rhs, {i, j, k, l, a, b, c});
              }
            }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < d.dim(i, j); ++a) {
        Vec m = unit(f, d.dim(i, j), a);
        r.expect("GMD3-left-unit", d.mult(i, i, j, d.eta(i), m) == m, {i, j, a});
        r.expect("GMD3-right-unit", d.mult(i, j, j, m, d.eta(j)) == m, {i, j, a});
      }
  // consequences: the diagonal blocks are algebras; theta is R_j-balanced
  for (std::size_t i = 0; i < n; ++i) {
    Report part = check_algebra(d.diagonal(i));
    r.expect("diagonal-algebra", part.passed(), {i}, CheckKind::consequence);
  }
  r.check("balanced", CheckKind::consequence);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < d.dim(i, j); ++a)
          for (std::size_t s = 0; s < d.dim(j, j); ++s)
            for (std::size_t b = 0; b < d.dim(j, k); ++b) {
              Vec m = unit(f, d.dim(i, j), a), rr = unit(f, d.dim(j, j), s), mp = unit(f, d.dim(j, k), b);
              Vec lhs = d.mult(i, j, k, d.mult(i, j, j, m, rr), mp);
              Vec rhs = d.mult(i, j, k, m, d.mult(j, j, k, rr, mp));
              r.expect("balanced", lhs == rhs, {i, j, k, a, s, b}, CheckKind::consequence);
            }
  return r;
}

BlockedAlgebra assemble(const MatrixDatum& d) {
  require(check_datum(d), "datum");
  const std::size_t n = d.order();
  const Field& f = d.field();
  BlockedAlgebra out;
  out.datum = d;
  out.offsets.resize(n * n);
  std::size_t total = 0;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.offsets[i * n + j] = total;
      for (std::size_t a = 0; a < d.dim(i, j); ++a) {
        out.block_of_basis.push_back({i, j, a});
        labels.push_back("m" + std::to_string(i + 1) + std::to_string(j + 1) + "_" + std::to_string(a));
      }
      total += d.dim(i, j);
    }
  std::vector<Scalar> c(total * total * total, f.zero());
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      const auto& px = out.block_of_basis[x];
      const auto& py = out.block_of_basis[y];
      if (px.col != py.row) continue;
      const Matrix& t = d.theta(px.row, px.col, py.col);
      const std::size_t col = px.index * d.dim(py.row, py.col) + py.index;
      const std::size_t base = out.offsets[px.row * n + py.col];
      for (std::size_t k = 0; k < t.rows(); ++k) c[(x * total + y) * total + base + k] = t.at(k, col);
    }
  Vec u = zero_vec(f, total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < d.dim(i, i); ++a) u[out.offsets[i * n + i] + a] = d.eta(i)[a];
  out.total = Algebra(f, total, std::move(c), std::move(u), std::move(labels));
  return out;
}

Vec block_embed(const BlockedAlgebra& r, std::size_t i, std::size_t j, const Vec& m) {
  const std::size_t n = r.order();
  if (i >= n || j >= n) throw ShapeError("block_embed: block index out of range");
  if (m.size() != r.datum.dim(i, j)) throw ShapeError("block_embed: block vector length mismatch");
  Vec x = r.total.zero();
  for (std::size_t a = 0; a < m.size(); ++a) x[r.offset(i, j) + a] = m[a];
  return x;
}

Vec block_project(const BlockedAlgebra& r, std::size_t i, std::size_t j, const Vec& x) {
  const std::size_t n = r.order();
  if (i >= n || j >= n) throw ShapeError("block_project: block index out of range");
  if (x.size() != r.total.dim()) throw ShapeError("block_project: vector length mismatch");
  const std::size_t off = r.offset(i, j);
  return Vec(x.begin() + static_cast<std::ptrdiff_t>(off),
             x.begin() + static_cast<std::ptrdiff_t>(off + r.datum.dim(i, j)));
}

Matrix embedding_matrix(const BlockedAlgebra& r, std::size_t i, std::size_t j) {
  Matrix m(r.total.field(), r.total.dim(), r.datum.dim(i, j));
  for (std::size_t a = 0; a < r.datum.dim(i, j); ++a) m.at(r.offset(i, j) + a, a) = r.total.field().one();
  return m;
}

namespace {

IdempotentBlocks blocks_from_idempotents(const Algebra& a, const std::vector<Vec>& es) {
  const std::size_t n = es.size();
  const Field& f = a.field();
  std::vector<Subspace> blocks;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Vec> gens;
      for (std::size_t b = 0; b < a.dim(); ++b) gens.push_back(a.multiply(a.multiply(es[i], a.basis(b)), es[j]));
      blocks.push_back(Subspace::span(f, a.dim(), gens));
      dims.push_back(blocks.back().dim());
    }
  MatrixDatum d(f, n, dims);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Subspace& bij = blocks[i * n + j];
        const Subspace& bjk = blocks[j * n + k];
        const Subspace& bik = blocks[i * n + k];
        Matrix& t = d.theta(i, j, k);
        for (std::size_t p = 0; p < bij.dim(); ++p)
          for (std::size_t q = 0; q < bjk.dim(); ++q) {
            auto c = bik.coordinates(a.multiply(bij.basis()[p], bjk.basis()[q]));
            if (!c) throw DomainError("idempotent blocks: product leaves e_i A e_k");
            t.set_column(p * bjk.dim() + q, *c);
          }
      }
  for (std::size_t i = 0; i < n; ++i) {
    auto c = blocks[i * n + i].coordinates(es[i]);
    if (!c) throw DomainError("idempotent blocks: e_i is not in e_i A e_i");
    d.eta(i) = *c;
  }
  std::vector<Vec> cols;
  for (const auto& b : blocks)
    for (const auto& v : b.basis()) cols.push_back(v);
  Matrix to_a = Matrix::from_columns(f, a.dim(), cols);
  return IdempotentBlocks{std::move(d), std::move(blocks), std::move(to_a)};
}

void require_idempotents(const Algebra& a, const std::vector<Vec>& es) {
  if (es.empty()) throw DomainError("idempotent family is empty");
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].size() != a.dim()) throw ShapeError("idempotent length does not match algebra");
    if (a.multiply(es[i], es[i]) != es[i]) throw DomainError("element " + std::to_string(i) + " is not idempotent");
  }
}

}  // namespace

IdempotentBlocks peirce(const Algebra& a, const std::vector<Vec>& idempotents) {
  require_idempotents(a, idempotents);
  Vec sum = a.zero();
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    sum = add(sum, idempotents[i]);
    for (std::size_t j = 0; j < idempotents.size(); ++j)
      if (i != j && !is_zero(a.multiply(idempotents[i], idempotents[j])))
        throw DomainError("idempotents " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
  }
  if (sum != a.unit()) throw DomainError("idempotents do not sum to the unit");
  return blocks_from_idempotents(a, idempotents);
}

IdempotentBlocks corner_datum(const Algebra& a, const std::vector<Vec>& idempotents) {
  require_idempotents(a, idempotents);
  return blocks_from_idempotents(a, idempotents);
}

void validate_ideal_family(const MatrixDatum& d, const IdealFamily& fam) {
  if (fam.ideals.size() != d.order()) throw ShapeError("ideal family: one ideal per block required");
  for (std::size_t j = 0; j < d.order(); ++j) {
    const Subspace& I = fam.ideals[j];
    if (I.ambient() != d.dim(j, j)) throw ShapeError("ideal family: ideal ambient does not match R_j");
    for (const auto& x : I.basis())
      for (std::size_t b = 0; b < d.dim(j, j); ++b) {
        Vec e = unit_vec(d.field(), d.dim(j, j), b);
        if (!I.contains(d.mult(j, j, j, e, x)) || !I.contains(d.mult(j, j, j, x, e)))
          throw DomainError("ideal family: I_" + std::to_string(j + 1) + " is not a two-sided ideal");
      }
  }
}

Subspace left_ideal_span(const MatrixDatum& d, std::size_t i, std::size_t j, const Subspace& ideal_i) {
  std::vector<Vec> gens;
  for (const auto& x : ideal_i.basis())
    for (std::size_t a = 0; a < d.dim(i, j); ++a) gens.push_back(d.mult(i, i, j, x, unit_vec(d.field(), d.dim(i, j), a)));
  return Subspace::span(d.field(), d.dim(i, j), gens);
}

Subspace right_ideal_span(const MatrixDatum& d, std::size_t i, std::size_t j, const Subspace& ideal_j) {
  std::vector<Vec> gens;
  for (std::size_t a = 0; a < d.dim(i, j); ++a)
    for (const auto& y : ideal_j.basis()) gens.push_back(d.mult(i, j, j, unit_vec(d.field(), d.dim(i, j), a), y));
  return Subspace::span(d.field(), d.dim(i, j), gens);
}

bool SymmetryTable::all() const {
  for (bool b : table)
    if (!b) return false;
  return true;
}

SymmetryTable check_symmetric(const MatrixDatum& d, const IdealFamily& fam) {
  validate_ideal_family(d, fam);
  const std::size_t n = d.order();
  SymmetryTable t{n, std::vector<bool>(n * n, true)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.table[i * n + j] = left_ideal_span(d, i, j, fam.ideals[i]) == right_ideal_span(d, i, j, fam.ideals[j]);
  return t;
}

BlockIdeal block_ideal(const BlockedAlgebra& r, const IdealFamily& fam) {
  const MatrixDatum& d = r.datum;
  const std::size_t n = d.order();
  SymmetryTable sym = check_symmetric(d, fam);
  Report rep("block-ideal");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rep.expect("symmetric", sym.at(i, j), {i, j});
  require(rep, "symmetry");

  std::vector<Vec> gens;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Subspace ijk = left_ideal_span(d, j, k, fam.ideals[j]).sum(right_ideal_span(d, j, k, fam.ideals[k]));
      for (const auto& v : ijk.basis()) gens.push_back(block_embed(r, j, k, v));
    }
  Subspace ideal = Subspace::span(d.field(), r.total.dim(), gens);
  for (std::size_t p = 0; p < ideal.dim(); ++p)
    for (std::size_t b = 0; b < r.total.dim(); ++b) {
      const Vec& x = ideal.basis()[p];
      rep.expect("left-ideal", ideal.contains(r.total.multiply(r.total.basis(b), x)), {b, p}, CheckKind::consequence);
      rep.expect("right-ideal", ideal.contains(r.total.multiply(x, r.total.basis(b))), {p, b}, CheckKind::consequence);
    }
  return BlockIdeal{std::move(ideal), std::move(rep)};
}

}  // namespace pgma
