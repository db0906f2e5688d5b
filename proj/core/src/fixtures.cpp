#include "pgma/fixtures.hpp"

#include "pgma/error.hpp"

namespace pgma::fixtures {

namespace {

// A datum whose present blocks are all one-dimensional and multiply like
// matrix units.
BlockedAlgebra unit_blocks(const Field& f, std::size_t n, const std::vector<std::size_t>& dims) {
  MatrixDatum d(f, n, dims);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (d.dim(i, j) && d.dim(j, k) && d.dim(i, k)) d.theta(i, j, k).at(0, 0) = f.one();
  for (std::size_t i = 0; i < n; ++i) d.eta(i) = Vec{f.one()};
  return assemble(d);
}

Matrix from_rows_int(const Field& f, std::size_t n, std::initializer_list<long> entries) {
  Matrix m(f, n, n);
  std::size_t p = 0;
  for (long e : entries) {
    m.at(p / n, p % n) = f.from_int(e);
    ++p;
  }
  return m;
}

Vec ints(const Field& f, std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

}  // namespace

BlockedAlgebra full_matrix_blocks(const Field& f, std::size_t n) {
  return unit_blocks(f, n, std::vector<std::size_t>(n * n, 1));
}

BlockedAlgebra upper_triangular_blocks(const Field& f) { return unit_blocks(f, 2, {1, 1, 0, 1}); }

PartialAction diagonal_conjugation(const BlockedAlgebra& r, const GroupTable& g, const std::vector<Vec>& scales) {
  const Field& f = r.total.field();
  const std::size_t n = r.order();
  if (scales.size() != g.order()) throw ShapeError("diagonal_conjugation: one scale vector per group element");
  std::vector<Matrix> ops;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (scales[x].size() != n) throw ShapeError("diagonal_conjugation: scale length must equal the order");
    Matrix op(f, r.total.dim(), r.total.dim());
    for (std::size_t b = 0; b < r.total.dim(); ++b) {
      const BlockPosition& pos = r.block_of_basis[b];
      op.at(b, b) = scales[x][pos.row] / scales[x][pos.col];
    }
    ops.push_back(std::move(op));
  }
  return left_action_from_operators(group_algebra(g, f), r.total, ops);
}

PartialAction permutation_conjugation(const BlockedAlgebra& r, const std::vector<std::size_t>& perm) {
  const Field& f = r.total.field();
  Matrix swap(f, r.total.dim(), r.total.dim());
  for (std::size_t b = 0; b < r.total.dim(); ++b) {
    const BlockPosition& pos = r.block_of_basis[b];
    swap.at(r.offset(perm[pos.row], perm[pos.col]) + pos.index, b) = f.one();
  }
  return left_action_from_operators(group_algebra(GroupTable::cyclic(2), f), r.total,
                                    {Matrix::identity(f, r.total.dim()), swap});
}

PartialAction trivial_z2_m2(const Field& f) {
  return trivial_left_action(group_algebra(GroupTable::cyclic(2), f), full_matrix_blocks(f, 2).total);
}

PartialAction trivial_z3_upper(const Field& f) {
  return trivial_left_action(group_algebra(GroupTable::cyclic(3), f), upper_triangular_blocks(f).total);
}

PartialAction trivial_s3_m2(const Field& f) {
  return trivial_left_action(group_algebra(GroupTable::symmetric3(), f), full_matrix_blocks(f, 2).total);
}

PartialAction unit_zero(const Field& f) {
  return left_action_from_operators(group_algebra(GroupTable::cyclic(2), f), ground_algebra(f),
                                    {Matrix::identity(f, 1), Matrix(f, 1, 1)});
}

UnitalPartialGroupAction z2_on_k2(const Field& f) {
  const Matrix id = Matrix::identity(f, 2);
  return UnitalPartialGroupAction::from_full(GroupTable::cyclic(2), diagonal_algebra(f, 2),
                                             {ints(f, {1, 1}), ints(f, {1, 0})}, {id, id});
}

PartialAction conjugation_m2(const Field& f) {
  return diagonal_conjugation(full_matrix_blocks(f, 2), GroupTable::cyclic(2), {ints(f, {1, 1}), ints(f, {1, -1})});
}

PartialAction swap_m2(const Field& f) { return permutation_conjugation(full_matrix_blocks(f, 2), {1, 0}); }

PartialAction sweedler_trivial(const Field& f) { return trivial_left_action(sweedler_h4(f), diagonal_algebra(f, 2)); }

PartialAction sweedler_partial(const Field& f) {
  // Produced by tools/scripts/solve_sweedler_partial.py; entry (r, c) is the
  // coefficient of e_r in h . e_c for h = 1, g, x, gx.
  return left_action_from_operators(sweedler_h4(f), diagonal_algebra(f, 2),
                                    {from_rows_int(f, 2, {1, 0, 0, 1}), from_rows_int(f, 2, {0, 0, 0, 1}),
                                     from_rows_int(f, 2, {1, 0, 0, 0}), from_rows_int(f, 2, {1, 0, 0, 0})});
}

PartialAction z3_conjugation_m3() {
  // 2 has order 3 mod 7, so diag(1, 2, 4) has order 3 and every off-diagonal
  // block is moved by a non-trivial scalar.
  const Field f = Field::prime(7);
  return diagonal_conjugation(full_matrix_blocks(f, 3), GroupTable::cyclic(3),
                              {ints(f, {1, 1, 1}), ints(f, {1, 2, 4}), ints(f, {1, 4, 2})});
}

UnitalPartialGroupAction z3_restricted(const Field& f) {
  return UnitalPartialGroupAction::from_full(
      GroupTable::cyclic(3), diagonal_algebra(f, 2), {ints(f, {1, 1}), ints(f, {0, 1}), ints(f, {1, 0})},
      {Matrix::identity(f, 2), from_rows_int(f, 2, {0, 0, 1, 0}), from_rows_int(f, 2, {0, 1, 0, 0})});
}

CornerFixture morita_reject(const Field& f) {
  auto u = UnitalPartialGroupAction::from_full(GroupTable::cyclic(2), diagonal_algebra(f, 3),
                                               {ints(f, {1, 1, 1}), ints(f, {0, 1, 1})},
                                               {Matrix::identity(f, 3), from_rows_int(f, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0})});
  return {std::move(u), ints(f, {1, 1, 0})};
}

CornerFixture morita_accept(const Field& f) { return {z2_on_k2(f), ints(f, {1, 0})}; }

UnitalPartialGroupAction trivial_on_ground(const Field& f, const GroupTable& g) {
  return UnitalPartialGroupAction::from_full(g, ground_algebra(f), std::vector<Vec>(g.order(), Vec{f.one()}),
                                             std::vector<Matrix>(g.order(), Matrix::identity(f, 1)));
}

GroupDatum diagonal_conjugation_datum(const Field& f, const GroupTable& g, const std::vector<Vec>& scales) {
  const std::size_t n = scales.empty() ? 0 : scales.front().size();
  GroupDatum d = skeleton_datum(full_matrix_blocks(f, n).datum, g,
                                std::vector<UnitalPartialGroupAction>(n, trivial_on_ground(f, g)));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d.gamma_at(x, i, j).at(0, 0) = scales[x][i] / scales[x][j];
  return d;
}

GroupDatum conjugation_datum(const Field& f) {
  return diagonal_conjugation_datum(f, GroupTable::cyclic(2), {ints(f, {1, 1}), ints(f, {1, -1})});
}

GroupDatum z3_datum() {
  const Field f = Field::prime(7);
  return diagonal_conjugation_datum(f, GroupTable::cyclic(3), {ints(f, {1, 1, 1}), ints(f, {1, 2, 4}), ints(f, {1, 4, 2})});
}

GroupDatum off_diagonal_zero_datum(const Field& f) {
  MatrixDatum m = peirce(diagonal_algebra(f, 3), {ints(f, {1, 1, 0}), ints(f, {0, 0, 1})}).datum;
  return skeleton_datum(std::move(m), GroupTable::cyclic(2), {z2_on_k2(f), trivial_on_ground(f, GroupTable::cyclic(2))});
}

MoritaContextData scalar_context(const Field& f) {
  const Matrix one = Matrix::identity(f, 1);
  return {ground_algebra(f), ground_algebra(f), 1, 1, one, one, one, one, one, one};
}

MoritaContextData zero_mu_context(const Field& f) {
  MoritaContextData c = scalar_context(f);
  c.mu = Matrix(f, 1, 1);
  return c;
}

MoritaContextData column_context(const Field& f) {
  // E_pq e_x = [q = x] e_p and e_y^T E_pq = [y = p] e_q^T
  Matrix m_left(f, 2, 8), n_right(f, 2, 8), mu(f, 4, 4), nu(f, 1, 4);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q) {
      m_left.at(p, (p * 2 + q) * 2 + q) = f.one();
      n_right.at(q, p * 4 + p * 2 + q) = f.one();
      mu.at(p * 2 + q, p * 2 + q) = f.one();
    }
  for (std::size_t x = 0; x < 2; ++x) nu.at(0, x * 2 + x) = f.one();
  const Matrix id2 = Matrix::identity(f, 2);
  return {endomorphism_algebra(f, 2), ground_algebra(f), 2, 2, m_left, id2, id2, n_right, mu, nu};
}

}  // namespace pgma::fixtures
