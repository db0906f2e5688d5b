#include "pgma/gma_partial.hpp"

#include "pgma/error.hpp"

namespace pgma {

bool InvarianceTable::all() const {
  for (bool b : table)
    if (!b) return false;
  return true;
}

namespace {

// h . iMj read back in iMj coordinates; assumes invariance.
Matrix block_operator(const BlockedAlgebra& r, const PartialAction& p, std::size_t h, std::size_t i, std::size_t j) {
  const std::size_t d = r.datum.dim(i, j);
  Matrix m(r.total.field(), d, d);
  for (std::size_t a = 0; a < d; ++a)
    m.set_column(a, block_project(r, i, j, p.act_basis(h, r.total.basis(r.offset(i, j) + a))));
  return m;
}

Vec apply_module(const Matrix& mod, std::size_t stride, bool left, const Vec& x, const Vec& m) {
  // left: column s * stride + m with x = s, stride = dim(iMj); right: column m * stride + t
  Vec out = zero_vec(mod.field(), mod.rows());
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (m[b].is_zero()) continue;
      axpy(out, x[a] * m[b], mod.column(left ? a * stride + b : b * stride + a));
    }
  }
  return out;
}

Matrix left_multiplications(const MatrixDatum& d, std::size_t i, std::size_t j) {
  const Field& f = d.field();
  const std::size_t dm = d.dim(i, j), dr = d.dim(i, i);
  Matrix out(f, dm * dm, dr);
  for (std::size_t r = 0; r < dr; ++r) {
    Matrix op(f, dm, dm);
    for (std::size_t m = 0; m < dm; ++m) op.set_column(m, d.mult(i, i, j, unit_vec(f, dr, r), unit_vec(f, dm, m)));
    out.set_column(r, matrix_to_endomorphism(op));
  }
  return out;
}

Matrix right_multiplications(const MatrixDatum& d, std::size_t i, std::size_t j) {
  const Field& f = d.field();
  const std::size_t dm = d.dim(i, j), dr = d.dim(j, j);
  Matrix out(f, dm * dm, dr);
  for (std::size_t r = 0; r < dr; ++r) {
    Matrix op(f, dm, dm);
    for (std::size_t m = 0; m < dm; ++m) op.set_column(m, d.mult(i, j, j, unit_vec(f, dm, m), unit_vec(f, dr, r)));
    out.set_column(r, matrix_to_endomorphism(op));
  }
  return out;
}

// Module matrix from a morphism X -> End(iMj): column x * dm + m (left) or m * dx + x (right).
Matrix module_from_morphism(const Matrix& phi, std::size_t dm, bool left) {
  const Field& f = phi.field();
  const std::size_t dx = phi.cols();
  Matrix mod(f, dm, dm * dx);
  for (std::size_t x = 0; x < dx; ++x) {
    Matrix op = endomorphism_to_matrix(f, dm, phi.column(x));
    for (std::size_t m = 0; m < dm; ++m) mod.set_column(left ? x * dm + m : m * dx + x, op.column(m));
  }
  return mod;
}

}  // namespace

InvarianceTable check_block_invariance(const BlockedAlgebra& r, const PartialAction& p) {
  if (p.algebra().dim() != r.total.dim()) throw ShapeError("check_block_invariance: action is not on the total algebra");
  const std::size_t n = r.order();
  InvarianceTable t{n, std::vector<bool>(n * n, true), Report("block-invariance")};
  t.report.check("invariant");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t h = 0; h < p.hopf().dim(); ++h)
        for (std::size_t m = 0; m < r.datum.dim(i, j); ++m) {
          Vec y = p.act_basis(h, r.total.basis(r.offset(i, j) + m));
          bool inside = is_zero(sub(y, block_embed(r, i, j, block_project(r, i, j, y))));
          t.report.expect("invariant", inside, {i, j, h, m});
          if (!inside) t.table[i * n + j] = false;
        }
  return t;
}

BlockRestriction restrict_blocks(const BlockedAlgebra& r, const PartialAction& p) {
  InvarianceTable inv = check_block_invariance(r, p);
  require(inv.report, "invariance");
  const std::size_t n = r.order();
  const Field& f = r.total.field();
  const HopfAlgebra& H = p.hopf();
  BlockRestriction out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Matrix> ops;
    for (std::size_t h = 0; h < H.dim(); ++h) ops.push_back(block_operator(r, p, h, i, i));
    out.diagonal.push_back(left_action_from_operators(H, r.datum.diagonal(i), ops));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = r.datum.dim(i, j);
      if (d == 0) {
        out.pi.emplace_back();
        out.gamma.emplace_back();
        continue;
      }
      Matrix m(f, d * d, H.dim());
      for (std::size_t h = 0; h < H.dim(); ++h) m.set_column(h, matrix_to_endomorphism(block_operator(r, p, h, i, j)));
      PartialRepresentation pi{H, endomorphism_algebra(f, d), LinearMap{std::move(m)}};
      out.gamma.push_back(opcop_representation(pi));
      out.pi.push_back(std::move(pi));
    }
  return out;
}

Vec BlockPartialData::left_act(std::size_t i, std::size_t j, const Vec& s, const Vec& m) const {
  return apply_module(left_module(i, j), datum.dim(i, j), true, s, m);
}

Vec BlockPartialData::right_act(std::size_t i, std::size_t j, const Vec& m, const Vec& t) const {
  return apply_module(right_module(i, j), right_smash[j].dim(), false, t, m);
}

Vec BlockPartialData::one_sharp(std::size_t i, const Vec& h) const {
  return left_smash[i].sharp_of(diagonal[i].algebra().unit(), h);
}

Vec BlockPartialData::sharp_one(std::size_t j, const Vec& h) const {
  return right_smash[j].sharp_of(diagonal[j].algebra().unit(), h);
}

BlockPartialData make_block_data(MatrixDatum datum, HopfAlgebra hopf, std::vector<PartialAction> diagonal) {
  const std::size_t n = datum.order();
  if (diagonal.size() != n) throw ShapeError("block data: one diagonal action per block");
  const Field& f = datum.field();
  BlockPartialData d;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(diagonal[i].hopf() == hopf) || !(diagonal[i].algebra() == datum.diagonal(i)))
      throw DomainError("block data: diagonal action " + std::to_string(i) + " is not an action of H on R_i");
    d.left_smash.push_back(left_smash(diagonal[i]));
    d.right_smash.push_back(right_smash(to_right(diagonal[i])));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dm = datum.dim(i, j);
      d.left_modules.emplace_back(f, dm, d.left_smash[i].dim() * dm);
      d.right_modules.emplace_back(f, dm, dm * d.right_smash[j].dim());
    }
  d.datum = std::move(datum);
  d.hopf = std::move(hopf);
  d.diagonal = std::move(diagonal);
  return d;
}

namespace {

void check_shapes(const BlockPartialData& d) {
  const std::size_t n = d.order();
  if (d.diagonal.size() != n || d.left_smash.size() != n || d.right_smash.size() != n ||
      d.left_modules.size() != n * n || d.right_modules.size() != n * n)
    throw ShapeError("block data: family sizes do not match the order");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dm = d.datum.dim(i, j);
      const Matrix& l = d.left_module(i, j);
      const Matrix& r = d.right_module(i, j);
      if (l.rows() != dm || l.cols() != d.left_smash[i].dim() * dm || r.rows() != dm ||
          r.cols() != dm * d.right_smash[j].dim())
        throw ShapeError("block data: module matrix shape mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

// One of (c) / (c'); left selects (c).
Report multiplicativity(const BlockPartialData& d, bool left) {
  check_shapes(d);
  const std::size_t n = d.order();
  const Field& f = d.datum.field();
  const HopfAlgebra& H = d.hopf;
  const char* tag = left ? "c" : "c-prime";
  Report r(left ? "condition-c" : "condition-c-prime");
  r.check(tag);
  for (std::size_t h = 0; h < H.dim(); ++h)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t a = 0; a < d.datum.dim(i, j); ++a)
            for (std::size_t b = 0; b < d.datum.dim(j, k); ++b) {
              Vec m = unit_vec(f, d.datum.dim(i, j), a), nn = unit_vec(f, d.datum.dim(j, k), b);
              Vec prod = d.datum.mult(i, j, k, m, nn);
              Vec lhs = left ? d.left_act(i, k, d.one_sharp(i, H.basis(h)), prod)
                             : d.right_act(i, k, prod, d.sharp_one(k, H.basis(h)));
              Vec rhs = zero_vec(f, d.datum.dim(i, k));
              for (const auto& t : H.delta(h)) {
                Vec x = left ? d.left_act(i, j, d.one_sharp(i, H.basis(t.left)), m)
                             : d.right_act(i, j, m, d.sharp_one(j, H.basis(t.left)));
                Vec y = left ? d.left_act(j, k, d.one_sharp(j, H.basis(t.right)), nn)
                             : d.right_act(j, k, nn, d.sharp_one(k, H.basis(t.right)));
                axpy(rhs, t.coeff, d.datum.mult(i, j, k, x, y));
              }
              r.expect(tag, lhs == rhs, {h, i, j, k, a, b});
            }
  return r;
}

}  // namespace

Report check_c(const BlockPartialData& d) { return multiplicativity(d, true); }
Report check_c_prime(const BlockPartialData& d) { return multiplicativity(d, false); }

Report check_block_data(const BlockPartialData& d) {
  check_shapes(d);
  const std::size_t n = d.order();
  const Field& f = d.datum.field();
  const HopfAlgebra& H = d.hopf;
  Report r("block-data");
  r.add_part(check_datum(d.datum));
  for (std::size_t i = 0; i < n; ++i) r.add_part(check_left_partial_action(d.diagonal[i]));
  for (auto tag : {"left-module-unital", "left-module-associative", "right-module-unital", "right-module-associative",
                   "b-compatibility", "b-diagonal", "b-left-scalar", "b-right-scalar"})
    r.check(tag);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dm = d.datum.dim(i, j);
      const Algebra& S = d.left_smash[i].algebra;
      const Algebra& T = d.right_smash[j].algebra;
      for (std::size_t m = 0; m < dm; ++m) {
        const Vec mv = unit_vec(f, dm, m);
        r.expect("left-module-unital", d.left_act(i, j, S.unit(), mv) == mv, {i, j, m});
        r.expect("right-module-unital", d.right_act(i, j, mv, T.unit()) == mv, {i, j, m});
        for (std::size_t s = 0; s < S.dim(); ++s)
          for (std::size_t t = 0; t < S.dim(); ++t)
            r.expect("left-module-associative",
                     d.left_act(i, j, S.basis_product(s, t), mv) == d.left_act(i, j, S.basis(s), d.left_act(i, j, S.basis(t), mv)),
                     {i, j, s, t, m});
        for (std::size_t s = 0; s < T.dim(); ++s)
          for (std::size_t t = 0; t < T.dim(); ++t)
            r.expect("right-module-associative",
                     d.right_act(i, j, mv, T.basis_product(s, t)) == d.right_act(i, j, d.right_act(i, j, mv, T.basis(s)), T.basis(t)),
                     {i, j, s, t, m});
        for (std::size_t h = 0; h < H.dim(); ++h)
          r.expect("b-compatibility",
                   d.left_act(i, j, d.one_sharp(i, H.basis(h)), mv) == d.right_act(i, j, mv, d.sharp_one(j, H.basis(h))),
                   {i, j, h, m});
        for (std::size_t a = 0; a < d.datum.dim(i, i); ++a) {
          const Vec rv = unit_vec(f, d.datum.dim(i, i), a);
          r.expect("b-left-scalar",
                   d.left_act(i, j, d.left_smash[i].sharp_of(rv, H.one()), mv) == d.datum.mult(i, i, j, rv, mv), {i, j, a, m});
        }
        for (std::size_t b = 0; b < d.datum.dim(j, j); ++b) {
          const Vec rv = unit_vec(f, d.datum.dim(j, j), b);
          r.expect("b-right-scalar",
                   d.right_act(i, j, mv, d.right_smash[j].sharp_of(rv, H.one())) == d.datum.mult(i, j, j, mv, rv), {i, j, b, m});
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t h = 0; h < H.dim(); ++h)
      for (std::size_t a = 0; a < d.datum.dim(i, i); ++a) {
        const Vec rv = unit_vec(f, d.datum.dim(i, i), a);
        r.expect("b-diagonal", d.left_act(i, i, d.one_sharp(i, H.basis(h)), rv) == d.diagonal[i].act_basis(h, rv),
                 {i, h, a});
      }
  r.add_part(check_c(d));
  return r;
}

BlockPartialData decompose(const BlockedAlgebra& r, const PartialAction& p) {
  BlockRestriction res = restrict_blocks(r, p);
  const std::size_t n = r.order();
  BlockPartialData d = make_block_data(r.datum, p.hopf(), res.diagonal);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dm = r.datum.dim(i, j);
      if (dm == 0) continue;
      const PartialRepresentation& pi = *res.pi[i * n + j];

      CovariantPair left{LinearMap{left_multiplications(r.datum, i, j)}, pi, PairKind::left};
      require(check_covariant_pair(left, d.diagonal[i]), "covariant-pair");
      d.left_module(i, j) = module_from_morphism(universal_morphism(left, d.left_smash[i]).map.matrix, dm, true);

      // gamma lives on K^cop for the right action's K = H^op
      const PartialAction& q = d.right_smash[j].action;
      PartialRepresentation gamma{variants(q.hopf(), Variant::cop), opposite(pi.target), pi.map};
      CovariantPair right{LinearMap{right_multiplications(r.datum, i, j)}, gamma, PairKind::opposite};
      require(check_covariant_pair(right, q), "opposite-covariant-pair");
      d.right_module(i, j) = module_from_morphism(universal_morphism(right, d.right_smash[j]).map.matrix, dm, false);
    }
  require(check_block_data(d), "block-data");
  return d;
}

PartialAction synthesize(const BlockPartialData& d) {
  require(check_block_data(d), "block-data");
  BlockedAlgebra r = assemble(d.datum);
  const std::size_t n = d.order();
  const HopfAlgebra& H = d.hopf;
  std::vector<Matrix> ops;
  for (std::size_t h = 0; h < H.dim(); ++h) {
    Matrix op(r.total.field(), r.total.dim(), r.total.dim());
    for (std::size_t i = 0; i < n; ++i) {
      const Vec s = d.one_sharp(i, H.basis(h));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < d.datum.dim(i, j); ++m)
          op.set_column(r.offset(i, j) + m,
                        block_embed(r, i, j, d.left_act(i, j, s, unit_vec(r.total.field(), d.datum.dim(i, j), m))));
    }
    ops.push_back(std::move(op));
  }
  PartialAction p = left_action_from_operators(H, r.total, ops);
  Report cert("synthesis");
  cert.add_part(check_left_partial_action(p));
  cert.expect("invariant", check_block_invariance(r, p).all(), {}, CheckKind::consequence);
  require(cert, "synthesis");
  return p;
}

Report check_rewrites(const BlockPartialData& d) {
  check_shapes(d);
  const std::size_t n = d.order();
  const Field& f = d.datum.field();
  const HopfAlgebra& H = d.hopf;
  Report r("rewrites");
  r.check("rewrite-left", CheckKind::consequence);
  r.check("rewrite-right", CheckKind::consequence);
  r.check("bimodule", CheckKind::informational);
  // ((k1 -> 1_i) # k2 h) in S_i
  auto twisted = [&](std::size_t i, std::size_t k, std::size_t h) {
    Vec s = d.left_smash[i].algebra.zero();
    for (const auto& t : H.delta(k))
      axpy(s, t.coeff, d.left_smash[i].sharp_of(d.diagonal[i].act_basis(t.left, d.diagonal[i].algebra().unit()),
                                                H.basis_product(t.right, h)));
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t k = 0; k < H.dim(); ++k)
          for (std::size_t m = 0; m < d.datum.dim(i, j); ++m) {
            const Vec mv = unit_vec(f, d.datum.dim(i, j), m);
            Vec first = d.right_act(i, j, d.left_act(i, j, d.one_sharp(i, H.basis(h)), mv), d.sharp_one(j, H.basis(k)));
            Vec second = d.left_act(i, j, d.one_sharp(i, H.basis(h)), d.right_act(i, j, mv, d.sharp_one(j, H.basis(k))));
            r.expect("rewrite-left", first == d.left_act(i, j, twisted(i, k, h), mv), {i, j, h, k, m},
                     CheckKind::consequence);
            r.expect("rewrite-right", second == d.left_act(i, j, twisted(i, h, k), mv), {i, j, h, k, m},
                     CheckKind::consequence);
            r.expect("bimodule", first == second, {i, j, h, k, m}, CheckKind::informational);
          }
  return r;
}

MoritaRingAction morita_ring_action(const PartialAction& p, const Vec& e) {
  const Algebra& A = p.algebra();
  const HopfAlgebra& H = p.hopf();
  if (p.side() != Side::left) throw DomainError("morita_ring_action: needs a left action");
  if (e.size() != A.dim()) throw ShapeError("morita_ring_action: idempotent length mismatch");
  if (A.multiply(e, e) != e) throw DomainError("morita_ring_action: e is not idempotent");
  Report pre("morita-ring");
  pre.add_part(check_left_partial_action(p));
  pre.check("fixed-idempotent");
  for (std::size_t h = 0; h < H.dim(); ++h)
    pre.expect("fixed-idempotent", p.act_basis(h, e) == scale(H.epsilon(H.basis(h)), e), {h});
  require(pre, "fixed-idempotent");

  IdempotentBlocks blocks = corner_datum(A, {A.unit(), e});
  BlockedAlgebra ring = assemble(blocks.datum);
  Report cert("morita-ring");
  cert.check("block-closure", CheckKind::consequence);
  std::vector<Matrix> ops;
  for (std::size_t h = 0; h < H.dim(); ++h) {
    Matrix op(A.field(), ring.total.dim(), ring.total.dim());
    for (std::size_t b = 0; b < ring.total.dim(); ++b) {
      const BlockPosition& pos = ring.block_of_basis[b];
      // h . (x e) = (h . x) e once h . e = epsilon(h) e, so the block is preserved
      auto c = blocks.blocks[pos.row * 2 + pos.col].coordinates(p.act_basis(h, blocks.to_algebra.column(b)));
      cert.expect("block-closure", c.has_value(), {h, b}, CheckKind::consequence);
      if (c) op.set_column(b, block_embed(ring, pos.row, pos.col, *c));
    }
    ops.push_back(std::move(op));
  }
  require(cert, "morita-ring");
  PartialAction action = left_action_from_operators(H, ring.total, ops);
  cert.add_part(check_left_partial_action(action));
  InvarianceTable inv = check_block_invariance(ring, action);
  cert.expect("invariant", inv.all(), {}, CheckKind::consequence);
  require(cert, "morita-ring");
  return MoritaRingAction{std::move(blocks), std::move(ring), std::move(action)};
}

}  // namespace pgma
