#include "pgma/group_datum.hpp"

#include "pgma/error.hpp"

namespace pgma {

Subspace GroupDatum::domain(std::size_t g, std::size_t i, std::size_t j) const {
  return left_ideal_span(datum, i, j, alpha[i].domains[g]);
}

Vec GroupDatum::apply(std::size_t g, std::size_t i, std::size_t j, const Vec& m) const {
  auto c = domain(group.inv(g), i, j).coordinates(m);
  if (!c) throw DomainError("gamma: argument outside D_{g^-1} iMj");
  return domain(g, i, j).from_coordinates(gamma_at(g, i, j).apply(*c));
}

Vec GroupDatum::unit_of(const BlockedAlgebra& r, std::size_t g) const {
  Vec u = r.total.zero();
  for (std::size_t i = 0; i < order(); ++i) u = add(u, block_embed(r, i, i, alpha[i].units[g]));
  return u;
}

GroupDatum skeleton_datum(MatrixDatum datum, GroupTable group, std::vector<UnitalPartialGroupAction> alpha) {
  const std::size_t n = datum.order(), ng = group.order();
  if (alpha.size() != n) throw ShapeError("group datum: one alpha per diagonal block");
  GroupDatum d{std::move(datum), std::move(group), std::move(alpha), {}};
  d.gamma.resize(ng * n * n);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t rows = d.domain(g, i, j).dim(), cols = d.domain(d.group.inv(g), i, j).dim();
        if (i == j) d.gamma_at(g, i, j) = d.alpha[i].maps[g];
        else if (g == 0) d.gamma_at(g, i, j) = Matrix::identity(d.datum.field(), rows);
        else d.gamma_at(g, i, j) = Matrix(d.datum.field(), rows, cols);
      }
  return d;
}

namespace {

void check_shapes(const GroupDatum& d) {
  const std::size_t n = d.order(), ng = d.group.order();
  if (d.alpha.size() != n) throw ShapeError("group datum: one alpha per diagonal block");
  if (d.gamma.size() != ng * n * n) throw ShapeError("group datum: gamma count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(d.alpha[i].group == d.group)) throw ShapeError("group datum: alpha over a different group");
    if (!(d.alpha[i].algebra == d.datum.diagonal(i))) throw ShapeError("group datum: alpha not on R_i");
  }
}

}  // namespace

Report check_group_datum(const GroupDatum& d) {
  check_shapes(d);
  const std::size_t n = d.order(), ng = d.group.order();
  const GroupTable& G = d.group;
  const MatrixDatum& M = d.datum;
  const Field& f = M.field();
  Report r("group-datum");
  r.add_part(check_datum(M));
  for (const auto& a : d.alpha) r.add_part(check_group_action(a));
  if (!r.passed()) return r;

  for (auto tag : {"symmetric", "gamma-bijective", "gamma-diagonal", "gamma-identity", "gamma-multiplicative",
                   "domain-inclusion", "gamma-composition", "centrality", "unital-ideal"})
    r.check(tag);
  r.check("gamma-inverse", CheckKind::consequence);
  r.check("domain-identity", CheckKind::consequence);

  // D^(i)_g iMj for every (g, i, j), computed once
  std::vector<Subspace> dom(ng * n * n);
  auto D = [&](std::size_t g, std::size_t i, std::size_t j) -> const Subspace& { return dom[(g * n + i) * n + j]; };
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dom[(g * n + i) * n + j] = d.domain(g, i, j);

  std::vector<Matrix> inv(ng * n * n);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix& m = d.gamma_at(g, i, j);
        if (m.rows() != D(g, i, j).dim() || m.cols() != D(G.inv(g), i, j).dim())
          throw ShapeError("group datum: gamma shape does not match its domain and codomain");
        auto mi = inverse(m);
        r.expect("gamma-bijective", mi.has_value(), {g, i, j});
        if (mi) inv[(g * n + i) * n + j] = std::move(*mi);
      }

  // the standing hypothesis: D_g^(i) iMj = iMj D_g^(j)
  for (std::size_t g = 0; g < ng; ++g) {
    IdealFamily fam;
    for (std::size_t i = 0; i < n; ++i) fam.ideals.push_back(d.alpha[i].domains[g]);
    SymmetryTable st = check_symmetric(M, fam);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r.expect("symmetric", st.at(i, j), {g, i, j});
  }
  if (!r.passed()) return r;

  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < n; ++i) r.expect("gamma-diagonal", d.gamma_at(g, i, i) == d.alpha[i].maps[g], {g, i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.expect("gamma-identity", d.gamma_at(0, i, j).is_identity(), {i, j});

  for (std::size_t g = 0; g < ng; ++g) {
    const std::size_t gi = G.inv(g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          const auto& us = D(gi, i, k).basis();
          const auto& vs = D(gi, k, j).basis();
          for (std::size_t u = 0; u < us.size(); ++u)
            for (std::size_t v = 0; v < vs.size(); ++v) {
              Vec lhs = M.mult(i, k, j, d.apply(g, i, k, us[u]), d.apply(g, k, j, vs[v]));
              r.expect("gamma-multiplicative", lhs == d.apply(g, i, j, M.mult(i, k, j, us[u], vs[v])), {g, i, k, j, u, v});
            }
        }
  }

  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.expect("gamma-inverse", d.gamma_at(G.inv(g), i, j) == inv[(g * n + i) * n + j], {g, i, j},
                 CheckKind::consequence);

  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < ng; ++h) {
      const std::size_t gh = G.mul(g, h), ghi = G.inv(gh), hi = G.inv(h);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // preimage under gamma_h of D_{g^-1}M cap D_hM, through gamma_h^-1 on coordinates
          Subspace meet = D(G.inv(g), i, j).intersect(D(h, i, j));
          std::vector<Vec> pre;
          for (std::size_t y = 0; y < meet.dim(); ++y) {
            const Vec& yv = meet.basis()[y];
            Vec x = D(hi, i, j).from_coordinates(inv[(h * n + i) * n + j].apply(*D(h, i, j).coordinates(yv)));
            pre.push_back(x);
            const bool inside = D(ghi, i, j).contains(x);
            r.expect("domain-inclusion", inside, {g, h, i, j, y});
            if (inside) r.expect("gamma-composition", d.apply(g, i, j, yv) == d.apply(gh, i, j, x), {g, h, i, j, y});
          }
          Subspace preimage = Subspace::span(f, M.dim(i, j), pre);
          r.expect("domain-identity", preimage == D(ghi, i, j).intersect(D(hi, i, j)), {g, h, i, j},
                   CheckKind::consequence);
        }
    }

  BlockedAlgebra R = assemble(M);
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < M.dim(i, j); ++m) {
          const Vec mv = unit_vec(f, M.dim(i, j), m);
          r.expect("centrality", M.mult(i, i, j, d.alpha[i].units[g], mv) == M.mult(i, j, j, mv, d.alpha[j].units[g]),
                   {g, i, j, m});
        }
    IdealFamily fam;
    for (std::size_t i = 0; i < n; ++i) fam.ideals.push_back(d.alpha[i].domains[g]);
    const Vec one_g = d.unit_of(R, g);
    std::vector<Vec> gens;
    for (std::size_t b = 0; b < R.total.dim(); ++b) gens.push_back(R.total.multiply(R.total.basis(b), one_g));
    r.expect("unital-ideal", block_ideal(R, fam).ideal == Subspace::span(f, R.total.dim(), gens), {g});
  }
  return r;
}

Report check_a_prime(const BlockPartialData& b) {
  if (!b.hopf.group()) throw DomainError("(a)': needs a group algebra");
  const std::size_t n = b.order();
  const MatrixDatum& M = b.datum;
  Report r("a-prime");
  r.check("a-prime");
  for (std::size_t g = 0; g < b.hopf.dim(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec ui = b.diagonal[i].act_basis(g, b.diagonal[i].algebra().unit());
      for (std::size_t j = 0; j < n; ++j) {
        const Vec uj = b.diagonal[j].act_basis(g, b.diagonal[j].algebra().unit());
        for (std::size_t m = 0; m < M.dim(i, j); ++m) {
          const Vec mv = unit_vec(M.field(), M.dim(i, j), m);
          r.expect("a-prime", M.mult(i, i, j, ui, mv) == M.mult(i, j, j, mv, uj), {g, i, j, m});
        }
      }
    }
  return r;
}

BlockPartialData datum_to_theorem_data(const GroupDatum& d) {
  require(check_group_datum(d), "group-datum");
  const std::size_t n = d.order(), ng = d.group.order();
  const MatrixDatum& M = d.datum;
  const Field& f = M.field();
  std::vector<PartialAction> diagonal;
  for (const auto& a : d.alpha) diagonal.push_back(group_to_hopf(a));
  BlockPartialData b = make_block_data(M, group_algebra(d.group, f), std::move(diagonal));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dm = M.dim(i, j);
      if (dm == 0) continue;
      // smash elements only have components a (x) g with a in D_g, where (a d_g) . m = a gamma_g(1_{g^-1} m)
      const SmashAlgebra& s = b.left_smash[i];
      const std::size_t ni = M.dim(i, i);
      Matrix& lm = b.left_module(i, j);
      for (std::size_t x = 0; x < s.dim(); ++x) {
        const Vec amb = s.to_ambient(unit_vec(f, s.dim(), x));
        for (std::size_t m = 0; m < dm; ++m) {
          const Vec mv = unit_vec(f, dm, m);
          Vec out = zero_vec(f, dm);
          for (std::size_t c = 0; c < amb.size(); ++c) {
            if (amb[c].is_zero()) continue;
            const std::size_t a = c / ng, g = c % ng;
            Vec moved = d.apply(g, i, j, M.mult(i, i, j, d.alpha[i].units[d.group.inv(g)], mv));
            axpy(out, amb[c], M.mult(i, i, j, unit_vec(f, ni, a), moved));
          }
          lm.set_column(x * dm + m, out);
        }
      }
      // right: m . (g # a) = gamma_g(m 1_{g^-1}) a on ambient index g * dim(R_j) + a
      const SmashAlgebra& t = b.right_smash[j];
      const std::size_t nj = M.dim(j, j);
      Matrix& rm = b.right_module(i, j);
      for (std::size_t x = 0; x < t.dim(); ++x) {
        const Vec amb = t.to_ambient(unit_vec(f, t.dim(), x));
        for (std::size_t m = 0; m < dm; ++m) {
          const Vec mv = unit_vec(f, dm, m);
          Vec out = zero_vec(f, dm);
          for (std::size_t c = 0; c < amb.size(); ++c) {
            if (amb[c].is_zero()) continue;
            const std::size_t g = c / nj, a = c % nj;
            Vec moved = d.apply(g, i, j, M.mult(i, j, j, mv, d.alpha[j].units[d.group.inv(g)]));
            axpy(out, amb[c], M.mult(i, j, j, moved, unit_vec(f, nj, a)));
          }
          rm.set_column(m * t.dim() + x, out);
        }
      }
    }

  Report cert("theorem-data");
  cert.add_part(check_a_prime(b));
  cert.add_part(check_block_data(b));
  require(cert, "theorem-data");
  return b;
}

GroupDatum theorem_data_to_datum(const BlockPartialData& b) {
  if (!b.hopf.group()) throw DomainError("theorem_data_to_datum: needs a group algebra");
  require(check_a_prime(b), "a-prime");
  require(check_block_data(b), "block-data");
  const std::size_t n = b.order();
  const GroupTable& G = *b.hopf.group();
  std::vector<UnitalPartialGroupAction> alpha;
  for (const auto& p : b.diagonal) alpha.push_back(hopf_to_group(p));
  GroupDatum d = skeleton_datum(b.datum, G, std::move(alpha));

  Report cert("group-datum");
  cert.check("gamma-image", CheckKind::consequence);
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < n; ++i) {
      // 1_i # g = 1_g # g, so this is (1_g d_g) . x
      const Vec s = b.one_sharp(i, b.hopf.basis(g));
      for (std::size_t j = 0; j < n; ++j) {
        const Subspace from = d.domain(G.inv(g), i, j), to = d.domain(g, i, j);
        Matrix& m = d.gamma_at(g, i, j);
        for (std::size_t x = 0; x < from.dim(); ++x) {
          auto c = to.coordinates(b.left_act(i, j, s, from.basis()[x]));
          cert.expect("gamma-image", c.has_value(), {g, i, j, x}, CheckKind::consequence);
          if (c) m.set_column(x, *c);
        }
      }
    }
  require(cert, "group-datum");
  require(check_group_datum(d), "group-datum");
  return d;
}

Report group_roundtrip(const GroupDatum& d) {
  GroupDatum back = theorem_data_to_datum(datum_to_theorem_data(d));
  const std::size_t n = d.order();
  Report r("group-roundtrip");
  r.check("alpha-fixed-point", CheckKind::consequence);
  r.check("gamma-fixed-point", CheckKind::consequence);
  for (std::size_t i = 0; i < n; ++i) r.expect("alpha-fixed-point", back.alpha[i] == d.alpha[i], {i}, CheckKind::consequence);
  for (std::size_t g = 0; g < d.group.order(); ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        r.expect("gamma-fixed-point", back.gamma_at(g, i, j) == d.gamma_at(g, i, j), {g, i, j},
                 CheckKind::consequence);
  return r;
}

Report group_roundtrip(const BlockPartialData& b) {
  BlockPartialData back = datum_to_theorem_data(theorem_data_to_datum(b));
  const std::size_t n = b.order();
  Report r("group-roundtrip");
  for (auto tag : {"diagonal-fixed-point", "left-module-fixed-point", "right-module-fixed-point"})
    r.check(tag, CheckKind::consequence);
  for (std::size_t i = 0; i < n; ++i)
    r.expect("diagonal-fixed-point", back.diagonal[i] == b.diagonal[i], {i}, CheckKind::consequence);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.expect("left-module-fixed-point", back.left_module(i, j) == b.left_module(i, j), {i, j},
               CheckKind::consequence);
      r.expect("right-module-fixed-point", back.right_module(i, j) == b.right_module(i, j), {i, j},
               CheckKind::consequence);
    }
  return r;
}

}  // namespace pgma
