#include "pgma/smash.hpp"

#include "pgma/error.hpp"

namespace pgma {

Vec SmashAlgebra::ambient_product(const Vec& x, const Vec& y) const {
  const HopfAlgebra& H = action.hopf();
  const Algebra& A = action.algebra();
  const std::size_t nh = H.dim(), na = A.dim();
  if (x.size() != ambient_dim || y.size() != ambient_dim) throw ShapeError("smash: ambient length mismatch");
  Vec r = zero_vec(A.field(), ambient_dim);
  for (std::size_t p = 0; p < ambient_dim; ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < ambient_dim; ++q) {
      if (y[q].is_zero()) continue;
      const Scalar c = x[p] * y[q];
      if (side == Side::left) {
        const std::size_t a = p / nh, h = p % nh, b = q / nh, k = q % nh;
        for (const auto& t : H.delta(h)) {
          Vec left = A.multiply(A.basis(a), action.act_basis(t.left, A.basis(b)));
          axpy(r, c * t.coeff, kron(left, H.basis_product(t.right, k)));
        }
      } else {
        const std::size_t k = p / na, b = p % na, h = q / na, a = q % na;
        for (const auto& t : H.delta(h)) {
          Vec right = A.multiply(action.act_basis(t.right, A.basis(b)), A.basis(a));
          axpy(r, c * t.coeff, kron(H.basis_product(k, t.left), right));
        }
      }
    }
  }
  return r;
}

Vec SmashAlgebra::sharp_of(const Vec& a, const Vec& h) const {
  return sharp.apply(side == Side::left ? kron(a, h) : kron(h, a));
}

namespace {

SmashAlgebra build_smash(const PartialAction& p) {
  const HopfAlgebra& H = p.hopf();
  const Algebra& A = p.algebra();
  const Field& f = A.field();
  const std::size_t nh = H.dim(), na = A.dim();
  SmashAlgebra s;
  s.side = p.side();
  s.action = p;
  s.ambient_dim = na * nh;
  const Vec one = s.side == Side::left ? kron(A.unit(), H.one()) : kron(H.one(), A.unit());

  s.projector = Matrix(f, s.ambient_dim, s.ambient_dim);
  for (std::size_t j = 0; j < s.ambient_dim; ++j) {
    Vec e = unit_vec(f, s.ambient_dim, j);
    s.projector.set_column(j, s.side == Side::left ? s.ambient_product(e, one) : s.ambient_product(one, e));
  }
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < s.ambient_dim; ++j) gens.push_back(s.projector.column(j));
  s.image = Subspace::span(f, s.ambient_dim, gens);

  Report r("smash");
  r.expect("projector-idempotent", s.projector * s.projector == s.projector, {}, CheckKind::consequence);
  const std::size_t d = s.image.dim();
  std::vector<Scalar> c(d * d * d, f.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = s.image.coordinates(s.ambient_product(s.image.basis()[i], s.image.basis()[j]));
      r.expect("closure", coords.has_value(), {i, j}, CheckKind::consequence);
      if (coords)
        for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = (*coords)[k];
    }
  require(r, "smash");

  s.sharp = Matrix(f, d, s.ambient_dim);
  for (std::size_t j = 0; j < s.ambient_dim; ++j) s.sharp.set_column(j, *s.image.coordinates(gens[j]));

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t piv = s.image.pivots()[i];
    labels.push_back(s.side == Side::left ? A.labels()[piv / nh] + "#" + H.algebra().labels()[piv % nh]
                                          : H.algebra().labels()[piv / na] + "#" + A.labels()[piv % na]);
  }
  Vec unit = *s.image.coordinates(s.projector.apply(one));
  s.algebra = Algebra(f, d, std::move(c), std::move(unit), std::move(labels));
  Report alg = check_algebra(s.algebra);
  r.add_part(alg);
  require(r, "smash");
  return s;
}

}  // namespace

SmashAlgebra left_smash(const PartialAction& p) {
  require(check_left_partial_action(p), "left-action");
  return build_smash(p);
}

SmashAlgebra right_smash(const PartialAction& p) {
  require(check_right_partial_action(p), "right-action");
  return build_smash(p);
}

Report check_covariant_pair(const CovariantPair& c, const PartialAction& action) {
  const Algebra& A = action.algebra();
  const Algebra& B = c.pi.target;
  const HopfAlgebra& H = c.pi.hopf;
  if ((c.kind == PairKind::left) != (action.side() == Side::left))
    throw DomainError("check_covariant_pair: pair kind does not match action side");
  if (c.psi.domain_dim() != A.dim() || c.psi.codomain_dim() != B.dim() || H.dim() != action.hopf().dim())
    throw ShapeError("check_covariant_pair: shape mismatch");
  Report r(c.kind == PairKind::left ? "covariant-pair" : "opposite-covariant-pair");
  r.add_part(check_algebra_morphism(c.psi, A, B));
  r.add_part(check_partial_representation(c.pi));

  const std::size_t nh = H.dim();
  std::vector<Vec> pi, pis, psi;
  for (std::size_t h = 0; h < nh; ++h) {
    pi.push_back(c.pi.map.image(h));
    // S for the left kind, S^-1 for the opposite kind
    pis.push_back(c.pi(c.kind == PairKind::left ? H.S(H.basis(h)) : H.S_inv(H.basis(h))));
  }
  for (std::size_t a = 0; a < A.dim(); ++a) psi.push_back(c.psi.image(a));
  auto mul = [&](const Vec& x, const Vec& y) { return B.multiply(x, y); };

  const char* t1 = c.kind == PairKind::left ? "CP1" : "OCP1";
  const char* t2 = c.kind == PairKind::left ? "CP2" : "OCP2";
  r.check(t1);
  r.check(t2);
  for (std::size_t h = 0; h < nh; ++h) {
    // left: pi(S h1) pi(h2); opposite: gamma(h[2]) gamma(S^-1 h[1])
    Vec corner = B.zero();
    for (const auto& t : H.delta(h))
      axpy(corner, t.coeff, c.kind == PairKind::left ? mul(pis[t.left], pi[t.right]) : mul(pi[t.right], pis[t.left]));
    for (std::size_t a = 0; a < A.dim(); ++a) {
      Vec lhs = c.psi.apply(action.act_basis(h, A.basis(a)));
      Vec rhs = B.zero();
      for (const auto& t : H.delta(h)) {
        if (c.kind == PairKind::left)
          axpy(rhs, t.coeff, mul(mul(pi[t.left], psi[a]), pis[t.right]));
        else
          axpy(rhs, t.coeff, mul(mul(pis[t.right], psi[a]), pi[t.left]));
      }
      r.expect(t1, lhs == rhs, {h, a});
      r.expect(t2, mul(psi[a], corner) == mul(corner, psi[a]), {h, a});
    }
  }
  return r;
}

CovariantPair canonical_pair(const SmashAlgebra& s) {
  const HopfAlgebra& H = s.action.hopf();
  const Algebra& A = s.action.algebra();
  const Field& f = A.field();
  Matrix psi(f, s.dim(), A.dim()), pi(f, s.dim(), H.dim());
  for (std::size_t a = 0; a < A.dim(); ++a) psi.set_column(a, s.sharp_of(A.basis(a), H.one()));
  for (std::size_t h = 0; h < H.dim(); ++h) pi.set_column(h, s.sharp_of(A.unit(), H.basis(h)));
  if (s.side == Side::left)
    return CovariantPair{LinearMap{psi}, PartialRepresentation{H, s.algebra, LinearMap{pi}}, PairKind::left};
  return CovariantPair{LinearMap{psi}, PartialRepresentation{variants(H, Variant::cop), s.algebra, LinearMap{pi}},
                       PairKind::opposite};
}

std::optional<Matrix> solve_on_generators(const Matrix& generators, const Matrix& images) {
  if (generators.cols() != images.cols()) throw ShapeError("solve_on_generators: column count mismatch");
  Matrix gt = generators.transpose();
  Matrix x(images.field(), images.rows(), generators.rows());
  for (std::size_t r = 0; r < images.rows(); ++r) {
    auto row = solve_linear(gt, images.row(r));
    if (!row) return std::nullopt;
    for (std::size_t c = 0; c < generators.rows(); ++c) x.at(r, c) = (*row)[c];
  }
  return x;
}

UniversalMorphism universal_morphism(const CovariantPair& c, const SmashAlgebra& s) {
  const HopfAlgebra& H = s.action.hopf();
  const Algebra& A = s.action.algebra();
  const Algebra& B = c.pi.target;
  const Field& f = A.field();
  const std::size_t na = A.dim(), nh = H.dim();
  if ((c.kind == PairKind::left) != (s.side == Side::left))
    throw DomainError("universal_morphism: pair kind does not match smash side");

  // image of generator (a, h) in the generator order of the ambient space
  auto pair_index = [&](std::size_t a, std::size_t h) { return s.side == Side::left ? a * nh + h : h * na + a; };
  auto image_of = [&](std::size_t a, std::size_t h) {
    return s.side == Side::left ? B.multiply(c.psi.image(a), c.pi.map.image(h))
                                : B.multiply(c.pi.map.image(h), c.psi.image(a));
  };
  Matrix images(f, B.dim(), na * nh);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) images.set_column(pair_index(a, h), image_of(a, h));

  Report r("universal-morphism");
  auto phi = solve_on_generators(s.sharp, images);
  r.expect("well-defined", phi.has_value(), {});
  if (!phi) throw CheckFailed("universal-morphism", r);

  UniversalMorphism out{LinearMap{*phi}, Report("universal-morphism")};
  Report& cert = out.certificate;
  cert.expect("well-defined", true, {});
  cert.add_part(check_algebra_morphism(out.map, s.algebra, B));

  CovariantPair canon = canonical_pair(s);
  cert.expect("factor-algebra-map", *phi * canon.psi.matrix == c.psi.matrix, {});
  cert.expect("factor-representation", *phi * canon.pi.map.matrix == c.pi.map.matrix, {});

  // any morphism with both factorizations is fixed on the products
  // phi0(a) pi0(h) (resp. gamma0(h) phi0(a)); re-derive it from those alone
  Matrix products(f, s.dim(), na * nh);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t h = 0; h < nh; ++h) {
      Vec x = canon.psi.image(a), y = canon.pi.map.image(h);
      products.set_column(pair_index(a, h), s.side == Side::left ? s.algebra.multiply(x, y) : s.algebra.multiply(y, x));
    }
  cert.expect("generators-span", rank(products) == s.dim(), {}, CheckKind::consequence);
  auto again = solve_on_generators(products, images);
  cert.expect("uniqueness", again.has_value() && *again == *phi, {}, CheckKind::consequence);
  return out;
}

Vec CrossedProduct::element(std::size_t g, const Vec& b) const {
  auto coords = action.domains[g].coordinates(b);
  if (!coords) throw DomainError("crossed product: element outside D_g");
  Vec x = algebra.zero();
  for (std::size_t i = 0; i < coords->size(); ++i) x[offsets[g] + i] = (*coords)[i];
  return x;
}

CrossedProduct crossed_product(const UnitalPartialGroupAction& u) {
  require(check_group_action(u), "group-action");
  const GroupTable& G = u.group;
  const Algebra& A = u.algebra;
  const Field& f = A.field();
  CrossedProduct cp;
  cp.action = u;
  std::size_t total = 0;
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < G.order(); ++g) {
    cp.offsets.push_back(total);
    for (std::size_t i = 0; i < u.domains[g].dim(); ++i) {
      basis.emplace_back(g, i);
      labels.push_back(A.labels()[u.domains[g].pivots()[i]] + "d_" + G.name(g));
    }
    total += u.domains[g].dim();
  }
  std::vector<Scalar> c(total * total * total, f.zero());
  Report r("crossed-product");
  for (std::size_t p = 0; p < total; ++p)
    for (std::size_t q = 0; q < total; ++q) {
      auto [g, i] = basis[p];
      auto [h, j] = basis[q];
      const std::size_t gh = G.mul(g, h);
      Vec v = A.multiply(u.domains[g].basis()[i], u.alpha(g, u.domains[h].basis()[j]));
      auto coords = u.domains[gh].coordinates(v);
      r.expect("closure", coords.has_value(), {p, q}, CheckKind::consequence);
      if (coords)
        for (std::size_t k = 0; k < coords->size(); ++k) c[(p * total + q) * total + cp.offsets[gh] + k] = (*coords)[k];
    }
  require(r, "crossed-product");
  Vec unit = zero_vec(f, total);
  auto one = u.domains[0].coordinates(A.unit());
  for (std::size_t k = 0; k < one->size(); ++k) unit[cp.offsets[0] + k] = (*one)[k];
  cp.algebra = Algebra(f, total, std::move(c), std::move(unit), std::move(labels));
  r.add_part(check_algebra(cp.algebra));
  require(r, "crossed-product");
  return cp;
}

IsoCertificate crossed_iso(const UnitalPartialGroupAction& u, CrossedIso which) {
  const Algebra& A = u.algebra;
  const GroupTable& G = u.group;
  const Field& f = A.field();
  const std::size_t na = A.dim(), ng = G.order();
  PartialAction left = group_to_hopf(u);

  SmashAlgebra s;
  CrossedProduct cp;
  Algebra codomain;
  if (which == CrossedIso::eta) {
    s = left_smash(left);
    cp = crossed_product(u);
    codomain = cp.algebra;
  } else {
    s = right_smash(to_right(left));
    UnitalPartialGroupAction uop = u;
    uop.algebra = opposite(A);
    cp = crossed_product(uop);
    codomain = opposite(cp.algebra);
  }
  Report r(which == CrossedIso::eta ? "eta" : "lambda");

  // a#g (resp. g#a) -> a 1_g delta_g
  Matrix images(f, codomain.dim(), na * ng);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t g = 0; g < ng; ++g) {
      std::size_t col = which == CrossedIso::eta ? a * ng + g : g * na + a;
      images.set_column(col, cp.element(g, A.multiply(A.basis(a), u.units[g])));
    }
  auto fwd = solve_on_generators(s.sharp, images);
  r.expect("well-defined", fwd.has_value(), {}, CheckKind::consequence);
  if (!fwd) throw CheckFailed(which == CrossedIso::eta ? "eta" : "lambda", r);

  // b delta_g -> b#g (resp. g#b)
  Matrix inv(f, s.dim(), codomain.dim());
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t i = 0; i < u.domains[g].dim(); ++i)
      inv.set_column(cp.offsets[g] + i, s.sharp_of(u.domains[g].basis()[i], unit_vec(f, ng, g)));

  const bool square = s.dim() == codomain.dim();
  r.expect("bijective", square && (*fwd * inv).is_identity() && (inv * *fwd).is_identity(), {}, CheckKind::consequence);
  Report fwd_morph = check_algebra_morphism(LinearMap{*fwd}, s.algebra, codomain);
  for (const auto& c : fwd_morph.checks()) r.expect(c.tag, c.passed(), {}, CheckKind::consequence);
  return IsoCertificate{s.algebra, codomain, *fwd, inv, std::move(r)};
}

}  // namespace pgma
