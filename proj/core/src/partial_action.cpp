#include "pgma/partial_action.hpp"

#include "pgma/error.hpp"

namespace pgma {

PartialAction::PartialAction(HopfAlgebra hopf, Algebra algebra, Side side, Matrix action)
    : hopf_(std::move(hopf)), algebra_(std::move(algebra)), side_(side), action_(std::move(action)) {
  const std::size_t nh = hopf_.dim(), na = algebra_.dim();
  if (action_.rows() != na || action_.cols() != nh * na) throw ShapeError("partial action: matrix must be dim A x dim H * dim A");
  if (!(hopf_.field() == algebra_.field())) throw FieldMismatch("partial action: Hopf algebra and algebra over different fields");
  ops_.reserve(nh);
  for (std::size_t h = 0; h < nh; ++h) {
    Matrix m(algebra_.field(), na, na);
    for (std::size_t a = 0; a < na; ++a)
      m.set_column(a, action_.column(side_ == Side::left ? h * na + a : a * nh + h));
    ops_.push_back(std::move(m));
  }
}

Vec PartialAction::act(const Vec& h, const Vec& a) const {
  Vec r = algebra_.zero();
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) axpy(r, h[i], ops_[i].apply(a));
  return r;
}

PartialAction left_action_from_operators(const HopfAlgebra& h, const Algebra& a, const std::vector<Matrix>& ops) {
  if (ops.size() != h.dim()) throw ShapeError("left action: one operator per basis element of H required");
  Matrix m(a.field(), a.dim(), h.dim() * a.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (ops[i].rows() != a.dim() || ops[i].cols() != a.dim()) throw ShapeError("left action: operator shape mismatch");
    for (std::size_t b = 0; b < a.dim(); ++b) m.set_column(i * a.dim() + b, ops[i].column(b));
  }
  return PartialAction(h, a, Side::left, std::move(m));
}

PartialAction trivial_left_action(const HopfAlgebra& h, const Algebra& a) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) m.at(b, b) = h.counit()[i];
    ops.push_back(std::move(m));
  }
  return left_action_from_operators(h, a, ops);
}

Report check_left_partial_action(const PartialAction& p, bool deep) {
  if (p.side() != Side::left) throw DomainError("check_left_partial_action: side mismatch");
  const HopfAlgebra& H = p.hopf();
  const Algebra& A = p.algebra();
  const std::size_t nh = H.dim(), na = A.dim();
  Report r("left-partial-action");
  r.check("LPA1");
  r.check("LPA2");
  r.check("LPA3-left");
  r.check("LPA3-right");

  for (std::size_t a = 0; a < na; ++a) r.expect("LPA1", p.act(H.one(), A.basis(a)) == A.basis(a), {a});

  // h_(1) . 1_A per Sweedler term, reused below
  const Vec one = A.unit();
  for (std::size_t h = 0; h < nh; ++h) {
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b) {
        Vec lhs = p.act_basis(h, A.basis_product(a, b));
        Vec rhs = A.zero();
        for (const auto& t : H.delta(h))
          axpy(rhs, t.coeff, A.multiply(p.act_basis(t.left, A.basis(a)), p.act_basis(t.right, A.basis(b))));
        r.expect("LPA2", lhs == rhs, {h, a, b});
      }
    for (std::size_t k = 0; k < nh; ++k)
      for (std::size_t a = 0; a < na; ++a) {
        Vec lhs = p.act_basis(h, p.act_basis(k, A.basis(a)));
        Vec left = A.zero(), right = A.zero();
        for (const auto& t : H.delta(h)) {
          axpy(left, t.coeff, A.multiply(p.act_basis(t.left, one), p.act(H.basis_product(t.right, k), A.basis(a))));
          axpy(right, t.coeff, A.multiply(p.act(H.basis_product(t.left, k), A.basis(a)), p.act_basis(t.right, one)));
        }
        r.expect("LPA3-left", lhs == left, {h, k, a});
        r.expect("LPA3-right", lhs == right, {h, k, a});
      }
  }
  if (!deep) return r;

  r.check("derived-left", CheckKind::consequence);
  r.check("derived-right", CheckKind::consequence);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t k = 0; k < nh; ++k)
      for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < na; ++b) {
          Vec l1 = A.zero(), r1 = A.zero(), l2 = A.zero(), r2 = A.zero();
          for (const auto& t : H.delta(h)) {
            Vec h1k_a = p.act(H.basis_product(t.left, k), A.basis(a));
            Vec h2k_b = p.act(H.basis_product(t.right, k), A.basis(b));
            Vec h2_b = p.act_basis(t.right, A.basis(b));
            Vec h1_a = p.act_basis(t.left, A.basis(a));
            axpy(l1, t.coeff, A.multiply(p.act_basis(t.left, p.act_basis(k, A.basis(a))), h2_b));
            axpy(r1, t.coeff, A.multiply(h1k_a, h2_b));
            axpy(l2, t.coeff, A.multiply(h1_a, p.act_basis(t.right, p.act_basis(k, A.basis(b)))));
            axpy(r2, t.coeff, A.multiply(h1_a, h2k_b));
          }
          r.expect("derived-left", l1 == r1, {h, k, a, b}, CheckKind::consequence);
          r.expect("derived-right", l2 == r2, {h, k, a, b}, CheckKind::consequence);
        }
  return r;
}

Report check_right_partial_action(const PartialAction& p) {
  if (p.side() != Side::right) throw DomainError("check_right_partial_action: side mismatch");
  const HopfAlgebra& H = p.hopf();
  const Algebra& A = p.algebra();
  const std::size_t nh = H.dim(), na = A.dim();
  Report r("right-partial-action");
  r.check("RPA1");
  r.check("RPA2");
  r.check("RPA3-left");
  r.check("RPA3-right");
  for (std::size_t a = 0; a < na; ++a) r.expect("RPA1", p.act(H.one(), A.basis(a)) == A.basis(a), {a});
  const Vec one = A.unit();
  for (std::size_t h = 0; h < nh; ++h) {
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b) {
        Vec lhs = p.act_basis(h, A.basis_product(a, b));
        Vec rhs = A.zero();
        for (const auto& t : H.delta(h))
          axpy(rhs, t.coeff, A.multiply(p.act_basis(t.left, A.basis(a)), p.act_basis(t.right, A.basis(b))));
        r.expect("RPA2", lhs == rhs, {a, b, h});
      }
    // (a . k) . h against (a . k h_(1))(1 . h_(2)) and (1 . h_(1))(a . k h_(2))
    for (std::size_t k = 0; k < nh; ++k)
      for (std::size_t a = 0; a < na; ++a) {
        Vec lhs = p.act_basis(h, p.act_basis(k, A.basis(a)));
        Vec left = A.zero(), right = A.zero();
        for (const auto& t : H.delta(h)) {
          axpy(left, t.coeff, A.multiply(p.act(H.basis_product(k, t.left), A.basis(a)), p.act_basis(t.right, one)));
          axpy(right, t.coeff, A.multiply(p.act_basis(t.left, one), p.act(H.basis_product(k, t.right), A.basis(a))));
        }
        r.expect("RPA3-left", lhs == left, {a, k, h});
        r.expect("RPA3-right", lhs == right, {a, k, h});
      }
  }
  return r;
}

Report check_partial_action(const PartialAction& p, bool deep) {
  return p.side() == Side::left ? check_left_partial_action(p, deep) : check_right_partial_action(p);
}

namespace {

Matrix swap_slots(const PartialAction& p) {
  const std::size_t nh = p.hopf().dim(), na = p.algebra().dim();
  Matrix m(p.algebra().field(), na, nh * na);
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t a = 0; a < na; ++a) {
      std::size_t from = p.side() == Side::left ? h * na + a : a * nh + h;
      std::size_t to = p.side() == Side::left ? a * nh + h : h * na + a;
      m.set_column(to, p.matrix().column(from));
    }
  return m;
}

}  // namespace

PartialAction to_right(const PartialAction& p) {
  require(check_left_partial_action(p), "left-action");
  return PartialAction(variants(p.hopf(), Variant::op), p.algebra(), Side::right, swap_slots(p));
}

PartialAction to_left(const PartialAction& p) {
  require(check_right_partial_action(p), "right-action");
  return PartialAction(variants(p.hopf(), Variant::op), p.algebra(), Side::left, swap_slots(p));
}

Report check_partial_representation(const PartialRepresentation& rep) {
  const HopfAlgebra& H = rep.hopf;
  const Algebra& B = rep.target;
  const std::size_t n = H.dim();
  if (rep.map.domain_dim() != n || rep.map.codomain_dim() != B.dim())
    throw ShapeError("check_partial_representation: map shape mismatch");
  if (!(H.field() == B.field())) throw FieldMismatch("check_partial_representation: fields differ");
  Report r("partial-representation");
  for (auto tag : {"PR1", "PR2", "PR3"}) r.check(tag);
  r.check("PR4", CheckKind::consequence);
  r.check("PR5", CheckKind::consequence);

  std::vector<Vec> pi, pis;
  for (std::size_t i = 0; i < n; ++i) {
    pi.push_back(rep.map.image(i));
    pis.push_back(rep(H.S(H.basis(i))));
  }
  auto mul = [&](const Vec& x, const Vec& y) { return B.multiply(x, y); };
  r.expect("PR1", rep(H.one()) == B.unit(), {});
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t k = 0; k < n; ++k) {
      Vec l2 = B.zero(), r2 = B.zero(), l3 = B.zero(), r3 = B.zero();
      Vec l4 = B.zero(), r4 = B.zero(), l5 = B.zero(), r5 = B.zero();
      for (const auto& t : H.delta(k)) {
        // PR2: pi(h) pi(k1) pi(S k2) = pi(h k1) pi(S k2)
        axpy(l2, t.coeff, mul(mul(pi[h], pi[t.left]), pis[t.right]));
        axpy(r2, t.coeff, mul(rep(H.basis_product(h, t.left)), pis[t.right]));
        // PR4: pi(h) pi(S k1) pi(k2) = pi(h S k1) pi(k2)
        axpy(l4, t.coeff, mul(mul(pi[h], pis[t.left]), pi[t.right]));
        axpy(r4, t.coeff, mul(rep(H.multiply(H.basis(h), H.S(H.basis(t.left)))), pi[t.right]));
      }
      for (const auto& t : H.delta(h)) {
        // PR3: pi(h1) pi(S h2) pi(k) = pi(h1) pi(S(h2) k)
        axpy(l3, t.coeff, mul(mul(pi[t.left], pis[t.right]), pi[k]));
        axpy(r3, t.coeff, mul(pi[t.left], rep(H.multiply(H.S(H.basis(t.right)), H.basis(k)))));
        // PR5: pi(S h1) pi(h2) pi(k) = pi(S h1) pi(h2 k)
        axpy(l5, t.coeff, mul(mul(pis[t.left], pi[t.right]), pi[k]));
        axpy(r5, t.coeff, mul(pis[t.left], rep(H.basis_product(t.right, k))));
      }
      r.expect("PR2", l2 == r2, {h, k});
      r.expect("PR3", l3 == r3, {h, k});
      r.expect("PR4", l4 == r4, {h, k}, CheckKind::consequence);
      r.expect("PR5", l5 == r5, {h, k}, CheckKind::consequence);
    }
  return r;
}

PartialRepresentation induced_representation(const PartialAction& p) {
  require(check_left_partial_action(p), "left-action");
  const std::size_t na = p.algebra().dim();
  const Field& f = p.algebra().field();
  Matrix m(f, na * na, p.hopf().dim());
  for (std::size_t h = 0; h < p.hopf().dim(); ++h) m.set_column(h, matrix_to_endomorphism(p.op(h)));
  return PartialRepresentation{p.hopf(), endomorphism_algebra(f, na), LinearMap{std::move(m)}};
}

PartialRepresentation opcop_representation(const PartialRepresentation& r) {
  return PartialRepresentation{variants(r.hopf, Variant::opcop), opposite(r.target), r.map};
}

UnitalPartialGroupAction UnitalPartialGroupAction::from_full(GroupTable group, Algebra algebra, std::vector<Vec> units,
                                                             const std::vector<Matrix>& full_maps) {
  const std::size_t n = group.order();
  if (units.size() != n || full_maps.size() != n) throw ShapeError("group action: one unit and one map per element");
  UnitalPartialGroupAction u{std::move(group), std::move(algebra), std::move(units), {}, {}};
  const Algebra& A = u.algebra;
  for (std::size_t g = 0; g < n; ++g) {
    if (u.units[g].size() != A.dim()) throw ShapeError("group action: unit length mismatch");
    std::vector<Vec> gens;
    for (std::size_t b = 0; b < A.dim(); ++b) gens.push_back(A.multiply(A.basis(b), u.units[g]));
    u.domains.push_back(Subspace::span(A.field(), A.dim(), gens));
  }
  for (std::size_t g = 0; g < n; ++g) {
    const Subspace& from = u.domains[u.group.inv(g)];
    const Subspace& to = u.domains[g];
    Matrix m(A.field(), to.dim(), from.dim());
    for (std::size_t c = 0; c < from.dim(); ++c) {
      auto coords = to.coordinates(full_maps[g].apply(from.basis()[c]));
      if (!coords) throw DomainError("group action: alpha_" + u.group.name(g) + " leaves D_" + u.group.name(g));
      m.set_column(c, *coords);
    }
    u.maps.push_back(std::move(m));
  }
  return u;
}

Vec UnitalPartialGroupAction::alpha(std::size_t g, const Vec& a) const {
  const std::size_t gi = group.inv(g);
  auto coords = domains[gi].coordinates(algebra.multiply(a, units[gi]));
  if (!coords) throw DomainError("alpha: a 1_{g^-1} outside D_{g^-1}");  // only if 1_{g^-1} is not idempotent
  return domains[g].from_coordinates(maps[g].apply(*coords));
}

Report check_group_action(const UnitalPartialGroupAction& u) {
  const GroupTable& G = u.group;
  const Algebra& A = u.algebra;
  const std::size_t n = G.order();
  if (u.units.size() != n || u.domains.size() != n || u.maps.size() != n) throw ShapeError("group action: size mismatch");
  Report r("partial-group-action");
  for (auto tag : {"unit-identity", "idempotent", "central", "domain", "alpha-identity", "alpha-bijective", "alpha-multiplicative",
                   "alpha-unital", "composition-domain", "composition"})
    r.check(tag);
  r.expect("unit-identity", u.units[0] == A.unit(), {0});
  bool shapes_ok = true;
  for (std::size_t g = 0; g < n; ++g) {
    const Vec& e = u.units[g];
    r.expect("idempotent", A.multiply(e, e) == e, {g});
    std::vector<Vec> gens;
    for (std::size_t b = 0; b < A.dim(); ++b) {
      r.expect("central", A.multiply(e, A.basis(b)) == A.multiply(A.basis(b), e), {g, b});
      gens.push_back(A.multiply(A.basis(b), e));
    }
    // D_g must be the ideal A 1_g, not just some subspace
    r.expect("domain", u.domains[g] == Subspace::span(A.field(), A.dim(), gens), {g});
    const Matrix& m = u.maps[g];
    bool shape = m.rows() == u.domains[g].dim() && m.cols() == u.domains[G.inv(g)].dim();
    shapes_ok = shapes_ok && shape;
    r.expect("alpha-bijective", shape && inverse(m).has_value(), {g});
  }
  if (!shapes_ok || !r.passed()) return r;
  r.expect("alpha-identity", u.maps[0].is_identity(), {0});
  for (std::size_t g = 0; g < n; ++g) {
    const Subspace& from = u.domains[G.inv(g)];
    for (std::size_t x = 0; x < from.dim(); ++x)
      for (std::size_t y = 0; y < from.dim(); ++y) {
        const Vec& bx = from.basis()[x];
        const Vec& by = from.basis()[y];
        r.expect("alpha-multiplicative", u.alpha(g, A.multiply(bx, by)) == A.multiply(u.alpha(g, bx), u.alpha(g, by)), {g, x, y});
      }
    r.expect("alpha-unital", u.alpha(g, u.units[G.inv(g)]) == u.units[g], {g});
  }
  // alpha_g alpha_h = alpha_gh on alpha_h^-1(D_h cap D_{g^-1})
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t hi = G.inv(h), gh = G.mul(g, h);
      Matrix inv_h = *inverse(u.maps[h]);
      const Subspace& dom = u.domains[hi];
      for (std::size_t x = 0; x < dom.dim(); ++x) {
        Vec y = A.multiply(u.alpha(h, dom.basis()[x]), u.units[G.inv(g)]);  // in D_h cap D_{g^-1}
        auto yc = u.domains[h].coordinates(y);
        Vec z = dom.from_coordinates(inv_h.apply(*yc));
        bool in_domain = u.domains[G.inv(gh)].contains(z);
        r.expect("composition-domain", in_domain, {g, h, x});
        if (in_domain) r.expect("composition", u.alpha(g, y) == u.alpha(gh, z), {g, h, x});
      }
    }
  return r;
}

PartialAction group_to_hopf(const UnitalPartialGroupAction& u) {
  require(check_group_action(u), "group-action");
  const Algebra& A = u.algebra;
  HopfAlgebra H = group_algebra(u.group, A.field());
  std::vector<Matrix> ops;
  for (std::size_t g = 0; g < u.group.order(); ++g) {
    Matrix m(A.field(), A.dim(), A.dim());
    for (std::size_t b = 0; b < A.dim(); ++b) m.set_column(b, u.alpha(g, A.basis(b)));
    ops.push_back(std::move(m));
  }
  return left_action_from_operators(H, A, ops);
}

UnitalPartialGroupAction hopf_to_group(const PartialAction& p) {
  if (!p.hopf().group()) throw DomainError("hopf_to_group: the Hopf algebra is not a group algebra");
  require(check_left_partial_action(p), "left-action");
  const GroupTable& G = *p.hopf().group();
  const Algebra& A = p.algebra();
  Report r("group-bridge");
  std::vector<Vec> units;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Vec e = p.act_basis(g, A.unit());
    r.expect("idempotent", A.multiply(e, e) == e, {g});
    for (std::size_t b = 0; b < A.dim(); ++b) r.expect("central", A.multiply(e, A.basis(b)) == A.multiply(A.basis(b), e), {g, b});
    units.push_back(std::move(e));
  }
  require(r, "group-bridge");
  auto u = UnitalPartialGroupAction::from_full(G, A, std::move(units), [&] {
    std::vector<Matrix> ops;
    for (std::size_t g = 0; g < G.order(); ++g) ops.push_back(p.op(g));
    return ops;
  }());
  require(check_group_action(u), "group-bridge");
  return u;
}

}  // namespace pgma
