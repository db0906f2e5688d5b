#include "pgma/hopf.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "pgma/error.hpp"

namespace pgma {

GroupTable::GroupTable(std::size_t order, std::vector<std::size_t> cayley, std::vector<std::string> names)
    : order_(order), cayley_(std::move(cayley)), names_(std::move(names)) {
  if (order_ == 0) throw DomainError("group: order must be at least 1");
  if (cayley_.size() != order_ * order_) throw DomainError("group: Cayley table has wrong size");
  for (auto v : cayley_)
    if (v >= order_) throw DomainError("group: Cayley entry out of range");
  for (std::size_t g = 0; g < order_; ++g)
    if (mul(0, g) != g || mul(g, 0) != g) throw DomainError("group: element 0 is not the identity");
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      for (std::size_t c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("group: Cayley table not associative");
  inverse_.assign(order_, order_);
  for (std::size_t g = 0; g < order_; ++g)
    for (std::size_t h = 0; h < order_; ++h)
      if (mul(g, h) == 0 && mul(h, g) == 0) inverse_[g] = h;
  for (auto v : inverse_)
    if (v == order_) throw DomainError("group: element without inverse");
  if (names_.empty()) {
    names_.push_back("e");
    for (std::size_t g = 1; g < order_; ++g) names_.push_back("g" + std::to_string(g));
  }
  if (names_.size() != order_) throw DomainError("group: name count does not match order");
}

GroupTable GroupTable::cyclic(std::size_t n) {
  std::vector<std::size_t> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  std::vector<std::string> names{"e"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "g" : "g" + std::to_string(k));
  return GroupTable(n, std::move(t), std::move(names));
}

GroupTable GroupTable::symmetric3() {
  // permutations of {0,1,2} in lexicographic order; identity first
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::size_t> t(36);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < 6; ++a) {
    names.push_back(a == 0 ? "e"
                           : "[" + std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                                 std::to_string(perms[a][2]) + "]");
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]];  // (ab)(k) = a(b(k))
      t[a * 6 + b] = index_of(c);
    }
  }
  return GroupTable(6, std::move(t), std::move(names));
}

GroupTable GroupTable::opposite() const {
  std::vector<std::size_t> t(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) t[a * order_ + b] = mul(b, a);
  return GroupTable(order_, std::move(t), names_);
}

HopfAlgebra::HopfAlgebra(Algebra alg, Matrix comult, Vec counit, Matrix antipode, Matrix antipode_inv,
                         std::optional<GroupTable> group)
    : alg_(std::move(alg)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      antipode_inv_(std::move(antipode_inv)),
      group_(std::move(group)) {
  const std::size_t n = alg_.dim();
  if (comult_.rows() != n * n || comult_.cols() != n) throw ShapeError("hopf: comultiplication must be dim^2 x dim");
  if (counit_.size() != n) throw ShapeError("hopf: counit length must be dim");
  if (antipode_.rows() != n || antipode_.cols() != n || antipode_inv_.rows() != n || antipode_inv_.cols() != n)
    throw ShapeError("hopf: antipode matrices must be dim x dim");
  if (group_ && group_->order() != n) throw ShapeError("hopf: group order does not match dim");
  sweedler_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n * n; ++t)
      if (!comult_.at(t, i).is_zero()) sweedler_[i].push_back({comult_.at(t, i), t / n, t % n});
}

Scalar HopfAlgebra::epsilon(const Vec& v) const {
  Scalar s = field().zero();
  for (std::size_t i = 0; i < v.size(); ++i) s.add_product(counit_[i], v[i]);
  return s;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// (a (x) b)(c (x) d) = ac (x) bd in H (x) H
Vec tensor_multiply(const HopfAlgebra& h, const Vec& x, const Vec& y) {
  const std::size_t n = h.dim();
  Vec r = zero_vec(h.field(), n * n);
  for (std::size_t s = 0; s < n * n; ++s) {
    if (x[s].is_zero()) continue;
    for (std::size_t t = 0; t < n * n; ++t) {
      if (y[t].is_zero()) continue;
      Vec l = h.basis_product(s / n, t / n);
      Vec rr = h.basis_product(s % n, t % n);
      axpy(r, x[s] * y[t], kron(l, rr));
    }
  }
  return r;
}

}  // namespace

Vec expand_leg(const HopfAlgebra& h, const Vec& t, std::size_t legs, std::size_t leg) {
  const std::size_t n = h.dim();
  if (t.size() != ipow(n, legs) || leg >= legs) throw ShapeError("expand_leg: bad tensor shape or leg");
  const std::size_t after = ipow(n, legs - leg - 1);
  Vec r = zero_vec(h.field(), t.size() * n);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx].is_zero()) continue;
    const std::size_t prefix = idx / (after * n);
    const std::size_t digit = (idx / after) % n;
    const std::size_t suffix = idx % after;
    for (const auto& term : h.delta(digit)) {
      std::size_t out = ((prefix * n + term.left) * n + term.right) * after + suffix;
      r[out].add_product(t[idx], term.coeff);
    }
  }
  return r;
}

Vec contract_leg(const HopfAlgebra& h, const Vec& t, std::size_t legs, std::size_t leg) {
  const std::size_t n = h.dim();
  if (legs == 0 || t.size() != ipow(n, legs) || leg >= legs) throw ShapeError("contract_leg: bad tensor shape or leg");
  const std::size_t after = ipow(n, legs - leg - 1);
  Vec r = zero_vec(h.field(), t.size() / n);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (t[idx].is_zero()) continue;
    const std::size_t prefix = idx / (after * n);
    const std::size_t digit = (idx / after) % n;
    const std::size_t suffix = idx % after;
    r[prefix * after + suffix].add_product(t[idx], h.counit()[digit]);
  }
  return r;
}

Vec iterated_coproduct(const HopfAlgebra& h, const Vec& v, std::size_t legs) {
  if (legs == 0) throw DomainError("iterated_coproduct: legs must be at least 1");
  if (v.size() != h.dim()) throw ShapeError("iterated_coproduct: vector length must be dim");
  Vec t = v;
  for (std::size_t k = 1; k < legs; ++k) t = expand_leg(h, t, k, k - 1);
  return t;
}

Report check_hopf(const HopfAlgebra& h) {
  Report r("hopf");
  r.add_part(check_algebra(h.algebra()));
  const std::size_t n = h.dim();
  const Field& f = h.field();
  for (std::size_t i = 0; i < n; ++i) {
    Vec d = h.coproduct(h.basis(i));
    r.expect("coassociativity", expand_leg(h, d, 2, 0) == expand_leg(h, d, 2, 1), {i});
    r.expect("left-counit", contract_leg(h, d, 2, 0) == h.basis(i), {i});
    r.expect("right-counit", contract_leg(h, d, 2, 1) == h.basis(i), {i});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = h.basis_product(i, j);
      Vec lhs = h.coproduct(ij);
      Vec rhs = tensor_multiply(h, h.coproduct(h.basis(i)), h.coproduct(h.basis(j)));
      r.expect("comult-multiplicative", lhs == rhs, {i, j});
      r.expect("counit-multiplicative", h.epsilon(ij) == h.counit()[i] * h.counit()[j], {i, j});
    }
  r.expect("comult-unital", h.coproduct(h.one()) == kron(h.one(), h.one()), {});
  r.expect("counit-unital", h.epsilon(h.one()).is_one(), {});
  for (std::size_t i = 0; i < n; ++i) {
    Vec left = zero_vec(f, n), right = zero_vec(f, n);
    for (const auto& t : h.delta(i)) {
      axpy(left, t.coeff, h.multiply(h.S(h.basis(t.left)), h.basis(t.right)));
      axpy(right, t.coeff, h.multiply(h.basis(t.left), h.S(h.basis(t.right))));
    }
    Vec expect = scale(h.counit()[i], h.one());
    r.expect("left-antipode", left == expect, {i});
    r.expect("right-antipode", right == expect, {i});
  }
  r.expect("antipode-inverse", (h.antipode() * h.antipode_inv()).is_identity(), {0});
  r.expect("antipode-inverse", (h.antipode_inv() * h.antipode()).is_identity(), {1});
  return r;
}

HopfAlgebra variants(const HopfAlgebra& h, Variant which) {
  const std::size_t n = h.dim();
  const bool flip_mult = which != Variant::cop;
  const bool flip_comult = which != Variant::op;
  Algebra alg = flip_mult ? opposite(h.algebra()) : h.algebra();
  Matrix comult = h.comult();
  if (flip_comult) {
    comult = Matrix(h.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) comult.at(k * n + j, i) = h.comult().at(j * n + k, i);
  }
  const bool keep_s = which == Variant::opcop;
  std::optional<GroupTable> g = h.group();
  if (g && flip_mult) g = g->opposite();
  return HopfAlgebra(std::move(alg), std::move(comult), h.counit(), keep_s ? h.antipode() : h.antipode_inv(),
                     keep_s ? h.antipode_inv() : h.antipode(), std::move(g));
}

HopfAlgebra group_algebra(const GroupTable& g, const Field& f) {
  const std::size_t n = g.order();
  std::vector<Scalar> mult(n * n * n, f.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mult[(a * n + b) * n + g.mul(a, b)] = f.one();
  Algebra alg(f, n, std::move(mult), unit_vec(f, n, 0), g.names());
  Matrix comult(f, n * n, n), s(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    comult.at(a * n + a, a) = f.one();
    s.at(g.inv(a), a) = f.one();
  }
  return HopfAlgebra(std::move(alg), std::move(comult), Vec(n, f.one()), s, s, g);
}

HopfAlgebra sweedler_h4(const Field& f) {
  if (f.characteristic() == 2) throw DomainError("sweedler_h4: characteristic 2 is not allowed");
  enum { one, g, x, gx };
  const std::size_t n = 4;
  std::vector<Scalar> mult(n * n * n, f.zero());
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) { mult[(i * n + j) * n + k] = f.from_int(c); };
  for (std::size_t i = 0; i < n; ++i) {
    set(one, i, i, 1);
    set(i, one, i, 1);
  }
  set(g, g, one, 1);
  set(g, x, gx, 1);
  set(g, gx, x, 1);
  set(x, g, gx, -1);
  set(gx, g, x, -1);
  Algebra alg(f, n, std::move(mult), unit_vec(f, n, one), {"1", "g", "x", "gx"});

  Matrix comult(f, n * n, n);
  auto co = [&](std::size_t i, std::size_t l, std::size_t r, long c) { comult.at(l * n + r, i) = f.from_int(c); };
  co(one, one, one, 1);
  co(g, g, g, 1);
  co(x, x, one, 1);
  co(x, g, x, 1);
  co(gx, gx, g, 1);
  co(gx, one, gx, 1);

  Matrix s(f, n, n), s_inv(f, n, n);
  s.at(one, one) = f.one();
  s.at(g, g) = f.one();
  s.at(gx, x) = f.from_int(-1);
  s.at(x, gx) = f.one();
  s_inv.at(one, one) = f.one();
  s_inv.at(g, g) = f.one();
  s_inv.at(gx, x) = f.one();
  s_inv.at(x, gx) = f.from_int(-1);
  Vec counit{f.one(), f.one(), f.zero(), f.zero()};
  return HopfAlgebra(std::move(alg), std::move(comult), std::move(counit), std::move(s), std::move(s_inv));
}

}  // namespace pgma
