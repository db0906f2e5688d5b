#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgma/algebra.hpp"

namespace pgma {

/// A finite group by its Cayley table. Element 0 is the identity.
class GroupTable {
 public:
  GroupTable() = default;
  /// cayley[g * order + h] = gh. Throws DomainError unless the table is a
  /// group with identity 0.
  GroupTable(std::size_t order, std::vector<std::size_t> cayley, std::vector<std::string> names = {});

  static GroupTable cyclic(std::size_t n);
  static GroupTable symmetric3();
  static GroupTable trivial() { return cyclic(1); }

  std::size_t order() const { return order_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return cayley_[g * order_ + h]; }
  std::size_t inv(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::size_t>& cayley() const { return cayley_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t g) const { return names_[g]; }

  /// The same set with g *op h = h g.
  GroupTable opposite() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.cayley_ == b.cayley_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<std::size_t> cayley_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
};

/// One term c * e_left (x) e_right of a coproduct.
struct SweedlerTerm {
  Scalar coeff;
  std::size_t left;
  std::size_t right;
};

/// A finite-dimensional Hopf algebra. comult is dim^2 x dim with Delta(e_i)
/// in column i (tensor index j * dim + k). The antipode inverse is stored
/// and validated by check_hopf rather than recomputed.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(Algebra alg, Matrix comult, Vec counit, Matrix antipode, Matrix antipode_inv,
              std::optional<GroupTable> group = std::nullopt);

  const Algebra& algebra() const { return alg_; }
  const Field& field() const { return alg_.field(); }
  std::size_t dim() const { return alg_.dim(); }
  const Matrix& comult() const { return comult_; }
  const Vec& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }
  const Matrix& antipode_inv() const { return antipode_inv_; }
  /// Present iff this is k G for the given group, basis indexed by G.
  const std::optional<GroupTable>& group() const { return group_; }

  Vec one() const { return alg_.unit(); }
  Vec basis(std::size_t i) const { return alg_.basis(i); }
  Vec multiply(const Vec& x, const Vec& y) const { return alg_.multiply(x, y); }
  Vec basis_product(std::size_t i, std::size_t j) const { return alg_.basis_product(i, j); }
  /// Nonzero terms of Delta(e_i).
  const std::vector<SweedlerTerm>& delta(std::size_t i) const { return sweedler_[i]; }
  Vec coproduct(const Vec& v) const { return comult_.apply(v); }
  Scalar epsilon(const Vec& v) const;
  Vec S(const Vec& v) const { return antipode_.apply(v); }
  Vec S_inv(const Vec& v) const { return antipode_inv_.apply(v); }

  friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
    return a.alg_ == b.alg_ && a.comult_ == b.comult_ && a.counit_ == b.counit_ &&
           a.antipode_ == b.antipode_ && a.antipode_inv_ == b.antipode_inv_;
  }

 private:
  Algebra alg_;
  Matrix comult_;
  Vec counit_;
  Matrix antipode_;
  Matrix antipode_inv_;
  std::optional<GroupTable> group_;
  std::vector<std::vector<SweedlerTerm>> sweedler_;
};

/// Coassociativity, counit laws, bialgebra compatibility, antipode laws and
/// S S^-1 = S^-1 S = id, each under its own tag. Includes the algebra axioms.
Report check_hopf(const HopfAlgebra& h);

enum class Variant { op, cop, opcop };

/// H^op, H^cop or H^opcop. op and cop take S^-1 as antipode, opcop keeps S.
HopfAlgebra variants(const HopfAlgebra& h, Variant which);

HopfAlgebra group_algebra(const GroupTable& g, const Field& f);

/// Basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x(x)1 + g(x)x.
/// Throws DomainError in characteristic 2.
HopfAlgebra sweedler_h4(const Field& f);

/// h_(1) (x) ... (x) h_(n) in H^{(x)n}, expanding the last leg at each step.
/// Throws DomainError for legs = 0.
Vec iterated_coproduct(const HopfAlgebra& h, const Vec& v, std::size_t legs);

/// Apply Delta to leg `leg` of a tensor in H^{(x)n}, giving H^{(x)(n+1)}.
Vec expand_leg(const HopfAlgebra& h, const Vec& t, std::size_t legs, std::size_t leg);
/// Apply epsilon to leg `leg` of a tensor in H^{(x)n}.
Vec contract_leg(const HopfAlgebra& h, const Vec& t, std::size_t legs, std::size_t leg);

}  // namespace pgma
