#pragma once

#include <cstddef>
#include <vector>

#include "pgma/hopf.hpp"

namespace pgma {

enum class Side { left, right };

/// A linear map H (x) A -> A (left) or A (x) H -> A (right). Axioms are
/// validated by the checkers, never assumed.
///
/// Left matrices are dim A x (dim H * dim A) with column h * dim A + a.
/// Right matrices use column a * dim H + h.
class PartialAction {
 public:
  PartialAction() = default;
  PartialAction(HopfAlgebra hopf, Algebra algebra, Side side, Matrix action);

  const HopfAlgebra& hopf() const { return hopf_; }
  const Algebra& algebra() const { return algebra_; }
  Side side() const { return side_; }
  const Matrix& matrix() const { return action_; }

  /// The operator a -> e_h . a (left) or a -> a . e_h (right).
  const Matrix& op(std::size_t h) const { return ops_[h]; }
  /// h . a (left) or a . h (right) for arbitrary vectors.
  Vec act(const Vec& h, const Vec& a) const;
  Vec act_basis(std::size_t h, const Vec& a) const { return ops_[h].apply(a); }

  friend bool operator==(const PartialAction& a, const PartialAction& b) {
    return a.side_ == b.side_ && a.hopf_ == b.hopf_ && a.algebra_ == b.algebra_ && a.action_ == b.action_;
  }

 private:
  HopfAlgebra hopf_;
  Algebra algebra_;
  Side side_ = Side::left;
  Matrix action_;
  std::vector<Matrix> ops_;
};

/// Build a left action from one dim A x dim A operator per basis element of H.
PartialAction left_action_from_operators(const HopfAlgebra& h, const Algebra& a, const std::vector<Matrix>& ops);
/// h . a = epsilon(h) a.
PartialAction trivial_left_action(const HopfAlgebra& h, const Algebra& a);

/// LPA1, LPA2 and both equalities of LPA3 over all basis tuples. With deep,
/// also the derived product identities (derived-left, derived-right), which
/// are consequences: failing them while LPA1-3 pass flags a kernel bug.
/// Throws DomainError for a right action.
Report check_left_partial_action(const PartialAction& p, bool deep = false);

/// RPA1, RPA2 and both equalities of RPA3. Throws DomainError for a left action.
Report check_right_partial_action(const PartialAction& p);

/// Dispatches on side.
Report check_partial_action(const PartialAction& p, bool deep = false);

/// a <| h = h . a as a right action of H^op. Requires the left checker.
PartialAction to_right(const PartialAction& p);
/// Inverse of to_right: a right action of K becomes a left action of K^op.
PartialAction to_left(const PartialAction& p);

/// A linear map pi: H -> B (not assumed multiplicative).
struct PartialRepresentation {
  HopfAlgebra hopf;
  Algebra target;
  LinearMap map;

  Vec operator()(const Vec& h) const { return map.apply(h); }
};

/// PR1-PR3 as axioms, PR4-PR5 as consequences (separate tags).
Report check_partial_representation(const PartialRepresentation& r);

/// pi(h) = (a -> h . a) in End(A). Requires the left checker.
PartialRepresentation induced_representation(const PartialAction& p);

/// The same map viewed as H^opcop -> target^op.
PartialRepresentation opcop_representation(const PartialRepresentation& r);

/// A unital partial action of a group: D_g = A 1_g with central idempotents
/// 1_g and isomorphisms alpha_g: D_{g^-1} -> D_g. alpha_g is stored as a
/// dim D_g x dim D_{g^-1} matrix on the canonical echelon bases of the ideals.
struct UnitalPartialGroupAction {
  GroupTable group;
  Algebra algebra;
  std::vector<Vec> units;          // 1_g
  std::vector<Subspace> domains;   // D_g
  std::vector<Matrix> maps;        // alpha_g

  /// Restrict full dim A x dim A matrices to the ideals. Throws DomainError
  /// if some full_maps[g] does not send D_{g^-1} into D_g.
  static UnitalPartialGroupAction from_full(GroupTable group, Algebra algebra, std::vector<Vec> units,
                                            const std::vector<Matrix>& full_maps);

  /// alpha_g(a 1_{g^-1}) in A coordinates.
  Vec alpha(std::size_t g, const Vec& a) const;

  friend bool operator==(const UnitalPartialGroupAction& a, const UnitalPartialGroupAction& b) {
    return a.group == b.group && a.algebra == b.algebra && a.units == b.units && a.maps == b.maps;
  }
};

/// Central idempotents, 1_e = 1_A, alpha_e = id, bijective multiplicative
/// unital alpha_g, and the composition rule on its prescribed domain.
Report check_group_action(const UnitalPartialGroupAction& u);

/// g . a = alpha_g(a 1_{g^-1}) over k G. Requires check_group_action.
PartialAction group_to_hopf(const UnitalPartialGroupAction& u);

/// 1_g = g . 1_A, D_g = A 1_g, alpha_g = restriction of a -> g . a. Requires
/// a group-algebra Hopf algebra (DomainError otherwise) and throws
/// CheckFailed("group-bridge", ...) if some 1_g is not a central idempotent.
UnitalPartialGroupAction hopf_to_group(const PartialAction& p);

}  // namespace pgma
