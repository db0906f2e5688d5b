#pragma once

#include <cstddef>
#include <vector>

#include "pgma/partial_action.hpp"

namespace pgma {

/// A partial smash product realized inside the ambient tensor space.
///
/// Left: ambient A (x) H (index a * dim H + h) with
///   (a (x) h)(b (x) k) = a(h_(1) . b) (x) h_(2) k,  a#h = (a (x) h)(1 (x) 1).
/// Right: ambient H (x) A (index h * dim A + a) over the action's Hopf algebra K with
///   (k (x) b)(h (x) a) = k h_(1) (x) (b . h_(2)) a,  h#a = (1 (x) 1)(h (x) a).
/// The smash subspace carries the canonical echelon basis; `algebra` is the
/// induced product on it and `sharp` sends a generator pair to coordinates.
struct SmashAlgebra {
  Side side = Side::left;
  PartialAction action;
  std::size_t ambient_dim = 0;
  Matrix projector;  // ambient x ambient, image = the smash subspace
  Subspace image;
  Algebra algebra;
  Matrix sharp;  // dim x ambient; column = coordinates of a#h (left) or h#a (right)

  std::size_t dim() const { return image.dim(); }
  Vec ambient_product(const Vec& x, const Vec& y) const;
  Vec to_ambient(const Vec& coords) const { return image.from_coordinates(coords); }
  /// Coordinates of a#h (left) or h#a (right); arguments are always (a, h).
  Vec sharp_of(const Vec& a, const Vec& h) const;
};

/// Requires the left checker. Throws CheckFailed("smash", ...) if the
/// generators are not closed under the ambient product or the induced
/// product fails the algebra axioms.
SmashAlgebra left_smash(const PartialAction& p);
/// Requires the right checker; otherwise as left_smash.
SmashAlgebra right_smash(const PartialAction& p);

enum class PairKind { left, opposite };

/// psi: A -> B together with a partial representation pi into the same B.
/// For the opposite kind, pi.hopf is K^cop where K is the Hopf algebra of
/// the right action (so K^cop = H^opcop when K = H^op).
struct CovariantPair {
  LinearMap psi;
  PartialRepresentation pi;
  PairKind kind = PairKind::left;
};

/// The component checks (morphism, partial representation) as parts, then
/// CP1-CP2 (left) or OCP1-OCP2 (opposite) on all basis pairs. Throws
/// DomainError if the pair kind does not match the action side.
Report check_covariant_pair(const CovariantPair& c, const PartialAction& action);

/// (a -> a#1, h -> 1#h) for left smashes, (a -> 1#a, h -> h#1) for right ones.
CovariantPair canonical_pair(const SmashAlgebra& s);

struct UniversalMorphism {
  LinearMap map;  // dim B x dim s
  Report certificate;
};

/// Phi(a#h) = psi(a) pi(h) (left) or Gamma(h#a) = gamma(h) phi(a) (right),
/// solved on the smash basis. The certificate holds the algebra-morphism
/// check, both factorizations and the uniqueness re-derivation. Throws
/// CheckFailed("universal-morphism", ...) when the map is ill-defined.
UniversalMorphism universal_morphism(const CovariantPair& c, const SmashAlgebra& s);

/// X with X * generators = images, when it exists. generators has full row rank.
std::optional<Matrix> solve_on_generators(const Matrix& generators, const Matrix& images);

/// The partial crossed product A x_alpha G with basis (g, basis of D_g).
struct CrossedProduct {
  UnitalPartialGroupAction action;
  std::vector<std::size_t> offsets;  // start of the D_g block per g
  Algebra algebra;

  /// Coordinates of b delta_g for b in D_g (DomainError if b is outside).
  Vec element(std::size_t g, const Vec& b) const;
};

/// Requires check_group_action; the result passes check_algebra.
CrossedProduct crossed_product(const UnitalPartialGroupAction& u);

enum class CrossedIso { eta, lambda };

struct IsoCertificate {
  Algebra domain;
  Algebra codomain;
  Matrix forward;
  Matrix inverse;  // from the explicit formula, not a numerical inverse
  Report report;
};

/// eta: A#kG -> A x G, a#g -> a 1_g delta_g, inverse b delta_g -> b#g.
/// lambda: (kG)^op#A -> (A^op x G)^op, g#a -> a 1_g delta_g.
IsoCertificate crossed_iso(const UnitalPartialGroupAction& u, CrossedIso which);

}  // namespace pgma
