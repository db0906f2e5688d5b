#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pgma/gma.hpp"
#include "pgma/smash.hpp"

namespace pgma {

/// Entry (i,j) is true iff h . iMj stays inside iMj for every basis h.
struct InvarianceTable {
  std::size_t n = 0;
  std::vector<bool> table;  // n x n
  Report report;            // tag "invariant", witnesses (i, j, h, m)

  bool all() const;
  bool at(std::size_t i, std::size_t j) const { return table[i * n + j]; }
};

/// Throws ShapeError if p does not act on r.total.
InvarianceTable check_block_invariance(const BlockedAlgebra& r, const PartialAction& p);

/// The block pieces of an invariant action. Empty blocks carry no
/// representation (End(0) is not an algebra here).
struct BlockRestriction {
  std::vector<PartialAction> diagonal;                     // h -> on R_i
  std::vector<std::optional<PartialRepresentation>> pi;     // n x n, H -> End(iMj)
  std::vector<std::optional<PartialRepresentation>> gamma;  // n x n, H^opcop -> End(iMj)^op
};

/// Throws CheckFailed("invariance", ...) unless every block is invariant.
BlockRestriction restrict_blocks(const BlockedAlgebra& r, const PartialAction& p);

/// The data of condition (ii): diagonal actions and, per block, a left
/// module over R_i # H and a right module over H^op # R_j, both stored on the
/// canonical smash bases.
///
/// left_modules(i,j) is dim(iMj) x dim(S_i) * dim(iMj) with column s * dim(iMj) + m;
/// right_modules(i,j) is dim(iMj) x dim(iMj) * dim(T_j) with column m * dim(T_j) + t.
struct BlockPartialData {
  MatrixDatum datum;
  HopfAlgebra hopf;
  std::vector<PartialAction> diagonal;
  std::vector<SmashAlgebra> left_smash;   // S_i = R_i # H
  std::vector<SmashAlgebra> right_smash;  // T_j = H^op # R_j over to_right(diagonal[j])
  std::vector<Matrix> left_modules;
  std::vector<Matrix> right_modules;

  std::size_t order() const { return datum.order(); }
  Matrix& left_module(std::size_t i, std::size_t j) { return left_modules[i * order() + j]; }
  const Matrix& left_module(std::size_t i, std::size_t j) const { return left_modules[i * order() + j]; }
  Matrix& right_module(std::size_t i, std::size_t j) { return right_modules[i * order() + j]; }
  const Matrix& right_module(std::size_t i, std::size_t j) const { return right_modules[i * order() + j]; }

  /// s . m with s in S_i coordinates and m in iMj.
  Vec left_act(std::size_t i, std::size_t j, const Vec& s, const Vec& m) const;
  /// m . t with t in T_j coordinates.
  Vec right_act(std::size_t i, std::size_t j, const Vec& m, const Vec& t) const;
  /// 1_i # h in S_i and h # 1_j in T_j.
  Vec one_sharp(std::size_t i, const Vec& h) const;
  Vec sharp_one(std::size_t j, const Vec& h) const;
};

/// Builds both smash families (each diagonal action must pass its checker)
/// and zero module matrices of the right shapes.
BlockPartialData make_block_data(MatrixDatum datum, HopfAlgebra hopf, std::vector<PartialAction> diagonal);

/// (a) each diagonal action, module axioms on both sides, the four
/// compatibilities of (b) and multiplicativity (c). (c') is not included.
Report check_block_data(const BlockPartialData& d);

/// (1_i#h) . mn = ((1_i#h1) . m)((1_j#h2) . n) on all basis triples.
Report check_c(const BlockPartialData& d);
/// mn . (h#1_k) = (m . (h1#1_j))(n . (h2#1_k)) on all basis triples.
Report check_c_prime(const BlockPartialData& d);

/// Invariant action => block data. Verifies every covariant and opposite covariant
/// pair before applying the universal morphisms; throws CheckFailed with the
/// stage tag of the first failure ("invariance", "covariant-pair",
/// "opposite-covariant-pair", "block-data").
BlockPartialData decompose(const BlockedAlgebra& r, const PartialAction& p);

/// Block data => action: h . (m_ij) = ((1_i#h) . m_ij). Requires
/// check_block_data and certifies the result is an invariant partial action.
PartialAction synthesize(const BlockPartialData& d);

/// The two rewrite identities (consequences) and the bimodule axiom
/// ((1_i#h) . m) . (k#1_j) = (1_i#h) . (m . (k#1_j)) (informational).
Report check_rewrites(const BlockPartialData& d);

/// The Morita ring (A, Ae; eA, eAe) of an idempotent fixed by the action,
/// with h acting blockwise through A.
struct MoritaRingAction {
  IdempotentBlocks blocks;
  BlockedAlgebra ring;
  PartialAction action;
};

/// DomainError if e is not idempotent; CheckFailed("fixed-idempotent", ...)
/// with witness h if h . e != epsilon(h) e.
MoritaRingAction morita_ring_action(const PartialAction& p, const Vec& e);

}  // namespace pgma
