#pragma once

#include <cstddef>
#include <vector>

#include "pgma/gma_partial.hpp"

namespace pgma {

/// Per-block unital partial actions alpha^(i) of G on R_i plus bijections
/// gamma_g^(ij): D^(i)_{g^-1} iMj -> D^(i)_g iMj. Each gamma is stored on the
/// echelon bases of left_ideal_span(datum, i, j, D^(i)_.), so its shape is
/// dim(D_g M) x dim(D_{g^-1} M).
struct GroupDatum {
  MatrixDatum datum;
  GroupTable group;
  std::vector<UnitalPartialGroupAction> alpha;  // per i, on datum.diagonal(i)
  std::vector<Matrix> gamma;                    // index (g * n + i) * n + j

  std::size_t order() const { return datum.order(); }
  Matrix& gamma_at(std::size_t g, std::size_t i, std::size_t j) { return gamma[(g * order() + i) * order() + j]; }
  const Matrix& gamma_at(std::size_t g, std::size_t i, std::size_t j) const {
    return gamma[(g * order() + i) * order() + j];
  }

  /// D^(i)_g iMj as a subspace of iMj.
  Subspace domain(std::size_t g, std::size_t i, std::size_t j) const;
  /// gamma_g^(ij)(m) in iMj coordinates. DomainError unless m lies in D^(i)_{g^-1} iMj.
  Vec apply(std::size_t g, std::size_t i, std::size_t j, const Vec& m) const;
  /// The diagonal element diag(1^(1)_g, ..., 1^(n)_g) of the total algebra.
  Vec unit_of(const BlockedAlgebra& r, std::size_t g) const;

  friend bool operator==(const GroupDatum& a, const GroupDatum& b) {
    return a.datum == b.datum && a.group == b.group && a.alpha == b.alpha && a.gamma == b.gamma;
  }
};

/// gamma_g^(ii) = alpha_g^(i), gamma_e^(ij) = id and every other gamma zero
/// of the right shape, ready for the caller to fill in.
GroupDatum skeleton_datum(MatrixDatum datum, GroupTable group, std::vector<UnitalPartialGroupAction> alpha);

/// A unital datum: parts are check_datum and each alpha^(i); then
/// "symmetric" (the standing I_g-symmetry hypothesis, flagged on its own),
/// "gamma-bijective", "gamma-diagonal" (gamma^(ii) = alpha^(i)),
/// "gamma-identity" (gamma_e = id), "gamma-multiplicative",
/// "domain-inclusion" (gamma_h^-1(D_{g^-1}M cap D_hM) inside D_{(gh)^-1}M),
/// "gamma-composition" on that subspace, "centrality" (1^(i)_g m = m 1^(j)_g)
/// and "unital-ideal" (I_g = R 1_g).
/// "gamma-inverse" and "domain-identity" are consequences.
/// Throws ShapeError on inconsistent shapes.
Report check_group_datum(const GroupDatum& d);

/// Unital datum => (a)', (b), (c) over k G. Requires check_group_datum.
/// Left: (r d_g) . m = r gamma_g(1_{g^-1} m); right: m . (g # r) = gamma_g(m 1_{g^-1}) r.
BlockPartialData datum_to_theorem_data(const GroupDatum& d);

/// (a)': each g -> 1_{R_i} is central in the sense 1^(i)_g m = m 1^(j)_g.
/// Tag "a-prime", witness (g, i, j, m).
Report check_a_prime(const BlockPartialData& b);

/// (a)', (b), (c) over k G => unital datum with gamma_g(x) = (1^(i)_g d_g) . x.
/// DomainError if the Hopf algebra is not a group algebra;
/// CheckFailed("a-prime", ...) or ("block-data", ...) on invalid input.
GroupDatum theorem_data_to_datum(const BlockPartialData& b);

/// Both conversions applied in sequence. The fixed-point tags are
/// consequences: "alpha-fixed-point" (i), "gamma-fixed-point" (g, i, j),
/// "diagonal-fixed-point" (i) and "left-/right-module-fixed-point" (i, j).
Report group_roundtrip(const GroupDatum& d);
Report group_roundtrip(const BlockPartialData& b);

}  // namespace pgma
