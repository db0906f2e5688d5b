#pragma once

#include <cstddef>
#include <optional>

#include "pgma/gma_partial.hpp"

namespace pgma {

/// A Morita context (A, B, M, N, mu, nu). The pairings are written tau and
/// sigma in some sources; here they are always mu: M (x) N -> A and
/// nu: N (x) M -> B.
///
/// Action matrices use the tensor order of their arguments:
///   m_left  dimM x dimA*dimM, column a * dimM + x   (a x)
///   m_right dimM x dimM*dimB, column x * dimB + b   (x b)
///   n_left  dimN x dimB*dimN, column b * dimN + y   (b y)
///   n_right dimN x dimN*dimA, column y * dimA + a   (y a)
///   mu      dimA x dimM*dimN, column x * dimN + y
///   nu      dimB x dimN*dimM, column y * dimM + x
struct MoritaContextData {
  Algebra a;
  Algebra b;
  std::size_t m_dim = 0;
  std::size_t n_dim = 0;
  Matrix m_left;
  Matrix m_right;
  Matrix n_left;
  Matrix n_right;
  Matrix mu;
  Matrix nu;
};

/// The Morita ring [A M; N B] as a 2-block datum. Does not validate.
MatrixDatum to_datum(const MoritaContextData& c);

/// Bimodule, balance and compatibility identities, each under its own tag:
/// M-left-module, M-right-module, M-bimodule, N-left-module, N-right-module,
/// N-bimodule, mu-bimodule, mu-balanced, nu-bimodule, nu-balanced, compat-M
/// (mu(x,y) x' = x nu(y,x')), compat-N (nu(y,x) y' = y mu(x,y')). With strict,
/// mu-surjective and nu-surjective. "morita-ring" (the assembled datum passes
/// check_datum) is a consequence. Throws ShapeError on inconsistent shapes.
Report check_morita_context(const MoritaContextData& c, bool strict);

/// Morita equivalence of pa and pb through pr on the Morita ring.
/// Diagonal-block invariance is an axiom, off-diagonal invariance is
/// informational, and the restrictions must equal pa and pb as matrices
/// ("restriction-A", "restriction-B", witness h).
Report check_morita_equivalent(const PartialAction& pa, const PartialAction& pb, const MoritaContextData& c,
                               const PartialAction& pr);

struct MoritaModuleCheck {
  Report report;
  std::optional<PartialAction> action;  // synthesized only when the report passes
};

/// The module conditions characterizing Morita equivalence, on block data
/// for the Morita ring. On M: "M-compatible" ((1_A#h) m = m (h#1_B)),
/// "M-left-scalar", "M-right-scalar"; the mirrors "N-..." on N; "A-action"
/// and "B-action" ((1#h) . a = h -> a on the diagonal). Multiplicativity (c)
/// is reported as its own part. When everything passes the Morita-ring action
/// is synthesized and certified by check_morita_equivalent.
MoritaModuleCheck check_morita_modules(const PartialAction& pa, const PartialAction& pb, const MoritaContextData& c,
                                       const BlockPartialData& d);

/// A right B-module N with a linear map N (x) H -> N.
///   b_right dimN x dimN*dimB, column y * dimB + b
///   h_map   dimN x dimN*dimH, column y * dimH + h
struct PartialBHModule {
  std::size_t dim = 0;
  Matrix b_right;
  Matrix h_map;
};

/// "unit" (n 1_H = n) and "compatibility" (((n k) b) h = (n (k h1))(b . h2)).
/// b_action must be a RIGHT partial action of H on B (DomainError otherwise)
/// and pass its checker; the B-module axioms are a part tagged
/// "module-associative" / "module-unital".
Report check_partial_bh_module(const PartialBHModule& n, const PartialAction& b_action);

}  // namespace pgma
