#pragma once

#include <cstddef>
#include <vector>

#include "pgma/gma.hpp"
#include "pgma/group_datum.hpp"
#include "pgma/morita.hpp"
#include "pgma/partial_action.hpp"

// Concrete objects behind the fixture battery. Every constructor is pure and
// deterministic; validity is asserted by the test suites, not here.
namespace pgma::fixtures {

/// M_n as an n-block datum with every block one-dimensional (E_ij).
BlockedAlgebra full_matrix_blocks(const Field& f, std::size_t n);
/// Upper-triangular 2x2 matrices: dims [1 1; 0 1].
BlockedAlgebra upper_triangular_blocks(const Field& f);

/// g acts on a 1-dim-block datum by conjugation with diag(u_g):
/// E_ij -> u_g[i] / u_g[j] E_ij. scales[g] must be a homomorphism into the
/// diagonal torus for the result to be an action.
PartialAction diagonal_conjugation(const BlockedAlgebra& r, const GroupTable& g, const std::vector<Vec>& scales);
/// The non-trivial element of Z2 permutes the blocks: E_ij -> E_(s i)(s j).
PartialAction permutation_conjugation(const BlockedAlgebra& r, const std::vector<std::size_t>& perm);

/// epsilon-trivial actions.
PartialAction trivial_z2_m2(const Field& f);
PartialAction trivial_z3_upper(const Field& f);
PartialAction trivial_s3_m2(const Field& f);
/// kZ2 on k with g . 1 = 0.
PartialAction unit_zero(const Field& f);
/// Z2 on k^2 with D_g = k e1 and alpha_g = id.
UnitalPartialGroupAction z2_on_k2(const Field& f);
/// conjugation by diag(1, -1) on M2.
PartialAction conjugation_m2(const Field& f);
/// conjugation by the swap matrix on M2; off-diagonal blocks are not invariant.
PartialAction swap_m2(const Field& f);
/// Sweedler's algebra on k x k: epsilon-trivial and the solved partial action.
PartialAction sweedler_trivial(const Field& f);
PartialAction sweedler_partial(const Field& f);
/// Z3 acting on M3 over F_7 by conjugation with diag(1, 2, 4).
PartialAction z3_conjugation_m3();
/// Cyclic shift on k^3 restricted to the ideal span(e1, e2): D_g = k e2, D_{g^2} = k e1.
UnitalPartialGroupAction z3_restricted(const Field& f);

/// Morita ring inputs: a group action together with the idempotent e.
struct CornerFixture {
  UnitalPartialGroupAction action;
  Vec idempotent;
};
/// Z2 swapping coordinates 2, 3 of k^3 on D_g = 0 + k^2, e = (1, 1, 0): rejected at g.
CornerFixture morita_reject(const Field& f);
/// z2_on_k2 with e = (1, 0): accepted.
CornerFixture morita_accept(const Field& f);

/// The global trivial action of G on k.
UnitalPartialGroupAction trivial_on_ground(const Field& f, const GroupTable& g);
/// Unital datum of a diagonal conjugation on matrix units: every alpha^(i)
/// is trivial_on_ground and gamma_g^(ij) = u_g[i] / u_g[j].
GroupDatum diagonal_conjugation_datum(const Field& f, const GroupTable& g, const std::vector<Vec>& scales);
/// as a datum: gamma_g^(12) = gamma_g^(21) = -id.
GroupDatum conjugation_datum(const Field& f);
/// as a datum over F_7.
GroupDatum z3_datum();
/// R_1 = k^2 under z2_on_k2, R_2 = k under the trivial action, zero off-diagonal blocks.
GroupDatum off_diagonal_zero_datum(const Field& f);

/// A = B = M = N = k with every pairing the multiplication; the ring is M2.
MoritaContextData scalar_context(const Field& f);
/// scalar_context with mu = 0.
MoritaContextData zero_mu_context(const Field& f);
/// A = M2, B = k, M = columns k^2, N = rows k^2, mu = outer product,
/// nu = dot product; the ring is M3.
MoritaContextData column_context(const Field& f);

}  // namespace pgma::fixtures
