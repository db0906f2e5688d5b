#include <doctest.h>

#include <string>

#include "pgma/error.hpp"
#include "pgma/fixtures.hpp"
#include "pgma/group_datum.hpp"
#include "support.hpp"

using namespace pgma;
using testing::Q;
using testing::vec;

namespace {

struct Named {
  std::string name;
  GroupDatum datum;
};

std::vector<Named> unital_datums() {
  return {{"conjugation", fixtures::conjugation_datum(Q)},
          {"z3", fixtures::z3_datum()},
          {"off-diagonal-zero", fixtures::off_diagonal_zero_datum(Q)}};
}

bool has_witness(const IdentityCheck* c, const std::vector<std::size_t>& w) {
  for (const auto& x : c->witnesses)
    if (x == w) return true;
  return false;
}

// 1_g = 0 on R_1 and 1_g = 1 on R_2 over the upper-triangular datum
BlockPartialData lopsided_upper() {
  HopfAlgebra h = group_algebra(GroupTable::cyclic(2), Q);
  return make_block_data(fixtures::upper_triangular_blocks(Q).datum, h,
                         {fixtures::unit_zero(Q), trivial_left_action(h, ground_algebra(Q))});
}

}  // namespace

TEST_SUITE("group-datum") {

TEST_CASE("unital datum fixtures pass every condition") {
  for (const auto& [name, d] : unital_datums()) {
    CAPTURE(name);
    Report r = check_group_datum(d);
    CHECK(r.passed());
    CHECK_FALSE(r.kernel_inconsistency());
    // I_g = R 1_g was evaluated once per group element
    CHECK(r.find("unital-ideal")->checked == d.group.order());
    CHECK(r.find("gamma-composition")->checked > 0);
  }
}

TEST_CASE("conjugation datum gammas are the sign arithmetic") {
  GroupDatum d = fixtures::conjugation_datum(Q);
  CHECK(d.gamma_at(1, 0, 1) == testing::mat(1, 1, {-1}));
  CHECK(d.gamma_at(1, 1, 0) == testing::mat(1, 1, {-1}));
  CHECK(d.gamma_at(1, 0, 0).is_identity());
  // -1 * -1 = 1 is the only product feeding gamma_g(E11) = gamma(E12) gamma(E21)
  CHECK(d.datum.mult(0, 1, 0, d.apply(1, 0, 1, vec({1})), d.apply(1, 1, 0, vec({1}))) == vec({1}));
}

TEST_CASE("a sign mutation breaks multiplicativity") {
  GroupDatum d = fixtures::conjugation_datum(Q);
  d.gamma_at(1, 0, 1) = testing::mat(1, 1, {1});
  Report r = check_group_datum(d);
  const IdentityCheck* c = r.find("gamma-multiplicative");
  REQUIRE_FALSE(c->passed());
  // u in 1M2, v in 2M1: gamma(u) gamma(v) = -uv but gamma(uv) = uv
  CHECK(has_witness(c, {1, 0, 1, 0, 0, 0}));
  CHECK_THROWS_AS(datum_to_theorem_data(d), CheckFailed);
}

TEST_CASE("non-bijective and mis-shaped gammas") {
  GroupDatum d = fixtures::conjugation_datum(Q);
  d.gamma_at(1, 0, 1) = testing::mat(1, 1, {0});
  CHECK(check_group_datum(d).find("gamma-bijective")->witnesses.front() == std::vector<std::size_t>{1, 0, 1});

  GroupDatum s = fixtures::conjugation_datum(Q);
  s.gamma_at(1, 0, 1) = Matrix::identity(Q, 2);
  CHECK_THROWS_AS(check_group_datum(s), ShapeError);
}

TEST_CASE("the symmetry hypothesis is flagged on its own") {
  GroupTable z2 = GroupTable::cyclic(2);
  GroupDatum d = skeleton_datum(fixtures::upper_triangular_blocks(Q).datum, z2,
                                {hopf_to_group(fixtures::unit_zero(Q)), fixtures::trivial_on_ground(Q, z2)});
  Report r = check_group_datum(d);
  // D^(1)_g 1M2 = 0 while 1M2 D^(2)_g = 1M2
  CHECK(r.first_failure() == "symmetric");
  CHECK(has_witness(r.find("symmetric"), {1, 0, 1}));
}

TEST_CASE("datum_to_theorem_data agrees with decompose") {
  {
    BlockPartialData b = datum_to_theorem_data(fixtures::conjugation_datum(Q));
    BlockPartialData ref = decompose(fixtures::full_matrix_blocks(Q, 2), fixtures::conjugation_m2(Q));
    CHECK(b.left_modules == ref.left_modules);
    CHECK(b.right_modules == ref.right_modules);
    CHECK(b.diagonal == ref.diagonal);
  }
  {
    BlockPartialData b = datum_to_theorem_data(fixtures::z3_datum());
    BlockPartialData ref = decompose(fixtures::full_matrix_blocks(Field::prime(7), 3), fixtures::z3_conjugation_m3());
    CHECK(b.left_modules == ref.left_modules);
    CHECK(b.right_modules == ref.right_modules);
  }
}

TEST_CASE("off-diagonal-zero datum synthesizes the product action") {
  GroupDatum d = fixtures::off_diagonal_zero_datum(Q);
  BlockPartialData b = datum_to_theorem_data(d);
  PartialAction p = synthesize(b);
  BlockedAlgebra R = assemble(d.datum);
  for (std::size_t g = 0; g < 2; ++g) {
    CHECK(p.act_basis(g, R.total.unit()) == d.unit_of(R, g));
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(block_project(R, i, i, p.act_basis(g, R.total.unit())) == d.alpha[i].units[g]);
  }
  // 1_g = ((1, 0), 1)
  CHECK(d.unit_of(R, 1) == vec({1, 0, 1}));
}

TEST_CASE("theorem_data_to_datum inverts decompose data") {
  CHECK(theorem_data_to_datum(decompose(fixtures::full_matrix_blocks(Q, 2), fixtures::conjugation_m2(Q))) ==
        fixtures::conjugation_datum(Q));
  CHECK(theorem_data_to_datum(decompose(fixtures::full_matrix_blocks(Field::prime(7), 3),
                                        fixtures::z3_conjugation_m3())) == fixtures::z3_datum());

  GroupDatum eps = theorem_data_to_datum(decompose(fixtures::full_matrix_blocks(Q, 2), fixtures::trivial_z2_m2(Q)));
  for (const auto& m : eps.gamma) {
    CHECK(m.rows() == 1);
    CHECK(m.is_identity());
  }
}

TEST_CASE("centrality failure is rejected with its witness") {
  try {
    theorem_data_to_datum(lopsided_upper());
    FAIL("expected rejection");
  } catch (const CheckFailed& e) {
    CHECK(e.stage() == "a-prime");
    // 1^(1)_g m = 0 but m 1^(2)_g = m for the basis vector of 1M2
    CHECK(has_witness(e.report().find("a-prime"), {1, 0, 1, 0}));
  }
}

TEST_CASE("non-group Hopf algebras are refused") {
  Algebra k2 = diagonal_algebra(Q, 2);
  BlockPartialData b = decompose(assemble(peirce(k2, {k2.unit()}).datum), fixtures::sweedler_partial(Q));
  CHECK_THROWS_AS(theorem_data_to_datum(b), DomainError);
  CHECK_THROWS_AS(check_a_prime(b), DomainError);
}

TEST_CASE("round trips are fixed points") {
  for (const auto& [name, d] : unital_datums()) {
    CAPTURE(name);
    Report r = group_roundtrip(d);
    CHECK(r.passed());
    CHECK(group_roundtrip(datum_to_theorem_data(d)).passed());
  }
  CHECK(group_roundtrip(decompose(fixtures::full_matrix_blocks(Q, 2), fixtures::trivial_z2_m2(Q))).passed());
}

TEST_CASE("property: random sign conjugations give unital datums") {
  auto g = testing::rng(41);
  std::uniform_int_distribution<int> size(1, 3), sign(0, 1);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = size(g);
    Vec s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(Q.from_int(sign(g) ? 1 : -1));
    std::vector<Vec> scales{Vec(n, Q.one()), s};
    GroupDatum d = fixtures::diagonal_conjugation_datum(Q, GroupTable::cyclic(2), scales);
    REQUIRE(check_group_datum(d).passed());
    PartialAction p = fixtures::diagonal_conjugation(fixtures::full_matrix_blocks(Q, n), GroupTable::cyclic(2), scales);
    CHECK(theorem_data_to_datum(decompose(fixtures::full_matrix_blocks(Q, n), p)) == d);
    CHECK(synthesize(datum_to_theorem_data(d)) == p);
  }
}

}  // TEST_SUITE
