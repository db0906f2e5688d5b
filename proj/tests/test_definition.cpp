#include <doctest.h>

#include <string>

#include "pgma/definition.hpp"
#include "pgma/fixtures.hpp"
#include "support.hpp"

using namespace pgma;
using testing::Q;

namespace {

const char* const kMinimal =
    "field rationals\n"
    "\n"
    "algebra k\n"
    "  dim 1\n"
    "  unit 0 1 1\n"
    "  mult 0 0 0 1 1\n"
    "end\n";

const char* const kConjugation =
    "field rationals\n"
    "\n"
    "group z2\n"
    "  cyclic 2\n"
    "end\n"
    "\n"
    "hopf kz2\n"
    "  group_algebra z2\n"
    "end\n"
    "\n"
    "gma m2\n"
    "  matrix_units 2\n"
    "end\n"
    "\n"
    "partial_action conj\n"
    "  hopf kz2\n"
    "  on gma m2\n"
    "  act 0 0 0 1 1\n"
    "  act 0 1 1 1 1\n"
    "  act 0 2 2 1 1\n"
    "  act 0 3 3 1 1\n"
    "  act 1 0 0 1 1\n"
    "  act 1 1 1 -1 1\n"
    "  act 1 2 2 -1 1\n"
    "  act 1 3 3 1 1\n"
    "end\n";

Diagnostic first_error(std::string_view text) {
  ParseResult r = parse_definition(text);
  REQUIRE_FALSE(r.errors.empty());
  CHECK_FALSE(r.file.has_value());
  return r.errors.front();
}

DefinitionFile parse_ok(std::string_view text) {
  ParseResult r = parse_definition(text);
  for (const auto& e : r.errors) FAIL_CHECK(e.to_string());
  REQUIRE(r.file.has_value());
  return *r.file;
}

Workspace::Failure resolve_failure(std::string_view text) {
  Workspace w = Workspace::resolve(parse_ok(text));
  REQUIRE_FALSE(w.failures().empty());
  return w.failures().front();
}

std::string with_header(const std::string& body) { return "field rationals\n\n" + body; }

}  // namespace

TEST_SUITE("definition") {

TEST_CASE("a minimal file parses and resolves") {
  DefinitionFile f = parse_ok(kMinimal);
  CHECK(f.field == Q);
  REQUIRE(f.sections.size() == 1);
  CHECK(f.sections[0].body.size() == 3);
  Workspace w = Workspace::resolve(f);
  CHECK(w.failures().empty());
  REQUIRE(w.get_as<Algebra>("k"));
  CHECK(*w.get_as<Algebra>("k") == ground_algebra(Q));
  CHECK(serialize(f) == kMinimal);
}

TEST_CASE("p = 0 is rejected") {
  Diagnostic d = first_error("field prime 0\n");
  CHECK(d.message.find("prime required") != std::string::npos);
  CHECK(d.line == 1);
  CHECK(d.column == 13);
  CHECK(first_error("field prime 9\n").message.find("not prime") != std::string::npos);
  CHECK(first_error("field prime\n").message.find("prime required") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column") {
  Diagnostic d = first_error(with_header("ring r\nend\n"));
  CHECK(d.to_string() == "3:1: unknown section 'ring'");

  d = first_error(with_header("algebra k\n  ground\nend\n\nalgebra k\n  ground\nend\n"));
  CHECK(d.line == 7);
  CHECK(d.column == 9);
  CHECK(d.message.find("duplicate name 'k' (first defined on line 3)") != std::string::npos);

  d = first_error(with_header("algebra k\n  dim 1\n  unit 0 1 0\nend\n"));
  CHECK(d.to_string() == "5:12: zero denominator");

  d = first_error(with_header("algebra k\n  dim 1\n  mult 0 0 1 1\nend\n"));
  CHECK(d.line == 5);
  CHECK(d.message.find("expects: index index index numerator denominator") != std::string::npos);

  d = first_error(with_header("algebra k\n  dimension 1\nend\n"));
  CHECK(d.to_string() == "4:3: unknown statement 'dimension' in algebra");

  d = first_error(with_header("algebra k\n  dim x\nend\n"));
  CHECK(d.to_string() == "4:7: expected an index, got 'x'");

  d = first_error("field prime 7\n\nalgebra k\n  dim 1\n  unit 0 1 14\nend\n");
  CHECK(d.message.find("field mismatch") != std::string::npos);
  CHECK(d.column == 12);

  CHECK(first_error(with_header("algebra k\n  ground\n")).message.find("missing 'end'") != std::string::npos);
  CHECK(first_error("algebra k\nend\n").message.find("expected 'field") != std::string::npos);
  CHECK(first_error("").message.find("missing 'field'") != std::string::npos);
  CHECK(first_error(with_header("end\n")).message.find("outside a section") != std::string::npos);
}

TEST_CASE("resolution errors carry line and column") {
  Workspace::Failure f = resolve_failure(with_header("hopf h\n  group_algebra g\nend\n"));
  CHECK(f.where.to_string() == "4:17: unknown name 'g' (names must be defined before use)");
  CHECK_FALSE(f.validation);

  f = resolve_failure(with_header("algebra a\n  ground\nend\n\nhopf h\n  group_algebra a\nend\n"));
  CHECK(f.where.message == "'a' has kind algebra, expected group");

  f = resolve_failure(with_header("algebra k\n  dim 2\n  unit 2 1 1\nend\n"));
  CHECK(f.where.to_string() == "5:8: basis index 2 out of range (must be below 2)");

  f = resolve_failure(with_header("algebra k\n  ground\n  dim 1\nend\n"));
  CHECK(f.where.message == "'dim' conflicts with 'ground'");

  f = resolve_failure(with_header("algebra k\n  dim 1\n  unit 0 1 1\n  unit 0 2 1\nend\n"));
  CHECK(f.where.line == 6);
  CHECK(f.where.message.find("duplicate entry") != std::string::npos);

  f = resolve_failure(with_header("algebra k\n  matrix 9\nend\n"));
  CHECK(f.where.message.find("out of range") != std::string::npos);
}

TEST_CASE("an invalid datum under an action is a validation failure") {
  // eta = 0 breaks the unit laws
  const std::string text = with_header(
      "group z2\n  cyclic 2\nend\n\nhopf h\n  group_algebra z2\nend\n\n"
      "gma r\n  blocks 1\n  dims 1\n  theta 0 0 0 0 0 1 1\nend\n\n"
      "partial_action p\n  hopf h\n  on gma r\n  trivial\nend\n\n"
      "partial_action q\n  hopf h\n  on block r 0\n  trivial\nend\n");
  Workspace w = Workspace::resolve(parse_ok(text));
  REQUIRE(w.failures().size() == 1);
  CHECK(w.failures()[0].validation);
  CHECK(w.failures()[0].where.line == 19);
  CHECK_FALSE(w.has_input_errors());
  CHECK(w.get("p") == nullptr);
  // the block itself is still readable
  CHECK(w.get_as<PartialAction>("q") != nullptr);
}

TEST_CASE("dependents of a failed section fail in turn") {
  const std::string text = with_header(
      "group g\n  order 2\n  row 0 1\n  row 1 1\nend\n\nhopf h\n  group_algebra g\nend\n");
  Workspace w = Workspace::resolve(parse_ok(text));
  REQUIRE(w.failures().size() == 2);
  CHECK(w.failures()[1].where.message == "depends on 'g', which failed to resolve");
}

TEST_CASE("the conjugation file resolves to the conjugation fixture") {
  DefinitionFile f = parse_ok(kConjugation);
  CHECK(serialize(f) == kConjugation);
  Workspace w = Workspace::resolve(f);
  CHECK(w.failures().empty());
  REQUIRE(w.get_as<PartialAction>("conj"));
  CHECK(*w.get_as<PartialAction>("conj") == fixtures::conjugation_m2(Q));
  CHECK(parse_ok(serialize(f)) == f);
}

TEST_CASE("comments, spacing and unreduced scalars normalize") {
  const std::string messy =
      "# a comment\nfield   rationals  # trailing\n\n\nalgebra k # ground\n\tdim 1\n  unit 0 2 2\n"
      "  mult 0 0 0 -4 -4\nend\n";
  // a negative denominator is not allowed
  CHECK(first_error(messy).message.find("positive integer denominator") != std::string::npos);

  const std::string ok = "# a comment\nfield   rationals  # trailing\n\n\nalgebra k # ground\n\tdim 1\n  unit 0 2 2\n"
                         "  mult 0 0 0 -4 4\nend\n";
  DefinitionFile f = parse_ok(ok);
  CHECK(serialize(f) ==
        "field rationals\n\nalgebra k\n  dim 1\n  unit 0 1 1\n  mult 0 0 0 -1 1\nend\n");
  CHECK(serialize(parse_ok(serialize(f))) == serialize(f));
}

TEST_CASE("prime fields reduce scalars at load") {
  DefinitionFile f = parse_ok("field prime 7\n\nalgebra k\n  dim 1\n  unit 0 8 1\n  mult 0 0 0 1 2\nend\n");
  CHECK(serialize(f) == "field prime 7\n\nalgebra k\n  dim 1\n  unit 0 1 1\n  mult 0 0 0 4 1\nend\n");
}

TEST_CASE("emitted sections resolve back to the same objects") {
  const HopfAlgebra kz2 = group_algebra(GroupTable::cyclic(2), Q);
  DefinitionFile f;
  f.field = Q;
  f.sections.push_back({"group", "z2", {stmt("cyclic", {"2"})}, 0});
  f.sections.push_back({"hopf", "h", {stmt("group_algebra", {"z2"})}, 0});
  f.sections.push_back(emit_gma("r", fixtures::full_matrix_blocks(Q, 2).datum));
  f.sections.push_back(emit_gma("up", fixtures::upper_triangular_blocks(Q).datum));
  f.sections.push_back(emit_algebra("k", ground_algebra(Q)));
  f.sections.push_back(emit_algebra("k2", diagonal_algebra(Q, 2)));
  f.sections.push_back(emit_partial_action("conj", "h", {"gma", "r"}, fixtures::conjugation_m2(Q)));
  f.sections.push_back(emit_partial_action("conj_right", "h", {"gma", "r"}, to_right(fixtures::conjugation_m2(Q))));
  f.sections.push_back(emit_group_action("triv", "z2", {"algebra", "k"}, fixtures::trivial_on_ground(Q, GroupTable::cyclic(2))));
  f.sections.push_back(emit_group_action("u", "z2", {"algebra", "k2"}, fixtures::z2_on_k2(Q)));
  f.sections.push_back(emit_partial_action("d0", "h", {"block", "r", "0"}, trivial_left_action(kz2, ground_algebra(Q))));
  f.sections.push_back(emit_partial_action("d1", "h", {"block", "r", "1"}, trivial_left_action(kz2, ground_algebra(Q))));
  f.sections.push_back(emit_group_datum("gd", "r", "z2", {"triv", "triv"}, fixtures::conjugation_datum(Q)));
  const BlockPartialData bd = decompose(fixtures::full_matrix_blocks(Q, 2), fixtures::conjugation_m2(Q));
  f.sections.push_back(emit_block_data("bd", "r", "h", {"d0", "d1"}, bd));

  const std::string text = serialize(f);
  DefinitionFile g = parse_ok(text);
  CHECK(serialize(g) == text);
  Workspace w = Workspace::resolve(g);
  for (const auto& e : w.failures()) FAIL_CHECK(e.where.to_string());

  CHECK(*w.get_as<MatrixDatum>("r") == fixtures::full_matrix_blocks(Q, 2).datum);
  CHECK(*w.get_as<MatrixDatum>("up") == fixtures::upper_triangular_blocks(Q).datum);
  CHECK(*w.get_as<Algebra>("k2") == diagonal_algebra(Q, 2));
  CHECK(*w.get_as<PartialAction>("conj") == fixtures::conjugation_m2(Q));
  CHECK(*w.get_as<PartialAction>("conj_right") == to_right(fixtures::conjugation_m2(Q)));
  CHECK(*w.get_as<UnitalPartialGroupAction>("u") == fixtures::z2_on_k2(Q));
  CHECK(*w.get_as<GroupDatum>("gd") == fixtures::conjugation_datum(Q));
  const BlockPartialData& back = *w.get_as<BlockPartialData>("bd");
  CHECK(back.left_modules == bd.left_modules);
  CHECK(back.right_modules == bd.right_modules);
}

TEST_CASE("an all-zero gamma is still written") {
  GroupDatum d = fixtures::conjugation_datum(Q);
  // gamma_e = id in the skeleton, so a zero gamma_e differs from it
  d.gamma_at(0, 0, 1) = Matrix(Q, 1, 1);
  Section s = emit_group_datum("gd", "r", "z2", {"t", "t"}, d);
  REQUIRE(s.body.size() == 7);
  CHECK(s.body[4] == stmt("gamma", {0, 0, 1, 0, 0}, Q.zero()));
}

TEST_CASE("property: parsing is total under random corruption") {
  auto g = testing::rng(77);
  const std::string base = kConjugation;
  const std::string alphabet = "field prime 0123456789-# \n\tendgmaxyz_";
  std::uniform_int_distribution<std::size_t> pick_char(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> op(0, 2), edits(1, 6);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    std::string s = base;
    for (int e = edits(g); e > 0 && !s.empty(); --e) {
      std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
      const std::size_t p = at(g);
      switch (op(g)) {
        case 0: s[p] = alphabet[pick_char(g)]; break;
        case 1: s.erase(p, 1); break;
        default: s.insert(p, 1, alphabet[pick_char(g)]);
      }
    }
    ParseResult r;
    CHECK_NOTHROW(r = parse_definition(s));
    CHECK(r.file.has_value() == r.errors.empty());
    if (!r.file) continue;
    ++accepted;
    const std::string canon = serialize(*r.file);
    CHECK(serialize(*parse_definition(canon).file) == canon);
    CHECK_NOTHROW(Workspace::resolve(*r.file));
  }
  // the corruption is mild enough that some mutants still parse
  CHECK(accepted > 0);
}

}  // TEST_SUITE
