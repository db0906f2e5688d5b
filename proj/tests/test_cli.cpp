#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "pgma/fixtures.hpp"
#include "support.hpp"

using namespace pgma;
using json = nlohmann::json;
using testing::Q;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json structured(std::vector<std::string> args, int expected_code) {
  args.push_back("--format");
  args.push_back("structured");
  Outcome o = call(args);
  CHECK(o.code == expected_code);
  return json::parse(o.out);
}

std::string temp_file(const std::string& stem, const std::string& content) {
  const std::string path = "/tmp/pgma_cli_test_" + stem;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

const json* result(const json& run, const std::string& section, const std::string& step) {
  for (const auto& r : run["results"])
    if (r["section"] == section && r["step"] == step) return &r;
  return nullptr;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check on the unit-zero fixture passes LPA1-3") {
  Outcome o = call({"check", "--fixture", "unit-zero"});
  CHECK(o.code == 0);
  for (const char* tag : {"LPA1", "LPA2", "LPA3-left", "LPA3-right"}) CHECK(contains(o.out, tag));
  CHECK(contains(o.out, "[partial_action unit_zero] check: PASS"));
  CHECK(contains(o.out, "result: pass (exit 0)"));

  json j = structured({"check", "--fixture", "unit-zero"}, 0);
  CHECK(j["schema"] == "pgma-report/1");
  CHECK(j["status"] == "pass");
  const json* r = result(j, "unit_zero", "check");
  REQUIRE(r);
  for (const auto& c : (*r)["report"]["checks"]) CHECK(c["passed"] == true);
  CHECK((*r)["report"]["checks"].size() == 4);
}

TEST_CASE("build-smash on the unit-zero fixture has dimension 1") {
  Outcome o = call({"build-smash", "--fixture", "unit-zero"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "dimension: 1\n"));
  CHECK(contains(o.out, "s0 = 1#e\n"));
  CHECK(contains(o.out, "s0 * s0 = s0\n"));
  json j = structured({"build-smash", "--fixture", "unit-zero"}, 0);
  CHECK(j["outputs"][0]["dimension"] == 1);
  CHECK(j["outputs"][0]["ambient_dimension"] == 2);
}

TEST_CASE("build-smash on the D_g = k e1 fixture gives dimension 3 twice") {
  json j = structured({"build-smash", "--fixture", "z2-on-k2"}, 0);
  REQUIRE(j["outputs"].size() == 2);
  CHECK(j["outputs"][0]["dimension"] == 3);
  CHECK(j["outputs"][0]["crossed_product_dimension"] == 3);
  CHECK(j["outputs"][1]["dimension"] == 3);
  CHECK((*result(j, "alpha", "eta"))["passed"] == true);
  CHECK((*result(j, "alpha", "lambda"))["passed"] == true);
}

TEST_CASE("decompose-gma on the swap action exits 1 with block witnesses") {
  json j = structured({"decompose-gma", "--fixture", "swap-m2"}, 1);
  const json* r = result(j, "swap", "invariance");
  REQUIRE(r);
  CHECK((*r)["passed"] == false);
  std::set<std::pair<std::size_t, std::size_t>> blocks;
  for (const auto& w : (*r)["report"]["checks"][0]["witnesses"]) blocks.insert({w[0].get<std::size_t>(), w[1].get<std::size_t>()});
  CHECK(blocks.count({0, 1}));
  CHECK(blocks.count({1, 0}));
  CHECK(j["outputs"][0]["table"][0][1] == false);
  CHECK(j["outputs"][0]["table"][1][0] == false);
  CHECK(call({"decompose-gma", "--fixture", "swap-m2"}).out.find("4 FAILED  witness") != std::string::npos);
}

TEST_CASE("decompose, emit, synthesize reproduces the action") {
  const std::string path = "/tmp/pgma_cli_test_emit.def";
  Outcome d = call({"decompose-gma", "--fixture", "conjugation-m2", "--target", "conj", "--emit", path});
  REQUIRE(d.code == 0);
  json j = structured({"synthesize-gma", path}, 0);
  const json* r = result(j, "conj_blocks", "synthesized");
  REQUIRE(r);
  CHECK((*r)["passed"] == true);
  // the emitted action equals the original one, statement for statement
  const std::string emitted = j["emitted"];
  const std::string original = find_fixture("conjugation-m2")->definition;
  const auto acts = [](const std::string& text, const std::string& header) {
    const std::size_t start = text.find(header);
    const std::size_t end = text.find("end\n", start);
    std::string body = text.substr(start, end - start);
    return body.substr(body.find("  act"));
  };
  CHECK(acts(emitted, "partial_action conj_blocks_action") == acts(original, "partial_action conj\n"));
  std::remove(path.c_str());
}

TEST_CASE("group-datum subcommands") {
  CHECK(call({"group-datum", "check", "--fixture", "conjugation-m2"}).code == 0);
  CHECK(call({"group-datum", "roundtrip", "--fixture", "z3-conjugation-m3"}).code == 0);
  json to = structured({"group-datum", "to-hopf", "--fixture", "conjugation-m2"}, 0);
  CHECK(contains(to["emitted"].get<std::string>(), "partial_action sign_datum_action"));
  json from = structured({"group-datum", "from-hopf", "--fixture", "conjugation-m2", "--target", "conj"}, 0);
  const std::string text = from["emitted"];
  CHECK(contains(text, "gamma 1 0 1 0 0 -1 1\n"));
  CHECK(contains(text, "gamma 1 1 0 0 0 -1 1\n"));
  // the swap action is not invariant, so there is nothing to convert
  json swap = structured({"group-datum", "from-hopf", "--fixture", "swap-m2"}, 1);
  CHECK(swap["results"][0]["message"] == "rejected at stage 'invariance'");
}

TEST_CASE("from-hopf refuses a non-group Hopf algebra as an input error") {
  const std::string path = temp_file("sweedler_gma.def",
                                     "field rationals\n\nhopf h\n  sweedler\nend\n\ngma r\n  matrix_units 1\nend\n\n"
                                     "partial_action p\n  hopf h\n  on gma r\n  trivial\nend\n");
  Outcome o = call({"group-datum", "from-hopf", path});
  CHECK(o.code == 2);
  CHECK(contains(o.out, "from-hopf needs a group algebra"));
  std::remove(path.c_str());
}

TEST_CASE("morita subcommands") {
  CHECK(call({"morita", "check-context", "--fixture", "conjugation-m2"}).code == 0);
  CHECK(call({"morita", "check-context", "--fixture", "zero-mu-context"}).code == 1);
  json eq = structured({"morita", "check-equivalence", "--fixture", "column-context"}, 0);
  CHECK(eq["outputs"][0]["agree"] == true);
  // a context without an actions line has nothing to check
  CHECK(call({"morita", "check-equivalence", "--fixture", "zero-mu-context"}).code == 2);
}

TEST_CASE("input errors exit 2 with positions") {
  const std::string bad = temp_file("bad.def", "field rationals\n\nalgebra k\n  dim one\nend\n");
  Outcome o = call({"check", bad});
  CHECK(o.code == 2);
  CHECK(contains(o.out, "error: 4:7: expected an index, got 'one'"));
  json j = structured({"check", bad}, 2);
  CHECK(j["errors"][0]["line"] == 4);
  CHECK(j["errors"][0]["column"] == 7);
  CHECK(j["status"] == "input-error");
  std::remove(bad.c_str());

  CHECK(call({"check", "/nonexistent/file.def"}).code == 2);
  CHECK(call({"check", "--fixture", "no-such-fixture"}).code == 2);
  CHECK(call({"check"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"check", "--fixture", "unit-zero", "--format", "yaml"}).code == 2);
  CHECK(call({"check", "--fixture", "unit-zero", "--target", "nothing"}).code == 2);
  CHECK(call({"decompose-gma", "--fixture", "unit-zero"}).code == 2);
  CHECK(call({"decompose-gma", "--fixture", "conjugation-m2", "--target", "k"}).code == 2);
  CHECK(call({"group-datum", "--fixture", "conjugation-m2"}).code == 2);
}

TEST_CASE("an invalid referenced datum is a validation failure") {
  const std::string path = temp_file(
      "invalid_datum.def",
      "field rationals\n\ngroup z2\n  cyclic 2\nend\n\nhopf h\n  group_algebra z2\nend\n\n"
      "gma r\n  blocks 1\n  dims 1\n  theta 0 0 0 0 0 1 1\nend\n\npartial_action p\n  hopf h\n  on gma r\n  trivial\nend\n");
  json j = structured({"check", path}, 1);
  CHECK((*result(j, "r", "check"))["passed"] == false);
  CHECK((*result(j, "p", "resolve"))["passed"] == false);
  std::remove(path.c_str());
}

TEST_CASE("a failing action check exits 1") {
  // g . 1 = 2 is not idempotent: LPA2 fails
  const std::string path = temp_file("lpa.def",
                                     "field rationals\n\ngroup z2\n  cyclic 2\nend\n\nhopf h\n  group_algebra z2\nend\n\n"
                                     "algebra k\n  ground\nend\n\npartial_action p\n  hopf h\n  on algebra k\n"
                                     "  act 0 0 0 1 1\n  act 1 0 0 2 1\nend\n");
  json j = structured({"check", path}, 1);
  const json* r = result(j, "p", "check");
  REQUIRE(r);
  CHECK((*r)["passed"] == false);
  CHECK(call({"build-smash", path}).code == 1);
  std::remove(path.c_str());
}

TEST_CASE("property: exit codes are a function of the report content") {
  const char* battery[][2] = {{"check", ""},           {"build-smash", ""},          {"decompose-gma", ""},
                              {"synthesize-gma", ""},  {"group-datum", "check"},     {"group-datum", "to-hopf"},
                              {"group-datum", "from-hopf"}, {"group-datum", "roundtrip"}, {"morita", "check-context"},
                              {"morita", "check-equivalence"}};
  for (const auto& f : builtin_fixtures())
    for (const auto& b : battery) {
      cli::Options o;
      o.command = b[0];
      o.subcommand = b[1];
      o.fixture = f.name;
      o.deep = true;
      const cli::Run run = cli::execute(o);
      CAPTURE(f.name);
      CAPTURE(run.command);
      bool all = true;
      for (const auto& r : run.results) {
        if (r.report) CHECK(r.passed == r.report->passed());
        all = all && r.passed;
      }
      CHECK(run.exit_code() == (!run.errors.empty() ? 2 : all ? 0 : 1));
      // a second execution gives the identical document
      CHECK(cli::to_json(run).dump() == cli::to_json(cli::execute(o)).dump());
    }
}

}  // TEST_SUITE

TEST_SUITE("fixtures") {

TEST_CASE("the battery covers the required fixture families") {
  for (const char* name : {"trivial-z2-m2", "trivial-z3-upper", "trivial-s3-m2", "unit-zero", "z2-on-k2",
                           "conjugation-m2", "swap-m2", "sweedler", "z3-conjugation-m3"})
    CHECK_MESSAGE(find_fixture(name) != nullptr, name);
  CHECK(find_fixture("nope") == nullptr);
}

TEST_CASE("every fixture definition is canonical and its golden regenerates") {
  for (const auto& f : builtin_fixtures()) {
    CAPTURE(f.name);
    ParseResult p = parse_definition(f.definition);
    REQUIRE(p.file);
    CHECK(serialize(*p.file) == f.definition);
    REQUIRE_FALSE(f.golden.empty());
    CHECK(cli::golden_report(f) == f.golden);
  }
}

TEST_CASE("fixture files resolve to the kernel fixtures") {
  const auto ws = [](const char* name) {
    ParseResult p = parse_definition(find_fixture(name)->definition);
    REQUIRE(p.file);
    Workspace w = Workspace::resolve(*p.file);
    CHECK(w.failures().empty());
    return w;
  };
  const Field f7 = Field::prime(7);
  CHECK(*ws("trivial-z2-m2").get_as<PartialAction>("eps") == fixtures::trivial_z2_m2(Q));
  CHECK(*ws("trivial-z3-upper").get_as<PartialAction>("eps") == fixtures::trivial_z3_upper(Q));
  CHECK(*ws("trivial-s3-m2").get_as<PartialAction>("eps") == fixtures::trivial_s3_m2(Q));
  CHECK(*ws("unit-zero").get_as<PartialAction>("unit_zero") == fixtures::unit_zero(Q));
  CHECK(*ws("z2-on-k2").get_as<UnitalPartialGroupAction>("alpha") == fixtures::z2_on_k2(Q));
  CHECK(*ws("z2-on-k2").get_as<PartialAction>("induced") == group_to_hopf(fixtures::z2_on_k2(Q)));
  {
    Workspace w = ws("conjugation-m2");
    CHECK(*w.get_as<PartialAction>("conj") == fixtures::conjugation_m2(Q));
    CHECK(*w.get_as<GroupDatum>("sign_datum") == fixtures::conjugation_datum(Q));
    const MoritaContextData& c = w.get_as<MoritaEntry>("scalar")->context;
    CHECK(to_datum(c) == to_datum(fixtures::scalar_context(Q)));
  }
  CHECK(*ws("swap-m2").get_as<PartialAction>("swap") == fixtures::swap_m2(Q));
  CHECK(*ws("sweedler").get_as<PartialAction>("eps") == fixtures::sweedler_trivial(Q));
  CHECK(*ws("sweedler").get_as<PartialAction>("solved") == fixtures::sweedler_partial(Q));
  CHECK(*ws("z3-conjugation-m3").get_as<PartialAction>("conj") == fixtures::z3_conjugation_m3());
  CHECK(*ws("z3-conjugation-m3").get_as<GroupDatum>("scale_datum") == fixtures::z3_datum());
  CHECK(ws("z3-conjugation-m3").field() == f7);
  CHECK(*ws("z3-restricted").get_as<UnitalPartialGroupAction>("alpha") == fixtures::z3_restricted(Q));
  CHECK(*ws("off-diagonal-zero").get_as<GroupDatum>("product") == fixtures::off_diagonal_zero_datum(Q));
  CHECK(to_datum(ws("column-context").get_as<MoritaEntry>("columns")->context) ==
        to_datum(fixtures::column_context(Q)));
  CHECK(to_datum(ws("zero-mu-context").get_as<MoritaEntry>("degenerate")->context) ==
        to_datum(fixtures::zero_mu_context(Q)));
}

TEST_CASE("smash dimensions match the generator-rank oracle: 1 for unit-zero, 3 for z2-on-k2") {
  // oracle: rank of the generator map a (x) h -> a#h, computed directly
  const auto generator_rank = [](const PartialAction& p) {
    const std::size_t na = p.algebra().dim(), nh = p.hopf().dim();
    std::vector<Vec> images;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t h = 0; h < nh; ++h) {
        // a#h = sum a (h1 . 1) (x) h2 in the ambient A (x) H
        const Field& f = p.algebra().field();
        Vec v = zero_vec(f, na * nh);
        const Vec delta = p.hopf().coproduct(p.hopf().basis(h));
        for (std::size_t i = 0; i < nh; ++i)
          for (std::size_t j = 0; j < nh; ++j) {
            if (delta[i * nh + j].is_zero()) continue;
            const Vec x = p.algebra().multiply(p.algebra().basis(a), p.act_basis(i, p.algebra().unit()));
            for (std::size_t b = 0; b < na; ++b) v[b * nh + j] += delta[i * nh + j] * x[b];
          }
        images.push_back(v);
      }
    return row_space_basis(images).size();
  };
  CHECK(generator_rank(fixtures::unit_zero(Q)) == 1);
  CHECK(generator_rank(group_to_hopf(fixtures::z2_on_k2(Q))) == 3);
  json j = structured({"build-smash", "--fixture", "unit-zero"}, 0);
  CHECK(j["outputs"][0]["dimension"] == generator_rank(fixtures::unit_zero(Q)));
}

}  // TEST_SUITE
