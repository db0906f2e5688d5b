#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgma/definition.hpp"
#include "pgma/fixture_set.hpp"

namespace pgma::cli {

struct Options {
  std::string command;     // check, build-smash, decompose-gma, synthesize-gma, group-datum, morita
  std::string subcommand;  // group-datum: check|to-hopf|from-hopf|roundtrip; morita: check-context|check-equivalence
  std::string file;
  std::string fixture;
  std::string target;
  bool deep = false;
};

/// One verdict about one section.
struct Result {
  std::string section;
  std::string kind;
  std::string step;
  std::optional<Report> report;
  std::string message;
  bool passed = false;
};

struct Run {
  std::string command;
  std::string input;
  std::string field;
  std::vector<Diagnostic> errors;  // input errors
  std::vector<Result> results;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::array();
  std::vector<std::string> text;  // human-readable renderings of outputs
  std::vector<Section> emitted;
  DefinitionFile source;

  /// 2 on any input error, else 1 if some result failed, else 0.
  int exit_code() const;
  /// The source file with the emitted sections appended, canonical form.
  std::string extended_definition() const;
};

/// Never throws; kernel and parser failures land in errors or results.
Run execute(const Options& o);

std::string render_text(const Run& r);
nlohmann::ordered_json to_json(const Run& r);
nlohmann::ordered_json to_json(const Report& r);

/// Every command with at least one applicable section, run with --deep in
/// structured mode, collected into one document.
std::string golden_report(const FixtureSet& f);

/// argv-style entry point (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgma::cli
