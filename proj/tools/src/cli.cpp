#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace pgma::cli {

namespace {

struct Battery {
  const char* command;
  const char* sub;
};

// Order fixes the order of runs inside a golden report.
constexpr Battery kBattery[] = {
    {"check", ""},
    {"build-smash", ""},
    {"decompose-gma", ""},
    {"synthesize-gma", ""},
    {"group-datum", "check"},
    {"group-datum", "to-hopf"},
    {"group-datum", "from-hopf"},
    {"group-datum", "roundtrip"},
    {"morita", "check-context"},
    {"morita", "check-equivalence"},
};

int fixtures_command(const std::string& action, const std::string& arg, std::ostream& out, std::ostream& err) {
  if (action == "list") {
    for (const auto& f : builtin_fixtures()) out << f.name << "\n";
    return 0;
  }
  if (action == "show" || action == "golden") {
    const FixtureSet* f = find_fixture(arg);
    if (!f) {
      err << "unknown fixture '" << arg << "'\n";
      return 2;
    }
    out << (action == "show" ? f->definition : golden_report(*f));
    return 0;
  }
  if (action == "verify") {
    int code = 0;
    for (const auto& f : builtin_fixtures()) {
      if (!arg.empty() && f.name != arg) continue;
      const ParseResult p = parse_definition(f.definition);
      const bool canonical = p.file && serialize(*p.file) == f.definition;
      const bool golden = !f.golden.empty() && golden_report(f) == f.golden;
      out << (canonical && golden ? "ok       " : "MISMATCH ") << f.name
          << (canonical ? "" : "  (definition not canonical)") << (golden ? "" : "  (golden differs)") << "\n";
      if (!(canonical && golden)) code = 1;
    }
    return code;
  }
  if (action == "regenerate") {
    if (arg.empty()) {
      err << "regenerate needs a directory\n";
      return 2;
    }
    for (const auto& f : builtin_fixtures()) {
      std::ofstream o(arg + "/" + f.name + ".golden.json", std::ios::binary);
      if (!o) {
        err << "cannot write into '" << arg << "'\n";
        return 2;
      }
      o << golden_report(f);
      out << "wrote " << f.name << ".golden.json\n";
    }
    return 0;
  }
  err << "unknown fixtures action '" << action << "' (list, show, golden, verify, regenerate)\n";
  return 2;
}

}  // namespace

std::string golden_report(const FixtureSet& f) {
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const auto& b : kBattery) {
    Options o;
    o.command = b.command;
    o.subcommand = b.sub;
    o.fixture = f.name;
    o.deep = true;
    const Run run = execute(o);
    if (run.results.empty() && run.errors.size() == 1 && run.errors[0].message.rfind("no section applicable", 0) == 0)
      continue;
    runs.push_back(to_json(run));
  }
  const ParseResult p = parse_definition(f.definition);
  nlohmann::ordered_json g{{"schema", "pgma-golden/1"},
                           {"fixture", f.name},
                           {"canonical", p.file && serialize(*p.file) == f.definition},
                           {"runs", runs}};
  return g.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checker for partial Hopf actions on generalized matrix algebras", "pgma"};
  app.require_subcommand(1);

  Options o;
  std::string format = "text";
  std::string emit;
  const auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "definition file");
    sub->add_flag("--deep", o.deep, "also evaluate derived identities and consequence checks");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--fixture", o.fixture, "use a builtin fixture instead of a file");
    sub->add_option("--target", o.target, "restrict to one section");
    sub->add_option("--emit", emit, "write the input plus emitted sections to this path");
  };
  for (const char* name : {"check", "build-smash", "decompose-gma", "synthesize-gma"})
    common(app.add_subcommand(name));
  CLI::App* gd = app.add_subcommand("group-datum", "unital group datums");
  gd->require_subcommand(1);
  for (const char* name : {"check", "to-hopf", "from-hopf", "roundtrip"}) common(gd->add_subcommand(name));
  CLI::App* mo = app.add_subcommand("morita", "Morita contexts");
  mo->require_subcommand(1);
  for (const char* name : {"check-context", "check-equivalence"}) common(mo->add_subcommand(name));

  std::string fx_action, fx_arg;
  CLI::App* fx = app.add_subcommand("fixtures", "list, show, golden, verify or regenerate builtin fixtures");
  fx->add_option("action", fx_action)->required();
  fx->add_option("name", fx_arg, "fixture name, or the target directory for regenerate");

  std::vector<std::string> argv_store{"pgma"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run 'pgma --help' for usage\n";
    return 2;
  }

  if (fx->parsed()) return fixtures_command(fx_action, fx_arg, out, err);
  for (CLI::App* sub : app.get_subcommands()) {
    o.command = sub->get_name();
    if (!sub->get_subcommands().empty()) o.subcommand = sub->get_subcommands().front()->get_name();
  }

  const Run r = execute(o);
  if (format == "structured")
    out << to_json(r).dump(2) << "\n";
  else
    out << render_text(r);
  if (!emit.empty() && r.exit_code() != 2) {
    std::ofstream f(emit, std::ios::binary);
    if (!f) {
      err << "cannot write '" << emit << "'\n";
      return 2;
    }
    f << r.extended_definition();
  }
  return r.exit_code();
}

}  // namespace pgma::cli
